#pragma once

#include <array>

#include "locus/net_model.hpp"

namespace locus {

// Parameter surface for the direction of evaluation.  The unit sphere serves
// regular points, the unit cylinder serves corank-1 singular points, and a
// general positive definite level set serves rescaled first fundamental
// forms.
struct Constraint {
  enum class Shape { Sphere, Cylinder, General };
  Shape shape = Shape::Sphere;
  Poly form;  // the constraint is form = 1

  static Constraint sphere();
  static Constraint cylinder();
  // Errc::NotPositiveDefinite unless the form is exactly positive definite.
  static Constraint general(const Poly& form);
};

// Rows 0..2: gradients of the net forms.  Row 3: gradient of the constraint.
std::array<std::array<Poly, 3>, 4> build_matrix(const Net& net,
                                                const Constraint& con);

// delta: determinant of the gradient rows of the net alone.
// d[i]: determinant with net row i removed, the surviving net rows kept in
// ascending order and the constraint row last.
struct Minors {
  Poly delta;
  std::array<Poly, 3> d;
};
Minors minors(const Net& net, const Constraint& con);

// The net is substantial for the constraint when the three forms together
// with the constraint form span a 4-dimensional space of quadrics.  When they
// do not, witness holds (a, b, c, d) with a q1 + b q2 + c q3 = d * form and
// (a, b, c) != 0.
struct Substantiality {
  bool substantial = true;
  std::array<Surd, 4> witness{};
};
Substantiality substantiality(const Net& net, const Constraint& con);

// Second order invariants of the locus over the sphere: the mean direction H
// and the five coefficient vectors of the harmonic expansion.
struct EtaBasis {
  std::array<Surd, 3> H, B1, B2, B3, B4, B5;
};
EtaBasis eta_basis(const Net& net);

}  // namespace locus
