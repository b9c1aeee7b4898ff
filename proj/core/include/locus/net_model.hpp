#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locus/poly.hpp"

namespace locus {

// Net of quadrics: the three ternary quadratic forms carrying the second
// order data of a 3-manifold in Monge form.
struct Net {
  std::array<Poly, 3> q;

  bool operator==(const Net& o) const { return q == o.q; }
};

// Coefficient order: x^2, xy, y^2, xz, yz, z^2.
using QuadCoeffs = std::array<Surd, 6>;

Poly quad_poly(const QuadCoeffs& c);
QuadCoeffs quad_coeffs(const Poly& p);  // BadInput unless of degree <= 2 in squares/products

Net make_net(const QuadCoeffs& q1, const QuadCoeffs& q2, const QuadCoeffs& q3);

// Symmetric matrix A with form(v) = v^T A v.
std::array<std::array<Surd, 3>, 3> quad_matrix(const Poly& form);

using Mat3 = std::array<std::array<Surd, 3>, 3>;
using Vec3 = std::array<Surd, 3>;

Mat3 mat_identity();
Mat3 mat_transpose(const Mat3& m);
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Vec3 mat_apply(const Mat3& m, const Vec3& v);

// Substitutes x_i -> sum_j m[i][j] * x_j into every component: the net q o m.
Net compose_linear(const Net& net, const Mat3& m);

// Equal up to one nonzero scalar factor.
bool proportional(const Poly& a, const Poly& b);

// det(l A1 + m A2 + n A3) written as a cubic in (x, y, z) standing for the
// pencil coordinates (l, m, n).
Poly net_discriminant(const Net& net);

// The two-parameter family of nets whose region diagram drives the generic
// orbit labels; general position requires c (c + 9 g^2) != 0.
Net abc_family(const Rational& c, const Rational& g);

// Orbit label of a parameter point of the family (BadInput off the chart).
std::string abc_orbit_label(const Rational& c, const Rational& g);

// Second order data of a corank-1 singular 3-manifold: per normal component
// the curvature locus is
//   eta_i(a,b,c) = l a^2 + 2 m a b + n b^2 + p c^2 + 2 q a c + 2 r b c
// over the cylinder a^2 + b^2 = 1.
struct SingularJet {
  struct Component {
    Surd l, m, n, p, q, r;
  };
  std::array<Component, 3> comp;

  static SingularJet from_net(const Net& net);
  Net net() const;
};

// Regular Monge-form 2-jet (x, y, z, q1, q2, q3).
struct RegularJet {
  std::array<Poly, 6> components;
};
RegularJet monge_embed(const Net& net);

struct OrbitRecord {
  std::string name;
  int codimension = 0;
  Net normal_form;
  Poly discriminant;  // in pencil coordinates, stored up to a scalar
  std::optional<std::pair<Rational, Rational>> abc_params;  // (c, g) representative
  std::vector<std::pair<std::string, Net>> generic_forms;   // label -> net
  std::vector<std::string> regular_census;   // allowed classifications
  std::vector<std::string> singular_census;  // allowed singular patterns
};

// Consistency checks for one record: the stored discriminant must match the
// one recomputed from the normal form up to a scalar, and family members must
// sit in the parameter cell their name claims.  Errc::CorruptAtlas otherwise.
void check_orbit_record(const OrbitRecord& r);

// Built-in orbit atlas; validated on first use (Errc::CorruptAtlas).
const std::vector<OrbitRecord>& orbit_table();
const OrbitRecord& orbit_lookup(const std::string& name);

}  // namespace locus
