#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "locus/determinantal.hpp"
#include "locus/net_model.hpp"
#include "locus/poly.hpp"
#include "locus/rational.hpp"

namespace locus {

// A linear change of tangent coordinates T with rho o T = p, where rho is the
// round sphere form x^2+y^2+z^2 and p a positive definite constraint.  Built
// by an upper Cholesky factorization of p's matrix; `exact` records whether
// the factor stayed inside the surd field.
struct GenericTransform {
  Constraint p;
  bool exact = false;
  Mat3 matrix;                               // exact entries (valid iff exact)
  std::array<std::array<double, 3>, 3> approx{};  // always filled
};

GenericTransform generic_transform(const Constraint& p);

// The orbit representative seen through the transform: net o T^{-1}.  Keeps
// everything in exact arithmetic; a float-only transform is refused with
// Errc::NotRepresentable.
Net apply_generic(const Net& net, const GenericTransform& t);

// Sign data that predicts the real-line count of the two-parameter net
// family (2xz + y^2, 2yz, -x^2 - 2g y^2 + 2g xz + c z^2): the codimension
// <= 2 wall-and-chamber picture.
struct ABCRegionReport {
  Rational c;
  Rational g;
  std::string orbit;
  Rational sigma;     // (c+1)(3g-1)
  Rational delta_xi;  // c^2+2c+1+36g^2+12g+12gc-4c
  std::optional<Poly> xi;  // reduced binary quadric in x,z when 3g != 1
  int predicted_real_solution_count = 0;
};

ABCRegionReport abc_region(const Rational& c, const Rational& g);

// One orbit row of a table audit: what each stored generic form classified
// to, and the census set produced by seeded random trials.
struct OrbitCheck {
  std::string orbit;
  std::map<std::string, std::string> form_results;  // expected label -> observed
  std::set<std::string> census;
};

struct TableReport {
  bool singular_mode = false;
  std::vector<OrbitCheck> rows;
};

// Audits the whole atlas: classifies every stored generic form and runs
// generic_census for every orbit.  Any observation outside the recorded row
// set raises Errc::TableViolation naming the orbit and the stray label.
TableReport verify_tables(bool singular_mode, std::uint64_t seed,
                          int trials = 5, double tol = 1e-9);

}  // namespace locus
