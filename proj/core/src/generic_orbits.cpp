#include "locus/generic_orbits.hpp"

#include <algorithm>
#include <cmath>

#include "locus/classifier.hpp"
#include "locus/determinantal.hpp"
#include "locus/error.hpp"

namespace locus {

namespace {

Surd S(int v) { return Surd(Rational(v)); }

// Leading principal minors of a symmetric 3x3, for the exact positivity test.
void require_positive_definite(const Mat3& a) {
  Surd m1 = a[0][0];
  Surd m2 = a[0][0] * a[1][1] - a[0][1] * a[0][1];
  Surd m3 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
            a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (m1.sign() <= 0 || m2.sign() <= 0 || m3.sign() <= 0)
    fail(Errc::NotPositiveDefinite, "constraint quadric must be positive definite");
}

}  // namespace

GenericTransform generic_transform(const Constraint& p) {
  GenericTransform t;
  t.p = p;
  Mat3 a = quad_matrix(p.form);
  require_positive_definite(a);

  // Upper Cholesky factor U with U^T U = A, attempted inside the surd field.
  t.matrix = mat_identity();
  t.exact = true;
  std::optional<Surd> u00 = Surd::try_sqrt(a[0][0]);
  if (u00) {
    Surd v01 = a[0][1] / *u00;
    Surd v02 = a[0][2] / *u00;
    std::optional<Surd> u11 = Surd::try_sqrt(a[1][1] - v01 * v01);
    if (u11) {
      Surd v12 = (a[1][2] - v01 * v02) / *u11;
      std::optional<Surd> u22 =
          Surd::try_sqrt(a[2][2] - v02 * v02 - v12 * v12);
      if (u22) {
        t.matrix[0][0] = *u00;
        t.matrix[0][1] = v01;
        t.matrix[0][2] = v02;
        t.matrix[1][1] = *u11;
        t.matrix[1][2] = v12;
        t.matrix[2][2] = *u22;
      } else {
        t.exact = false;
      }
    } else {
      t.exact = false;
    }
  } else {
    t.exact = false;
  }

  if (t.exact) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.approx[i][j] = t.matrix[i][j].to_double();
    return t;
  }

  // Root escaped the quadratic tower: fall back to a floating factor.
  double w[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i][j] = a[i][j].to_double();
  double f00 = std::sqrt(w[0][0]);
  double f01 = w[0][1] / f00;
  double f02 = w[0][2] / f00;
  double f11 = std::sqrt(w[1][1] - f01 * f01);
  double f12 = (w[1][2] - f01 * f02) / f11;
  double f22 = std::sqrt(w[2][2] - f02 * f02 - f12 * f12);
  t.approx = {{{f00, f01, f02}, {0.0, f11, f12}, {0.0, 0.0, f22}}};
  return t;
}

Net apply_generic(const Net& net, const GenericTransform& t) {
  if (!t.exact)
    fail(Errc::NotRepresentable,
         "transform factor left the surd field; exact composition impossible");
  const Mat3& u = t.matrix;
  const Surd& a = u[0][0];
  const Surd& b = u[0][1];
  const Surd& c = u[0][2];
  const Surd& e = u[1][1];
  const Surd& f = u[1][2];
  const Surd& d = u[2][2];
  Mat3 inv{};
  inv[0][0] = a.inverse();
  inv[0][1] = -b / (a * e);
  inv[0][2] = (b * f - c * e) / (a * e * d);
  inv[1][1] = e.inverse();
  inv[1][2] = -f / (e * d);
  inv[2][2] = d.inverse();
  return compose_linear(net, inv);
}

ABCRegionReport abc_region(const Rational& c, const Rational& g) {
  ABCRegionReport r;
  r.c = c;
  r.g = g;
  r.orbit = abc_orbit_label(c, g);
  r.sigma = (c + 1) * (Rational(3) * g - 1);
  r.delta_xi = c * c + Rational(2) * c + 1 + Rational(36) * g * g +
               Rational(12) * g + Rational(12) * g * c - Rational(4) * c;
  Rational den = Rational(3) * g - 1;
  if (den != 0) {
    Poly x = Poly::var(0), z = Poly::var(2);
    r.xi = x * x + Surd((c + 1) / den) * (x * z) -
           Surd((Rational(3) * g + c) / den) * (z * z);
  }
  // The reduced binary quadric has the perfect-square discriminant
  // ((c + 6g - 1) / (3g - 1))^2, so its root count depends only on whether
  // the root collides, while sigma decides how many roots are real lines.
  Rational root = c + Rational(6) * g - 1;
  int extra = 0;
  if (r.sigma < 0)
    extra = root != 0 ? 4 : 2;
  else if (r.sigma == 0)
    extra = c == -1 ? 4 : 2;
  r.predicted_real_solution_count = 2 + extra;
  return r;
}

TableReport verify_tables(bool singular_mode, std::uint64_t seed, int trials,
                          double tol) {
  TableReport report;
  report.singular_mode = singular_mode;
  for (const OrbitRecord& rec : orbit_table()) {
    OrbitCheck row;
    row.orbit = rec.name;
    for (const auto& [label, form] : rec.generic_forms) {
      std::string observed;
      if (!singular_mode) {
        observed =
            kind_name(classify_regular(form, Constraint::sphere(), seed, tol).kind);
        if (observed != label)
          fail(Errc::TableViolation, "orbit " + rec.name + ": form labelled " +
                                         label + " classified as " + observed);
      } else {
        observed = census_string(singular_trial(form, seed, tol));
        if (std::find(rec.singular_census.begin(), rec.singular_census.end(),
                      observed) == rec.singular_census.end())
          fail(Errc::TableViolation, "orbit " + rec.name + ": form labelled " +
                                         label + " gave singular census " +
                                         observed);
      }
      row.form_results[label] = observed;
    }
    row.census = generic_census(rec.name, trials, seed, singular_mode, tol);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace locus
