#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "locus/surd.hpp"

namespace locus {

// Monomial x^a y^b z^c.
struct Mono {
  int a = 0, b = 0, c = 0;
  int degree() const { return a + b + c; }
  int exp(int axis) const { return axis == 0 ? a : axis == 1 ? b : c; }
  bool operator==(const Mono& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Graded lexicographic order with x > y > z; map iteration is ascending, so
// the leading term of a polynomial sits at rbegin().
struct MonoOrder {
  bool operator()(const Mono& l, const Mono& r) const {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
};

// Sparse polynomial in x, y, z with exact surd coefficients.  Zero
// coefficients are never stored, so is_zero() and operator== are exact.
class Poly {
public:
  using Terms = std::map<Mono, Surd, MonoOrder>;

  Poly() = default;
  explicit Poly(const Surd& constant) { add({0, 0, 0}, constant); }

  static Poly var(int axis);

  const Terms& terms() const { return t_; }
  void add(const Mono& m, const Surd& coeff);
  Surd coeff(const Mono& m) const;

  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }
  int degree_in(int axis) const;
  bool is_homogeneous() const;
  bool has_rational_coeffs() const;
  bool uses_axis(int axis) const { return degree_in(axis) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(const Poly& l, const Poly& r);
  friend Poly operator*(const Surd& s, const Poly& p);

  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int axis) const;

  Surd eval(const std::array<Surd, 3>& v) const;
  double eval(const std::array<double, 3>& v) const;
  std::complex<double> eval(const std::array<std::complex<double>, 3>& v) const;

  // p(M*v): composition with the linear map given by row-major matrix M.
  Poly compose_linear(const std::array<std::array<Surd, 3>, 3>& m) const;
  // General substitution x -> r[0], y -> r[1], z -> r[2].
  Poly substitute(const std::array<Poly, 3>& r) const;

  // Canonical scalar multiple: integer coprime coefficients with positive
  // leading coefficient when all coefficients are rational, monic otherwise.
  // If unit is given, *this == *unit * normalized().
  Poly normalized(Surd* unit = nullptr) const;

  // Exact division; returns false when b does not divide a.
  static bool try_divide(const Poly& a, const Poly& b, Poly& quotient);

  std::string str(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

private:
  Terms t_;
};

Poly divide_exact(const Poly& a, const Poly& b);

// gcd of all nonzero entries, normalized; Errc::AllZero when every entry is 0.
Poly gcd_poly(const std::vector<Poly>& polys);

// Sylvester resultant eliminating the given axis; Errc::NoElimination when
// either input has degree 0 in it.
Poly resultant(const Poly& f, const Poly& g, int axis);

Poly det3(const std::array<std::array<Poly, 3>, 3>& m);

// Homogeneous form in two of the three axes: sum_i c[i] u^(d-i) v^i.
struct BinaryForm {
  int degree = 0;
  std::vector<Surd> c;
  int axis_u = 0, axis_v = 1;
};

BinaryForm to_binary_form(const Poly& p, int axis_u, int axis_v);

// One projective root (u:v).  Conjugate pairs are reported once with
// real == false; multiplicity counts each member of the pair separately.
struct BinaryRoot {
  bool exact = false;
  Surd u, v;
  std::complex<double> ua, va;
  bool real = true;
  int multiplicity = 1;
};

std::vector<BinaryRoot> roots_binary(const BinaryForm& f, double tol = 1e-9);

}  // namespace locus
