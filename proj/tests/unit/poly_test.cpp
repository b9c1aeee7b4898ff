#include <doctest.h>

#include <random>

#include "locus/poly.hpp"

using locus::BinaryRoot;
using locus::det3;
using locus::divide_exact;
using locus::Errc;
using locus::Error;
using locus::gcd_poly;
using locus::Mono;
using locus::Poly;
using locus::Rational;
using locus::resultant;
using locus::roots_binary;
using locus::Surd;
using locus::to_binary_form;

namespace {

Poly X() { return Poly::var(0); }
Poly Y() { return Poly::var(1); }
Poly Z() { return Poly::var(2); }

Poly C(int v) { return Poly(Surd(v)); }
Poly C(const Rational& v) { return Poly(Surd(v)); }

}  // namespace

TEST_CASE("basic arithmetic and printing") {
  Poly p = X() * X() - C(2) * Y() * Y();
  CHECK(p.str() == "x^2 - 2*y^2");
  CHECK(Poly().str() == "0");
  CHECK(p.degree() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(2) == 0);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + C(1)).is_homogeneous());
  CHECK(p.eval({Surd(3), Surd(1), Surd(0)}) == Surd(7));
}

TEST_CASE("derivatives") {
  Poly p = X() * X() * Y() + Z() * Z() * Z();
  CHECK(p.derivative(0) == C(2) * X() * Y());
  CHECK(p.derivative(2) == C(3) * Z() * Z());
  CHECK(p.derivative(1) == X() * X());
}

TEST_CASE("Euler identity for seeded homogeneous cubics") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) f.add({a, b, 3 - a - b}, Surd(coeff(rng)));
    Poly lhs = X() * f.derivative(0) + Y() * f.derivative(1) + Z() * f.derivative(2);
    CHECK(lhs == C(3) * f);
  }
}

TEST_CASE("det3 is alternating") {
  std::array<std::array<Poly, 3>, 3> m = {{{X(), Y(), Z()},
                                           {Y(), Z(), X()},
                                           {C(1), C(2), C(3)}}};
  auto swapped = m;
  std::swap(swapped[0], swapped[1]);
  CHECK(det3(swapped) == -det3(m));
  auto repeated = m;
  repeated[1] = m[0];
  CHECK(det3(repeated).is_zero());
}

TEST_CASE("exact division") {
  Poly q;
  CHECK(Poly::try_divide(X() * X() - Y() * Y(), X() - Y(), q));
  CHECK(q == X() + Y());
  CHECK_FALSE(Poly::try_divide(X() * X() + Y() * Y(), X() - Y(), q));
  CHECK(divide_exact((X() + Z()) * (X() + Z()) * Y(), X() + Z()) == (X() + Z()) * Y());
}

TEST_CASE("normalization") {
  Surd unit;
  Poly p = C(-2) * X() * X() + C(4) * Y() * Y();
  Poly n = p.normalized(&unit);
  CHECK(n == X() * X() - C(2) * Y() * Y());
  CHECK(unit == Surd(-2));

  Surd r2 = Surd::sqrt(Rational(2));
  Poly s = r2 * X() + Y();
  Poly ns = s.normalized(&unit);
  CHECK(unit == r2);
  CHECK(ns == X() + (r2 * Surd(Rational(1, 2))) * Y());
}

TEST_CASE("gcd of polynomial lists") {
  Poly a = C(8) * X() * X() * X();
  Poly b = C(8) * X() * X() * Z();
  CHECK(gcd_poly({a, b}) == X() * X());

  // common line factor with surd coefficients
  Surd r2 = Surd::sqrt(Rational(2));
  Poly ell = X() - r2 * Z();
  CHECK(gcd_poly({ell * (X() + Y()), ell * (X() - Y())}) == ell);

  CHECK(gcd_poly({X() * Y(), Poly(), X() * X()}) == X());
  CHECK(gcd_poly({X() + Y(), C(1)}).degree() == 0);
  CHECK_THROWS_AS(gcd_poly({Poly(), Poly()}), Error);
  try {
    gcd_poly({Poly()});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllZero);
  }
}

TEST_CASE("resultants") {
  CHECK(resultant(X() - Z(), X() + Z(), 0) == C(2) * Z());
  CHECK(resultant(X() * Z(), X() * X() - Z() * Z(), 0) == -(Z() * Z() * Z() * Z()));
  CHECK_THROWS_AS(resultant(Y() * Y(), X(), 2), Error);
  // shared factor kills the resultant
  CHECK(resultant((X() - Y()) * (X() + Z()), (X() - Y()) * (X() - Z()), 0).is_zero());
}

TEST_CASE("binary form roots: exact small cases") {
  auto form = to_binary_form(X() * X() - Y() * Y(), 0, 1);
  auto roots = roots_binary(form);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(r.exact);
    CHECK(r.real);
    CHECK(r.multiplicity == 1);
    CHECK((r.v == Surd(1) || r.v == Surd(-1)));
  }

  auto pair = roots_binary(to_binary_form(X() * X() + Y() * Y(), 0, 1));
  REQUIRE(pair.size() == 1);
  CHECK_FALSE(pair[0].real);
  CHECK(pair[0].multiplicity == 1);
  CHECK(pair[0].va.imag() == doctest::Approx(1.0));

  // x*y^2: the axis roots carry their multiplicities
  auto axes = roots_binary(to_binary_form(X() * Y() * Y(), 0, 1));
  REQUIRE(axes.size() == 2);
  int seen = 0;
  for (const auto& r : axes) {
    if (r.u == Surd(0)) {
      CHECK(r.multiplicity == 1);  // (0:1) from the x factor
      ++seen;
    } else {
      CHECK(r.v == Surd(0));
      CHECK(r.multiplicity == 2);
      ++seen;
    }
  }
  CHECK(seen == 2);
}

TEST_CASE("binary form roots: multiplicities via squarefree split") {
  Poly f = (X() - C(2) * Y()) * (X() - C(2) * Y()) * (X() - C(2) * Y()) * (X() * X() + Y() * Y());
  auto roots = roots_binary(to_binary_form(f, 0, 1));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    if (r.real) {
      CHECK(r.exact);
      CHECK(r.multiplicity == 3);
      CHECK(r.v == Surd(Rational(1, 2)));
    } else {
      CHECK(r.multiplicity == 1);
    }
  }
}

TEST_CASE("binary form roots: degree nine with mixed arithmetic") {
  // (t-1)(t-2)(t^2-2)(t^2+1)(t^3-t-1) homogenised in (x,y)
  Poly t = Y();
  Poly u = X();
  auto lift = [&](std::vector<int> cs) {
    // cs[i] * t^i, homogenised to the common degree later by multiplication
    Poly p;
    int d = static_cast<int>(cs.size()) - 1;
    for (int i = 0; i <= d; ++i) {
      Poly term = C(cs[static_cast<std::size_t>(i)]);
      for (int k = 0; k < i; ++k) term = term * t;
      for (int k = 0; k < d - i; ++k) term = term * u;
      p += term;
    }
    return p;
  };
  Poly f = lift({-1, 1}) * lift({-2, 1}) * lift({-2, 0, 1}) * lift({1, 0, 1}) * lift({-1, -1, 0, 1});
  auto roots = roots_binary(to_binary_form(f, 0, 1));

  int exact_rational = 0, exact_surd = 0, pairs = 0, numeric_real = 0;
  Surd r2 = Surd::sqrt(Rational(2));
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 1);
    if (!r.real) {
      ++pairs;
    } else if (r.exact) {
      if (r.v == Surd(1) || r.v == Surd(2))
        ++exact_rational;
      else if (r.v == r2 || r.v == -r2)
        ++exact_surd;
    } else {
      ++numeric_real;
      CHECK(r.va.real() == doctest::Approx(1.3247179572).epsilon(1e-8));
    }
  }
  CHECK(exact_rational == 2);
  CHECK(exact_surd == 2);
  CHECK(pairs == 2);  // t^2+1 and the cubic's conjugate pair
  CHECK(numeric_real == 1);
}

TEST_CASE("composition with a linear map") {
  Poly p = X() * X() + Y() * Z();
  std::array<std::array<Surd, 3>, 3> swap_yz = {{{Surd(1), Surd(0), Surd(0)},
                                                 {Surd(0), Surd(0), Surd(1)},
                                                 {Surd(0), Surd(1), Surd(0)}}};
  CHECK(p.compose_linear(swap_yz) == X() * X() + Z() * Y());

  std::array<std::array<Surd, 3>, 3> shear = {{{Surd(1), Surd(0), Surd(0)},
                                               {Surd(0), Surd(1), Surd(0)},
                                               {Surd(1), Surd(0), Surd(1)}}};
  // z -> x + z
  CHECK(Z().compose_linear(shear) == X() + Z());
}
