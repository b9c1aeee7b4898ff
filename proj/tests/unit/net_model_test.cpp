#include "locus/net_model.hpp"

#include <random>

#include "doctest.h"
#include "locus/error.hpp"

using namespace locus;

namespace {

Poly X() { return Poly::var(0); }
Poly Y() { return Poly::var(1); }
Poly Z() { return Poly::var(2); }

Surd S(long long n, long long d = 1) { return Surd(Rational(n, d)); }

Poly random_quadric(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  QuadCoeffs c;
  for (auto& v : c) v = S(d(rng));
  return quad_poly(c);
}

}  // namespace

TEST_CASE("quadratic form coefficient round trip") {
  QuadCoeffs c = {S(1), S(-2), S(3, 2), S(0), S(7), S(-1, 3)};
  Poly p = quad_poly(c);
  CHECK(quad_coeffs(p) == c);

  Poly x = X();
  CHECK_THROWS_AS(quad_coeffs(x * x * x), Error);
  CHECK_THROWS_AS(quad_coeffs(x * x + x), Error);
  CHECK(quad_coeffs(Poly()) == QuadCoeffs{});
}

TEST_CASE("quad_matrix reproduces the form") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Poly p = random_quadric(rng);
    auto a = quad_matrix(p);
    CHECK(a[0][1] == a[1][0]);
    CHECK(a[0][2] == a[2][0]);
    CHECK(a[1][2] == a[2][1]);
    std::array<Surd, 3> v = {S(d(rng)), S(d(rng)), S(d(rng))};
    Surd quad;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) quad = quad + v[i] * a[i][j] * v[j];
    CHECK(quad == p.eval(v));
  }
}

TEST_CASE("proportional compares up to scalar") {
  Poly x = X(), y = Y();
  Poly p = S(2) * (x * x) + S(3) * (y * y);
  CHECK(proportional(p, S(-1, 2) * p));
  CHECK(proportional(p, Surd::sqrt(Rational(2)) * p));
  CHECK_FALSE(proportional(p, x * x));
  CHECK_FALSE(proportional(p, Poly()));
  CHECK(proportional(Poly(), Poly()));
}

TEST_CASE("net discriminant on closed forms") {
  Poly x = X(), y = Y(), z = Z();

  // diag(l, m, n) with a z^2 + 2xy mix in the last slot
  Net da = Net{{x * x, y * y, z * z + S(2) * (x * y)}};
  CHECK(net_discriminant(da) == x * y * z - z * z * z);

  // all three mixed products: det is a scalar multiple of the product
  Net perm = Net{{x * y, x * z, y * z}};
  CHECK(proportional(net_discriminant(perm), x * y * z));

  // rank drops identically when the three forms share a double line
  Net sq = Net{{x * x, S(2) * (x * y), y * y}};
  CHECK(net_discriminant(sq).is_zero());
}

TEST_CASE("net discriminant is invariant under source changes up to scalar") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  int checked = 0;
  while (checked < 12) {
    Net net = Net{{random_quadric(rng), random_quadric(rng), random_quadric(rng)}};
    std::array<std::array<Surd, 3>, 3> m;
    for (auto& row : m)
      for (auto& e : row) e = S(d(rng));
    // only use invertible source changes
    std::array<std::array<Poly, 3>, 3> mp;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mp[i][j] = Poly(m[i][j]);
    if (det3(mp).is_zero()) continue;
    Net moved;
    for (int i = 0; i < 3; ++i) moved.q[i] = net.q[i].compose_linear(m);
    CHECK(proportional(net_discriminant(moved), net_discriminant(net)));
    ++checked;
  }
}

TEST_CASE("two-parameter family at pinned points") {
  Poly x = X(), y = Y(), z = Z();

  Net a = abc_family(Rational(-2), Rational(1));
  CHECK(a.q[0] == S(2) * (x * z) + y * y);
  CHECK(a.q[1] == S(2) * (y * z));
  CHECK(a.q[2] == -(x * x) - S(2) * (y * y) - S(2) * (z * z) + S(2) * (x * z));

  Net b = abc_family(Rational(1), Rational(0));
  CHECK(b.q[2] == -(x * x) + z * z);

  // at the origin of the chart the discriminant collapses to two terms
  Net c = abc_family(Rational(0), Rational(0));
  CHECK(net_discriminant(c) == y * y * z - x * x * x);
}

TEST_CASE("family labels cover every cell of the chart") {
  auto lab = [](long long c, long long g, long long cd = 1, long long gd = 1) {
    return abc_orbit_label(Rational(c, cd), Rational(g, gd));
  };
  CHECK(lab(-2, -1) == "A_a");
  CHECK(lab(-10, 1) == "A_b");
  CHECK(lab(-2, 1) == "A_c");
  CHECK(lab(5, 1) == "A_d");
  CHECK(lab(-9, -1) == "B_a");
  CHECK(lab(-9, 1) == "B_c");
  CHECK(lab(0, 1) == "B_a*");
  CHECK(lab(0, -1) == "B_c*");
  CHECK(lab(0, 0) == "C");

  // boundary parabola at other scales, and the g = 0 axis
  CHECK(lab(-36, 2) == "B_c");
  CHECK(lab(-37, 2) == "A_b");
  CHECK(lab(-35, 2) == "A_c");
  CHECK(lab(-36, -2) == "B_a");
  CHECK(lab(-1, 0) == "A_b");
  CHECK(lab(1, 0) == "A_d");
  CHECK(lab(-9, 3, 1, 5) == "A_b");   // c = -9 sits below -9 g^2 = -81/25
  CHECK(lab(-3, 3, 1, 5) == "A_c");   // and c = -3 sits just above it

}

TEST_CASE("family discriminant keeps the cross-term cubic") {
  // spot check the closed form against the determinant on a grid
  for (long long cn = -3; cn <= 3; ++cn)
    for (long long gn = -2; gn <= 2; ++gn) {
      Net net = abc_family(Rational(cn), Rational(gn));
      Poly x = X(), y = Y(), z = Z();
      Rational c(cn), g(gn);
      Poly lin = x - Surd(Rational(2) * g) * z;
      Poly quad = x * x + Surd(Rational(2) * g) * (x * z) +
                  Surd(c + g * g) * (z * z);
      CHECK(net_discriminant(net) == y * y * z - lin * quad);
    }
}

TEST_CASE("singular jet round trips and doubles the form") {
  std::mt19937_64 rng(31);
  Net net = Net{{random_quadric(rng), random_quadric(rng), random_quadric(rng)}};
  SingularJet j = SingularJet::from_net(net);
  CHECK(j.net() == net);
  for (int i = 0; i < 3; ++i) {
    CHECK(j.comp[i].l == S(2) * net.q[i].coeff({2, 0, 0}));
    CHECK(j.comp[i].m == net.q[i].coeff({1, 1, 0}));
    CHECK(j.comp[i].p == S(2) * net.q[i].coeff({0, 0, 2}));
  }
}

TEST_CASE("monge embedding lists graph components") {
  Net net = abc_family(Rational(1), Rational(1));
  RegularJet jet = monge_embed(net);
  CHECK(jet.components[0] == X());
  CHECK(jet.components[1] == Y());
  CHECK(jet.components[2] == Z());
  CHECK(jet.components[3] == net.q[0]);
  CHECK(jet.components[5] == net.q[2]);
}

TEST_CASE("orbit atlas loads and is internally consistent") {
  const auto& t = orbit_table();
  CHECK(t.size() == 28);

  int open_cells = 0, generic_forms = 0;
  for (const auto& r : t) {
    if (r.codimension == 0) ++open_cells;
    generic_forms += static_cast<int>(r.generic_forms.size());
  }
  CHECK(open_cells == 4);
  CHECK(generic_forms == 23);

  CHECK(orbit_lookup("H").codimension == 5);
  CHECK(orbit_lookup("I").codimension == 7);
  CHECK(orbit_lookup("I*").discriminant.is_zero());
  CHECK(orbit_lookup("D_a").generic_forms.size() == 2);
  CHECK(orbit_lookup("B_c").regular_census ==
        std::vector<std::string>{"RomanSteiner"});
  CHECK(orbit_lookup("A_d").singular_census ==
        std::vector<std::string>{"6CC", "2CC"});
  CHECK(orbit_lookup("I").singular_census ==
        std::vector<std::string>{"Ellipse"});
  CHECK_THROWS_AS(orbit_lookup("nope"), Error);
}

TEST_CASE("corrupted orbit records are rejected") {
  OrbitRecord r = orbit_lookup("D_a");
  r.discriminant = X() * X() * X();
  bool caught = false;
  try {
    check_orbit_record(r);
  } catch (const Error& e) {
    caught = e.code() == Errc::CorruptAtlas;
  }
  CHECK(caught);

  OrbitRecord mislabeled = orbit_lookup("A_c");
  mislabeled.name = "A_d";
  CHECK_THROWS_AS(check_orbit_record(mislabeled), Error);
}
