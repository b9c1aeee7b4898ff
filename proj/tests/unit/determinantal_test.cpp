#include "locus/determinantal.hpp"

#include <random>

#include "doctest.h"
#include "locus/error.hpp"

using namespace locus;

namespace {

Poly X() { return Poly::var(0); }
Poly Y() { return Poly::var(1); }
Poly Z() { return Poly::var(2); }

Surd S(long long n, long long d = 1) { return Surd(Rational(n, d)); }

Net random_net(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Net n;
  for (auto& q : n.q) {
    QuadCoeffs c;
    for (auto& v : c) v = S(d(rng));
    q = quad_poly(c);
  }
  return n;
}

}  // namespace

TEST_CASE("constraint shapes") {
  Poly x = X(), y = Y(), z = Z();
  CHECK(Constraint::sphere().form == x * x + y * y + z * z);
  CHECK(Constraint::cylinder().form == x * x + y * y);

  CHECK(Constraint::general(x * x + x * y + y * y + z * z).shape ==
        Constraint::Shape::General);
  CHECK_THROWS_AS(Constraint::general(x * x + y * y), Error);       // rank 2
  CHECK_THROWS_AS(Constraint::general(x * x - y * y + z * z), Error);
  CHECK_THROWS_AS(Constraint::general(x * y), Error);
  bool coded = false;
  try {
    Constraint::general(Poly());
  } catch (const Error& e) {
    coded = e.code() == Errc::BadInput ||
            e.code() == Errc::NotPositiveDefinite;
  }
  CHECK(coded);
}

TEST_CASE("matrix rows are gradients") {
  Net net = Net{{S(2) * (X() * Y()), S(2) * (X() * Z()), Z() * Z()}};
  auto m = build_matrix(net, Constraint::sphere());
  CHECK(m[0][0] == S(2) * Y());
  CHECK(m[0][1] == S(2) * X());
  CHECK(m[0][2] == Poly());
  CHECK(m[2][2] == S(2) * Z());
  CHECK(m[3][0] == S(2) * X());
  CHECK(m[3][2] == S(2) * Z());
}

TEST_CASE("minors of the twisted pair net") {
  Poly x = X(), y = Y(), z = Z();
  Net net = Net{{S(2) * (x * y), S(2) * (x * z), z * z}};
  Minors mm = minors(net, Constraint::sphere());
  CHECK(mm.delta == S(-8) * (x * z * z));
  CHECK(mm.d[0] == S(-8) * (y * z * z));
  CHECK(mm.d[1] == S(-8) * (z * (y * y - x * x)));
  CHECK(mm.d[2] == S(8) * (x * (x * x - z * z - y * y)));
}

TEST_CASE("minors of the triple contact net") {
  Poly x = X(), y = Y(), z = Z();
  Net net = Net{{x * x, S(2) * (x * y), y * y + S(2) * (x * z)}};
  Minors mm = minors(net, Constraint::sphere());
  CHECK(mm.delta == S(8) * (x * x * x));
  CHECK(mm.d[0] == S(8) * ((z - x) * (y * y - x * x - x * z)));
  CHECK(mm.d[1] == S(8) * (x * y * (z - x)));
  CHECK(mm.d[2] == S(8) * (x * x * z));
}

TEST_CASE("minors of the double line net") {
  Poly x = X(), y = Y(), z = Z();
  Net net = Net{{x * x, S(2) * (x * y), y * y}};
  Minors mm = minors(net, Constraint::sphere());
  CHECK(mm.delta.is_zero());
  CHECK(mm.d[0] == S(8) * (y * y * z));
  CHECK(mm.d[1] == S(8) * (x * y * z));
  CHECK(mm.d[2] == S(8) * (x * x * z));
}

TEST_CASE("minors of the mixed signature net") {
  Poly x = X(), y = Y(), z = Z();
  Net net = Net{{-(x * x) - y * y + S(2) * (z * z),
                 S(1, 2) * (x * x) - S(1, 2) * (y * y), x * z}};
  Minors mm = minors(net, Constraint::sphere());
  CHECK(mm.delta == S(4) * (y * (x * x + z * z)));
  CHECK(mm.d[0] == S(2) * (y * (z * z - S(2) * (x * x))));
  CHECK(mm.d[1] == S(12) * (y * z * z));
  CHECK(mm.d[2] == S(24) * (x * y * z));
}

TEST_CASE("delta ignores the constraint and cylinder minors vanish at the pole") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    Net net = random_net(rng);
    Minors s = minors(net, Constraint::sphere());
    Minors c = minors(net, Constraint::cylinder());
    CHECK(s.delta == c.delta);
    std::array<Surd, 3> pole = {S(0), S(0), S(1)};
    for (int i = 0; i < 3; ++i) CHECK(c.d[i].eval(pole) == S(0));
  }
}

TEST_CASE("substantiality rank check with witnesses") {
  Poly x = X(), y = Y(), z = Z();
  Constraint sph = Constraint::sphere();

  auto sub = substantiality(Net{{x * x, S(2) * (x * y), y * y}}, sph);
  CHECK(sub.substantial);

  auto dep = substantiality(Net{{x * x + y * y + z * z, x * y, Poly()}}, sph);
  REQUIRE_FALSE(dep.substantial);
  // witness must satisfy a q1 + b q2 + c q3 = d * (x^2 + y^2 + z^2)
  {
    const auto& w = dep.witness;
    Poly lhs = w[0] * (x * x + y * y + z * z) + w[1] * (x * y);
    CHECK(lhs == w[3] * sph.form);
    CHECK((w[0] != S(0) || w[1] != S(0) || w[2] != S(0)));
  }

  auto round = substantiality(Net{{x * x + y * y, S(2) * (x * y), z * z}}, sph);
  REQUIRE_FALSE(round.substantial);
  {
    const auto& w = round.witness;
    Poly lhs = w[0] * (x * x + y * y) + w[1] * (S(2) * (x * y)) + w[2] * (z * z);
    CHECK(lhs == w[3] * sph.form);
    CHECK((w[0] != S(0) || w[1] != S(0) || w[2] != S(0)));
  }

  auto diag = substantiality(Net{{x * x, y * y, z * z}}, sph);
  CHECK_FALSE(diag.substantial);
  // x^2 + y^2 alone also absorbs the diagonal net
  auto diag_cyl =
      substantiality(Net{{x * x, y * y, z * z}}, Constraint::cylinder());
  CHECK_FALSE(diag_cyl.substantial);

  // containing the sphere form kills sphere substantiality but not cylinder
  Net graph = Net{{x * x + y * y + z * z, x * y, x * z}};
  CHECK_FALSE(substantiality(graph, sph).substantial);
  CHECK(substantiality(graph, Constraint::cylinder()).substantial);
}

TEST_CASE("expansion basis vectors") {
  Poly x = X(), y = Y(), z = Z();

  EtaBasis p = eta_basis(Net{{x * y, x * z, y * z}});
  for (int i = 0; i < 3; ++i) {
    CHECK(p.H[i] == S(0));
    CHECK(p.B1[i] == S(0));
    CHECK(p.B2[i] == S(0));
  }
  CHECK(p.B3 == std::array<Surd, 3>{S(1), S(0), S(0)});
  CHECK(p.B4 == std::array<Surd, 3>{S(0), S(1), S(0)});
  CHECK(p.B5 == std::array<Surd, 3>{S(0), S(0), S(1)});

  EtaBasis t = eta_basis(Net{{S(2) * (x * y), S(2) * (x * z), z * z}});
  CHECK(t.H == std::array<Surd, 3>{S(0), S(0), S(2, 3)});
  CHECK(t.B1 == std::array<Surd, 3>{S(0), S(0), S(1, 3)});
  CHECK(t.B2 == std::array<Surd, 3>{S(0), S(0), S(0)});
  CHECK(t.B3 == std::array<Surd, 3>{S(2), S(0), S(0)});
  CHECK(t.B4 == std::array<Surd, 3>{S(0), S(2), S(0)});
  CHECK(t.B5 == std::array<Surd, 3>{S(0), S(0), S(0)});
}
