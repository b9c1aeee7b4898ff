#include "locus/classifier.hpp"

#include <cmath>

#include "doctest.h"
#include "locus/error.hpp"

using namespace locus;

namespace {

Poly X() { return Poly::var(0); }
Poly Y() { return Poly::var(1); }
Poly Z() { return Poly::var(2); }

Surd S(long long n, long long d = 1) { return Surd(Rational(n, d)); }

Surd half() { return S(1, 2); }

int real_count(const Decomposition& d) {
  int n = 0;
  for (const auto& l : d.lines) n += l.real ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("point censuses of the worked nets") {
  Poly x = X(), y = Y(), z = Z();

  // two double lines and two simple ones
  auto pencil = classify_regular(Net{{S(2) * (x * y), S(2) * (x * z), z * z}});
  CHECK(pencil.kind == Kind::Type5);
  CHECK(pencil.substantial);
  CHECK(pencil.evidence.planes.empty());
  CHECK(pencil.evidence.total_line_multiplicity == 6);

  // two triple lines
  auto cusp = classify_regular(Net{{x * x, S(2) * (x * y), y * y + S(2) * (x * z)}});
  CHECK(cusp.kind == Kind::Type6);
  CHECK(cusp.evidence.lines.size() == 2);

  // six simple real lines
  auto box = classify_regular(Net{{x * y, x * z, y * z}});
  CHECK(box.kind == Kind::RomanSteiner);
  CHECK(real_count(box.evidence) == 6);

  // two real lines plus two conjugate pairs
  auto crosscap = classify_regular(
      Net{{x * x + S(1, 4) * (y * y), S(2) * (x * z), y * z}});
  CHECK(crosscap.kind == Kind::CrossCapSurface);
  CHECK(real_count(crosscap.evidence) == 2);
}

TEST_CASE("plane censuses of the worked nets") {
  Poly x = X(), y = Y(), z = Z();

  // z-free net: plane z = 0 plus a triple line through the pole
  auto cone = classify_regular(Net{{x * x, S(2) * (x * y), y * y}});
  CHECK(cone.kind == Kind::TruncatedCone);
  REQUIRE(cone.evidence.planes.size() == 1);
  CHECK(cone.evidence.planes[0].factor == z);

  // mixed-signature variant with the plane y = 0
  auto cone2 = classify_regular(Net{{-(x * x) - y * y + S(2) * (z * z),
                                     half() * (x * x) - half() * (y * y),
                                     x * z}});
  CHECK(cone2.kind == Kind::TruncatedCone);
  REQUIRE(cone2.evidence.planes.size() == 1);
  CHECK(cone2.evidence.planes[0].factor == y);

  // totally umbilic slice: plane plus a conjugate pair, no real line
  auto umbilic = classify_regular(Net{{S(2) * (x * z), S(2) * (y * z), z * z}});
  CHECK(umbilic.kind == Kind::Ellipsoid);
  REQUIRE(umbilic.evidence.planes.size() == 1);
  CHECK(real_count(umbilic.evidence) == 0);
}

TEST_CASE("non-substantial nets classify as planar without solving") {
  Poly x = X(), y = Y(), z = Z();

  auto flat = classify_regular(Net{{Poly(), Poly(), Poly()}});
  CHECK(flat.kind == Kind::Planar);
  CHECK_FALSE(flat.substantial);

  // contains the sphere form itself
  auto graph = classify_regular(Net{{x * x + y * y + z * z, x * y, x * z}});
  CHECK(graph.kind == Kind::Planar);
  CHECK_FALSE(graph.substantial);
}

TEST_CASE("closed-form sufficient condition for six real lines") {
  Poly x = X(), y = Y(), z = Z();

  auto yes = steiner_sufficient(Net{{x * y, x * z, y * z}});
  CHECK(yes.holds);
  CHECK(yes.classification.kind == Kind::RomanSteiner);

  // same census, but the condition itself fails (B1 does not vanish)
  auto no = steiner_sufficient(
      Net{{half() * (x * x) - half() * (y * y), x * z, y * z}});
  CHECK_FALSE(no.holds);
  CHECK(no.classification.kind == Kind::RomanSteiner);

  // and a net that is not Steiner at all
  auto other = steiner_sufficient(Net{{S(2) * (x * y), S(2) * (x * z), z * z}});
  CHECK_FALSE(other.holds);
  CHECK(other.classification.kind == Kind::Type5);
}

TEST_CASE("cylinder census of an asymptotic pole") {
  Poly x = X(), y = Y(), z = Z();

  // pole direction is asymptotic; two finite simple singularities remain and
  // the pole itself soaks up multiplicity 4
  Net saddle = Net{{half() * (x * x) - half() * (y * y), x * z, y * z}};
  auto rep = classify_singular(saddle);
  CHECK(rep.asymptotic);
  CHECK_FALSE(rep.degenerate_system);
  CHECK_FALSE(rep.planar_kind.has_value());
  REQUIRE(rep.finite.size() == 2);
  CHECK(rep.finite[0].type == SingularType::CC);
  CHECK(rep.finite[1].type == SingularType::CC);
  REQUIRE(rep.at_infinity.size() == 1);
  CHECK(rep.at_infinity[0].multiplicity == 4);
  CHECK(census_string(rep) == "2CC");

  // jet round trip gives the same census
  auto jet_rep = classify_singular(SingularJet::from_net(saddle));
  CHECK(census_string(jet_rep) == "2CC");
}

TEST_CASE("cylinder census of quadric-like loci") {
  Poly x = X(), y = Y(), z = Z();

  // z-free net: every cylinder minor dies, the locus is a bounded conic
  auto flat = classify_singular(Net{{x * x, S(2) * (x * y), y * y}});
  CHECK(flat.degenerate_system);
  CHECK(flat.asymptotic);
  REQUIRE(flat.planar_kind.has_value());
  CHECK(*flat.planar_kind == PlanarKind::Ellipse);
  CHECK(census_string(flat) == "Ellipse");

  // totally umbilic jet: plane component, unbounded drift along c^2
  auto umbilic = classify_singular(Net{{S(2) * (x * z), S(2) * (y * z), z * z}});
  CHECK_FALSE(umbilic.degenerate_system);
  REQUIRE(umbilic.planar_kind.has_value());
  CHECK(*umbilic.planar_kind == PlanarKind::Paraboloid);
  CHECK(census_string(umbilic) == "Paraboloid");
  CHECK(umbilic.finite.empty());
}

TEST_CASE("census strings count singularity groups") {
  SingularReport r;
  CHECK(census_string(r) == "0CC");
  LineRecord l;
  r.finite.push_back({SingularType::CC, l});
  r.finite.push_back({SingularType::CC, l});
  r.finite.push_back({SingularType::TCC, l});
  r.finite.push_back({SingularType::TCC, l});
  CHECK(census_string(r) == "2CC+2TCC");
  r.finite.push_back({SingularType::DTCC, l});
  CHECK(census_string(r) == "2CC+2TCC+1DTCC");
  r.planar_kind = PlanarKind::PlanarOther;
  CHECK(census_string(r) == "PlanarOther");
}

TEST_CASE("seeded trials pick the pole direction when they may") {
  Poly x = X(), y = Y(), z = Z();

  // non-asymptotic pole: six simple finite singularities, no rotation
  auto hexa = singular_trial(Net{{x * x + y * z, y * y + x * z, z * z + x * y}}, 3);
  CHECK(census_string(hexa) == "6CC");
  CHECK(hexa.at_infinity.empty());

  // asymptotic pole: the walk dodges the asymptotic cone
  auto dodge = singular_trial(Net{{x * y, x * z, y * z}}, 3);
  CHECK(census_string(dodge) == "6CC");

  // z-aligned planar family: the pole keeps the net in its own frame,
  // where the quadric shape of the locus is recognizable
  auto parab = singular_trial(Net{{S(2) * (x * z), S(2) * (y * z), z * z}}, 3);
  REQUIRE(parab.planar_kind.has_value());
  CHECK(*parab.planar_kind == PlanarKind::Paraboloid);

  // a net with no z dependence at all is classified in place
  auto flat = singular_trial(Net{{x * x, S(2) * (x * y), y * y}}, 3);
  REQUIRE(flat.planar_kind.has_value());
  CHECK(*flat.planar_kind == PlanarKind::Ellipse);
}

TEST_CASE("generic censuses stay inside their table rows") {
  // fixed orbits with a single allowed answer
  CHECK(generic_census("H", 4, 11) == std::set<std::string>{"Type6"});
  CHECK(generic_census("G*", 4, 11) == std::set<std::string>{"Type5"});
  CHECK(generic_census("I", 4, 11) == std::set<std::string>{"TruncatedCone"});
  CHECK(generic_census("I*", 4, 11) == std::set<std::string>{"Ellipsoid"});
  CHECK(generic_census("E_b*", 4, 11) == std::set<std::string>{"CrossCapSurface"});

  // singular mode, including the all-asymptotic orbit
  CHECK(generic_census("I", 3, 7, true) == std::set<std::string>{"Ellipse"});
  CHECK(generic_census("I*", 3, 7, true) == std::set<std::string>{"Paraboloid"});
  CHECK(generic_census("H", 3, 7, true) == std::set<std::string>{"2DTCC"});
  CHECK(generic_census("G", 3, 7, true) == std::set<std::string>{"2CC+2TCC"});

  CHECK_THROWS_AS((void)generic_census("no-such-orbit", 1, 0), Error);
}
