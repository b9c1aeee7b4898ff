#include "locus/net_model.hpp"

#include <set>
#include <utility>

#include "locus/error.hpp"

namespace locus {

namespace {

Poly X() { return Poly::var(0); }
Poly Y() { return Poly::var(1); }
Poly Z() { return Poly::var(2); }

Surd S(long long n, long long d = 1) { return Surd(Rational(n, d)); }

Surd half() { return S(1, 2); }

}  // namespace

Poly quad_poly(const QuadCoeffs& c) {
  Poly p;
  p.add({2, 0, 0}, c[0]);
  p.add({1, 1, 0}, c[1]);
  p.add({0, 2, 0}, c[2]);
  p.add({1, 0, 1}, c[3]);
  p.add({0, 1, 1}, c[4]);
  p.add({0, 0, 2}, c[5]);
  return p;
}

QuadCoeffs quad_coeffs(const Poly& p) {
  if (!p.is_zero() && !(p.is_homogeneous() && p.degree() == 2))
    fail(Errc::BadInput, "expected a ternary quadratic form, got " + p.str());
  return {p.coeff({2, 0, 0}), p.coeff({1, 1, 0}), p.coeff({0, 2, 0}),
          p.coeff({1, 0, 1}), p.coeff({0, 1, 1}), p.coeff({0, 0, 2})};
}

Net make_net(const QuadCoeffs& q1, const QuadCoeffs& q2, const QuadCoeffs& q3) {
  return Net{{quad_poly(q1), quad_poly(q2), quad_poly(q3)}};
}

std::array<std::array<Surd, 3>, 3> quad_matrix(const Poly& form) {
  QuadCoeffs c = quad_coeffs(form);
  Surd xy = half() * c[1], xz = half() * c[3], yz = half() * c[4];
  return {{{c[0], xy, xz}, {xy, c[2], yz}, {xz, yz, c[5]}}};
}

Mat3 mat_identity() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = S(i == j ? 1 : 0);
  return m;
}

Mat3 mat_transpose(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Surd s = S(0);
      for (int k = 0; k < 3; ++k) s = s + a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

Vec3 mat_apply(const Mat3& m, const Vec3& v) {
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

Net compose_linear(const Net& net, const Mat3& m) {
  std::array<Poly, 3> subs;
  for (int i = 0; i < 3; ++i) {
    Poly row;
    for (int j = 0; j < 3; ++j) row = row + Poly(m[i][j]) * Poly::var(j);
    subs[i] = row;
  }
  Net out;
  for (int i = 0; i < 3; ++i) out.q[i] = net.q[i].substitute(subs);
  return out;
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  const Surd& la = a.terms().rbegin()->second;
  const Surd& lb = b.terms().rbegin()->second;
  return lb * a == la * b;
}

Poly net_discriminant(const Net& net) {
  std::array<Poly, 3> pencil = {X(), Y(), Z()};
  std::array<std::array<Poly, 3>, 3> m;
  for (int k = 0; k < 3; ++k) {
    auto a = quad_matrix(net.q[k]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] += a[i][j] * pencil[k];
  }
  return det3(m);
}

Net abc_family(const Rational& c, const Rational& g) {
  Poly x = X(), y = Y(), z = Z();
  Poly q1 = S(2) * (x * z) + y * y;
  Poly q2 = S(2) * (y * z);
  Poly q3 = -(x * x) + Surd(Rational(-2) * g) * (y * y) + Surd(c) * (z * z) +
            Surd(Rational(2) * g) * (x * z);
  return Net{{q1, q2, q3}};
}

std::string abc_orbit_label(const Rational& c, const Rational& g) {
  Rational edge = Rational(-9) * g * g;
  if (c == 0 && g == 0) return "C";
  if (c == 0) return g > 0 ? "B_a*" : "B_c*";
  if (c == edge) return g > 0 ? "B_c" : "B_a";
  if (c < edge) return "A_b";
  if (c > 0) return "A_d";
  return g > 0 ? "A_c" : "A_a";
}

SingularJet SingularJet::from_net(const Net& net) {
  SingularJet j;
  for (int i = 0; i < 3; ++i) {
    QuadCoeffs c = quad_coeffs(net.q[i]);
    j.comp[i] = {S(2) * c[0], c[1], S(2) * c[2], S(2) * c[5], c[3], c[4]};
  }
  return j;
}

Net SingularJet::net() const {
  Net n;
  for (int i = 0; i < 3; ++i) {
    const Component& k = comp[i];
    n.q[i] = quad_poly(
        {half() * k.l, k.m, half() * k.n, k.q, k.r, half() * k.p});
  }
  return n;
}

RegularJet monge_embed(const Net& net) {
  return RegularJet{{X(), Y(), Z(), net.q[0], net.q[1], net.q[2]}};
}

namespace {

// Discriminant of the two-parameter family, with (x, y, z) standing for the
// pencil coordinates.
Poly abc_disc(const Rational& c, const Rational& g) {
  Poly x = X(), y = Y(), z = Z();
  Poly lin = x - Surd(Rational(2) * g) * z;
  Poly quad =
      x * x + Surd(Rational(2) * g) * (x * z) + Surd(c + g * g) * (z * z);
  return y * y * z - lin * quad;
}

OrbitRecord fixed_orbit(std::string name, int codim, Net nf, Poly disc,
                        std::vector<std::pair<std::string, Net>> generic,
                        std::vector<std::string> reg,
                        std::vector<std::string> sing) {
  OrbitRecord r;
  r.name = std::move(name);
  r.codimension = codim;
  r.normal_form = std::move(nf);
  r.discriminant = std::move(disc);
  r.generic_forms = std::move(generic);
  r.regular_census = std::move(reg);
  r.singular_census = std::move(sing);
  return r;
}

OrbitRecord abc_orbit(const Rational& c, const Rational& g, int codim) {
  OrbitRecord r;
  r.name = abc_orbit_label(c, g);
  r.codimension = codim;
  r.normal_form = abc_family(c, g);
  r.discriminant = abc_disc(c, g);
  r.abc_params = std::make_pair(c, g);
  bool steiner_only = (c == Rational(-9) * g * g && g > 0) ||
                      (c == 0 && g < 0) || (c == 0 && g == 0);
  if (steiner_only) {
    r.regular_census = {"RomanSteiner"};
    r.singular_census = {"6CC"};
  } else {
    r.regular_census = {"RomanSteiner", "CrossCapSurface"};
    r.singular_census = {"6CC", "2CC"};
  }
  return r;
}

std::vector<OrbitRecord> build_table() {
  Poly x = X(), y = Y(), z = Z();
  const Surd r2 = Surd::sqrt(Rational(2));
  const std::vector<std::string> rs = {"RomanSteiner"};
  const std::vector<std::string> cc = {"CrossCapSurface"};
  const std::vector<std::string> rs_cc = {"RomanSteiner", "CrossCapSurface"};
  const std::vector<std::string> s6 = {"6CC"};
  const std::vector<std::string> s2 = {"2CC"};
  const std::vector<std::string> s62 = {"6CC", "2CC"};

  std::vector<OrbitRecord> t;

  // Open cells and their boundary walls in the two-parameter family.
  t.push_back(abc_orbit(Rational(-2), Rational(-1), 0));   // A_a
  t.push_back(abc_orbit(Rational(-10), Rational(1), 0));   // A_b
  t.push_back(abc_orbit(Rational(-2), Rational(1), 0));    // A_c
  t.push_back(abc_orbit(Rational(5), Rational(1), 0));     // A_d
  t.push_back(abc_orbit(Rational(-9), Rational(-1), 1));   // B_a
  t.push_back(abc_orbit(Rational(-9), Rational(1), 1));    // B_c
  t.push_back(abc_orbit(Rational(0), Rational(1), 1));     // B_a*
  t.push_back(abc_orbit(Rational(0), Rational(-1), 1));    // B_c*
  t.push_back(abc_orbit(Rational(0), Rational(0), 2));     // C

  Poly zy2 = z + S(2) * y;  // recurring shifted pencil direction

  t.push_back(fixed_orbit(
      "D_a", 2, Net{{x * x, y * y, zy2 * zy2 + S(2) * (x * y)}},
      z * (x * y - z * z),
      {{"RomanSteiner", Net{{x * x, y * y, zy2 * zy2 + S(2) * (x * y)}}},
       {"CrossCapSurface",
        Net{{(x + (r2 / S(2)) * z) * (x + (r2 / S(2)) * z),
             (half() * y - (r2 / S(4)) * z) * (half() * y - (r2 / S(4)) * z),
             S(2) * (z * z) +
                 (x + (r2 / S(2)) * z) * (y - (r2 / S(2)) * z)}}}},
      rs_cc, s62));

  t.push_back(fixed_orbit(
      "D_b", 2, Net{{x * x - y * y, S(2) * (x * y), x * x + z * z}},
      z * (x * x + x * z + y * y),
      {{"CrossCapSurface",
        Net{{x * x - y * y, S(2) * (x * y), x * x + zy2 * zy2}}}},
      cc, s2));

  t.push_back(fixed_orbit(
      "D_c", 2, Net{{x * x - y * y, S(2) * (x * y), x * x - z * z}},
      z * (x * x + x * z + y * y),
      {{"CrossCapSurface",
        Net{{x * x - y * y, S(2) * (x * y), x * x - zy2 * zy2}}}},
      cc, s2));

  t.push_back(fixed_orbit(
      "D_a*", 2,
      Net{{S(2) * (x * z), S(2) * (y * z), z * z + S(2) * (x * y)}},
      z * (S(2) * (x * y) - z * z),
      {{"RomanSteiner",
        Net{{x * z, y * z, S(1, 4) * (z * z) + S(2) * (x * y)}}},
       {"CrossCapSurface", Net{{x * z, S(2) * (y * z), z * z + x * y}}}},
      rs_cc, s62));

  t.push_back(fixed_orbit(
      "D_b*", 2,
      Net{{S(2) * (x * z), S(2) * (y * z), x * x + y * y - z * z}},
      z * (x * x + y * y + z * z),
      {{"CrossCapSurface",
        Net{{x * z, S(1, 3) * (y * z),
             x * x + S(1, 9) * (y * y) - S(1, 4) * (z * z)}}}},
      cc, s2));

  t.push_back(fixed_orbit(
      "D_c*", 2,
      Net{{S(2) * (x * z), S(2) * (y * z), x * x + y * y + z * z}},
      z * (x * x + y * y - z * z),
      {{"RomanSteiner",
        Net{{x * z, S(1, 3) * (y * z),
             x * x + S(1, 9) * (y * y) + S(1, 4) * (z * z)}}},
       {"CrossCapSurface",
        Net{{S(1, 3) * (x * z), S(2, 3) * (y * z),
             S(1, 4) * (x * x) + y * y + S(1, 9) * (z * z)}}}},
      rs_cc, s62));

  Poly zmy = z - y;

  t.push_back(fixed_orbit(
      "E_a", 3, Net{{x * x + y * y, S(2) * (x * y), z * z}},
      z * (x * x - y * y),
      {{"RomanSteiner", Net{{x * x + y * y, S(2) * (x * y), zmy * zmy}}}},
      rs, s6));

  t.push_back(fixed_orbit(
      "E_b", 3, Net{{x * x - y * y, S(2) * (x * y), z * z}},
      z * (x * x + y * y),
      {{"CrossCapSurface", Net{{x * x - y * y, S(2) * (x * y), zmy * zmy}}}},
      cc, s2));

  t.push_back(fixed_orbit(
      "E_a*", 3, Net{{x * x - y * y, S(2) * (x * z), S(2) * (y * z)}},
      x * (y * y - z * z),
      {{"RomanSteiner",
        Net{{x * x - y * y, S(2) * (x * z), S(2) * (y * z)}}}},
      rs, s6));

  t.push_back(fixed_orbit(
      "E_b*", 3, Net{{x * x + y * y, S(2) * (x * z), S(2) * (y * z)}},
      x * (y * y + z * z),
      {{"CrossCapSurface",
        Net{{x * x + S(1, 4) * (y * y), S(2) * (x * z), y * z}}}},
      cc, s2));

  Poly zmx = z - x;

  t.push_back(fixed_orbit(
      "F_a", 3, Net{{x * x + y * y, S(2) * (x * y), S(2) * (y * z)}},
      x * (z * z),
      {{"RomanSteiner",
        Net{{x * x + S(1, 4) * (y * y), x * y, y * zmx}}},
       {"CrossCapSurface",
        Net{{S(1, 4) * (x * x) + y * y, x * y, S(2) * (y * z)}}}},
      rs_cc, s62));

  t.push_back(fixed_orbit(
      "F_b", 3, Net{{x * x - y * y, S(2) * (x * y), S(2) * (y * z)}},
      x * (z * z),
      {{"CrossCapSurface",
        Net{{x * x - S(1, 4) * (y * y), x * y, y * zmx}}}},
      cc, s2));

  Poly xmy = x - y;

  t.push_back(fixed_orbit(
      "F_a*", 3, Net{{x * x - y * y, S(2) * (x * z), z * z}},
      x * (x * z - y * y),
      {{"Type5", Net{{xmy * xmy - y * y, S(2) * (xmy * z), z * z}}}},
      {"Type5"}, {"2CC+2TCC"}));

  t.push_back(fixed_orbit(
      "F_b*", 3, Net{{x * x + y * y, S(2) * (x * z), z * z}},
      x * (x * z - y * y),
      {{"Type5", Net{{xmy * xmy + y * y, S(2) * (xmy * z), z * z}}}},
      {"Type5"}, {"2CC+2TCC"}));

  Poly ymx = y - x;

  t.push_back(fixed_orbit(
      "G", 4, Net{{x * x, y * y, S(2) * (y * z)}}, x * (z * z),
      {{"Type5", Net{{x * x, ymx * ymx, S(2) * (ymx * zmx)}}}},
      {"Type5"}, {"2CC+2TCC"}));

  t.push_back(fixed_orbit(
      "G*", 4, Net{{S(2) * (x * y), S(2) * (x * z), z * z}},
      (x * x) * z,
      {{"Type5", Net{{S(2) * (x * y), S(2) * (x * z), z * z}}}},
      {"Type5"}, {"2CC+2TCC"}));

  t.push_back(fixed_orbit(
      "H", 5, Net{{x * x, S(2) * (x * y), y * y + S(2) * (x * z)}},
      (z * z) * z,
      {{"Type6", Net{{x * x, S(2) * (x * y), y * y + S(2) * (x * z)}}}},
      {"Type6"}, {"2DTCC"}));

  t.push_back(fixed_orbit(
      "I", 7, Net{{x * x, S(2) * (x * y), y * y}}, Poly(),
      {{"TruncatedCone", Net{{x * x, S(2) * (x * y), y * y}}}},
      {"TruncatedCone"}, {"Ellipse"}));

  t.push_back(fixed_orbit(
      "I*", 7, Net{{S(2) * (x * z), S(2) * (y * z), z * z}}, Poly(),
      {{"Ellipsoid", Net{{S(2) * (x * z), S(2) * (y * z), z * z}}}},
      {"Ellipsoid"}, {"Paraboloid"}));

  return t;
}

void validate_table(const std::vector<OrbitRecord>& t) {
  std::set<std::string> seen;
  for (const OrbitRecord& r : t) {
    if (!seen.insert(r.name).second)
      fail(Errc::CorruptAtlas, "duplicate orbit record '" + r.name + "'");
    check_orbit_record(r);
  }
}

}  // namespace

void check_orbit_record(const OrbitRecord& r) {
  if (r.name.empty() || r.regular_census.empty() || r.singular_census.empty())
    fail(Errc::CorruptAtlas, "incomplete orbit record '" + r.name + "'");
  if (r.abc_params) {
    const auto& [c, g] = *r.abc_params;
    if (abc_orbit_label(c, g) != r.name)
      fail(Errc::CorruptAtlas,
           "parameter cell disagrees with name '" + r.name + "'");
    if (!(abc_family(c, g) == r.normal_form))
      fail(Errc::CorruptAtlas,
           "family representative drifted for '" + r.name + "'");
  }
  if (!proportional(net_discriminant(r.normal_form), r.discriminant))
    fail(Errc::CorruptAtlas, "discriminant mismatch for '" + r.name + "'");
}

const std::vector<OrbitRecord>& orbit_table() {
  static const std::vector<OrbitRecord> table = [] {
    std::vector<OrbitRecord> t = build_table();
    validate_table(t);
    return t;
  }();
  return table;
}

const OrbitRecord& orbit_lookup(const std::string& name) {
  for (const OrbitRecord& r : orbit_table())
    if (r.name == name) return r;
  fail(Errc::BadInput, "no orbit named '" + name + "'");
}

}  // namespace locus
