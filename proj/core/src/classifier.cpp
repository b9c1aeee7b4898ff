#include "locus/classifier.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "locus/error.hpp"
#include "locus/generic_orbits.hpp"
#include "locus/projection.hpp"

namespace locus {

namespace {

Surd S(int v) { return Surd(Rational(v)); }

std::vector<Poly> minor_system(const Net& net, const Constraint& con) {
  Minors m = minors(net, con);
  return {m.delta, m.d[0], m.d[1], m.d[2]};
}

bool zero_vec(const std::array<Surd, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Surd det3_surd(const std::array<Surd, 3>& a, const std::array<Surd, 3>& b,
               const std::array<Surd, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Census table of Theorem-style point configurations.  Anything else is
// Degenerate; this function never throws.
Kind match_census(const Decomposition& d) {
  if (!d.planes.empty()) {
    if (d.planes.size() > 1) return Kind::Degenerate;
    int real_lines = 0;
    for (const auto& l : d.lines)
      if (l.real) ++real_lines;
    if (real_lines == 1) return Kind::TruncatedCone;
    if (real_lines == 0) return Kind::Ellipsoid;
    return Kind::Degenerate;
  }
  std::multiset<int> real_mults;
  int pairs = 0, pair_mult_one = 0;
  for (const auto& l : d.lines) {
    if (l.real) {
      real_mults.insert(l.multiplicity);
    } else {
      ++pairs;
      if (l.multiplicity == 1) ++pair_mult_one;
    }
  }
  if (pairs == 0) {
    if (real_mults == std::multiset<int>{1, 1, 1, 1, 1, 1}) return Kind::RomanSteiner;
    if (real_mults == std::multiset<int>{1, 1, 2, 2}) return Kind::Type5;
    if (real_mults == std::multiset<int>{3, 3}) return Kind::Type6;
    return Kind::Degenerate;
  }
  if (pairs == 2 && pair_mult_one == 2 && real_mults == std::multiset<int>{1, 1})
    return Kind::CrossCapSurface;
  return Kind::Degenerate;
}

SingularType type_of(int multiplicity) {
  switch (multiplicity) {
    case 1: return SingularType::CC;
    case 2: return SingularType::TCC;
    case 3: return SingularType::DTCC;
    default: return SingularType::Other;
  }
}

// A record sitting on the axis the cylinder leaves free.
bool at_pole(const LineRecord& rec) {
  if (rec.exact) return rec.v[0].is_zero() && rec.v[1].is_zero();
  return std::abs(rec.vc[0]) < 1e-6 && std::abs(rec.vc[1]) < 1e-6;
}

int rank_surd(std::vector<std::array<Surd, 3>> rows) {
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Surd inv = rows[rank][col].inverse();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      if (rows[r][col].is_zero()) continue;
      Surd f = rows[r][col] * inv;
      for (int c = 0; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

// Which quadric-like object the locus of a non-point-census jet traces.  Per
// component i with quadric coefficients (x^2, xy, y^2, xz, yz, z^2) the locus
// over the cylinder (cos t, sin t, c) is
//   center_i + u_i cos 2t / 2 + w_i sin 2t / 2 + c (a_i cos t + b_i sin t) + c^2 h_i
// so it is bounded exactly when a = b = h = 0, an ellipse when additionally
// {u, w} spans a 2-plane, and a paraboloid when the c^2 drift h is transverse
// to the planar cross-section.
PlanarKind planar_kind_of(const Net& net) {
  std::array<Surd, 3> u, w, av, bv, hv;
  for (int i = 0; i < 3; ++i) {
    QuadCoeffs c = quad_coeffs(net.q[i]);
    u[i] = c[0] - c[2];
    w[i] = c[1];
    av[i] = c[3];
    bv[i] = c[4];
    hv[i] = c[5];
  }
  bool bounded = zero_vec(av) && zero_vec(bv) && zero_vec(hv);
  if (bounded) {
    if (rank_surd({u, w}) == 2) return PlanarKind::Ellipse;
    return PlanarKind::PlanarOther;
  }
  if (rank_surd({u, w, av, bv, hv}) <= 2) return PlanarKind::Paraboloid;
  if (rank_surd({u, w, av, bv}) <= 2 &&
      rank_surd({u, w, av, bv, hv}) > rank_surd({u, w, av, bv}))
    return PlanarKind::Paraboloid;
  return PlanarKind::PlanarOther;
}

// Seeded positive definite constraint p = L^T L with L upper triangular over
// a small rational pool.  The pool is arranged to stay clear of the symmetry
// walls of the normal forms: the diagonal entries are pairwise distinct and
// the off-diagonal entries never vanish, so p shares no coordinate axis or
// rotational symmetry with the coordinate-aligned representatives.
Constraint random_constraint(std::mt19937_64& rng) {
  static const Rational diag_pool[] = {Rational(1), Rational(2), Rational(3),
                                       Rational(1, 2), Rational(5, 2)};
  static const Rational off_pool[] = {Rational(1),     Rational(-1),
                                      Rational(1, 2),  Rational(-1, 2),
                                      Rational(2),     Rational(-2),
                                      Rational(1, 3),  Rational(-1, 3)};
  int d0 = static_cast<int>(rng() % 5);
  int d1 = (d0 + 1 + static_cast<int>(rng() % 4)) % 5;
  int d2 = d0;
  while (d2 == d0 || d2 == d1) d2 = (d2 + 1) % 5;
  d2 = (d2 + static_cast<int>(rng() % 3)) % 5;
  while (d2 == d0 || d2 == d1) d2 = (d2 + 1) % 5;
  std::array<std::array<Rational, 3>, 3> l{};
  l[0][0] = diag_pool[d0];
  l[1][1] = diag_pool[d1];
  l[2][2] = diag_pool[d2];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) l[i][j] = off_pool[rng() % 8];
  Poly form;
  for (int i = 0; i < 3; ++i) {
    Poly row;
    for (int j = i; j < 3; ++j) row += Surd(l[i][j]) * Poly::var(j);
    form += row * row;
  }
  return Constraint::general(form);
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::RomanSteiner: return "RomanSteiner";
    case Kind::CrossCapSurface: return "CrossCapSurface";
    case Kind::Type5: return "Type5";
    case Kind::Type6: return "Type6";
    case Kind::TruncatedCone: return "TruncatedCone";
    case Kind::Ellipsoid: return "Ellipsoid";
    case Kind::Planar: return "Planar";
    case Kind::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

std::string planar_kind_name(PlanarKind k) {
  switch (k) {
    case PlanarKind::Ellipse: return "Ellipse";
    case PlanarKind::Paraboloid: return "Paraboloid";
    case PlanarKind::PlanarOther: return "PlanarOther";
  }
  return "PlanarOther";
}

LocusClassification classify_regular(const Net& net, const Constraint& con,
                                     std::uint64_t seed, double tol) {
  LocusClassification out;
  out.substantial = substantiality(net, con).substantial;
  std::vector<Poly> sys = minor_system(net, con);
  if (!out.substantial) {
    out.kind = Kind::Planar;
    // Best-effort evidence: the variety is typically positive dimensional
    // here, so any solver failure is part of the answer.
    try {
      out.evidence = decompose(sys, seed, tol, 0);
    } catch (const Error&) {
    }
    return out;
  }
  try {
    out.evidence = decompose(sys, seed, tol, 6);
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateSystem) {
      out.kind = Kind::Degenerate;
      return out;
    }
    throw;
  }
  out.kind = match_census(out.evidence);
  return out;
}

SteinerCheck steiner_sufficient(const Net& net, std::uint64_t seed, double tol) {
  EtaBasis b = eta_basis(net);
  SteinerCheck out;
  out.holds = zero_vec(b.H) && zero_vec(b.B1) && zero_vec(b.B2) &&
              !det3_surd(b.B3, b.B4, b.B5).is_zero();
  out.classification = classify_regular(net, Constraint::sphere(), seed, tol);
  if (out.holds && out.classification.kind != Kind::RomanSteiner)
    fail(Errc::TableViolation,
         "sufficient condition held but the locus classified as " +
             kind_name(out.classification.kind));
  return out;
}

SingularReport classify_singular(const Net& net, std::uint64_t seed, double tol) {
  SingularReport out;
  Constraint cyl = Constraint::cylinder();
  Minors m = minors(net, cyl);
  Vec3 pole{S(0), S(0), S(1)};
  out.asymptotic = m.delta.eval(pole).is_zero();
  std::vector<Poly> sys{m.delta, m.d[0], m.d[1], m.d[2]};
  try {
    out.evidence = decompose(sys, seed, tol, 6);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateSystem) throw;
    out.degenerate_system = true;
    out.planar_kind = planar_kind_of(net);
    return out;
  }
  if (!out.evidence.planes.empty()) out.planar_kind = planar_kind_of(net);
  for (const auto& rec : out.evidence.lines) {
    if (!rec.real) continue;
    if (at_pole(rec))
      out.at_infinity.push_back(rec);
    else
      out.finite.push_back({type_of(rec.multiplicity), rec});
  }
  return out;
}

SingularReport classify_singular(const SingularJet& jet, std::uint64_t seed,
                                 double tol) {
  return classify_singular(jet.net(), seed, tol);
}

std::string census_string(const SingularReport& r) {
  if (r.planar_kind) return planar_kind_name(*r.planar_kind);
  int n[4] = {0, 0, 0, 0};
  for (const auto& f : r.finite) n[static_cast<int>(f.type)]++;
  static const char* tag[4] = {"CC", "TCC", "DTCC", "Other"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (n[k] == 0) continue;
    if (!s.empty()) s += "+";
    s += std::to_string(n[k]) + tag[k];
  }
  if (s.empty()) s = "0CC";
  return s;
}

std::set<std::string> generic_census(const std::string& orbit, int trials,
                                     std::uint64_t seed, bool singular_mode,
                                     double tol) {
  const OrbitRecord& rec = orbit_lookup(orbit);
  const std::vector<std::string>& allowed =
      singular_mode ? rec.singular_census : rec.regular_census;
  Poly jacobian = minors(rec.normal_form, Constraint::sphere()).delta;
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  for (int t = 0; t < trials; ++t) {
    Constraint p = random_constraint(rng);
    std::string label;
    if (!singular_mode) {
      label = kind_name(classify_regular(rec.normal_form, p, seed + t, tol).kind);
    } else if (jacobian.is_zero()) {
      // Every direction of every member is asymptotic; the projected jet is
      // the net itself, so transforms add nothing but coordinate noise.
      label = census_string(classify_singular(rec.normal_form, seed + t, tol));
    } else {
      Net member = apply_generic(rec.normal_form, generic_transform(p));
      label = census_string(singular_trial(member, seed + t, tol));
    }
    if (std::find(allowed.begin(), allowed.end(), label) == allowed.end())
      fail(Errc::TableViolation, "orbit " + orbit + " produced " + label +
                                     " outside its census row under constraint " +
                                     p.form.str());
    seen.insert(label);
  }
  return seen;
}

SingularReport singular_trial(const Net& member, std::uint64_t seed, double tol) {
  // Prefer the pole: when it is not asymptotic the projection needs no
  // source rotation, so nets whose structure is aligned with the z-axis
  // (the planar families in particular) are classified in their own frame.
  Vec3 pole{S(0), S(0), S(1)};
  if (!is_asymptotic(member, pole))
    return project_along(member, pole, seed, tol).singular_report;
  Poly jacobian = minors(member, Constraint::sphere()).delta;
  if (jacobian.is_zero())
    return project_along(member, pole, seed, tol).singular_report;
  // The pole is asymptotic but generic directions are not: walk seeded
  // rational points of the sphere (stereographic, hence exactly unit).
  std::mt19937_64 rng(seed * 2 + 1);
  for (int k = 0; k < 64; ++k) {
    Rational a(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 4) + 1);
    Rational b(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 4) + 1);
    Rational den = Rational(1) + a * a + b * b;
    Vec3 v{Surd(Rational(2) * a / den), Surd(Rational(2) * b / den),
           Surd((Rational(1) - a * a - b * b) / den)};
    if (is_asymptotic(member, v)) continue;
    return project_along(member, v, seed, tol).singular_report;
  }
  fail(Errc::BadInput,
       "no non-asymptotic direction among 64 seeded sphere points");
}

}  // namespace locus
