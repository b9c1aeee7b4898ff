#include "locus/variety.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "locus/error.hpp"

namespace locus {

namespace {

using Cplx = std::complex<double>;

Surd S(long long n, long long d = 1) { return Surd(Rational(n, d)); }

std::vector<Poly> nonzero_entries(const std::vector<Poly>& system) {
  std::vector<Poly> out;
  for (const auto& p : system)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

double coeff_scale(const Poly& p) {
  double s = 0;
  for (const auto& [m, c] : p.terms()) s += std::abs(c.to_double());
  return s > 0 ? s : 1.0;
}

// ---------------------------------------------------------------------------
// plane extraction

struct SeedLine {
  std::array<Surd, 3> p0, p1;
};

Poly restrict_to_line(const Poly& g, const SeedLine& l) {
  std::array<Poly, 3> subs;
  for (int j = 0; j < 3; ++j)
    subs[j] = l.p0[j] * Poly::var(0) + l.p1[j] * Poly::var(1);
  return g.substitute(subs);
}

std::array<Surd, 3> cross(const std::array<Surd, 3>& a,
                          const std::array<Surd, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const std::array<Surd, 3>& a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

Poly linear_form(const std::array<Surd, 3>& c) {
  Poly p;
  for (int j = 0; j < 3; ++j) p += c[j] * Poly::var(j);
  return p;
}

// Exact real points of V(g) on a seeded projective line.
std::vector<std::array<Surd, 3>> exact_points_on_line(const Poly& g,
                                                      const SeedLine& l) {
  std::vector<std::array<Surd, 3>> pts;
  Poly r = restrict_to_line(g, l);
  if (r.is_zero() || r.degree() == 0) return pts;
  for (const BinaryRoot& root : roots_binary(to_binary_form(r, 0, 1))) {
    if (!root.exact || !root.real) continue;
    std::array<Surd, 3> pt;
    for (int j = 0; j < 3; ++j) pt[j] = root.u * l.p0[j] + root.v * l.p1[j];
    pts.push_back(pt);
  }
  return pts;
}

// ---------------------------------------------------------------------------
// point bookkeeping

void canonicalize_numeric(std::array<Cplx, 3>& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  int k = 0;
  for (int j = 2; j >= 0; --j)
    if (std::abs(v[j]) > 1e-6 * m) {
      k = j;
      break;
    }
  Cplx d = v[k];
  for (auto& x : v) x /= d;
  for (int j = 0; j < 3; ++j) {
    if (std::abs(v[j].imag()) > 1e-9) {
      if (v[j].imag() < 0)
        for (auto& x : v) x = std::conj(x);
      break;
    }
  }
}

void canonicalize(LineRecord& r) {
  if (r.exact) {
    int k = 0;
    for (int j = 2; j >= 0; --j)
      if (r.v[j].sign() != 0) {
        k = j;
        break;
      }
    Surd inv = r.v[k].inverse();
    for (auto& x : r.v) x = x * inv;
    for (int j = 0; j < 3; ++j) r.vc[j] = Cplx(r.v[j].to_double(), 0.0);
  } else {
    canonicalize_numeric(r.vc);
    bool re = true;
    for (const auto& x : r.vc) re = re && std::abs(x.imag()) < 1e-7;
    if (re) {
      r.real = true;
      for (auto& x : r.vc) x = Cplx(x.real(), 0.0);
    }
  }
}

bool same_point(const LineRecord& a, const LineRecord& b, double tol) {
  if (a.real != b.real) return false;
  if (a.exact && b.exact) return a.v == b.v;
  for (int j = 0; j < 3; ++j)
    if (std::abs(a.vc[j] - b.vc[j]) > tol) return false;
  return true;
}

// Keeps the first record of every point, upgrading to an exact one if a later
// duplicate has closed-form coordinates.
void dedup(std::vector<LineRecord>& pts, double tol) {
  std::vector<LineRecord> out;
  for (auto& r : pts) {
    bool found = false;
    for (auto& e : out)
      if (same_point(e, r, tol)) {
        if (r.exact && !e.exact) e = r;
        found = true;
        break;
      }
    if (!found) out.push_back(r);
  }
  pts = std::move(out);
}

// ---------------------------------------------------------------------------
// fibers over a root of the eliminant

std::vector<Cplx> complex_poly_roots(std::vector<Cplx> c) {
  double m = 0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  while (c.size() > 1 && std::abs(c.back()) < 1e-12 * m) c.pop_back();
  std::vector<Cplx> roots;
  int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return roots;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    comp(i, n - 1) = -c[i] / c[n];
    if (i > 0) comp(i, i - 1) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

void newton_polish(const std::vector<Cplx>& c, Cplx& z) {
  for (int it = 0; it < 4; ++it) {
    Cplx f = 0, df = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      df = df * z + f;
      f = f * z + c[i];
    }
    if (std::abs(df) < 1e-14) return;
    z -= f / df;
  }
}

void exact_fiber(const std::vector<Poly>& sys, const Surd& x0, const Surd& y0,
                 double tol, std::vector<LineRecord>& out) {
  std::array<Poly, 3> subs = {Poly(x0), Poly(y0), Poly::var(2)};
  std::vector<Poly> restr;
  for (const auto& p : sys) {
    Poly r = p.substitute(subs);
    if (r.is_zero()) continue;
    if (r.degree_in(2) == 0) return;  // a nonzero constant blocks the fiber
    restr.push_back(r);
  }
  if (restr.empty())
    fail(Errc::NotZeroDimensional,
         "a whole pencil of directions lies in the zero set");
  Poly gz = gcd_poly(restr);
  int k = gz.degree_in(2);
  if (k == 0) return;
  BinaryForm bf;
  bf.degree = k;
  bf.axis_u = 0;
  bf.axis_v = 2;
  bf.c.assign(k + 1, Surd());
  for (int i = 0; i <= k; ++i) bf.c[i] = gz.coeff({0, 0, i});
  for (const BinaryRoot& root : roots_binary(bf, tol)) {
    LineRecord rec;
    if (root.exact) {
      rec.exact = true;
      rec.real = true;
      rec.v = {x0, y0, root.v / root.u};
    } else {
      rec.exact = false;
      rec.real = root.real;
      rec.vc = {Cplx(x0.to_double(), 0), Cplx(y0.to_double(), 0),
                root.va / root.ua};
    }
    out.push_back(rec);
  }
}

void numeric_fiber(const std::vector<Poly>& sys, Cplx x0, Cplx y0,
                   bool base_real, double tol, std::vector<LineRecord>& out) {
  std::vector<std::vector<Cplx>> restr;
  double biggest = 0;
  for (const auto& p : sys) {
    std::vector<Cplx> c(p.degree_in(2) + 1, Cplx(0, 0));
    for (const auto& [m, coeff] : p.terms())
      c[m.c] += coeff.to_double() * std::pow(x0, m.a) * std::pow(y0, m.b);
    double cm = 0;
    for (const auto& x : c) cm = std::max(cm, std::abs(x));
    biggest = std::max(biggest, cm / coeff_scale(p));
    restr.push_back(std::move(c));
  }
  if (biggest < 1e-9)
    fail(Errc::NotZeroDimensional,
         "a whole pencil of directions lies in the zero set");

  // roots of the first meaningful restriction, then filtered by the rest
  const std::vector<Cplx>* lead = nullptr;
  for (std::size_t i = 0; i < restr.size(); ++i) {
    double cm = 0;
    for (const auto& x : restr[i]) cm = std::max(cm, std::abs(x));
    if (cm > 1e-9 * coeff_scale(sys[i]) && restr[i].size() > 1) {
      lead = &restr[i];
      break;
    }
  }
  if (!lead) return;
  for (Cplx z : complex_poly_roots(*lead)) {
    newton_polish(*lead, z);
    LineRecord rec;
    rec.exact = false;
    if (base_real && std::abs(z.imag()) < 1e-7 * (1 + std::abs(z))) {
      rec.real = true;
      rec.vc = {x0, y0, Cplx(z.real(), 0)};
    } else if (base_real && z.imag() < 0) {
      continue;  // its conjugate appears in the same root list
    } else {
      rec.real = false;
      rec.vc = {x0, y0, z};
    }
    out.push_back(rec);
  }
}

// ---------------------------------------------------------------------------
// elimination passes

Poly combo(const std::vector<Poly>& sys, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  Poly f;
  for (const auto& p : sys) f += S(c(rng)) * p;
  return f;
}

bool verified_zero(const std::vector<Poly>& sys, const LineRecord& r,
                   double tol) {
  if (r.exact) {
    for (const auto& p : sys)
      if (!p.eval(r.v).is_zero()) return false;
    return true;
  }
  // evaluate on the unit scale representative
  std::array<Cplx, 3> w = r.vc;
  double m = 0;
  for (const auto& x : w) m = std::max(m, std::abs(x));
  for (auto& x : w) x /= m;
  double bound = std::max(tol * 100, 1e-7);
  for (const auto& p : sys)
    if (std::abs(p.eval(w)) > bound * coeff_scale(p)) return false;
  return true;
}

std::vector<LineRecord> one_attempt(const std::vector<Poly>& sys,
                                    std::mt19937_64& rng, double tol) {
  Poly res;
  bool ok = false;
  for (int t = 0; t < 8 && !ok; ++t) {
    Poly f = combo(sys, rng), g = combo(sys, rng);
    if (f.degree_in(2) < 1 || g.degree_in(2) < 1) continue;
    res = resultant(f, g, 2);
    ok = !res.is_zero();
  }
  if (!ok)
    fail(Errc::NotZeroDimensional,
         "every elimination collapses; the zero set contains a curve");

  std::vector<LineRecord> pts;
  if (res.degree() >= 1) {
    for (const BinaryRoot& root : roots_binary(to_binary_form(res, 0, 1), tol)) {
      if (root.exact)
        exact_fiber(sys, root.u, root.v, tol, pts);
      else
        numeric_fiber(sys, root.ua, root.va, root.real, tol, pts);
    }
  }

  // the eliminant never sees the pole of the (x : y) chart
  std::array<Surd, 3> pole = {S(0), S(0), S(1)};
  bool pole_in = true;
  for (const auto& p : sys) pole_in = pole_in && p.eval(pole).is_zero();
  if (pole_in) {
    LineRecord rec;
    rec.exact = true;
    rec.real = true;
    rec.v = pole;
    pts.push_back(rec);
  }

  std::vector<LineRecord> kept;
  for (auto& r : pts) {
    canonicalize(r);
    if (verified_zero(sys, r, tol)) kept.push_back(r);
  }
  dedup(kept, 1e-6);
  return kept;
}

// Multiset agreement, preferring exact coordinates when the passes disagree
// only about representation.
bool merge_attempts(std::vector<LineRecord>& a, const std::vector<LineRecord>& b,
                    double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (auto& ra : a) {
    int hit = -1;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && same_point(ra, b[j], tol)) {
        hit = static_cast<int>(j);
        break;
      }
    if (hit < 0) return false;
    used[hit] = true;
    if (!ra.exact && b[hit].exact) ra = b[hit];
  }
  return true;
}

// ---------------------------------------------------------------------------
// local dual space dimension

int surd_rank(std::vector<std::vector<Surd>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c].sign() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].sign() == 0) continue;
      Surd f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] = m[r][cc] - f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::pair<int, int>> grading(int up_to) {
  std::vector<std::pair<int, int>> idx;
  for (int d = 0; d <= up_to; ++d)
    for (int i = d; i >= 0; --i) idx.push_back({i, d - i});
  return idx;
}

int chart_axis_exact(const std::array<Surd, 3>& v) {
  int k = -1;
  double best = -1;
  for (int j = 0; j < 3; ++j) {
    if (v[j].sign() == 0) continue;
    double a = std::abs(v[j].to_double());
    if (a > best) {
      best = a;
      k = j;
    }
  }
  return k;
}

int mult_exact(const std::vector<Poly>& sys, std::array<Surd, 3> v, int cap) {
  int k = chart_axis_exact(v);
  Surd inv = v[k].inverse();
  for (auto& x : v) x = x * inv;
  int a1 = k == 0 ? 1 : 0;
  int a2 = k == 2 ? 1 : 2;

  std::array<Poly, 3> subs;
  subs[k] = Poly(S(1));
  subs[a1] = Poly::var(a1) + Poly(v[a1]);
  subs[a2] = Poly::var(a2) + Poly(v[a2]);
  std::vector<Poly> local;
  for (const auto& p : sys) local.push_back(p.substitute(subs));

  auto taylor = [&](const Poly& f, int g1, int g2) {
    Mono m;
    int e[3] = {0, 0, 0};
    e[a1] = g1;
    e[a2] = g2;
    m = Mono{e[0], e[1], e[2]};
    return f.coeff(m);
  };
  for (const auto& f : local)
    if (!taylor(f, 0, 0).is_zero())
      fail(Errc::BadInput, "multiplicity requested at a point off the zero set");

  int prev = 1;
  for (int order = 1; order <= cap; ++order) {
    auto cols = grading(order);
    auto mults = grading(order - 1);
    std::vector<std::vector<Surd>> m;
    for (const auto& f : local)
      for (const auto& [b1, b2] : mults) {
        std::vector<Surd> row;
        row.reserve(cols.size());
        for (const auto& [c1, c2] : cols) {
          if (c1 < b1 || c2 < b2)
            row.push_back(S(0));
          else
            row.push_back(taylor(f, c1 - b1, c2 - b2));
        }
        m.push_back(std::move(row));
      }
    int dim = static_cast<int>(cols.size()) - surd_rank(std::move(m));
    if (dim == prev) return dim;
    prev = dim;
  }
  fail(Errc::MultiplicityOverflow,
       "dual space still growing at differential order cap; the zero is not "
       "isolated");
}

int mult_numeric(const std::vector<Poly>& sys, std::array<Cplx, 3> v, int cap,
                 double tol) {
  int k = 0;
  double best = -1;
  for (int j = 0; j < 3; ++j)
    if (std::abs(v[j]) > best) {
      best = std::abs(v[j]);
      k = j;
    }
  Cplx pivot = v[k];
  for (auto& x : v) x /= pivot;
  int a1 = k == 0 ? 1 : 0;
  int a2 = k == 2 ? 1 : 2;

  std::array<Poly, 3> subs;
  subs[k] = Poly(S(1));
  subs[a1] = Poly::var(a1);
  subs[a2] = Poly::var(a2);
  std::array<Cplx, 3> at;
  at[k] = 1.0;
  at[a1] = v[a1];
  at[a2] = v[a2];

  // Taylor table from exact derivative polynomials evaluated at the point.
  std::vector<std::vector<std::vector<Cplx>>> tay;  // [gen][g1][g2]
  double fact[7];
  fact[0] = 1;
  for (int i = 1; i <= 6; ++i) fact[i] = fact[i - 1] * i;
  for (const auto& p : sys) {
    Poly chart = p.substitute(subs);
    std::vector<std::vector<Cplx>> table(cap + 1,
                                         std::vector<Cplx>(cap + 1, 0.0));
    Poly d1 = chart;
    for (int g1 = 0; g1 <= cap; ++g1) {
      Poly d2 = d1;
      for (int g2 = 0; g2 + g1 <= cap; ++g2) {
        table[g1][g2] = d2.eval(at) / (fact[g1] * fact[g2]);
        d2 = d2.derivative(a2);
      }
      d1 = d1.derivative(a1);
    }
    tay.push_back(std::move(table));
  }

  int prev = 1;
  for (int order = 1; order <= cap; ++order) {
    auto cols = grading(order);
    auto mults = grading(order - 1);
    Eigen::MatrixXcd m(sys.size() * mults.size(), cols.size());
    int row = 0;
    for (std::size_t i = 0; i < sys.size(); ++i)
      for (const auto& [b1, b2] : mults) {
        for (std::size_t cix = 0; cix < cols.size(); ++cix) {
          auto [c1, c2] = cols[cix];
          m(row, cix) = (c1 < b1 || c2 < b2) ? Cplx(0, 0)
                                             : tay[i][c1 - b1][c2 - b2];
        }
        ++row;
      }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double cut = std::max(tol, 1e-8) * svd.singularValues()(0);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > cut) ++rank;
    if (svd.singularValues()(0) < 1e-13) rank = 0;
    int dim = static_cast<int>(cols.size()) - rank;
    if (dim == prev) return dim;
    prev = dim;
  }
  fail(Errc::MultiplicityOverflow,
       "dual space still growing at differential order cap; the zero is not "
       "isolated");
}

long long micro_round(double x) {
  return std::llround(x * 1e6);
}

void sort_lines(std::vector<LineRecord>& lines) {
  std::sort(lines.begin(), lines.end(),
            [](const LineRecord& a, const LineRecord& b) {
              auto key = [](const LineRecord& r) {
                return std::make_tuple(
                    !r.real, micro_round(r.vc[0].real()),
                    micro_round(r.vc[0].imag()), micro_round(r.vc[1].real()),
                    micro_round(r.vc[1].imag()), micro_round(r.vc[2].real()),
                    micro_round(r.vc[2].imag()));
              };
              return key(a) < key(b);
            });
}

}  // namespace

std::array<Cplx, 3> LineRecord::approx() const {
  if (!exact) return vc;
  return {Cplx(v[0].to_double(), 0), Cplx(v[1].to_double(), 0),
          Cplx(v[2].to_double(), 0)};
}

PlaneSplit plane_components(const std::vector<Poly>& system,
                            std::uint64_t seed) {
  std::vector<Poly> live = nonzero_entries(system);
  if (live.empty())
    fail(Errc::DegenerateSystem, "every entry of the system is zero");

  PlaneSplit out;
  Poly g = gcd_poly(live);
  if (g.degree() <= 0) {
    out.common = Poly(S(1));
    out.residual = live;
    return out;
  }
  out.common = g;

  std::mt19937_64 rng(seed ^ 0x6f3a91c45b82d711ULL);
  std::uniform_int_distribution<int> pick(-7, 7);
  auto rnd_point = [&] {
    return std::array<Surd, 3>{S(pick(rng)), S(pick(rng)), S(pick(rng))};
  };

  Poly remaining = g;
  auto add_factor = [&](const Poly& f) {
    if (f.degree() != 1) return;
    Poly norm = f.normalized();
    int mult = 0;
    Poly q;
    while (Poly::try_divide(remaining, norm, q)) {
      remaining = q;
      ++mult;
    }
    if (mult == 0) return;
    for (auto& pc : out.planes)
      if (pc.factor == norm) {
        pc.multiplicity += mult;
        return;
      }
    out.planes.push_back({norm, mult});
  };

  for (int attempt = 0; attempt < 8 && remaining.degree() >= 1; ++attempt) {
    if (remaining.degree() == 1) {
      add_factor(remaining);
      break;
    }
    SeedLine l1{rnd_point(), rnd_point()};
    SeedLine l2{rnd_point(), rnd_point()};
    if (all_zero(cross(l1.p0, l1.p1)) || all_zero(cross(l2.p0, l2.p1)))
      continue;
    // a seeded line lying inside the zero set is itself a factor
    if (restrict_to_line(remaining, l1).is_zero()) {
      add_factor(linear_form(cross(l1.p0, l1.p1)));
      continue;
    }
    if (restrict_to_line(remaining, l2).is_zero()) {
      add_factor(linear_form(cross(l2.p0, l2.p1)));
      continue;
    }
    auto pts1 = exact_points_on_line(remaining, l1);
    auto pts2 = exact_points_on_line(remaining, l2);
    for (const auto& a : pts1) {
      for (const auto& b : pts2) {
        auto c = cross(a, b);
        if (all_zero(c)) continue;
        add_factor(linear_form(c));
        if (remaining.degree() < 2) break;
      }
      if (remaining.degree() < 2) break;
    }
  }
  if (remaining.degree() == 1) add_factor(remaining);
  if (remaining.degree() >= 1)
    fail(Errc::NonPlanarComponent,
         "common factor " + remaining.str() +
             " is not a product of real linear forms");

  for (const auto& p : live) out.residual.push_back(divide_exact(p, g));
  return out;
}

std::vector<LineRecord> line_solutions(const std::vector<Poly>& system,
                                       std::uint64_t seed, double tol) {
  std::vector<Poly> live = nonzero_entries(system);
  if (live.empty())
    fail(Errc::DegenerateSystem, "every entry of the system is zero");

  for (const auto& p : live)
    if (p.degree() == 0) return {};  // a nonzero constant: empty zero set

  bool zfree = true;
  for (const auto& p : live) zfree = zfree && p.degree_in(2) == 0;
  if (zfree) {
    Poly g = gcd_poly(live);
    if (g.degree() >= 1)
      fail(Errc::NotZeroDimensional,
           "common factor " + g.str() + " of a system without the third axis");
    LineRecord pole;
    pole.exact = true;
    pole.real = true;
    pole.v = {S(0), S(0), S(1)};
    canonicalize(pole);
    return {pole};
  }

  // The elimination frame is random; an unlucky draw can put two roots too
  // close to tell apart.  Disagreement between the passes is then a frame
  // artifact, so try fresh frames a couple of times before giving up.
  for (int round = 0;; ++round) {
    std::mt19937_64 rng1((seed + round) * 2 + 0x9e3779b97f4a7c15ULL);
    std::mt19937_64 rng2((seed + round) * 2 + 0xc2b2ae3d27d4eb4fULL);
    std::vector<LineRecord> a = one_attempt(live, rng1, tol);
    std::vector<LineRecord> b = one_attempt(live, rng2, tol);
    if (merge_attempts(a, b, 2e-6)) return a;
    if (round == 4)
      fail(Errc::UnstableElimination,
           "independent elimination passes disagree about the zero set");
  }
}

int local_multiplicity(const std::vector<Poly>& system, const LineRecord& at,
                       int cap, double tol) {
  std::vector<Poly> live = nonzero_entries(system);
  if (live.empty())
    fail(Errc::DegenerateSystem, "every entry of the system is zero");
  if (at.exact) return mult_exact(live, at.v, cap);
  return mult_numeric(live, at.vc, cap, tol);
}

Decomposition decompose(const std::vector<Poly>& system, std::uint64_t seed,
                        double tol, int expected_total) {
  Decomposition out;
  PlaneSplit split = plane_components(system, seed);
  out.planes = std::move(split.planes);
  out.common = std::move(split.common);
  out.residual = std::move(split.residual);

  out.lines = line_solutions(out.residual, seed, tol);
  for (auto& rec : out.lines)
    rec.multiplicity = local_multiplicity(out.residual, rec, 6, tol);
  sort_lines(out.lines);

  out.total_line_multiplicity = 0;
  for (const auto& rec : out.lines)
    out.total_line_multiplicity += rec.real ? rec.multiplicity
                                            : 2 * rec.multiplicity;

  if (out.planes.empty() && expected_total > 0 &&
      out.total_line_multiplicity != expected_total)
    fail(Errc::MultiplicityMismatch,
         "multiplicities add to " +
             std::to_string(out.total_line_multiplicity) + ", expected " +
             std::to_string(expected_total));
  return out;
}

}  // namespace locus
