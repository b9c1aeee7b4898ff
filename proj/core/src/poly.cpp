#include "locus/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace locus {

Poly Poly::var(int axis) {
  Poly p;
  Mono m;
  (axis == 0 ? m.a : axis == 1 ? m.b : m.c) = 1;
  p.add(m, Surd(1));
  return p;
}

void Poly::add(const Mono& m, const Surd& coeff) {
  if (coeff.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Surd Poly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Surd() : it->second;
}

int Poly::degree_in(int axis) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.exp(axis));
  return d;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.begin()->first.degree();
  for (const auto& [m, c] : t_)
    if (m.degree() != d) return false;
  return true;
}

bool Poly::has_rational_coeffs() const {
  for (const auto& [m, c] : t_)
    if (!c.is_rational()) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
  Poly out;
  for (const auto& [ml, cl] : l.t_)
    for (const auto& [mr, cr] : r.t_)
      out.add({ml.a + mr.a, ml.b + mr.b, ml.c + mr.c}, cl * cr);
  return out;
}

Poly operator*(const Surd& s, const Poly& p) {
  Poly out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : p.t_) out.t_.emplace(m, s * c);
  return out;
}

Poly Poly::derivative(int axis) const {
  Poly out;
  for (const auto& [m, c] : t_) {
    int e = m.exp(axis);
    if (e == 0) continue;
    Mono d = m;
    (axis == 0 ? d.a : axis == 1 ? d.b : d.c) = e - 1;
    out.add(d, Surd(e) * c);
  }
  return out;
}

Surd Poly::eval(const std::array<Surd, 3>& v) const {
  Surd out;
  for (const auto& [m, c] : t_) {
    Surd t = c;
    for (int i = 0; i < m.a; ++i) t *= v[0];
    for (int i = 0; i < m.b; ++i) t *= v[1];
    for (int i = 0; i < m.c; ++i) t *= v[2];
    out += t;
  }
  return out;
}

double Poly::eval(const std::array<double, 3>& v) const {
  double out = 0;
  for (const auto& [m, c] : t_)
    out += c.to_double() * std::pow(v[0], m.a) * std::pow(v[1], m.b) * std::pow(v[2], m.c);
  return out;
}

std::complex<double> Poly::eval(const std::array<std::complex<double>, 3>& v) const {
  std::complex<double> out = 0;
  for (const auto& [m, c] : t_) {
    std::complex<double> t = c.to_double();
    for (int i = 0; i < m.a; ++i) t *= v[0];
    for (int i = 0; i < m.b; ++i) t *= v[1];
    for (int i = 0; i < m.c; ++i) t *= v[2];
    out += t;
  }
  return out;
}

Poly Poly::compose_linear(const std::array<std::array<Surd, 3>, 3>& m) const {
  std::array<Poly, 3> repl;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) repl[i] += m[i][j] * Poly::var(j);
  return substitute(repl);
}

Poly Poly::substitute(const std::array<Poly, 3>& r) const {
  Poly out;
  for (const auto& [m, c] : t_) {
    Poly t(c);
    for (int i = 0; i < m.a; ++i) t = t * r[0];
    for (int i = 0; i < m.b; ++i) t = t * r[1];
    for (int i = 0; i < m.c; ++i) t = t * r[2];
    out += t;
  }
  return out;
}

Poly Poly::normalized(Surd* unit) const {
  if (t_.empty()) {
    if (unit) *unit = Surd(1);
    return Poly();
  }
  Surd u;
  if (has_rational_coeffs()) {
    // integer content with the leading coefficient's sign
    Int g = 0, l = 1;
    for (const auto& [m, c] : t_) {
      const Rational r = c.rational_part();
      g = boost::multiprecision::gcd(g, num(r) < 0 ? Int(-num(r)) : num(r));
      l = boost::multiprecision::lcm(l, den(r));
    }
    Rational content(g, l);
    if (t_.rbegin()->second.sign() < 0) content = -content;
    u = Surd(content);
  } else {
    u = t_.rbegin()->second;  // monic in graded lex
  }
  if (unit) *unit = u;
  Surd inv = u.inverse();
  Poly out;
  for (const auto& [m, c] : t_) out.t_.emplace(m, inv * c);
  return out;
}

bool Poly::try_divide(const Poly& a, const Poly& b, Poly& quotient) {
  if (b.is_zero()) return false;
  Poly rem = a;
  Poly q;
  const auto& [lbm, lbc] = *b.t_.rbegin();
  Surd lb_inv = lbc.inverse();
  while (!rem.is_zero()) {
    const auto& [lam, lac] = *rem.t_.rbegin();
    if (lam.a < lbm.a || lam.b < lbm.b || lam.c < lbm.c) return false;
    Mono d{lam.a - lbm.a, lam.b - lbm.b, lam.c - lbm.c};
    Surd cq = lac * lb_inv;
    Poly t;
    t.add(d, cq);
    q += t;
    rem -= t * b;
  }
  quotient = q;
  return true;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!Poly::try_divide(a, b, q)) fail(Errc::BadInput, "inexact polynomial division");
  return q;
}

std::string Poly::str(const std::array<std::string, 3>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Mono& m = it->first;
    const Surd& c = it->second;
    int s = c.sign();
    Surd mag = s < 0 ? -c : c;
    if (first) {
      if (s < 0) os << "-";
      first = false;
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    std::string mono;
    auto app = [&](int e, const std::string& n) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += n;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    app(m.a, names[0]);
    app(m.b, names[1]);
    app(m.c, names[2]);
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == Surd(1)) {
      os << mono;
    } else if (mag.term_count() > 1) {
      os << "(" << mag.str() << ")*" << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

namespace {

// Univariate view: coefficient polynomials of the powers of one axis.
std::vector<Poly> coeffs_in(const Poly& p, int axis) {
  std::vector<Poly> out(static_cast<std::size_t>(p.degree_in(axis)) + 1);
  for (const auto& [m, c] : p.terms()) {
    Mono rest = m;
    (axis == 0 ? rest.a : axis == 1 ? rest.b : rest.c) = 0;
    out[m.exp(axis)].add(rest, c);
  }
  return out;
}

Poly gcd_pair(const Poly& f, const Poly& g);

// gcd over a list; returns the zero polynomial when every entry is zero.
Poly gcd_list(const std::vector<Poly>& polys) {
  Poly acc;
  for (const Poly& p : polys) {
    if (p.is_zero()) continue;
    acc = acc.is_zero() ? p.normalized() : gcd_pair(acc, p);
    if (acc.degree() == 0) break;
  }
  return acc;
}

Poly prem(Poly a, const Poly& b, int axis) {
  int db = b.degree_in(axis);
  Poly lb = coeffs_in(b, axis)[db];
  while (!a.is_zero() && a.degree_in(axis) >= db) {
    int da = a.degree_in(axis);
    Poly la = coeffs_in(a, axis)[da];
    Poly shift = Poly::var(axis);
    Poly xs(Surd(1));
    for (int i = 0; i < da - db; ++i) xs = xs * shift;
    a = lb * a - la * xs * b;
  }
  return a;
}

Poly gcd_pair(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  if (f.degree() == 0 || g.degree() == 0) return Poly(Surd(1));
  int axis = -1;
  for (int ax : {2, 1, 0}) {
    if (f.uses_axis(ax) && g.uses_axis(ax)) {
      axis = ax;
      break;
    }
  }
  if (axis < 0) return Poly(Surd(1));  // no shared variable

  Poly cont_f = gcd_list(coeffs_in(f, axis));
  Poly cont_g = gcd_list(coeffs_in(g, axis));
  Poly d = gcd_pair(cont_f, cont_g);

  // primitive polynomial remainder sequence in the shared axis
  Poly a = divide_exact(f, cont_f);
  Poly b = divide_exact(g, cont_g);
  if (a.degree_in(axis) < b.degree_in(axis)) std::swap(a, b);
  for (;;) {
    Poly r = prem(a, b, axis);
    if (r.is_zero()) break;
    if (r.degree_in(axis) == 0) return d.normalized();  // coprime in axis
    r = divide_exact(r, gcd_list(coeffs_in(r, axis)));
    a = b;
    b = r;
  }
  b = divide_exact(b, gcd_list(coeffs_in(b, axis)));
  return (d * b).normalized();
}

}  // namespace

Poly gcd_poly(const std::vector<Poly>& polys) {
  Poly g = gcd_list(polys);
  if (g.is_zero()) fail(Errc::AllZero, "gcd of an all-zero list");
  return g;
}

Poly det3(const std::array<std::array<Poly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Poly resultant(const Poly& f, const Poly& g, int axis) {
  int df = f.degree_in(axis), dg = g.degree_in(axis);
  if (df <= 0 || dg <= 0)
    fail(Errc::NoElimination, "resultant needs positive degree in the eliminated variable");
  auto fc = coeffs_in(f, axis);
  auto gc = coeffs_in(g, axis);
  int n = df + dg;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) m[i][i + j] = fc[df - j];
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) m[dg + i][i + j] = gc[dg - j];

  // Bareiss fraction-free elimination: stays polynomial, divisions exact.
  int sign = 1;
  Poly prev(Surd(1));
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!m[r][k].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Poly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

BinaryForm to_binary_form(const Poly& p, int axis_u, int axis_v) {
  if (p.is_zero()) fail(Errc::BadInput, "zero polynomial has no binary form");
  if (!p.is_homogeneous()) fail(Errc::BadInput, "binary form must be homogeneous");
  int other = 3 - axis_u - axis_v;
  if (p.degree_in(other) > 0) fail(Errc::BadInput, "polynomial involves the third variable");
  BinaryForm out;
  out.degree = p.degree();
  out.axis_u = axis_u;
  out.axis_v = axis_v;
  out.c.assign(static_cast<std::size_t>(out.degree) + 1, Surd());
  for (const auto& [m, c] : p.terms()) out.c[m.exp(axis_v)] = c;
  return out;
}

// ---------------------------------------------------------------------------
// dense univariate helpers used by roots_binary
namespace {

struct UniPoly {
  std::vector<Surd> c;  // c[i] is the coefficient of t^i

  void strip() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  UniPoly derivative() const {
    UniPoly d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(Surd(static_cast<int>(i)) * c[i]);
    d.strip();
    return d;
  }

  UniPoly monic() const {
    UniPoly out = *this;
    if (out.is_zero()) return out;
    Surd inv = out.c.back().inverse();
    for (auto& x : out.c) x *= inv;
    return out;
  }

  bool rational_coeffs() const {
    for (const auto& x : c)
      if (!x.is_rational()) return false;
    return true;
  }

  Surd eval(const Surd& t) const {
    Surd out;
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * t + *it;
    return out;
  }
};

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
  a.strip();
  return a;
}

// division with remainder over the surd field
void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  r = a;
  q.c.clear();
  int db = b.degree();
  Surd lb_inv = b.c.back().inverse();
  if (r.degree() >= db) q.c.assign(static_cast<std::size_t>(r.degree() - db) + 1, Surd());
  while (r.degree() >= db) {
    int shift = r.degree() - db;
    Surd f = r.c.back() * lb_inv;
    q.c[shift] = f;
    for (int i = 0; i <= db; ++i) r.c[shift + i] -= f * b.c[i];
    r.strip();
  }
  q.strip();
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a.strip();
  b.strip();
  while (!b.is_zero()) {
    UniPoly q, r;
    uni_divmod(a, b, q, r);
    a = b;
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

UniPoly uni_div_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  uni_divmod(a, b, q, r);
  return q;
}

bool uni_divides(const UniPoly& a, const UniPoly& b, UniPoly& q) {
  UniPoly r;
  uni_divmod(a, b, q, r);
  return r.is_zero();
}

// Yun's squarefree decomposition (characteristic zero).
std::vector<std::pair<UniPoly, int>> squarefree_factors(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly g = uni_gcd(f, fp);
  if (g.degree() <= 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UniPoly b = uni_div_exact(f, g);
  UniPoly c = uni_div_exact(fp, g);
  UniPoly d = uni_sub(c, b.derivative());
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = uni_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = uni_div_exact(b, a);
    c = uni_div_exact(d, a);
    d = uni_sub(c, b.derivative());
    ++i;
  }
  return out;
}

std::vector<std::complex<double>> companion_roots(const UniPoly& f) {
  int n = f.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  UniPoly mf = f.monic();
  for (int i = 0; i < n; ++i) m(i, n - 1) = -mf.c[static_cast<std::size_t>(i)].to_double();
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::optional<Rational> reconstruct_rational(double x, long long max_den = 1000000) {
  if (!std::isfinite(x) || std::fabs(x) > 1e15) return std::nullopt;
  long long p_prev = 1, q_prev = 0;
  long long p_cur = static_cast<long long>(std::floor(x)), q_cur = 1;
  double v = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    double approx = static_cast<double>(p_cur) / static_cast<double>(q_cur);
    if (std::fabs(approx - x) <= 1e-8 * std::max(1.0, std::fabs(x)))
      return Rational(Int(p_cur), Int(q_cur));
    if (v < 1e-12) break;
    v = 1.0 / v;
    double fl = std::floor(v);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    v -= fl;
    long long p_next = a * p_cur + p_prev;
    long long q_next = a * q_cur + q_prev;
    if (q_next > max_den || q_next <= 0) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return std::nullopt;
}

void push_exact_root(std::vector<BinaryRoot>& out, const Surd& t, int mult) {
  BinaryRoot r;
  r.exact = true;
  r.u = Surd(1);
  r.v = t;
  r.ua = 1.0;
  r.va = t.to_double();
  r.real = true;
  r.multiplicity = mult;
  out.push_back(r);
}

void push_numeric_root(std::vector<BinaryRoot>& out, std::complex<double> t, bool real, int mult) {
  BinaryRoot r;
  r.exact = false;
  r.ua = 1.0;
  r.va = t;
  r.real = real;
  r.multiplicity = mult;
  out.push_back(r);
}

// Emit the roots of one squarefree factor with the given multiplicity.
void roots_of_squarefree(UniPoly f, int mult, double tol, std::vector<BinaryRoot>& out) {
  for (;;) {
    f = f.monic();
    int d = f.degree();
    if (d <= 0) return;
    if (d == 1) {
      push_exact_root(out, -f.c[0], mult);
      return;
    }
    if (d == 2) {
      Surd disc = f.c[1] * f.c[1] - Surd(4) * f.c[0];
      int s = disc.sign();
      Surd half(Rational(1, 2));
      if (s < 0) {
        double re = -f.c[1].to_double() / 2.0;
        double im = std::sqrt(-disc.to_double()) / 2.0;
        push_numeric_root(out, {re, im}, false, mult);
        return;
      }
      if (auto root = Surd::try_sqrt(disc)) {
        push_exact_root(out, (-f.c[1] + *root) * half, mult);
        if (s > 0) push_exact_root(out, (-f.c[1] - *root) * half, mult);
        return;
      }
      double re = -f.c[1].to_double() / 2.0;
      double rd = std::sqrt(disc.to_double()) / 2.0;
      push_numeric_root(out, {re + rd, 0.0}, true, mult);
      push_numeric_root(out, {re - rd, 0.0}, true, mult);
      return;
    }

    auto numeric = companion_roots(f);
    if (f.rational_coeffs()) {
      // Try to split off exact rational roots or rational quadratic factors,
      // verified by exact division, then continue on the quotient.
      bool split = false;
      for (const auto& r : numeric) {
        if (std::fabs(r.imag()) > tol * std::max(1.0, std::fabs(r.real()))) continue;
        auto cand = reconstruct_rational(r.real());
        if (!cand) continue;
        if (!f.eval(Surd(*cand)).is_zero()) continue;
        push_exact_root(out, Surd(*cand), mult);
        UniPoly lin;
        lin.c = {Surd(-*cand), Surd(1)};
        f = uni_div_exact(f, lin);
        split = true;
        break;
      }
      if (split) continue;
      for (std::size_t i = 0; i < numeric.size() && !split; ++i) {
        for (std::size_t j = i + 1; j < numeric.size() && !split; ++j) {
          auto sum = numeric[i] + numeric[j];
          auto prod = numeric[i] * numeric[j];
          if (std::fabs(sum.imag()) > 1e-6 || std::fabs(prod.imag()) > 1e-6) continue;
          auto ps = reconstruct_rational(sum.real());
          auto qs = reconstruct_rational(prod.real());
          if (!ps || !qs) continue;
          UniPoly quad;
          quad.c = {Surd(*qs), Surd(-*ps), Surd(1)};
          UniPoly q;
          if (!uni_divides(f, quad, q)) continue;
          roots_of_squarefree(quad, mult, tol, out);
          f = q;
          split = true;
        }
      }
      if (split) continue;
    }
    // No exact structure found: report the numeric roots.
    std::vector<bool> used(numeric.size(), false);
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      if (used[i]) continue;
      const auto& r = numeric[i];
      if (std::fabs(r.imag()) <= tol * std::max(1.0, std::fabs(r.real()))) {
        push_numeric_root(out, {r.real(), 0.0}, true, mult);
        continue;
      }
      std::size_t partner = i;
      double best = 1e300;
      for (std::size_t j = i + 1; j < numeric.size(); ++j) {
        if (used[j]) continue;
        double dist = std::abs(numeric[j] - std::conj(r));
        if (dist < best) {
          best = dist;
          partner = j;
        }
      }
      if (partner != i) used[partner] = true;
      push_numeric_root(out, r.imag() > 0 ? r : std::conj(r), false, mult);
    }
    return;
  }
}

}  // namespace

std::vector<BinaryRoot> roots_binary(const BinaryForm& f, double tol) {
  bool any = false;
  for (const auto& x : f.c) any = any || !x.is_zero();
  if (!any) fail(Errc::BadInput, "zero binary form has no isolated roots");

  // f(1,t) = sum c[i] t^i; the lost degree at the top is the (0:1) root.
  UniPoly p;
  p.c = f.c;
  p.strip();
  std::vector<BinaryRoot> out;
  int at_inf = f.degree - p.degree();
  if (at_inf > 0) {
    BinaryRoot r;
    r.exact = true;
    r.u = Surd(0);
    r.v = Surd(1);
    r.ua = 0.0;
    r.va = 1.0;
    r.real = true;
    r.multiplicity = at_inf;
    out.push_back(r);
  }
  if (p.degree() >= 1)
    for (auto& [factor, mult] : squarefree_factors(p)) roots_of_squarefree(factor, mult, tol, out);
  return out;
}

}  // namespace locus
