#include "locus/surd.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace locus {

namespace {

constexpr long long kTrialLimit = 100000;

// n = square * squarefree with every prime factor of n at most kTrialLimit;
// returns false when a larger prime would be needed.
bool squarefree_split(Int n, Int& square, long long& squarefree) {
  square = 1;
  Int sf = 1;
  for (long long d = 2; d <= kTrialLimit && d * d <= n; ++d) {
    if (n % d != 0) continue;
    int count = 0;
    while (n % d == 0) {
      n /= d;
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) square *= d;
    if (count % 2) sf *= d;
  }
  if (n > 1) {
    if (n <= kTrialLimit) {
      sf *= n;  // n is prime here: no factor up to its square root
    } else {
      Int r = boost::multiprecision::sqrt(n);
      if (r * r != n) return false;
      square *= r;
    }
  }
  if (sf > kTrialLimit * kTrialLimit) return false;  // keep radicands factorable
  squarefree = sf.convert_to<long long>();
  return true;
}

long long smallest_prime_factor(long long m) {
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return d;
  return m;
}

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  skip();
  std::size_t start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) fail(Errc::BadInput, "expected a number in '" + text + "'");
  Int whole(text.substr(start, i - start));
  Rational value(whole);
  if (i < n && text[i] == '.') {
    ++i;
    std::size_t fs = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == fs) fail(Errc::BadInput, "trailing decimal point in '" + text + "'");
    Int frac(text.substr(fs, i - fs));
    Int scale = 1;
    for (std::size_t k = 0; k < i - fs; ++k) scale *= 10;
    value += Rational(frac, scale);
  } else if (i < n && text[i] == '/') {
    ++i;
    skip();
    std::size_t ds = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == ds) fail(Errc::BadInput, "missing denominator in '" + text + "'");
    Int denom(text.substr(ds, i - ds));
    if (denom.is_zero()) fail(Errc::BadInput, "zero denominator in '" + text + "'");
    value /= Rational(denom);
  }
  skip();
  if (i != n) fail(Errc::BadInput, "unexpected characters in '" + text + "'");
  return neg ? -value : value;
}

void Surd::add_term(long long radicand, const Rational& coeff) {
  if (coeff.is_zero()) return;
  if (radicand == 1) {
    rat_ += coeff;
    return;
  }
  auto it = irr_.find(radicand);
  if (it == irr_.end()) {
    irr_.emplace(radicand, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) irr_.erase(it);
  }
}

std::optional<Surd> Surd::try_sqrt(const Rational& v) {
  int s = sign_of(v);
  if (s < 0) return std::nullopt;
  if (s == 0) return Surd();
  // sqrt(p/q) = sqrt(p*q)/q keeps everything integral.
  Int pq = num(v) * den(v);
  Int square;
  long long rad;
  if (!squarefree_split(pq, square, rad)) return std::nullopt;
  Surd out;
  out.add_term(rad, Rational(square, den(v)));
  return out;
}

Surd Surd::sqrt(const Rational& v) {
  if (sign_of(v) < 0) fail(Errc::NotRepresentable, "square root of negative rational " + rational_str(v));
  auto r = try_sqrt(v);
  if (!r) fail(Errc::NotRepresentable, "radicand " + rational_str(v) + " does not factor over small primes");
  return *r;
}

std::optional<Rational> Surd::as_rational() const {
  if (!irr_.empty()) return std::nullopt;
  return rat_;
}

Surd Surd::operator-() const {
  Surd out;
  out.rat_ = -rat_;
  for (const auto& [m, c] : irr_) out.irr_.emplace(m, -c);
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  rat_ += o.rat_;
  for (const auto& [m, c] : o.irr_) add_term(m, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  rat_ -= o.rat_;
  for (const auto& [m, c] : o.irr_) add_term(m, -c);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  out.rat_ = a.rat_ * b.rat_;
  if (!b.rat_.is_zero())
    for (const auto& [m, c] : a.irr_) out.add_term(m, c * b.rat_);
  if (!a.rat_.is_zero())
    for (const auto& [m, c] : b.irr_) out.add_term(m, c * a.rat_);
  for (const auto& [m, cm] : a.irr_) {
    for (const auto& [n, cn] : b.irr_) {
      long long g = std::gcd(m, n);
      long long u = m / g, v = n / g;
      if (u > 0 && v > (kTrialLimit * kTrialLimit) / u)
        fail(Errc::NotRepresentable, "radicand overflow in surd product");
      out.add_term(u * v, cm * cn * g);
    }
  }
  return out;
}

Surd& Surd::operator*=(const Surd& o) {
  *this = *this * o;
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  *this = *this * o.inverse();
  return *this;
}

long long Surd::pick_prime() const {
  // Any prime dividing any radicand works; use the smallest radicand's
  // smallest factor so recursion trends toward small subfields.
  return smallest_prime_factor(irr_.begin()->first);
}

void Surd::split(long long p, Surd& a, Surd& b) const {
  a = Surd();
  b = Surd();
  a.rat_ = rat_;
  for (const auto& [m, c] : irr_) {
    if (m % p == 0)
      b.add_term(m / p, c);
    else
      a.add_term(m, c);
  }
}

int Surd::sign() const {
  if (irr_.empty()) return sign_of(rat_);
  if (rat_.is_zero() && irr_.size() == 1) return sign_of(irr_.begin()->second);
  // Write the value as A + B*sqrt(p) with A, B free of the prime p.  If the
  // two halves agree in sign the answer is clear; otherwise squaring the
  // halves moves the comparison into the p-free subfield, which has strictly
  // fewer primes, so the recursion terminates.
  long long p = pick_prime();
  Surd a, b;
  split(p, a, b);
  int sa = a.sign();
  int sb = b.sign();
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  Surd diff = a * a - b * b * Surd(Rational(p));
  int sd = diff.sign();
  if (sd == 0) return 0;  // cannot happen for a canonical nonzero value
  return sd > 0 ? sa : sb;
}

Surd Surd::inverse() const {
  if (is_zero()) throw std::domain_error("surd division by zero");
  if (irr_.empty()) {
    Surd out;
    out.rat_ = 1 / rat_;
    return out;
  }
  // (A + B sqrt p)^-1 = (A - B sqrt p) / (A^2 - B^2 p); the denominator is a
  // nonzero element of the p-free subfield, inverted recursively.
  long long p = pick_prime();
  Surd a, b;
  split(p, a, b);
  Surd denom = a * a - b * b * Surd(Rational(p));
  Surd root_p;
  root_p.add_term(p, 1);
  return (a - b * root_p) * denom.inverse();
}

std::optional<Surd> Surd::try_sqrt(const Surd& v) {
  int s = v.sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return Surd();
  if (v.is_rational()) return try_sqrt(v.rat_);
  // Values like sqrt(2 + sqrt(2)) live in no quadratic tower; the recursion
  // below can bounce between primes on such inputs, so cap the depth.
  static thread_local int depth = 0;
  if (depth > 16) return std::nullopt;
  struct Guard {
    int& d;
    ~Guard() { --d; }
  } guard{++depth};
  // Look for sqrt(v) = S + T*sqrt(p) with S, T in the p-free subfield:
  // S^2 + T^2 p = A and 2 S T = B, which reduces to square roots of
  // (A +- sqrt(A^2 - B^2 p))/2 taken recursively in the subfield.
  long long p = v.pick_prime();
  Surd a, b;
  v.split(p, a, b);
  auto disc = try_sqrt(a * a - b * b * Surd(Rational(p)));
  if (!disc) return std::nullopt;
  // S^2 - T^2 p lies in the p-free subfield, so a root whose canonical form
  // still mentions sqrt(p) proves there is no tower root at all.
  for (const auto& [m, coeff] : disc->radical_terms())
    if (m % p == 0) return std::nullopt;
  Surd half(Rational(1, 2));
  Surd root_p;
  root_p.add_term(p, 1);
  for (int branch = 0; branch < 2; ++branch) {
    Surd s2 = (branch == 0 ? a + *disc : a - *disc) * half;
    auto smaybe = try_sqrt(s2);
    if (!smaybe || smaybe->is_zero()) continue;
    Surd t = b * smaybe->inverse() * half;
    Surd cand = *smaybe + t * root_p;
    if (cand * cand == v) return cand.sign() < 0 ? -cand : cand;
  }
  return std::nullopt;
}

double Surd::to_double() const {
  double out = locus::to_double(rat_);
  for (const auto& [m, c] : irr_) out += locus::to_double(c) * std::sqrt(static_cast<double>(m));
  return out;
}

std::string Surd::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](long long m, const Rational& c) {
    int s = sign_of(c);
    Rational mag = s < 0 ? Rational(-c) : c;
    if (first) {
      if (s < 0) os << "-";
      first = false;
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    if (m == 1) {
      os << rational_str(mag);
      return;
    }
    Int p = num(mag), q = den(mag);
    if (p != 1) os << p << "*";
    os << "sqrt(" << m << ")";
    if (q != 1) os << "/" << q;
  };
  if (!rat_.is_zero()) emit(1, rat_);
  for (const auto& [m, c] : irr_) emit(m, c);
  return os.str();
}

namespace {

struct SurdParser {
  const std::string& text;
  std::size_t i = 0;

  explicit SurdParser(const std::string& t) : text(t) {}

  void skip() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < text.size() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Rational number() {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(Errc::BadInput, "expected a number at position " + std::to_string(start) + " in '" + text + "'");
    if (i < text.size() && text[i] == '.') {
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    }
    return parse_rational(text.substr(start, i - start));
  }

  Surd factor() {
    skip();
    if (text.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      Rational arg = number();
      if (!eat(')')) fail(Errc::BadInput, "missing ')' in '" + text + "'");
      return Surd::sqrt(arg);
    }
    return Surd(number());
  }

  Surd term() {
    bool neg = false;
    skip();
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') neg = !neg;
      ++i;
      skip();
    }
    Surd value = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        value *= factor();
      } else if (i < text.size() && text[i] == '/') {
        ++i;
        Surd d = factor();
        if (d.is_zero()) fail(Errc::BadInput, "division by zero in '" + text + "'");
        value /= d;
      } else {
        break;
      }
    }
    return neg ? -value : value;
  }

  Surd parse() {
    Surd value = term();
    for (;;) {
      skip();
      if (i >= text.size()) break;
      if (text[i] != '+' && text[i] != '-')
        fail(Errc::BadInput, "unexpected character '" + std::string(1, text[i]) + "' in '" + text + "'");
      value += term();
    }
    return value;
  }
};

}  // namespace

Surd parse_surd(const std::string& text) {
  SurdParser p(text);
  Surd v = p.parse();
  return v;
}

}  // namespace locus
