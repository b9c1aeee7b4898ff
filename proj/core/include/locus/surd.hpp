#pragma once

#include <map>
#include <optional>
#include <string>

#include "locus/rational.hpp"

namespace locus {

// Exact element of a real multi-quadratic field: a rational part plus a sum
// of rational multiples of square roots of distinct squarefree integers.
//
//   value = rat + sum_m irr[m] * sqrt(m),   m squarefree, m >= 2
//
// Distinct squarefree radicals are linearly independent over the rationals,
// so this representation is canonical: a value is zero exactly when every
// stored coefficient is zero, and operator== decides exact equality.
//
// Closure under multiplication uses sqrt(m)*sqrt(n) = g*sqrt((m/g)(n/g))
// with g = gcd(m,n).  Radicands are only ever created by sqrt() below, which
// insists that they factor completely over primes <= 100000; that keeps the
// prime-splitting recursions in sign(), inverse() and try_sqrt() exact.
class Surd {
public:
  Surd() = default;
  Surd(int v) : rat_(v) {}
  Surd(const Int& v) : rat_(v) {}
  Surd(const Rational& v) : rat_(v) {}
  Surd(Rational&& v) : rat_(std::move(v)) {}

  // sqrt of a nonnegative rational, exact or Errc::NotRepresentable.
  static Surd sqrt(const Rational& v);
  static std::optional<Surd> try_sqrt(const Rational& v);

  // General square root inside the quadratic tower.  Returns nothing when
  // the root is negative or does not live in such a tower (callers fall
  // back to floating point in that case).
  static std::optional<Surd> try_sqrt(const Surd& v);

  bool is_zero() const { return irr_.empty() && rat_.is_zero(); }
  bool is_rational() const { return irr_.empty(); }
  const Rational& rational_part() const { return rat_; }
  std::optional<Rational> as_rational() const;

  // Exact sign (-1, 0, +1); no floating point involved.
  int sign() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  // Exact multiplicative inverse; throws on zero.
  Surd inverse() const;

  Surd abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const Surd& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }
  bool operator!=(const Surd& o) const { return !(*this == o); }
  bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Surd& o) const { return (*this - o).sign() >= 0; }

  double to_double() const;

  // "1/2", "sqrt(2)/2", "1 - 2*sqrt(3)/3", ...
  std::string str() const;

  // Term access (radicand 1 denotes the rational part).
  const std::map<long long, Rational>& radical_terms() const { return irr_; }

  // Number of stored terms, counting the rational part when nonzero.
  std::size_t term_count() const { return irr_.size() + (rat_.is_zero() ? 0 : 1); }

private:
  void add_term(long long radicand, const Rational& coeff);
  // Splits *this as A + B*sqrt(p) for a prime p dividing some radicand.
  void split(long long p, Surd& a, Surd& b) const;
  long long pick_prime() const;

  Rational rat_;
  std::map<long long, Rational> irr_;
};

// Parses "sqrt(2)/4", "-1/2", "0.5", "2*sqrt(3)/3" and sums of such terms.
Surd parse_surd(const std::string& text);

}  // namespace locus
