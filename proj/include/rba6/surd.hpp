#pragma once
// Exact arithmetic over Q-linear combinations of square roots of squarefree
// positive integers.  This is the scalar type for all basis-matrix entries
// and structure constants in the library.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rba6 {

using Integer = mpz_class;
using Rational = mpq_class;

// Writes n = s * root^2 with s squarefree; returns s.
// Factorization: trial division up to 10^6, then perfect-square/primality
// tests with a Pollard-rho fallback, so correctness does not depend on the
// radicands staying small.
Integer squarefree_part(const Integer& n, Integer& root);

// Value sum_m q_m * sqrt(m), stored as a map radicand -> coefficient with
// every radicand squarefree and positive and no zero coefficients.  The
// radicand 1 holds the rational part.  The representation is canonical:
// equal values have equal representations (sqrt(m) for distinct squarefree m
// are linearly independent over Q), so zero is syntactic and operator== is
// exact value equality.
class Surd {
 public:
  Surd() = default;
  Surd(long v) { add_term(1, Rational(v)); }
  Surd(const Integer& v) { add_term(1, Rational(v)); }
  Surd(const Rational& q) { add_term(1, q); }

  // Exact square root of a nonnegative rational, as a single-term Surd.
  // Throws std::domain_error on negative input.
  static Surd sqrt_of(const Rational& x);

  // q * sqrt(m) where m need not be squarefree yet (it is normalized here).
  static Surd term(const Rational& q, const Integer& m);

  bool is_zero() const { return terms_.empty(); }
  // -1, 0, +1.  Zero is decided structurally; otherwise adaptive-precision
  // directed-rounding evaluation, doubling precision until the enclosing
  // interval excludes zero (termination is guaranteed since the value is
  // provably nonzero).
  int sign() const;

  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Rational& q);
  friend Surd operator*(const Rational& q, const Surd& a) { return a * q; }
  // Division by a rational scalar only; general Surd inverse is out of scope.
  Surd div(const Rational& q) const;

  bool operator==(const Surd& o) const { return terms_ == o.terms_; }
  bool operator!=(const Surd& o) const { return terms_ != o.terms_; }

  // Canonical text form, terms sorted by radicand descending:
  // "3/2*sqrt(5) + 7".  Zero prints as "0".
  std::string str() const;
  // Terms sorted by radicand descending, as (coefficient string, radicand).
  std::vector<std::pair<std::string, Integer>> term_list() const;
  static Surd from_term_list(
      const std::vector<std::pair<std::string, std::string>>& terms);

  double approx() const;

  const std::map<Integer, Rational>& terms() const { return terms_; }

 private:
  std::map<Integer, Rational> terms_;
  void add_term(const Integer& m, const Rational& q);
};

}  // namespace rba6
