#include "rba6/surd.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <sstream>

namespace rba6 {

namespace {

constexpr unsigned long kTrialBound = 1000000;

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Pollard rho (Brent variant) on an odd composite with no factors <= 10^6.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Integer diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& exps) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++exps[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned long> sub;
    factor_into(r, sub);
    for (auto& [p, e] : sub) exps[p] += 2 * e;
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, exps);
  factor_into(n / d, exps);
}

}  // namespace

Integer squarefree_part(const Integer& n, Integer& root) {
  if (n <= 0) throw std::domain_error("squarefree_part: input must be positive");
  Integer m = n, s = 1;
  root = 1;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long k = 0; k < e / 2; ++k) root *= p;
    if (e & 1) s *= p;
  }
  if (m > 1) {
    // Leftover cofactor: all prime factors exceed the trial bound.
    std::map<Integer, unsigned long> exps;
    factor_into(m, exps);
    for (auto& [p, e] : exps) {
      for (unsigned long k = 0; k < e / 2; ++k) root *= p;
      if (e & 1) s *= p;
    }
  }
  return s;
}

void Surd::add_term(const Integer& m, const Rational& q) {
  if (q == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, q);
  } else {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Surd Surd::sqrt_of(const Rational& x) {
  if (x < 0) throw std::domain_error("sqrt_of: negative input");
  Surd r;
  if (x == 0) return r;
  // sqrt(a/b) = (1/b) sqrt(ab), then extract the square part of ab.
  Integer a = x.get_num(), b = x.get_den();
  Integer root;
  Integer s = squarefree_part(a * b, root);
  Rational coeff(root, b);
  coeff.canonicalize();
  r.add_term(s, coeff);
  return r;
}

Surd Surd::term(const Rational& q, const Integer& m) {
  if (m <= 0) throw std::domain_error("term: radicand must be positive");
  Surd r;
  if (q == 0) return r;
  Integer root;
  Integer s = squarefree_part(m, root);
  r.add_term(s, q * Rational(root));
  return r;
}

std::optional<Rational> Surd::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1)
    return terms_.begin()->second;
  return std::nullopt;
}

std::optional<Integer> Surd::as_integer() const {
  auto q = as_rational();
  if (!q) return std::nullopt;
  if (q->get_den() != 1) return std::nullopt;
  return q->get_num();
}

Surd Surd::operator-() const {
  Surd r;
  for (auto& [m, q] : terms_) r.terms_.emplace(m, -q);
  return r;
}

Surd& Surd::operator+=(const Surd& o) {
  for (auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd r;
  for (auto& [m1, q1] : a.terms_)
    for (auto& [m2, q2] : b.terms_) {
      // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd(m1, m2);
      // the product of two coprime squarefree numbers is squarefree, so no
      // factorization is needed here.
      Integer g;
      mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
      r.add_term((m1 / g) * (m2 / g), q1 * q2 * Rational(g));
    }
  return r;
}

Surd operator*(const Surd& a, const Rational& q) {
  Surd r;
  if (q == 0) return r;
  for (auto& [m, c] : a.terms_) r.terms_.emplace(m, c * q);
  return r;
}

Surd Surd::div(const Rational& q) const {
  if (q == 0) throw std::domain_error("div: division by zero");
  return *this * Rational(Rational(1) / q);
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  bool all_pos = true, all_neg = true;
  for (auto& [m, q] : terms_) (sgn(q) > 0 ? all_neg : all_pos) = false;
  if (all_pos) return 1;
  if (all_neg) return -1;
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    mpfr_t lo, hi, sq_lo, sq_hi, t_lo, t_hi;
    mpfr_inits2(prec, lo, hi, sq_lo, sq_hi, t_lo, t_hi, (mpfr_ptr)nullptr);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (auto& [m, q] : terms_) {
      mpfr_set_z(sq_lo, m.get_mpz_t(), MPFR_RNDD);
      mpfr_sqrt(sq_lo, sq_lo, MPFR_RNDD);
      mpfr_set_z(sq_hi, m.get_mpz_t(), MPFR_RNDU);
      mpfr_sqrt(sq_hi, sq_hi, MPFR_RNDU);
      if (sgn(q) > 0) {
        mpfr_mul_q(t_lo, sq_lo, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(t_hi, sq_hi, q.get_mpq_t(), MPFR_RNDU);
      } else {
        mpfr_mul_q(t_lo, sq_hi, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(t_hi, sq_lo, q.get_mpq_t(), MPFR_RNDU);
      }
      mpfr_add(lo, lo, t_lo, MPFR_RNDD);
      mpfr_add(hi, hi, t_hi, MPFR_RNDU);
    }
    int result = 0, decided = 0;
    if (mpfr_sgn(lo) > 0) { result = 1; decided = 1; }
    else if (mpfr_sgn(hi) < 0) { result = -1; decided = 1; }
    mpfr_clears(lo, hi, sq_lo, sq_hi, t_lo, t_hi, (mpfr_ptr)nullptr);
    if (decided) return result;
  }
}

double Surd::approx() const {
  mpfr_t acc, t;
  mpfr_inits2(128, acc, t, (mpfr_ptr)nullptr);
  mpfr_set_zero(acc, 1);
  for (auto& [m, q] : terms_) {
    mpfr_set_z(t, m.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, q.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  double r = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, t, (mpfr_ptr)nullptr);
  return r;
}

std::vector<std::pair<std::string, Integer>> Surd::term_list() const {
  std::vector<std::pair<std::string, Integer>> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.emplace_back(it->second.get_str(), it->first);
  return out;
}

Surd Surd::from_term_list(
    const std::vector<std::pair<std::string, std::string>>& terms) {
  Surd r;
  for (auto& [qs, ms] : terms) {
    Rational q;
    if (q.set_str(qs, 10) != 0) throw std::invalid_argument("bad rational: " + qs);
    q.canonicalize();
    Integer m;
    if (m.set_str(ms, 10) != 0) throw std::invalid_argument("bad radicand: " + ms);
    r += Surd::term(q, m);
  }
  return r;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Integer& m = it->first;
    Rational q = it->second;
    bool neg = q < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = neg ? Rational(-q) : q;
    if (m == 1) {
      os << a.get_str();
    } else if (a == 1) {
      os << "sqrt(" << m.get_str() << ")";
    } else {
      os << a.get_str() << "*sqrt(" << m.get_str() << ")";
    }
  }
  return os.str();
}

}  // namespace rba6
