#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "rba6/surd.hpp"

using namespace rba6;

static Rational rat(const char* s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

TEST_CASE("squarefree_part basics") {
  Integer root;
  CHECK(squarefree_part(12, root) == 3);
  CHECK(root == 2);
  CHECK(squarefree_part(1, root) == 1);
  CHECK(root == 1);
  CHECK(squarefree_part(49, root) == 1);
  CHECK(root == 7);
  CHECK(squarefree_part(210, root) == 210);
  CHECK(root == 1);
  CHECK(squarefree_part(8 * 27 * 25, root) == 6);
  CHECK(root == 2 * 3 * 5);
}

TEST_CASE("squarefree_part beyond trial division") {
  // Primes above the 10^6 trial-division bound.
  Integer p("1000003"), q("1000033");
  Integer root;
  CHECK(squarefree_part(p * p, root) == 1);
  CHECK(root == p);
  CHECK(squarefree_part(p * q, root) == p * q);
  CHECK(root == 1);
  // Forces the Pollard-rho split: p^2 q is neither prime nor a square.
  CHECK(squarefree_part(p * p * q, root) == q);
  CHECK(root == p);
}

TEST_CASE("sqrt_of normalizes rationals") {
  // sqrt(6/35) = (1/35) sqrt(210)
  Surd s = Surd::sqrt_of(rat("6/35"));
  auto tl = s.term_list();
  REQUIRE(tl.size() == 1);
  CHECK(tl[0].first == "1/35");
  CHECK(tl[0].second == 210);
  CHECK(Surd::sqrt_of(rat("4/9")) == Surd(rat("2/3")));
  CHECK(Surd::sqrt_of(Rational(0)).is_zero());
  CHECK_THROWS_AS(Surd::sqrt_of(Rational(-1)), std::domain_error);
}

TEST_CASE("multiplication combines radicands by gcd") {
  // (sqrt 6 + sqrt 10) * sqrt 15 = 3 sqrt 10 + 5 sqrt 6
  Surd a = Surd::term(1, 6) + Surd::term(1, 10);
  Surd b = Surd::term(1, 15);
  Surd want = Surd::term(3, 10) + Surd::term(5, 6);
  CHECK(a * b == want);
  // sqrt 6 * sqrt 10 = 2 sqrt 15
  CHECK(Surd::term(1, 6) * Surd::term(1, 10) == Surd::term(2, 15));
  CHECK(Surd::term(1, 7) * Surd::term(1, 7) == Surd(7l));
}

TEST_CASE("addition cancels structurally") {
  Surd a = Surd::term(rat("1/2"), 3) + Surd(5l);
  Surd b = Surd::term(rat("-1/2"), 3) - Surd(5l);
  CHECK((a + b).is_zero());
  CHECK((a - a).is_zero());
  CHECK((Surd::term(1, 2) + Surd::term(1, 3)) * (Surd::term(1, 2) - Surd::term(1, 3)) == Surd(-1l));
}

TEST_CASE("sign") {
  CHECK(Surd().sign() == 0);
  CHECK(Surd(3l).sign() == 1);
  CHECK(Surd(rat("-2/7")).sign() == -1);
  // sqrt 2 + sqrt 3 - sqrt 10 < 0 (mixed signs, needs evaluation)
  Surd s = Surd::term(1, 2) + Surd::term(1, 3) - Surd::term(1, 10);
  CHECK(s.sign() == -1);
  CHECK((-s).sign() == 1);
  // Near-cancellation: sqrt(10001) - 100.005 = -1.25e-5...
  Surd t = Surd::term(1, 10001) - Surd(rat("20001/200"));
  CHECK(t.sign() == -1);
  // ... while sqrt(10001) - 100.0049 > 0.
  Surd u = Surd::term(1, 10001) - Surd(rat("1000049/10000"));
  CHECK(u.sign() == 1);
}

TEST_CASE("rational and integer extraction") {
  CHECK(Surd(rat("9/3")).as_integer() == Integer(3));
  CHECK(Surd(rat("1/3")).as_integer() == std::nullopt);
  CHECK(Surd(rat("1/3")).as_rational() == rat("1/3"));
  CHECK(Surd::term(1, 5).as_rational() == std::nullopt);
  CHECK(Surd().as_integer() == Integer(0));
  CHECK(Surd::term(2, 9) == Surd(6l));  // normalizes to rational
}

TEST_CASE("div by rational scalar") {
  Surd s = Surd::term(3, 5) + Surd(6l);
  CHECK(s.div(3) == Surd::term(1, 5) + Surd(2l));
  CHECK_THROWS_AS(s.div(0), std::domain_error);
}

TEST_CASE("string form is sorted by radicand descending") {
  Surd s = Surd(7l) + Surd::term(rat("3/2"), 5);
  CHECK(s.str() == "3/2*sqrt(5) + 7");
  CHECK(Surd().str() == "0");
  CHECK(Surd(-2l).str() == "-2");
  Surd t = Surd::term(1, 6) - Surd::term(rat("1/3"), 2);
  CHECK(t.str() == "sqrt(6) - 1/3*sqrt(2)");
}

TEST_CASE("term_list round trip") {
  Surd s = Surd(7l) + Surd::term(rat("3/2"), 5);
  auto tl = s.term_list();
  REQUIRE(tl.size() == 2);
  CHECK(tl[0] == std::pair<std::string, Integer>("3/2", 5));
  CHECK(tl[1] == std::pair<std::string, Integer>("7", 1));
  CHECK(Surd::from_term_list({{"3/2", "5"}, {"7", "1"}}) == s);
  // Unnormalized input radicands get reduced.
  CHECK(Surd::from_term_list({{"1", "12"}}) == Surd::term(2, 3));
}

TEST_CASE("approx") {
  CHECK(Surd::term(1, 2).approx() == doctest::Approx(1.41421356).epsilon(1e-8));
  CHECK(Surd(rat("-7/2")).approx() == doctest::Approx(-3.5));
}

TEST_CASE("sign agrees with 100-digit interval evaluation on random surds") {
  // Independent oracle: evaluate at 350 bits (~105 decimal digits) with MPFR
  // round-down/round-up; when the interval excludes zero its sign is proven.
  std::mt19937 rng(424242u);
  auto eval = [](const Surd& s, mpfr_rnd_t rnd) {
    mpfr_t acc, t;
    mpfr_init2(acc, 350);
    mpfr_init2(t, 350);
    mpfr_set_zero(acc, 1);
    for (auto& [m, q] : s.terms()) {
      mpfr_set_z(t, m.get_mpz_t(), rnd);
      mpfr_sqrt(t, t, rnd);
      mpfr_mul_q(t, t, q.get_mpq_t(), rnd);
      mpfr_add(acc, acc, t, rnd);
    }
    double v = mpfr_get_d(acc, rnd);
    mpfr_clear(acc);
    mpfr_clear(t);
    return v;
  };
  int decided = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Surd s;
    int nterms = 1 + (int)(rng() % 4);
    for (int k = 0; k < nterms; ++k) {
      long num = (long)(rng() % 2001) - 1000;
      long den = 1 + (long)(rng() % 40);
      long rad = 1 + (long)(rng() % 10000);
      Rational q(num, den);
      q.canonicalize();
      s += Surd::term(q, rad);
    }
    if (s.is_zero()) {
      CHECK(s.sign() == 0);
      continue;
    }
    double lo = eval(s, MPFR_RNDD), hi = eval(s, MPFR_RNDU);
    if (lo > 0)
      CHECK(s.sign() == 1);
    else if (hi < 0)
      CHECK(s.sign() == -1);
    else
      continue;  // interval straddles zero even at 350 bits (never observed)
    ++decided;
  }
  CHECK(decided >= 990);
}

namespace {
rba6::Surd random_surd(std::mt19937& rng, int max_terms, long max_rad) {
  rba6::Surd s;
  int n = 1 + (int)(rng() % (unsigned)max_terms);
  for (int k = 0; k < n; ++k) {
    long num = (long)(rng() % 41) - 20;
    long den = 1 + (long)(rng() % 9);
    rba6::Rational q(num, den);
    q.canonicalize();
    s += rba6::Surd::term(q, 1 + (long)(rng() % max_rad));
  }
  return s;
}
}  // namespace

TEST_CASE("ring laws hold exactly on random surds") {
  std::mt19937 rng(7u);
  for (int t = 0; t < 200; ++t) {
    Surd a = random_surd(rng, 4, 1000);
    Surd b = random_surd(rng, 4, 1000);
    Surd c = random_surd(rng, 4, 1000);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("squares are nonnegative") {
  std::mt19937 rng(9u);
  for (int t = 0; t < 200; ++t) {
    Surd a = random_surd(rng, 3, 500);
    int s = (a * a).sign();
    if (a.is_zero())
      CHECK(s == 0);
    else
      CHECK(s == 1);
  }
}

TEST_CASE("sqrt_of squares back to its argument on random rationals") {
  std::mt19937 rng(11u);
  for (int t = 0; t < 1000; ++t) {
    Rational x((long)(rng() % 100000), 1 + (long)(rng() % 1000));
    x.canonicalize();
    Surd r = Surd::sqrt_of(x);
    CHECK(r * r == Surd(x));
  }
}
