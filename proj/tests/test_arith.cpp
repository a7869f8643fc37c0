#include "brauer/cyclotomic.hpp"
#include "brauer/error.hpp"
#include "brauer/matrix.hpp"
#include "brauer/normal_form.hpp"
#include "brauer/rational.hpp"

#include <doctest.h>

#include <random>

using namespace brauer;

TEST_CASE("rational parsing and square classes") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational(" -7 ") == -7);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK(squarefree_part(Rational(12)) == 3);
  CHECK(squarefree_part(Rational(-27)) == -3);
  CHECK(squarefree_part(Rational(1, 8)) == 2);
  CHECK(squarefree_part(Rational(9, 4)) == 1);
  CHECK(valuation(Rational(24), Integer(2)) == 3);
  CHECK(valuation(Rational(5, 27), Integer(3)) == -3);
  CHECK(is_rational_square(Rational(4, 9)));
  CHECK_FALSE(is_rational_square(Rational(-4)));
}

TEST_CASE("factorization reconstructs the input") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    long n = static_cast<long>(rng() % 1000000) + 1;
    Integer prod = 1;
    for (const auto &[p, e] : factorize(Integer(n))) {
      CHECK(is_prime(p.get_si()));
      for (unsigned long i = 0; i < e; ++i)
        prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("squarefree part of a small constant times a huge square") {
  std::mt19937_64 rng(13);
  // large primes make trial division hopeless; the squarefree part must still be found
  Integer big_prime;
  mpz_nextprime(big_prime.get_mpz_t(), Integer("1000000000000000000000000").get_mpz_t());
  for (int t = 0; t < 50; ++t) {
    long c = std::vector<long>{1, 2, 3, 5, 6, 7, 10, 30, -1, -3}[rng() % 10];
    Integer s = big_prime + static_cast<long>(rng() % 1000);
    Integer num = c * s * s * big_prime * big_prime, den = Integer(static_cast<long>(rng() % 50) + 1);
    den = den * den;
    CHECK(squarefree_part(make_rational(num, den)) == c);
    // a lone large prime is recognised as the cofactor
    CHECK(squarefree_part(make_rational(Integer(c * big_prime), den)) == c * big_prime);
  }
}

TEST_CASE("cyclotomic arithmetic") {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  // 1 + z + z^2 = 0
  CHECK((Cyclotomic(3, 1L) + z3 + z3 * z3).is_zero());
  CHECK((z3 * z3 * z3) == Cyclotomic(3, 1L));
  CHECK(z3.conj() == z3 * z3);
  auto z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK((z4 * z4) == Cyclotomic(4, -1L));
  // mixed orders: z3 + z4 lives in Q(zeta_12)
  auto s = z3 + z4;
  CHECK(s.order() == 12);
  CHECK(s - z4 == z3);
  auto z5 = Cyclotomic::root_of_unity(5, 1);
  auto r = z5 + z5.conj();
  // (z + z^-1)^2 + (z + z^-1) - 1 = 0
  CHECK((r * r + r - Cyclotomic(5, 1L)).is_zero());
  CHECK((r * r + r).is_rational());
  CHECK_THROWS_AS(z5.to_rational(), ValidationError);
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(1, -1L));
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(1, -1L));
}

TEST_CASE("cyclotomic powers agree with repeated multiplication") {
  for (int m : {1, 2, 3, 4, 6, 8, 9, 12, 15, 20, 60}) {
    auto z = Cyclotomic::root_of_unity(m, 1);
    Cyclotomic acc(m, 1L);
    for (int k = 0; k < 2 * m; ++k) {
      CHECK(acc == Cyclotomic::root_of_unity(m, k));
      acc *= z;
    }
    // sum of all m-th roots of unity vanishes for m > 1
    Cyclotomic sum(m);
    for (int k = 0; k < m; ++k)
      sum += Cyclotomic::root_of_unity(m, k);
    CHECK(sum == Cyclotomic(m, m == 1 ? 1L : 0L));
  }
}

TEST_CASE("matrix determinant, inverse, nullspace") {
  auto a = QMatrix::from_rows({{2, -1}, {-1, 2}});
  CHECK(a.determinant() == 3);
  CHECK(a * a.inverse() == QMatrix::identity(2));
  auto b = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  CHECK(b.rank() == 1);
  auto n = b.nullspace();
  CHECK(n.cols() == 2);
  CHECK((b * n).is_zero());
  auto tall = QMatrix::from_rows({{1, 0}, {1, 1}, {2, 3}});
  CHECK(tall.left_inverse() * tall == QMatrix::identity(2));
  CHECK(QMatrix::kronecker(a, QMatrix::identity(2)).determinant() == 9);
}

TEST_CASE("random matrices: det multiplicative, solve consistent") {
  std::mt19937_64 rng(11);
  auto rnd = [&](std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = make_rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
    return m;
  };
  for (int t = 0; t < 30; ++t) {
    auto x = rnd(4), y = rnd(4);
    CHECK((x * y).determinant() == x.determinant() * y.determinant());
    if (x.determinant() != 0) {
      auto sol = x.solve(y);
      REQUIRE(sol);
      CHECK(x * *sol == y);
    }
  }
}

TEST_CASE("Hermite and Smith forms") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t m = 2 + rng() % 4, n = 2 + rng() % 4;
    ZMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = static_cast<long>(rng() % 13) - 6;
    auto h = hermite_normal_form(a);
    CHECK(h.u * a == h.h);
    for (std::size_t i = 0; i < h.pivots.size(); ++i) {
      CHECK(h.h(i, h.pivots[i]) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.h(k, h.pivots[i]) >= 0);
        CHECK(h.h(k, h.pivots[i]) < h.h(i, h.pivots[i]));
      }
    }
    auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
      CHECK(mpz_divisible_p(s.d(i + 1, i + 1).get_mpz_t(), s.d(i, i).get_mpz_t()));
    auto k = integer_left_kernel(a);
    CHECK(k.rows() == m - s.rank);
    auto zero = k * a;
    for (std::size_t i = 0; i < zero.rows(); ++i)
      for (std::size_t j = 0; j < zero.cols(); ++j)
        CHECK(zero(i, j) == 0);
    // any integer combination of rows is solvable
    std::vector<Integer> c(m);
    for (auto &x : c)
      x = static_cast<long>(rng() % 7) - 3;
    std::vector<Integer> target(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        target[j] += c[i] * a(i, j);
    auto sol = solve_integer_left(a, target);
    REQUIRE(sol);
    std::vector<Integer> back(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        back[j] += (*sol)[i] * a(i, j);
    CHECK(back == target);
  }
}

TEST_CASE("integer solve rejects non-lattice targets") {
  auto a = ZMatrix::from_rows({{2, 0}, {0, 2}});
  CHECK_FALSE(solve_integer_left(a, {1, 0}));
  CHECK(solve_integer_left(a, {4, -2}));
  CHECK(primitive_normalize({0, -2, 4}) == std::vector<Integer>{0, 1, -2});
}
