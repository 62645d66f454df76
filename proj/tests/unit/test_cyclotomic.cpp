#include <doctest.h>

#include <stdexcept>

#include <random>

#include "theta_forge/cyclotomic.hpp"

using namespace theta_forge;

namespace {

CycInt poly(unsigned p, std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return CycInt::from_polynomial(p, b);
}

CycInt random_element(std::mt19937& rng, unsigned p, long mag) {
  std::vector<BigInt> c(p - 1);
  for (auto& x : c) x = static_cast<long>(rng() % (2 * mag + 1)) - mag;
  return CycInt(p, c);
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("arithmetic examples") {
    const CycInt one_minus_z = poly(3, {1, -1});
    const CycInt one_minus_z2 = poly(3, {1, 0, -1});
    CHECK(one_minus_z * one_minus_z2 == CycInt::integer(3, 3));
    const CycInt x = poly(7, {1, 2, 3, 4, 5, 6});
    CHECK(x + CycInt::integer(0, 7) == x);
    for (unsigned p : {3u, 5u, 7u}) {
      std::vector<BigInt> minus_all(p - 1, -1);
      CHECK(CycInt::zeta_power(p, 1) * CycInt::zeta_power(p, p - 2) == CycInt(p, minus_all));
      CHECK(CycInt::zeta_power(p, static_cast<long>(p)) == CycInt::integer(1, p));
      CHECK(CycInt::zeta_power(p, -1) == CycInt::zeta_power(p, p - 1));
    }
    CHECK_THROWS_AS(poly(3, {1}) + poly(5, {1}), std::invalid_argument);
    CHECK_THROWS_AS(cyc_arith(poly(3, {1}), poly(5, {1}), CycOp::mul), std::invalid_argument);
  }

  TEST_CASE("conjugation") {
    CHECK(conj(CycInt::zeta_power(3, 1)) == poly(3, {-1, -1}));
    CHECK(conj(CycInt::integer(4, 5)) == CycInt::integer(4, 5));
    CHECK(conj(poly(5, {1, -1})) == poly(5, {2, 1, 1, 1}));
  }

  TEST_CASE("trace") {
    for (unsigned p : {3u, 5u, 7u, 11u}) {
      CHECK(trace(CycInt::integer(1, p)) == p - 1);
      CHECK(trace(CycInt::zeta_power(p, 1)) == -1);
      CHECK(trace(CycInt::integer(0, p)) == 0);
    }
  }

  TEST_CASE("rho") {
    for (unsigned p : {3u, 5u, 7u}) {
      CHECK(rho(poly(p, {1, -1})) == 0);
      CHECK(rho(CycInt::integer(1, p)) == 1);
    }
    CHECK(rho(poly(3, {2, 1})) == 0);
  }

  TEST_CASE("pairing") {
    const CycInt a = poly(3, {1, -1});
    const CycInt b = poly(3, {0, 1, -1});
    CHECK(pairing(a, a) == 2);
    CHECK(pairing(a, b) == -1);
    CHECK(pairing(a, CycInt::integer(0, 3)) == 0);
    CHECK(pairing(CycInt::integer(1, 3), CycInt::integer(1, 3)) == Rational(2, 3));
  }

  TEST_CASE("embeddings") {
    for (unsigned r = 1; r < 5; ++r) CHECK(std::abs(embed(CycInt::integer(1, 5), r) - 1.0) < 1e-15);
    const auto z = embed(CycInt::zeta_power(3, 1), 1);
    CHECK(z.real() == doctest::Approx(-0.5));
    CHECK(z.imag() == doctest::Approx(0.8660254037844386));
    std::complex<double> s = 0;
    for (unsigned r = 1; r < 5; ++r) s += embed(CycInt::zeta_power(5, 1), r);
    CHECK(std::abs(s + 1.0) < 1e-12);
    CHECK_THROWS_AS(embed(CycInt::integer(1, 5), 0), std::invalid_argument);
    CHECK_THROWS_AS(embed(CycInt::integer(1, 5), 5), std::invalid_argument);
  }

  TEST_CASE("real embedding pairs") {
    for (unsigned l = 1; l <= 2; ++l) {
      CHECK(std::abs(real_embed_pair(CycInt::integer(1, 5), l) - 1.0) < 1e-15);
      CHECK(std::abs(real_embed_pair(CycInt::integer(0, 5), l)) < 1e-15);
    }
    const CycInt x = poly(5, {1, -1});
    double s = 0;
    for (unsigned l = 1; l <= 2; ++l) {
      const auto v = real_embed_pair(x, l);
      CHECK(std::abs(v.imag()) < 1e-12);
      s += 2 * v.real();
    }
    CHECK(s == doctest::Approx(trace(x * conj(x)).get_d()).epsilon(1e-10));
    CHECK_THROWS_AS(real_embed_pair(x, 3), std::invalid_argument);
  }

  TEST_CASE("ring and trace properties on random samples") {
    std::mt19937 rng(3);
    for (unsigned p : {3u, 5u, 7u, 11u}) {
      for (int trial = 0; trial < 30; ++trial) {
        const CycInt x = random_element(rng, p, 1000);
        const CycInt y = random_element(rng, p, 1000);
        const CycInt w = random_element(rng, p, 1000);
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK(trace(x + y) == trace(x) + trace(y));
        std::complex<double> s = 0;
        for (unsigned r = 1; r < p; ++r) s += embed(x, r);
        CHECK(std::abs(s.real() - trace(x).get_d()) < 1e-9);
        CHECK((rho(x * y)) == (rho(x) * rho(y)) % p);
        CHECK((rho(x + y)) == (rho(x) + rho(y)) % p);
        CHECK(conj(conj(x)) == x);
        CHECK(trace(conj(x)) == trace(x));
        CHECK(pairing(x, y) == pairing(y, x));
        CHECK(pairing(x, x) > 0);
        const CycInt in_p = x * poly(p, {1, -1});
        const Rational n = pairing(in_p, in_p);
        CHECK(n.get_den() == 1);
        CHECK(mpz_even_p(n.get_num_mpz_t()));
      }
    }
  }

  TEST_CASE("norm and inverse") {
    CHECK(field_norm(poly(3, {1, -1})) == 3);
    CHECK(field_norm(poly(5, {1, -1})) == 5);
    std::mt19937 rng(5);
    for (unsigned p : {3u, 5u, 7u}) {
      for (int trial = 0; trial < 10; ++trial) {
        const CycInt x = random_element(rng, p, 5);
        if (x.is_zero()) continue;
        const CycRat q(x, 7);
        CHECK(q * q.inverse() == CycRat(CycInt::integer(1, p)));
      }
    }
    CHECK_THROWS_AS(CycRat().inverse(), std::domain_error);
    CHECK(CycRat(CycInt::integer(6, 3), 4) == CycRat(CycInt::integer(3, 3), 2));
  }

  TEST_CASE("rationals") {
    CHECK(parse_rational("13/3") == Rational(13, 3));
    CHECK(parse_rational("4.25") == Rational(17, 4));
    CHECK(rational_string(Rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }
}
