#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "theta_forge/brute_lattice.hpp"
#include "theta_forge/codelattice.hpp"

using namespace theta_forge;

namespace {

CycRat num(long v) { return CycRat::integer(v); }

std::vector<Word> all_words(unsigned p, std::size_t n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t k = 0;
    while (k < n && w[k] == p - 1) w[k++] = 0;
    if (k == n) break;
    ++w[k];
  }
  return out;
}

// Brute-force theta counts for a code lattice: norms are keyed by p * norm.
std::map<std::int64_t, std::uint64_t> brute(const Code& c, std::int64_t scaled_bound) {
  return oracle::brute_norm_counts(c.prime(), c.length(), c.words(), scaled_bound);
}

}  // namespace

TEST_SUITE("codelattice") {
  TEST_CASE("A2 from the zero code") {
    const auto L = zero_code_lattice(3, 1);
    CHECK(L.rank() == 2);
    CHECK(L.gram() == std::vector<std::vector<BigInt>>{{2, -1}, {-1, 2}});
    CHECK(discriminant(L) == 3);
    CHECK(is_even(L));
    CHECK(minimal_norm(L) == 2);
    CHECK(short_vectors(L, std::nullopt, 2).size() == 7);
    const auto zero = short_vectors(L, std::nullopt, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].norm == 0);
  }

  TEST_CASE("A_{p-1} blocks and discriminants of zero codes") {
    for (unsigned p : {3u, 5u, 7u}) {
      const auto L = zero_code_lattice(p, 1);
      for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j) {
          const long expected = i == j ? 2 : (i + 1 == j || j + 1 == i ? -1 : 0);
          CHECK(L.gram()[i][j] == expected);
        }
      CHECK(discriminant(L) == p);
    }
    CHECK(discriminant(zero_code_lattice(3, 2)) == 9);
    CHECK(discriminant(zero_code_lattice(5, 1)) == 5);
  }

  TEST_CASE("tetracode and golay lattices") {
    const auto E8 = lattice_of_code(standard_code("tetracode"));
    CHECK(E8.rank() == 8);
    CHECK(discriminant(E8) == 1);
    CHECK(is_even(E8));
    CHECK(short_vectors(E8, std::nullopt, 2).size() == 241);
    CHECK(minimal_norm(E8) == 2);

    const auto G = lattice_of_code(standard_code("golay12"));
    CHECK(G.rank() == 24);
    CHECK(discriminant(G) == 1);
    CHECK(is_even(G));
    const auto counts = norm_counts(G, std::nullopt, 2);
    CHECK(counts.at(0) == 1);
    CHECK(counts.at(6) == 72);
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(lattice_of_code(standard_code("hamming8")), std::invalid_argument);
    CHECK_THROWS_AS(lattice_of_code(Code::from_generators(3, 2, {{1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(lattice_of_code(Code::from_words(3, 2, {{0, 0}, {1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(short_vectors(zero_code_lattice(3, 1), std::nullopt, -1), std::invalid_argument);
  }

  TEST_CASE("basis vectors reduce into the code") {
    const Code c = standard_code("golay12");
    const auto L = lattice_of_code(c);
    for (std::size_t i = 0; i < L.rank(); ++i) {
      const auto v = L.basis_vector(i);
      Word w;
      for (const auto& x : v) w.push_back(static_cast<std::uint8_t>(rho(x)));
      CHECK(c.contains(w));
    }
  }

  TEST_CASE("enumeration agrees with the brute-force oracle") {
    SUBCASE("tetracode through norm 6") {
      const Code t = standard_code("tetracode");
      const auto fp = norm_counts(lattice_of_code(t), std::nullopt, 6);
      CHECK(fp == brute(t, 18));
      CHECK(fp.at(6) == 240);
      CHECK(fp.at(12) == 2160);
      CHECK(fp.at(18) == 6720);
    }
    SUBCASE("zero codes with shifts") {
      for (unsigned p : {3u, 5u}) {
        const std::size_t n = p == 3 ? 3 : 2;
        const auto L = zero_code_lattice(p, n);
        for (const auto& w : all_words(p, n)) {
          const auto fp = norm_counts(L, w, 4);
          CHECK(fp == oracle::brute_norm_counts(p, n, {w}, 4 * p));
        }
      }
    }
    SUBCASE("random self-orthogonal p=5 codes") {
      // (1, 2) is isotropic mod 5.
      const Code c = Code::from_generators(5, 2, {{1, 2}});
      const auto L = lattice_of_code(c);
      CHECK(discriminant(L) == 1);
      CHECK(norm_counts(L, std::nullopt, 4) == brute(c, 20));
    }
  }

  TEST_CASE("short vectors: exact norms, membership and symmetry") {
    const auto L = zero_code_lattice(5, 2);
    const Word shift{1, 3};
    const Word neg{4, 2};
    const auto vs = short_vectors(L, shift, 3);
    for (const auto& v : vs) {
      Rational n = 0;
      for (const auto& x : v.coords) n += pairing(x, x);
      CHECK(n == v.norm);
      CHECK(rho(v.coords[0]) == 1);
      CHECK(rho(v.coords[1]) == 3);
    }
    CHECK(vs.size() == short_vectors(L, neg, 3).size());
    for (std::size_t i = 1; i < vs.size(); ++i) CHECK(vs[i - 1].norm <= vs[i].norm);

    const auto E8 = lattice_of_code(standard_code("tetracode"));
    const auto roots = short_vectors(E8, std::nullopt, 2);
    std::set<std::vector<CycInt>> set;
    for (const auto& v : roots) set.insert(v.coords);
    for (const auto& v : roots) {
      std::vector<CycInt> n;
      for (const auto& x : v.coords) n.push_back(-x);
      CHECK(set.count(n) == 1);
      CHECK(mpz_even_p(v.norm.get_num_mpz_t()));
      CHECK(v.norm.get_den() == 1);
    }
  }

  TEST_CASE("theta series of P + j") {
    const QSeries t0 = theta_class(3, 0, 7);
    CHECK(t0.denominator() == 3);
    const std::map<long, long> expected0{{0, 1}, {1, 6}, {3, 6}, {4, 6}, {7, 12}};
    for (long k = 0; k <= 7; ++k) {
      const auto it = expected0.find(k);
      CHECK(t0.coefficient(k) == num(it == expected0.end() ? 0 : it->second));
    }
    // sum over x^2 - xy + y^2 as an independent oracle
    std::map<long, long> direct;
    for (long x = -10; x <= 10; ++x)
      for (long y = -10; y <= 10; ++y) ++direct[x * x - x * y + y * y];
    for (long k = 0; k <= 7; ++k) CHECK(t0.coefficient(k) == num(direct[k]));

    const QSeries t1 = theta_class(3, 1, Rational(13, 3));
    const std::map<Rational, long> expected1{{Rational(1, 3), 3}, {Rational(4, 3), 3}, {Rational(7, 3), 6},
                                             {Rational(13, 3), 6}};
    for (long k = 0; k <= 13; ++k) {
      const Rational e(k, 3);
      Rational ec = e;
      ec.canonicalize();
      const auto it = expected1.find(ec);
      CHECK(t1.coefficient(ec) == num(it == expected1.end() ? 0 : it->second));
    }
    CHECK(theta_class(3, 2, 5) == theta_class(3, 1, 5));
    CHECK(theta_class(5, 1, 3).coefficient(0) == num(0));
  }

  TEST_CASE("coset decomposition and duality") {
    const Code t = standard_code("tetracode");
    const QSeries direct = theta_series(lattice_of_code(t), std::nullopt, 3);
    CHECK(same_up_to(direct, code_theta_by_cosets(t, 3), 3));

    const Code c = Code::from_generators(5, 2, {{1, 2}});
    CHECK(same_up_to(theta_series(lattice_of_code(c), std::nullopt, 2), code_theta_by_cosets(c, 2), 2));

    // Gamma_C pairs integrally with Gamma_{C^perp} = Gamma_C^vee.
    const Code small = Code::from_generators(5, 3, {{1, 2, 0}});
    const auto L = lattice_of_code(small);
    const Code dual = dual_code(small);
    for (const auto& b : L.basis())
      for (const auto& w : dual.words()) {
        const Ambient a = lift(5, w);
        CHECK(ambient_pairing(5, b, a).get_den() == 1);
      }
    // index |C^perp / C| = p^{n-2m}
    CHECK(static_cast<long>(dual.size() / small.size()) == discriminant(L).get_si());
  }
}
