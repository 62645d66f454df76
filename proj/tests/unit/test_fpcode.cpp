#include <doctest.h>

#include <stdexcept>

#include <random>

#include "theta_forge/fano.hpp"
#include "theta_forge/fpcode.hpp"

using namespace theta_forge;

namespace {

Code full_code(unsigned p, std::size_t n) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Word w(n, 0);
    w[i] = 1;
    gens.push_back(w);
  }
  return Code::from_generators(p, n, gens);
}

std::vector<unsigned> key(std::initializer_list<unsigned> l) { return l; }

}  // namespace

TEST_SUITE("fpcode") {
  TEST_CASE("construction from generators and explicit words") {
    const Code t = Code::from_generators(3, 4, {{0, 1, 1, 2}, {1, 0, 1, 1}});
    CHECK(t.size() == 9);
    CHECK(t.dimension() == 2);
    CHECK(is_self_dual(t));
    CHECK(weight_enumerator(t) == weight_enumerator(standard_code("tetracode")));

    const Code z = Code::from_words(3, 1, {{0}});
    CHECK(z.size() == 1);
    CHECK(z.is_linear());
    CHECK(z.dimension() == 0);

    const Code nonlinear = Code::from_words(3, 2, {{0, 1}, {2, 2}});
    CHECK_FALSE(nonlinear.is_linear());
    CHECK_THROWS_AS(nonlinear.generators(), std::logic_error);
    CHECK_THROWS_AS(dual_code(nonlinear), std::logic_error);
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Code::from_generators(4, 2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Code::from_words(3, 2, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Code::from_words(3, 2, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(standard_code("nope"), std::invalid_argument);
  }

  TEST_CASE("tetracode is the set (s, a, a+s, a+2s)") {
    std::vector<Word> words;
    for (unsigned s = 0; s < 3; ++s)
      for (unsigned a = 0; a < 3; ++a)
        words.push_back({static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(a),
                         static_cast<std::uint8_t>((a + s) % 3), static_cast<std::uint8_t>((a + 2 * s) % 3)});
    CHECK(Code::from_words(3, 4, words) == standard_code("tetracode"));
  }

  TEST_CASE("duals") {
    const Code t = standard_code("tetracode");
    CHECK(dual_code(t) == t);
    CHECK(dual_code(Code::from_generators(5, 3, {})) == full_code(5, 3));
    const Code h = standard_code("hamming8");
    CHECK(dual_code(h) == h);
    const Code g = standard_code("golay12");
    CHECK(g.size() == 729);
    CHECK(dual_code(g) == g);
  }

  TEST_CASE("dual involution and dimension formula on random codes") {
    std::mt19937 rng(7);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        std::vector<Word> gens;
        for (std::size_t k = 0; k < rng() % 4; ++k) {
          Word w(n);
          for (auto& d : w) d = static_cast<std::uint8_t>(rng() % p);
          gens.push_back(w);
        }
        const Code c = Code::from_generators(p, n, gens);
        const Code d = dual_code(c);
        CHECK(c.dimension() + d.dimension() == n);
        CHECK(dual_code(d) == c);
        for (const auto& x : c.words())
          for (const auto& y : d.words()) CHECK(dot(p, x, y) == 0);
      }
    }
  }

  TEST_CASE("weight enumerators") {
    const auto wt = weight_enumerator(standard_code("tetracode"));
    CHECK(wt.r == 1);
    CHECK(wt.coefficients.size() == 2);
    CHECK(wt.coefficients.at(key({4, 0})) == 1);
    CHECK(wt.coefficients.at(key({1, 3})) == 8);

    const auto wh = weight_enumerator(standard_code("hamming8"));
    CHECK(wh.coefficients.size() == 3);
    CHECK(wh.coefficients.at(key({8, 0})) == 1);
    CHECK(wh.coefficients.at(key({4, 4})) == 14);
    CHECK(wh.coefficients.at(key({0, 8})) == 1);
    CHECK(wh.total() == 16);

    const auto wz = weight_enumerator(Code::from_generators(5, 3, {}));
    CHECK(wz.r == 2);
    CHECK(wz.coefficients.at(key({3, 0, 0})) == 1);

    // +j and -j are identified.
    const auto wp = weight_enumerator(Code::from_words(5, 4, {{1, 4, 2, 3}}));
    CHECK(wp.coefficients.at(key({0, 2, 2})) == 1);
  }

  TEST_CASE("predicates") {
    const auto h = code_predicates(standard_code("hamming8"));
    CHECK(*h.self_orthogonal);
    CHECK(*h.self_dual);
    CHECK(*h.doubly_even);
    CHECK(*h.min_distance == 4);
    CHECK(is_simply_error_correcting(standard_code("hamming8")));

    const auto t = code_predicates(standard_code("tetracode"));
    CHECK(*t.self_orthogonal);
    CHECK(*t.self_dual);
    CHECK_FALSE(t.doubly_even.has_value());
    CHECK(*t.min_distance == 3);
    CHECK_THROWS_AS(is_doubly_even(standard_code("tetracode")), std::invalid_argument);

    const auto f = code_predicates(full_code(2, 5));
    CHECK_FALSE(*f.self_orthogonal);
    CHECK_FALSE(*f.self_dual);
    CHECK_FALSE(*f.doubly_even);
    CHECK(*f.min_distance == 1);

    CHECK(*code_predicates(standard_code("golay12")).min_distance == 6);
    CHECK_FALSE(min_distance(Code::from_generators(3, 2, {})).has_value());
  }

  TEST_CASE("hamming8 weight spectrum and self-dual implications") {
    const Code h = standard_code("hamming8");
    std::map<std::size_t, int> spectrum;
    for (const auto& w : h.words()) ++spectrum[hamming_weight(w)];
    CHECK(spectrum == std::map<std::size_t, int>{{0, 1}, {4, 14}, {8, 1}});
  }

  TEST_CASE("hamming8 parity coordinates come from the Fano plane") {
    const auto f = fano_structures();
    const Code h = standard_code("hamming8");
    for (auto c : f.cvecs) {
      Word w(8, 0);
      for (unsigned i = 0; i < 7; ++i) w[i + 1] = (c >> i) & 1u;
      w[0] = 0;  // line complements have weight 4
      CHECK(h.contains(w));
    }
  }

  TEST_CASE("monomial transforms") {
    const Code t = standard_code("tetracode");
    CHECK(apply_monomial(t, MonomialTransform::identity(4)) == t);

    MonomialTransform neg = MonomialTransform::identity(4);
    neg.scalars.assign(4, 2);
    CHECK(apply_monomial(t, neg) == t);

    MonomialTransform swap = MonomialTransform::identity(3);
    std::swap(swap.sigma[0], swap.sigma[1]);
    const Code z = Code::from_generators(3, 3, {});
    CHECK(apply_monomial(z, swap) == z);

    MonomialTransform bad = MonomialTransform::identity(4);
    bad.scalars[2] = 0;
    CHECK_THROWS_AS(apply_monomial(t, bad), std::invalid_argument);
  }

  TEST_CASE("monomial composition and enumerator invariance") {
    std::mt19937 rng(11);
    const unsigned p = 5;
    const std::size_t n = 4;
    auto random_transform = [&](bool signs_only) {
      MonomialTransform g = MonomialTransform::identity(n);
      std::shuffle(g.sigma.begin(), g.sigma.end(), rng);
      for (auto& s : g.scalars) s = static_cast<std::uint8_t>(signs_only ? (rng() % 2 ? 1 : p - 1) : 1 + rng() % (p - 1));
      return g;
    };
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Word> words;
      for (int k = 0; k < 6; ++k) {
        Word w(n);
        for (auto& d : w) d = static_cast<std::uint8_t>(rng() % p);
        words.push_back(w);
      }
      const Code c = Code::from_words(p, n, words);
      const auto g = random_transform(false);
      const auto h = random_transform(false);
      CHECK(apply_monomial(apply_monomial(c, g), h) == apply_monomial(c, compose(h, g)));
      const auto s = random_transform(true);
      CHECK(weight_enumerator(apply_monomial(c, s)) == weight_enumerator(c));
      CHECK(apply_monomial(c, s).size() == c.size());
    }
  }

  TEST_CASE("code file round trip and parse errors") {
    const Code t = standard_code("tetracode");
    CHECK(parse_code(format_code(t)) == t);
    CHECK(parse_code("# comment\n3 2\n0 0\n\n1 2\n").size() == 2);
    CHECK_THROWS_AS(parse_code("3 2\n0 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("3 2\n0 1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("4 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("# nothing\n"), std::invalid_argument);
  }
}
