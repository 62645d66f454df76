#include <doctest.h>

#include <random>
#include <stdexcept>

#include "theta_forge/hilbert_eval.hpp"
#include "theta_forge/qexp.hpp"

using namespace theta_forge;

namespace {

const std::complex<double> I(0, 1);

Code random_code(std::mt19937& rng, unsigned p, std::size_t n, std::size_t words) {
  std::vector<Word> ws;
  for (std::size_t k = 0; k < words; ++k) {
    Word w(n);
    for (auto& d : w) d = static_cast<std::uint8_t>(rng() % p);
    ws.push_back(w);
  }
  return Code::from_words(p, n, ws);
}

}  // namespace

TEST_SUITE("hilbert_eval") {
  TEST_CASE("theta_j against exact expansions") {
    const HilbertPoint z{{I}};
    const auto exact0 = theta_class(3, 0, 10).evaluate(I);
    const auto exact1 = theta_class(3, 1, 10).evaluate(I);
    CHECK(std::abs(theta_j_eval(3, 0, z, 1e-12) - exact0) < 1e-9);
    CHECK(std::abs(theta_j_eval(3, 1, z, 1e-12) - exact1) < 1e-9);
    for (double im : {0.8, 1.3}) {
      const std::complex<double> w(0.2, im);
      CHECK(std::abs(theta_j_eval(3, 0, HilbertPoint{{w}}, 1e-12) - theta_class(3, 0, 14).evaluate(w)) < 1e-9);
    }
  }

  TEST_CASE("large imaginary part leaves the zero vector") {
    for (unsigned p : {3u, 5u, 7u}) {
      HilbertPoint z;
      z.z.assign((p - 1) / 2, std::complex<double>(0.1, 40.0));
      CHECK(std::abs(theta_j_eval(p, 0, z, 1e-12) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("symmetry j -> -j") {
    const HilbertPoint z{{std::complex<double>(0.3, 1.0), std::complex<double>(-0.2, 1.4)}};
    CHECK(std::abs(theta_j_eval(5, 1, z, 1e-12) - theta_j_eval(5, 4, z, 1e-12)) < 1e-12);
    CHECK(std::abs(theta_j_eval(5, 2, z, 1e-12) - theta_j_eval(5, 3, z, 1e-12)) < 1e-12);
    const HilbertPoint w{{I}};
    CHECK(std::abs(theta_j_eval(3, 1, w, 1e-12) - theta_j_eval(3, 2, w, 1e-12)) < 1e-12);
  }

  TEST_CASE("code evaluation") {
    const HilbertPoint z{{I}};
    CHECK(theta_code_eval(Code::from_words(3, 2, {}), z, 1e-10) == std::complex<double>(0));
    CHECK(std::abs(theta_code_eval(Code::from_words(3, 1, {{0}}), z, 1e-12) - theta_j_eval(3, 0, z, 1e-12)) < 1e-11);

    const std::complex<double> d(0.1, 1.0);
    const auto e8 = theta_code_eval(standard_code("tetracode"), HilbertPoint{{d}}, 1e-11);
    std::vector<QSeries> thetas{theta_class(3, 0, 8), theta_class(3, 1, 8)};
    const auto exact = compose_enumerator(weight_enumerator(standard_code("tetracode")), thetas).evaluate(d);
    CHECK(std::abs(e8 - exact) < 1e-8);

    // all Im -> infinity counts zero words
    HilbertPoint far{{std::complex<double>(0, 30), std::complex<double>(0, 31)}};
    const Code c = Code::from_words(5, 2, {{0, 0}, {1, 2}, {3, 0}});
    CHECK(std::abs(theta_code_eval(c, far, 1e-12) - 1.0) < 1e-10);
  }

  TEST_CASE("alpbach identity") {
    std::mt19937 rng(1);
    const Code c = random_code(rng, 5, 2, 5);
    const std::vector<HilbertPoint> pts{{{I, 1.3 * I}}};
    const auto rep = verify_alpbach(c, pts, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.points[0].residual < 1e-8);
    CHECK(rep.points[0].galois_residual < 1e-8);

    const auto t = verify_alpbach(standard_code("tetracode"), {HilbertPoint{{I}}}, 1e-10);
    CHECK(t.pass);

    const auto single = verify_alpbach(Code::from_words(5, 3, {{1, 2, 4}}), {HilbertPoint{{1.1 * I, I}}}, 1e-12);
    CHECK(single.points[0].residual < 1e-12);
  }

  TEST_CASE("galois permutations") {
    const auto perms = galois_permutations(5);
    REQUIRE(perms.size() == 2);
    CHECK(perms[1] == std::vector<std::size_t>{1, 0});
    for (const auto& perm : galois_permutations(7)) {
      auto sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == std::vector<std::size_t>{0, 1, 2});
    }
  }

  TEST_CASE("SL2(F3) action") {
    for (auto z : {I, 2.0 * I, std::complex<double>(0.3, 1.5)}) {
      const auto rep = verify_sl2f3_action(z, 1e-7);
      CHECK(rep.s0_residual < 1e-7);
      CHECK(rep.s1_residual < 1e-7);
      CHECK(rep.t0_residual < 1e-10);
      CHECK(rep.t1_residual < 1e-7);
      CHECK(rep.ss_residual < 1e-7);
      CHECK(rep.t_exact);
      CHECK(rep.pass);
    }
    CHECK_THROWS_AS(verify_sl2f3_action(std::complex<double>(1, -1), 1e-7), std::invalid_argument);
  }

  TEST_CASE("residuals shrink with the tail tolerance") {
    const std::complex<double> z(0.3, 1.5);
    const auto loose = verify_sl2f3_action(z, 1e-3);
    const auto tight = verify_sl2f3_action(z, 1e-6);
    CHECK(tight.s0_residual <= loose.s0_residual + 1e-15);
  }

  TEST_CASE("input validation and the norm cap") {
    CHECK_THROWS_AS(theta_j_eval(5, 0, HilbertPoint{{I}}, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(theta_j_eval(3, 0, HilbertPoint{{-I}}, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(theta_j_eval(3, 0, HilbertPoint{{I}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(theta_j_eval(3, 0, HilbertPoint{{std::complex<double>(0, 0.001)}}, 1e-12), std::runtime_error);
  }
}
