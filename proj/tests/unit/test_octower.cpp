#include <doctest.h>

#include <random>
#include <stdexcept>

#include "theta_forge/octower.hpp"

using namespace theta_forge;

namespace {

std::vector<std::vector<int>> matmul(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_SUITE("octower") {
  TEST_CASE("group law matches matrix multiplication") {
    const auto g = hyperoctahedral_group(4);
    CHECK(g.size() == 384);
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
      const auto& a = g[rng() % g.size()];
      const auto& b = g[rng() % g.size()];
      const auto& c = g[rng() % g.size()];
      CHECK(matmul(a.matrix(), b.matrix()) == (a * b).matrix());
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * inverse(a) == SignedPerm::identity(4));
      CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
    CHECK(hyperoctahedral_group(3).size() == 48);
    CHECK_THROWS_AS(hyperoctahedral_group(7), std::invalid_argument);
  }

  TEST_CASE("orders of H") {
    CHECK(subgroup_H(3).size() == 12);
    CHECK(subgroup_H(4).size() == 96);
    CHECK(subgroup_H(5).size() == 960);
    CHECK_THROWS_AS(subgroup_H(7), std::invalid_argument);
    CHECK_THROWS_AS(subgroup_H(0), std::invalid_argument);
  }

  TEST_CASE("perfectness") {
    CHECK_FALSE(is_perfect(subgroup_H(3)));
    CHECK_FALSE(is_perfect(subgroup_H(4)));
    CHECK(is_perfect(subgroup_H(5)));
    CHECK(is_perfect({SignedPerm::identity(3)}));
    CHECK_FALSE(is_perfect(hyperoctahedral_group(3)));
  }

  TEST_CASE("crossed homomorphisms") {
    const auto r5 = crossed_hom_space(5);
    CHECK(r5.dim_dual == 4);
    CHECK(r5.dim_invariants == 0);
    CHECK(r5.dim_principal == 4);
    CHECK(r5.h1_dim == 0);
    CHECK(crossed_hom_space(6).h1_dim == 0);
    // A_4 maps onto Z/3 but E* = F_2^4/<1> has (F_2^4)^ev / <1> as invariants.
    const auto r4 = crossed_hom_space(4);
    CHECK(r4.dim_crossed >= r4.dim_principal);
  }

  TEST_CASE("beta form") {
    const auto r = beta_form_check(8);
    CHECK(r.weight_two_pairs == 28 * 28);
    CHECK(r.even_pairs == 128 * 128);
    CHECK(r.mismatches == 0);
    CHECK(r.pass);
  }

  TEST_CASE("index two subgroups") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto r = index_two_check(n);
      CHECK(r.subgroups);
      CHECK(r.intersection_is_h);
      CHECK(r.pass);
    }
    CHECK_THROWS_AS(index_two_check(5), std::invalid_argument);
  }

  TEST_CASE("tower report") {
    const auto r = tower_check(4);
    CHECK(r.order == 96);
    CHECK_FALSE(r.perfect);
    const auto s = tower_check(5);
    CHECK(s.order == 960);
    CHECK(s.perfect);
    CHECK(s.h1_dim == 0);
  }
}
