#include <doctest.h>

#include <stdexcept>

#include "theta_forge/fano.hpp"

using namespace theta_forge;

TEST_SUITE("fano") {
  TEST_CASE("structural checks") {
    const auto f = fano_structures();
    const auto r = check_fano(f);
    CHECK(r.lines_have_three_points);
    CHECK(r.points_on_three_lines);
    CHECK(r.right_numbering_is_projective);
    CHECK(r.diagonal_symmetry);
    CHECK(r.complement_sum_law);
    CHECK(r.b_addition_governed_by_right);
    CHECK(r.c_addition_governed_by_left);
    CHECK(r.even_decomposition);
    CHECK(r.hamming7_size == 16);
    CHECK(r.ok());
  }

  TEST_CASE("right lines are the xor-zero triples") {
    const auto f = fano_structures();
    for (const auto& l : f.right_lines) CHECK((l[0] ^ l[1] ^ l[2]) == 0u);
  }

  TEST_CASE("broken data is detected") {
    auto f = fano_structures();
    std::swap(f.left_lines[0][0], f.left_lines[1][0]);
    CHECK_FALSE(check_fano(f).ok());
  }

  TEST_CASE("span") {
    CHECK(f2_span({}).size() == 1);
    CHECK(f2_span({1, 2, 3}).size() == 4);
  }
}
