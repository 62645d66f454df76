#include "theta_forge/fano.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace theta_forge {

namespace {

std::uint8_t mask_of(const FanoData::Line& l) {
  std::uint8_t m = 0;
  for (unsigned pt : l) m |= static_cast<std::uint8_t>(1u << (pt - 1));
  return m;
}

constexpr std::uint8_t kAll = 0x7f;

}  // namespace

FanoData fano_structures() {
  FanoData f;
  // Left-hand numbering, line i as read from the incidence table.
  f.left_lines = {{{3, 4, 6}, {1, 5, 6}, {2, 6, 7}, {2, 3, 5},
                   {1, 3, 7}, {4, 5, 7}, {1, 2, 4}}};
  // Right-hand numbering, line i as read from the incidence table.
  f.right_lines = {{{2, 5, 7}, {3, 4, 7}, {1, 4, 5}, {1, 6, 7},
                    {2, 4, 6}, {1, 2, 3}, {3, 5, 6}}};
  for (unsigned i = 0; i < 7; ++i) {
    f.bvecs[i] = static_cast<std::uint8_t>(kAll & ~mask_of(f.left_lines[i]));
    f.cvecs[i] = static_cast<std::uint8_t>(kAll & ~mask_of(f.right_lines[i]));
    for (unsigned j = 0; j < 7; ++j) {
      f.incidence_left[i][j] = (mask_of(f.left_lines[i]) >> j) & 1u;
      f.incidence_right[i][j] = (mask_of(f.right_lines[i]) >> j) & 1u;
    }
  }
  return f;
}

std::vector<std::uint8_t> f2_span(const std::vector<std::uint8_t>& gens) {
  std::set<std::uint8_t> span{0};
  for (auto g : gens) {
    std::set<std::uint8_t> next = span;
    for (auto s : span) next.insert(static_cast<std::uint8_t>(s ^ g));
    span = std::move(next);
  }
  return {span.begin(), span.end()};
}

bool FanoReport::ok() const {
  return lines_have_three_points && points_on_three_lines && right_numbering_is_projective &&
         diagonal_symmetry && complement_sum_law && b_addition_governed_by_right &&
         c_addition_governed_by_left && even_decomposition && hamming7_size == 16;
}

FanoReport check_fano(const FanoData& f) {
  FanoReport r;
  r.lines_have_three_points = true;
  r.points_on_three_lines = true;
  for (const auto* lines : {&f.left_lines, &f.right_lines}) {
    std::array<int, 8> per_point{};
    std::set<std::uint8_t> distinct;
    for (const auto& l : *lines) {
      if (std::popcount(mask_of(l)) != 3) r.lines_have_three_points = false;
      distinct.insert(mask_of(l));
      for (unsigned pt : l) {
        if (pt >= 1 && pt <= 7) ++per_point[pt];
      }
    }
    if (distinct.size() != 7) r.lines_have_three_points = false;
    for (unsigned pt = 1; pt <= 7; ++pt) {
      if (per_point[pt] != 3) r.points_on_three_lines = false;
    }
  }

  // [a:b:c] has number 4a+2b+c: three points are collinear iff they sum to 0.
  std::set<std::uint8_t> projective;
  for (unsigned i = 1; i <= 7; ++i)
    for (unsigned j = i + 1; j <= 7; ++j)
      for (unsigned k = j + 1; k <= 7; ++k)
        if ((i ^ j ^ k) == 0) projective.insert(mask_of({i, j, k}));
  std::set<std::uint8_t> right;
  for (const auto& l : f.right_lines) right.insert(mask_of(l));
  r.right_numbering_is_projective = projective == right;

  r.diagonal_symmetry = true;
  for (unsigned i = 0; i < 7; ++i)
    for (unsigned j = 0; j < 7; ++j)
      if (f.incidence_right[i][j] != f.incidence_left[j][i]) r.diagonal_symmetry = false;

  r.complement_sum_law = true;
  for (unsigned i = 0; i < 7; ++i) {
    const auto expected = static_cast<std::uint8_t>((1u << i) ^ kAll);
    if ((f.bvecs[i] ^ f.cvecs[i]) != expected) r.complement_sum_law = false;
  }

  std::set<std::uint8_t> left;
  for (const auto& l : f.left_lines) left.insert(mask_of(l));
  r.b_addition_governed_by_right = true;
  r.c_addition_governed_by_left = true;
  for (unsigned i = 1; i <= 7; ++i)
    for (unsigned j = i + 1; j <= 7; ++j)
      for (unsigned k = j + 1; k <= 7; ++k) {
        const auto triple = mask_of({i, j, k});
        const bool b_zero = (f.bvecs[i - 1] ^ f.bvecs[j - 1] ^ f.bvecs[k - 1]) == 0;
        const bool c_zero = (f.cvecs[i - 1] ^ f.cvecs[j - 1] ^ f.cvecs[k - 1]) == 0;
        if (b_zero != (right.count(triple) == 1)) r.b_addition_governed_by_right = false;
        if (c_zero != (left.count(triple) == 1)) r.c_addition_governed_by_left = false;
      }

  const auto bspan = f2_span({f.bvecs.begin(), f.bvecs.end()});
  const auto cspan = f2_span({f.cvecs.begin(), f.cvecs.end()});
  std::vector<std::uint8_t> both(f.bvecs.begin(), f.bvecs.end());
  both.insert(both.end(), f.cvecs.begin(), f.cvecs.end());
  const auto sum = f2_span(both);
  const bool all_even = std::all_of(sum.begin(), sum.end(),
                                    [](std::uint8_t v) { return std::popcount(v) % 2 == 0; });
  r.even_decomposition = bspan.size() == 8 && cspan.size() == 8 && sum.size() == 64 && all_even;

  auto h7_gens = std::vector<std::uint8_t>(f.cvecs.begin(), f.cvecs.end());
  h7_gens.push_back(kAll);
  r.hamming7_size = f2_span(h7_gens).size();
  return r;
}

}  // namespace theta_forge
