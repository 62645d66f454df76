#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace theta_forge {

/// Points and lines of P^2(F_2) under two numberings of the points.
///
/// The right-hand numbering gives the point [a:b:c] the number 4a+2b+c, so
/// its lines are the triples {i,j,k} with i^j^k = 0. The left-hand numbering
/// is a second labelling of the same drawing chosen so that line i on the left
/// passes through point j exactly when line j on the right passes through
/// point i. Points and lines are numbered 1..7; bit vectors use bit (i-1) for
/// point i.
struct FanoData {
  using Line = std::array<unsigned, 3>;

  std::array<Line, 7> left_lines{};
  std::array<Line, 7> right_lines{};
  /// Complements of left (b_i) and right (c_i) lines as 7-bit masks.
  std::array<std::uint8_t, 7> bvecs{};
  std::array<std::uint8_t, 7> cvecs{};
  /// incidence_left[i][j]: point j+1 lies on left line i+1; same for right.
  std::array<std::array<bool, 7>, 7> incidence_left{};
  std::array<std::array<bool, 7>, 7> incidence_right{};
};

FanoData fano_structures();

/// Structural checks on the Fano data; each entry names one property.
struct FanoReport {
  bool lines_have_three_points = false;
  bool points_on_three_lines = false;
  bool right_numbering_is_projective = false;
  bool diagonal_symmetry = false;
  bool complement_sum_law = false;      // b_i + c_i = {i} + 1
  bool b_addition_governed_by_right = false;
  bool c_addition_governed_by_left = false;
  bool even_decomposition = false;      // (F_2^7)^ev = B (+) C
  std::size_t hamming7_size = 0;

  bool ok() const;
};

FanoReport check_fano(const FanoData& f);

/// Span of the 7-bit masks over F_2, as a sorted list.
std::vector<std::uint8_t> f2_span(const std::vector<std::uint8_t>& gens);

}  // namespace theta_forge
