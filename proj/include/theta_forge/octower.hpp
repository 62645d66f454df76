#pragma once

#include <cstdint>
#include <vector>

namespace theta_forge {

/// Element (sigma, s) of O_n(Z) = S_n |x F_2^n, acting as D_s P_sigma where
/// P_sigma e_i = e_{sigma(i)} and D_s flips the coordinates in s.
struct SignedPerm {
  std::vector<unsigned> sigma;
  std::uint32_t signs = 0;

  static SignedPerm identity(std::size_t n);
  std::size_t n() const { return sigma.size(); }
  bool even_permutation() const;
  bool evenly_signed() const;
  int determinant() const;
  /// Integer matrix with entry (sigma(i), i) = +-1.
  std::vector<std::vector<int>> matrix() const;
  std::uint64_t encode() const;
  bool operator==(const SignedPerm&) const = default;
};

/// (sigma, s)(tau, t) = (sigma tau, s + sigma.t)
SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& a);

/// All 2^n n! elements; n <= 6.
std::vector<SignedPerm> hyperoctahedral_group(std::size_t n);
/// A_n |x (F_2^n)^ev; throws std::invalid_argument unless 1 <= n <= 6.
std::vector<SignedPerm> subgroup_H(std::size_t n);
/// Closure of the generators under multiplication, in discovery order.
std::vector<SignedPerm> closure(const std::vector<SignedPerm>& generators, std::size_t n);
/// G equals its commutator subgroup. Throws std::invalid_argument above 10^5 elements.
bool is_perfect(const std::vector<SignedPerm>& group);

struct CrossedHomReport {
  std::size_t n = 0;
  std::size_t dim_dual = 0;        // dim E* = n - 1
  std::size_t dim_invariants = 0;  // dim (E*)^{A_n}
  std::size_t dim_crossed = 0;
  std::size_t dim_principal = 0;
  std::size_t h1_dim = 0;
};
/// Crossed homomorphisms A_n -> E* with E* = F_2^n / <1>, over F_2.
CrossedHomReport crossed_hom_space(std::size_t n);

struct BetaFormReport {
  std::size_t weight_two_pairs = 0;
  std::size_t even_pairs = 0;
  std::size_t mismatches = 0;
  bool pass = false;
};
/// Commutator sign of the lifts of even h, k in F_8 against (-1)^{sum_{i != j} h_i k_j}.
BetaFormReport beta_form_check(unsigned n = 8);

struct IndexTwoReport {
  std::size_t n = 0;
  std::size_t order = 0;
  std::size_t det_one = 0;
  std::size_t even_perms = 0;
  std::size_t even_signs = 0;
  std::size_t intersection = 0;
  bool subgroups = false;
  bool intersection_is_h = false;
  bool pass = false;
};
/// The three index-2 subgroups of O_n(Z) and their intersection, n <= 4.
IndexTwoReport index_two_check(std::size_t n);

struct TowerReport {
  std::size_t n = 0;
  std::size_t order = 0;
  bool perfect = false;
  std::size_t h1_dim = 0;
};
TowerReport tower_check(std::size_t n);

}  // namespace theta_forge
