#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "theta_forge/fano.hpp"
#include "theta_forge/fpcode.hpp"

namespace theta_forge {

/// sign * e_{i_1} ... e_{i_k} with i_1 < ... < i_k the set bits of `support`.
struct CliffordWord {
  unsigned n = 8;
  int sign = 1;
  std::uint32_t support = 0;

  static CliffordWord one(unsigned n);
  static CliffordWord generator(unsigned n, unsigned i);
  static CliffordWord from_indices(unsigned n, const std::vector<unsigned>& indices, int sign = 1);
  /// e_0 e_1 ... e_{n-1}
  static CliffordWord omega(unsigned n);

  unsigned weight() const;
  bool even() const { return weight() % 2 == 0; }
  /// Index in 0 .. 2^{n+1}-1: support plus 2^n for a negative sign.
  std::uint32_t index() const;
  std::string to_string() const;
  bool operator==(const CliffordWord&) const = default;
};

/// Product under e_i^2 = -1, e_i e_j = -e_j e_i.
CliffordWord word_mul(const CliffordWord& a, const CliffordWord& b);
CliffordWord word_inverse(const CliffordWord& a);
/// All 2^{n+1} words, ordered by index().
std::vector<CliffordWord> clifford_words(unsigned n);
std::vector<CliffordWord> even_clifford_words(unsigned n);

/// Signed permutation matrix: row r has entry sign[r] in column perm[r].
struct SignedMatrix {
  std::vector<unsigned> perm;
  std::vector<int> sign;

  static SignedMatrix identity(std::size_t d);
  std::size_t dim() const { return perm.size(); }
  std::vector<std::vector<int>> dense() const;
  long trace() const;
  bool is_diagonal() const;
  SignedMatrix transpose() const;
  SignedMatrix operator-() const;
  friend SignedMatrix operator*(const SignedMatrix& a, const SignedMatrix& b);
  bool operator==(const SignedMatrix&) const = default;
  std::string to_string() const;
};

SignedMatrix kron(const SignedMatrix& a, const SignedMatrix& b);

/// Real Pauli matrices sigma_0, sigma_1, sigma_1 sigma_3 and sigma_3.
enum class Pauli { s0, s1, s1s3, s3 };
SignedMatrix pauli(Pauli k);
SignedMatrix pauli_tensor(const std::vector<Pauli>& factors);

struct PauliHammingReport {
  std::vector<SignedMatrix> group;  // the 16 matrices +-sigma_3^a (x) sigma_3^b (x) sigma_3^c
  std::vector<Word> diagonals;      // sign patterns, bit 1 for -1
  bool matches_hamming8 = false;
};
PauliHammingReport pauli_hamming();

/// E_1 .. E_7 (index 0 holds E_1).
const std::vector<SignedMatrix>& e_matrices();
/// E_i^2 = -I and E_i E_j = -E_j E_i for i != j.
bool e_matrices_satisfy_clifford_relations();

/// Delta^{+-} on even words of F_8, from Delta^{+-}(e_0 e_i) = +-E_i.
/// Throws std::invalid_argument for odd words or n != 8.
SignedMatrix spinor_rep(int sign, const CliffordWord& w);

/// Lifts of the B generators: the even word w in e_0 e_i * H~ whose Delta^+
/// image is the unsigned permutation r -> r xor i.
CliffordWord b_lift(unsigned i);

/// The subgroup H~ = <+-1> x H of F_8^ev, H the Hamming-8 code.
bool in_h_tilde(const CliffordWord& w);
/// chi^{+-} on H~ for the splitting sending the generators
/// 11111111, 11110000, 11001100, 10101010 to positive words.
int chi(int sign, const CliffordWord& h);

struct InducedCharacterReport {
  std::size_t elements = 0;
  std::size_t mismatches_plus = 0;
  std::size_t mismatches_minus = 0;
  long dim_plus = 0;
  long dim_minus = 0;
  long value_at_minus_one = 0;
  /// Elements where the characters of Delta^+ and Delta^- differ.
  std::size_t differing = 0;
  bool pass = false;
};
InducedCharacterReport induced_character_check();

/// Delta = ind_{F_8^ev}^{F_8} Delta^+ with coset representatives {1, e_0}.
SignedMatrix bott_rep(const CliffordWord& w);

struct BottReport {
  std::size_t rank = 0;           // of the 256 flattened images of positive words
  bool homomorphism = false;      // on all of F_8
  bool minus_one_faithful = false;
  bool omega_is_s3 = false;       // omega -> sigma_3 (x) I
  bool e1_is_s1 = false;          // e_1 -> sigma_1 (x) I, as printed
  SignedMatrix e1_image;
  bool pauli_bijection = false;   // positive words <-> 4-fold Pauli tensors up to sign
  bool restriction = false;       // res Delta = Delta^+ + Delta^- on F_8^ev
  bool pass = false;
};
BottReport bott_check();

struct TrialityReport {
  std::vector<CliffordWord> ker_plus;
  std::vector<CliffordWord> ker_minus;
  std::vector<CliffordWord> ker_pi;
  bool pass = false;
};
/// pi(w) is the diagonal sign matrix of x -> w x w^{-1} on the generators.
SignedMatrix vector_rep(const CliffordWord& w);
TrialityReport triality_kernels();

struct CliffordGroupReport {
  std::size_t order = 0;       // |F_8|
  std::size_t even_order = 0;  // |F_8^ev|
  std::vector<CliffordWord> centre_even;
  bool associative = false;    // on sampled triples
  bool h_tilde_abelian = false;
  bool h_tilde_elementary = false;
  bool h_tilde_maximal_abelian = false;
  bool semidirect_factorization = false;
  bool b_action = false;
  bool coset_representatives = false;
  bool commutator_law = false;
  bool homomorphisms = false;  // Delta^{+-} on all even pairs
  bool pass = false;
};
CliffordGroupReport clifford_group_check();

}  // namespace theta_forge
