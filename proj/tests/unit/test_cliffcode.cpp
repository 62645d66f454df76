#include <doctest.h>

#include <stdexcept>

#include "theta_forge/cliffcode.hpp"

using namespace theta_forge;

namespace {

CliffordWord w8(std::vector<unsigned> idx, int sign = 1) { return CliffordWord::from_indices(8, idx, sign); }

// Permutation r -> r xor i without signs, i.e. the B action on itself.
SignedMatrix xor_perm(unsigned i) {
  SignedMatrix m = SignedMatrix::identity(8);
  for (unsigned r = 0; r < 8; ++r) m.perm[r] = r ^ i;
  return m;
}

}  // namespace

TEST_SUITE("cliffcode") {
  TEST_CASE("word multiplication") {
    const CliffordWord a = w8({0, 1});
    CHECK(word_mul(a, a) == CliffordWord{8, -1, 0});
    const CliffordWord omega = CliffordWord::omega(8);
    CHECK(word_mul(omega, omega) == CliffordWord::one(8));
    CliffordWord repeated = CliffordWord::one(8);
    for (unsigned i = 0; i < 8; ++i) repeated = word_mul(repeated, CliffordWord::generator(8, i));
    CHECK(repeated == omega);
    CHECK(word_mul(a, CliffordWord::one(8)) == a);
    // e_1 e_0 = -e_0 e_1
    CHECK(w8({1, 0}) == w8({0, 1}, -1));
    CHECK(word_mul(CliffordWord::generator(8, 3), CliffordWord::generator(8, 3)) == CliffordWord{8, -1, 0});
    for (const auto& g : clifford_words(4)) CHECK(word_mul(g, word_inverse(g)) == CliffordWord::one(4));
    CHECK(w8({2, 5}, -1).to_string() == "-e2*e5");
  }

  TEST_CASE("group facts") {
    const auto r = clifford_group_check();
    CHECK(r.order == 512);
    CHECK(r.even_order == 256);
    CHECK(r.centre_even.size() == 4);
    CHECK(r.associative);
    CHECK(r.h_tilde_abelian);
    CHECK(r.h_tilde_elementary);
    CHECK(r.h_tilde_maximal_abelian);
    CHECK(r.semidirect_factorization);
    CHECK(r.b_action);
    CHECK(r.coset_representatives);
    CHECK(r.commutator_law);
    CHECK(r.homomorphisms);
    CHECK(r.pass);
  }

  TEST_CASE("signed matrices and Pauli tensors") {
    const SignedMatrix s1 = pauli(Pauli::s1), s3 = pauli(Pauli::s3), e = pauli(Pauli::s1s3);
    CHECK(s1 * s1 == SignedMatrix::identity(2));
    CHECK(s3 * s3 == SignedMatrix::identity(2));
    CHECK(e == s1 * s3);
    CHECK(e * e == -SignedMatrix::identity(2));
    CHECK(s3.dense() == std::vector<std::vector<int>>{{1, 0}, {0, -1}});
    const SignedMatrix k = kron(s1, s3);
    CHECK(k.dense() == std::vector<std::vector<int>>{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
    CHECK(k.transpose() * k == SignedMatrix::identity(4));
    CHECK(pauli_tensor({Pauli::s1, Pauli::s0, Pauli::s0}) == xor_perm(4));
  }

  TEST_CASE("Pauli realization of the Hamming code") {
    const auto r = pauli_hamming();
    CHECK(r.group.size() == 16);
    CHECK(r.group.front() == SignedMatrix::identity(8));
    CHECK(r.diagonals.front() == Word(8, 0));
    const SignedMatrix m = pauli_tensor({Pauli::s3, Pauli::s3, Pauli::s3});
    CHECK(m.sign == std::vector<int>{1, -1, -1, 1, -1, 1, 1, -1});
    CHECK(r.matches_hamming8);
    for (const auto& g : r.group) CHECK(g.is_diagonal());
  }

  TEST_CASE("E matrices") {
    const auto& e = e_matrices();
    REQUIRE(e.size() == 7);
    CHECK(e[0] * e[0] == -SignedMatrix::identity(8));
    CHECK(e[0] * e[1] == -(e[1] * e[0]));
    CHECK(e_matrices_satisfy_clifford_relations());
    for (const auto& m : e) CHECK(m.transpose() * m == SignedMatrix::identity(8));
    CHECK(e[0].dense()[0][1] == -1);
    CHECK(e[0].dense()[1][0] == 1);
    CHECK(e[6].dense()[7][0] == 1);
  }

  TEST_CASE("spinor representations") {
    for (unsigned i = 1; i <= 7; ++i) {
      CHECK(spinor_rep(1, w8({0, i})) == e_matrices()[i - 1]);
      CHECK(spinor_rep(-1, w8({0, i})) == -e_matrices()[i - 1]);
    }
    CHECK(spinor_rep(1, CliffordWord::one(8)) == SignedMatrix::identity(8));
    CHECK(spinor_rep(-1, CliffordWord::one(8)) == SignedMatrix::identity(8));
    CHECK(spinor_rep(1, CliffordWord{8, -1, 0}) == -SignedMatrix::identity(8));
    CHECK_THROWS_AS(spinor_rep(1, w8({0})), std::invalid_argument);
    CHECK_THROWS_AS(spinor_rep(1, CliffordWord::one(4)), std::invalid_argument);

    // B acts by the doubly even permutations (0 i)(..)(..)(..).
    for (unsigned i = 1; i <= 7; ++i) {
      const CliffordWord b = b_lift(i);
      CHECK(b.even());
      CHECK(in_h_tilde(word_mul(word_inverse(w8({0, i})), b)));
      CHECK(spinor_rep(1, b) == xor_perm(i));
    }
    // H~ lands on the diagonal Pauli group, with kernel <omega>.
    const auto ph = pauli_hamming();
    for (const auto& g : even_clifford_words(8)) {
      if (!in_h_tilde(g)) continue;
      const SignedMatrix m = spinor_rep(1, g);
      CHECK(std::find(ph.group.begin(), ph.group.end(), m) != ph.group.end());
      const int h0 = (g.support & 1u) ? -1 : 1;
      CHECK(spinor_rep(-1, g) == (h0 < 0 ? -m : m));
    }
  }

  TEST_CASE("induced characters") {
    const auto r = induced_character_check();
    CHECK(r.elements == 256);
    CHECK(r.dim_plus == 8);
    CHECK(r.dim_minus == 8);
    CHECK(r.value_at_minus_one == -8);
    CHECK(r.mismatches_plus == 0);
    CHECK(r.mismatches_minus == 0);
    CHECK(r.differing > 0);
    CHECK(r.pass);
    CHECK(chi(1, CliffordWord::omega(8)) == 1);
    CHECK(chi(1, CliffordWord{8, -1, 0}) == -1);
    CHECK_THROWS_AS(chi(1, w8({0, 1})), std::invalid_argument);
  }

  TEST_CASE("Bott periodicity") {
    const auto r = bott_check();
    CHECK(r.rank == 256);
    CHECK(r.homomorphism);
    CHECK(r.minus_one_faithful);
    CHECK(r.omega_is_s3);
    CHECK(r.pauli_bijection);
    CHECK(r.restriction);
    CHECK(r.pass);
    // e_1^2 = -1 forces a square root of -I, so sigma_1 (x) I cannot be the image.
    CHECK_FALSE(r.e1_is_s1);
    CHECK(r.e1_image * r.e1_image == -SignedMatrix::identity(16));
    CHECK(r.e1_image == kron(pauli(Pauli::s1), -e_matrices()[0]));
  }

  TEST_CASE("triality kernels") {
    const auto r = triality_kernels();
    CHECK(r.ker_plus.size() == 2);
    CHECK(r.ker_minus.size() == 2);
    CHECK(r.ker_pi.size() == 2);
    CHECK(r.pass);
    CHECK(spinor_rep(1, CliffordWord::omega(8)) == SignedMatrix::identity(8));
    CHECK(spinor_rep(-1, CliffordWord{8, -1, CliffordWord::omega(8).support}) == SignedMatrix::identity(8));
    CHECK(spinor_rep(1, CliffordWord{8, -1, CliffordWord::omega(8).support}) == -SignedMatrix::identity(8));
    CHECK(vector_rep(CliffordWord::omega(8)) == -SignedMatrix::identity(8));
  }
}
