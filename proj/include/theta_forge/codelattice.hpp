#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "theta_forge/cyclotomic.hpp"
#include "theta_forge/fpcode.hpp"
#include "theta_forge/qexp.hpp"

namespace theta_forge {

/// Integer vector in the power-basis coordinates of O^n: block i holds the
/// p-1 coefficients of coordinate i.
using Ambient = std::vector<std::int64_t>;

struct LatticeVector {
  std::vector<CycInt> coords;
  Rational norm;
};

/// The even lattice rho^{-1}(C) in O^n for a linear self-orthogonal code C
/// over an odd prime, with an explicit basis and its exact Gram matrix.
class CodeLattice {
 public:
  unsigned prime() const { return p_; }
  std::size_t length() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const Code& code() const { return code_; }
  const std::vector<Ambient>& basis() const { return basis_; }
  const std::vector<std::vector<BigInt>>& gram() const { return gram_; }
  std::vector<CycInt> basis_vector(std::size_t i) const;

 private:
  friend CodeLattice lattice_of_code(const Code& c);
  explicit CodeLattice(Code c) : code_(std::move(c)) {}

  unsigned p_ = 3;
  std::size_t n_ = 0;
  Code code_;
  std::vector<Ambient> basis_;
  std::vector<std::vector<BigInt>> gram_;
};

/// Throws std::invalid_argument for p = 2, non-linear or non-self-orthogonal
/// codes; throws std::logic_error if the constructed Gram matrix fails the
/// evenness or determinant validation.
CodeLattice lattice_of_code(const Code& c);
/// P^n, i.e. the lattice of the zero code of length n.
CodeLattice zero_code_lattice(unsigned p, std::size_t n);

/// The basis 1-z, z-z^2, ..., z^{p-2}-z^{p-1} of P as rows in the power basis.
std::vector<Ambient> p_basis(unsigned p);

BigInt discriminant(const CodeLattice& L);
bool is_even(const CodeLattice& L);
/// Smallest nonzero norm.
Rational minimal_norm(const CodeLattice& L);

/// <x, y> of two ambient vectors and p * <x, x> (always an even integer).
Rational ambient_pairing(unsigned p, const Ambient& a, const Ambient& b);
std::int64_t scaled_norm(unsigned p, const Ambient& a);
std::vector<CycInt> to_cyclotomic(unsigned p, const Ambient& a);
/// Integer lift of a word: digit d becomes d * zeta^0.
Ambient lift(unsigned p, const Word& w);

/// Receives each vector of the (shifted) lattice once, with p * norm.
using VectorVisitor = std::function<void(const Ambient&, std::int64_t)>;

/// Visits every v in L + lift(shift) with <v, v> <= bound. The order of
/// visits is deterministic but unspecified.
void for_each_vector(const CodeLattice& L, const std::optional<Word>& shift, const Rational& bound,
                     const VectorVisitor& visit);

/// Same set as for_each_vector, sorted by norm and then coordinates.
std::vector<LatticeVector> short_vectors(const CodeLattice& L, const std::optional<Word>& shift,
                                         const Rational& bound);

/// Number of vectors per value of p * norm.
std::map<std::int64_t, std::uint64_t> norm_counts(const CodeLattice& L, const std::optional<Word>& shift,
                                                  const Rational& bound);

/// sum q^{<v,v>/2} over L + lift(shift), N = p, exponents up to `order`.
QSeries theta_series(const CodeLattice& L, const std::optional<Word>& shift, const Rational& order);

/// Theta series of P^n + lift(w).
QSeries coset_theta(unsigned p, const Word& w, const Rational& order);
/// theta_j = theta of P + j.
QSeries theta_class(unsigned p, unsigned j, const Rational& order);
/// sum over w in C of coset_theta(w); defined for any code.
QSeries code_theta_by_cosets(const Code& c, const Rational& order);

}  // namespace theta_forge
