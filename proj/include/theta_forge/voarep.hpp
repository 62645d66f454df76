#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "theta_forge/cyclotomic.hpp"
#include "theta_forge/fpcode.hpp"
#include "theta_forge/qexp.hpp"

namespace theta_forge {

/// Orbit of a word of F_p^n under {+-1}^n x| S_n, recorded by its profile
/// (l_0, ..., l_r): the number of entries equal to 0, +-1, ..., +-r.
struct OrbitClass {
  unsigned p = 3;
  std::vector<unsigned> profile;

  std::size_t length() const;
  auto operator<=>(const OrbitClass&) const = default;
};

/// Throws std::invalid_argument for p = 2.
OrbitClass orbit_of(unsigned p, const Word& w);
/// Parses a profile "l0,l1,...,lr" for the given prime.
OrbitClass parse_orbit(unsigned p, const std::string& text);
/// The word 0^{l_0} 1^{l_1} ... r^{l_r}.
Word orbit_representative(const OrbitClass& o);
/// All orbits of F_p^n found by enumerating the p^n words.
std::vector<OrbitClass> enumerate_orbits(unsigned p, std::size_t n);

/// Finite O[1/p]-combination of orbit classes of possibly different lengths.
struct RepElement {
  unsigned p = 3;
  std::map<std::vector<unsigned>, CycRat> terms;

  static RepElement unit(unsigned p);  // the class of V_0, empty profile
  static RepElement of(const OrbitClass& o, const CycRat& coefficient = CycRat::integer(1));

  void add(const std::vector<unsigned>& profile, const CycRat& c);
  bool has_integer_coefficients() const;
  bool operator==(const RepElement&) const = default;
};

RepElement operator+(const RepElement& a, const RepElement& b);
/// Bilinear extension of profile addition (concatenation of words).
RepElement rep_mul(const RepElement& a, const RepElement& b);

struct PartitionMeta {
  long central_charge = 0;    // n (p - 1)
  Rational conformal_weight;  // half the minimal norm of the coset
  Rational leading_exponent;  // h - c/24
};

/// eta^{-n(p-1)} times the theta series of P^n + lift(w), w in the orbit,
/// known up to `cutoff`.
std::pair<QSeries, PartitionMeta> partition_function(const OrbitClass& o, const Rational& cutoff);

/// sum of coefficient * coset theta series; the eta factors cancel.
QSeries z_map(const RepElement& x, const Rational& cutoff);

/// theta_0^{l_0} ... theta_r^{l_r}.
struct ThetaMonomial {
  std::vector<unsigned> exponents;
  std::size_t degree() const;
  bool operator==(const ThetaMonomial&) const = default;
};
ThetaMonomial z_tilde(const OrbitClass& o);
ThetaMonomial operator*(const ThetaMonomial& a, const ThetaMonomial& b);
/// theta_0^{l_0} ... theta_r^{l_r} as a q-expansion.
QSeries monomial_series(unsigned p, const ThetaMonomial& m, const Rational& cutoff);

/// sum over w in C of the class of V_{P^n + w}.
RepElement module_of_code(const Code& c);

struct MainTheoremReport {
  unsigned p = 3;
  std::size_t n = 0;
  std::size_t orbit_count = 0;
  std::size_t monomial_count = 0;  // C(n + r, r)
  bool z_tilde_injective = false;
  /// Rank over Q of the z_map images equals the orbit count; nullopt when the
  /// lattice rank n(p-1) exceeds the independence limit.
  std::optional<bool> images_independent;
  Rational independence_cutoff;
  /// Bijectivity onto the theta monomials is only claimed for p = 3, 5.
  bool isomorphism_claimed = false;
  bool pass = false;
};

MainTheoremReport main_theorem_check(unsigned p, std::size_t n, std::size_t independence_rank_limit = 16);

/// For every orbit of F_p^n, every word in it has the same coset theta series
/// up to `cutoff`.
bool orbit_invariance_check(unsigned p, std::size_t n, const Rational& cutoff);

}  // namespace theta_forge
