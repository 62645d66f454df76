#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "theta_forge/codelattice.hpp"
#include "theta_forge/fpcode.hpp"

namespace theta_forge {

/// A point of H^r, one coordinate per real embedding sigma_1..sigma_r.
struct HilbertPoint {
  std::vector<std::complex<double>> z;

  double min_imag() const;
  /// Throws std::invalid_argument unless every coordinate has Im > 0.
  void validate(std::size_t r) const;
};

/// Enumeration cap on the norm, from THETA_FORGE_MAX_NORM (default 40).
long max_norm_cap();

/// sum over v in L + lift(shift) of exp(2 pi i sum_l z_l sigma_l(v vbar)/p),
/// summed shell by shell until the next shell's worst-case contribution is
/// below tail_tol / 10. Throws std::runtime_error if the norm cap is hit first.
std::complex<double> hilbert_coset_sum(const CodeLattice& L, const std::optional<Word>& shift,
                                       const HilbertPoint& z, double tail_tol);

/// theta_j = theta of P + j.
std::complex<double> theta_j_eval(unsigned p, unsigned j, const HilbertPoint& z, double tail_tol);

/// theta_C by enumerating each coset rho^{-1}(w), w in C, as a rank n(p-1)
/// lattice coset.
std::complex<double> theta_code_eval(const Code& c, const HilbertPoint& z, double tail_tol);

/// W(x_0, ..., x_r) at complex arguments.
std::complex<double> evaluate_enumerator(const WeightEnumerator& w, const std::vector<std::complex<double>>& x);

/// Galois permutations of the coordinates of H^r: for each a in (Z/p)^x / {+-1}
/// the map l -> +-a*l folded into 1..r.
std::vector<std::vector<std::size_t>> galois_permutations(unsigned p);

struct AlpbachPoint {
  HilbertPoint z;
  std::complex<double> lhs;  // theta_C(z)
  std::complex<double> rhs;  // W_C(theta_0(z), ..., theta_r(z))
  double residual = 0;
  double galois_residual = 0;  // max change of the rhs under coordinate permutations
  bool pass = false;
};

struct AlpbachReport {
  std::vector<AlpbachPoint> points;
  bool pass = true;
};

AlpbachReport verify_alpbach(const Code& c, const std::vector<HilbertPoint>& points, double tol);

/// Residuals of the S and T formulas for theta_0, theta_1 at p = 3.
struct Sl2Report {
  std::complex<double> z;
  double s0_residual = 0;
  double s1_residual = 0;
  double t0_residual = 0;
  double t1_residual = 0;
  double ss_residual = 0;  // applying the S formula twice returns the original
  bool t_exact = false;    // t_shift on the exact q-expansions
  bool pass = false;
};

Sl2Report verify_sl2f3_action(std::complex<double> z, double tol);

}  // namespace theta_forge
