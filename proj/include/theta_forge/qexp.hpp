#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "theta_forge/cyclotomic.hpp"
#include "theta_forge/fpcode.hpp"

namespace theta_forge {

/// Truncated formal series sum c_k q^{k/N}.
///
/// Coefficients at exponents up to and including `cutoff` are known exactly
/// (absent keys mean zero); nothing is known beyond the cutoff. Every
/// operation propagates the cutoff pessimistically.
class QSeries {
 public:
  QSeries() = default;
  QSeries(long denominator, Rational cutoff, unsigned prime = 0);

  /// The constant series c (exponent 0) known up to `cutoff`.
  static QSeries constant(const CycRat& c, const Rational& cutoff);
  /// q^{k/N} with coefficient c.
  static QSeries monomial(long k, long denominator, const CycRat& c, const Rational& cutoff);

  long denominator() const { return den_; }
  const Rational& cutoff() const { return cutoff_; }
  /// Cyclotomic field of the coefficients, 0 if all are rational.
  unsigned prime() const { return p_; }
  const std::map<long, CycRat>& terms() const { return terms_; }

  /// Coefficient of q^{e}; throws std::out_of_range beyond the cutoff and
  /// std::invalid_argument if e is not a multiple of 1/N.
  CycRat coefficient(const Rational& e) const;
  /// Lowest exponent with a nonzero coefficient, or the cutoff if none is known.
  Rational valuation() const;
  bool is_zero() const { return terms_.empty(); }

  void set_term(long k, const CycRat& c);
  void add_term(long k, const CycRat& c);
  /// Same series with exponent denominator N' (a multiple of N).
  QSeries with_denominator(long new_den) const;
  /// Drops everything above `cutoff` (which must not exceed the current one).
  QSeries truncated(const Rational& cutoff) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Multiplication by a scalar keeps the cutoff.
  friend QSeries operator*(const CycRat& c, const QSeries& a);
  /// Same N, same cutoff, same coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b);

  /// Every coefficient is a rational integer.
  bool has_integer_coefficients() const;
  /// Numerical value at q = exp(2 pi i z), using the embedding zeta -> e^{2 pi i r/p}.
  std::complex<double> evaluate(std::complex<double> z, unsigned embedding = 1) const;
  std::string to_string() const;

 private:
  long den_ = 1;
  Rational cutoff_ = 0;
  unsigned p_ = 0;
  std::map<long, CycRat> terms_;
};

/// True when a and b agree at every exponent <= cutoff; throws
/// std::out_of_range if either series is not known that far.
bool same_up_to(const QSeries& a, const QSeries& b, const Rational& cutoff);

enum class SeriesOp { add, mul };
QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op);
/// Inverse; the lowest known coefficient must be nonzero.
QSeries series_inv(const QSeries& a);
QSeries series_pow(const QSeries& a, long e);

/// Dedekind eta q^{1/24} prod_{n>=1} (1 - q^n), N = 24.
QSeries eta(const Rational& cutoff);

/// W(theta_0, ..., theta_r), truncated at the common cutoff.
QSeries compose_enumerator(const WeightEnumerator& w, const std::vector<QSeries>& thetas);

/// z -> z + 1: multiplies the coefficient of q^{k/N} by exp(2 pi i k/N).
/// N must be 1 or an odd prime matching the coefficient field.
QSeries t_shift(const QSeries& a);

}  // namespace theta_forge
