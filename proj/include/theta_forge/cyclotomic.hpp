#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace theta_forge {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Element of Z[zeta_p] in the power basis zeta^0 .. zeta^{p-2}.
///
/// p == 0 marks a rational integer not yet attached to a cyclotomic field
/// (one coefficient). Mixing it with an element of Z[zeta_p] promotes it.
class CycInt {
 public:
  CycInt() : coeffs_(1) {}
  CycInt(unsigned p, std::vector<BigInt> coeffs);

  static CycInt integer(BigInt value, unsigned p = 0);
  /// zeta^k for any integer k, reduced to the power basis.
  static CycInt zeta_power(unsigned p, long k);
  /// Reduces an arbitrary polynomial in zeta (any length) to canonical form.
  static CycInt from_polynomial(unsigned p, std::vector<BigInt> poly);

  unsigned prime() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True when the element lies in Z (only the zeta^0 coefficient is nonzero).
  bool is_integer() const;
  /// Same element viewed in Z[zeta_p]; throws for a conflicting prime.
  CycInt promoted(unsigned p) const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend bool operator<(const CycInt& a, const CycInt& b);

  /// Common content of the coefficients (0 for the zero element).
  BigInt content() const;
  /// Divides every coefficient exactly; throws if not divisible.
  CycInt divided_exactly(const BigInt& d) const;

  std::string to_string() const;

 private:
  unsigned p_ = 0;
  std::vector<BigInt> coeffs_;
};

enum class CycOp { add, sub, mul };
CycInt cyc_arith(const CycInt& x, const CycInt& y, CycOp op);

/// Galois automorphism zeta -> zeta^r (r coprime to p).
CycInt galois(const CycInt& x, unsigned r);
/// zeta -> zeta^{-1}.
CycInt conj(const CycInt& x);
/// Absolute trace Q(zeta)/Q.
BigInt trace(const CycInt& x);
/// Reduction modulo P = (1 - zeta): sum of coefficients mod p.
unsigned rho(const CycInt& x);
/// <x, y> = Tr(x * conj(y)) / p.
Rational pairing(const CycInt& x, const CycInt& y);
/// Norm N(x) = product of all Galois conjugates.
BigInt field_norm(const CycInt& x);

/// sigma_r(x) = sum a_k exp(2 pi i k r / p), 1 <= r <= p-1.
std::complex<double> embed(const CycInt& x, unsigned r);
/// sigma_l(x * conj(x)) for 1 <= l <= (p-1)/2; real up to rounding.
std::complex<double> real_embed_pair(const CycInt& x, unsigned l);

/// Element of O[1/p] (more generally Q(zeta)) as numerator / positive denominator.
class CycRat {
 public:
  CycRat() : den_(1) {}
  CycRat(CycInt num, BigInt den = 1);
  static CycRat integer(const BigInt& v) { return CycRat(CycInt::integer(v)); }

  const CycInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  unsigned prime() const { return num_.prime(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value is a rational integer.
  bool is_integer() const { return den_ == 1 && num_.is_integer(); }
  /// True when the value lies in Z[zeta] (denominator 1).
  bool is_integral() const { return den_ == 1; }
  CycRat promoted(unsigned p) const { return CycRat(num_.promoted(p), den_); }

  CycRat& operator+=(const CycRat& o);
  CycRat& operator-=(const CycRat& o);
  CycRat& operator*=(const CycRat& o);
  CycRat operator-() const { return CycRat(-num_, den_); }
  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
  friend bool operator==(const CycRat& a, const CycRat& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Multiplicative inverse in Q(zeta); throws std::domain_error for zero.
  CycRat inverse() const;
  std::complex<double> embed(unsigned r = 1) const;
  std::string to_string() const;

 private:
  void normalize();

  CycInt num_;
  BigInt den_;
};

/// Exact "num/den" (or "num") string for a rational.
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace theta_forge
