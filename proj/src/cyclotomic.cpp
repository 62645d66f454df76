#include "theta_forge/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "theta_forge/fpcode.hpp"

namespace theta_forge {

namespace {

unsigned common_prime(unsigned a, unsigned b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("cyclotomic: mismatched primes " + std::to_string(a) + " and " + std::to_string(b));
}

void require_field(const CycInt& x, const char* what) {
  if (x.prime() == 0) throw std::invalid_argument(std::string(what) + " requires an element of Z[zeta_p]");
}

}  // namespace

CycInt::CycInt(unsigned p, std::vector<BigInt> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p_ == 0) {
    if (coeffs_.size() != 1) throw std::invalid_argument("cyclotomic: untyped integer needs one coefficient");
    return;
  }
  if (p_ < 3 || !is_prime(p_)) throw std::invalid_argument("cyclotomic: p must be an odd prime");
  if (coeffs_.size() != p_ - 1)
    throw std::invalid_argument("cyclotomic: expected " + std::to_string(p_ - 1) + " coefficients");
}

CycInt CycInt::integer(BigInt value, unsigned p) {
  if (p == 0) return CycInt(0, {std::move(value)});
  std::vector<BigInt> c(p - 1);
  c[0] = std::move(value);
  return CycInt(p, std::move(c));
}

CycInt CycInt::from_polynomial(unsigned p, std::vector<BigInt> poly) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("cyclotomic: p must be an odd prime");
  std::vector<BigInt> folded(p);
  for (std::size_t k = 0; k < poly.size(); ++k) folded[k % p] += poly[k];
  // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
  const BigInt top = folded[p - 1];
  folded.pop_back();
  if (top != 0)
    for (auto& c : folded) c -= top;
  return CycInt(p, std::move(folded));
}

CycInt CycInt::zeta_power(unsigned p, long k) {
  const long e = ((k % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
  std::vector<BigInt> poly(static_cast<std::size_t>(e) + 1);
  poly[static_cast<std::size_t>(e)] = 1;
  return from_polynomial(p, std::move(poly));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

CycInt CycInt::promoted(unsigned p) const {
  if (p == p_ || p == 0) return *this;
  if (p_ != 0) common_prime(p_, p);
  return integer(coeffs_[0], p);
}

CycInt& CycInt::operator+=(const CycInt& o) {
  const unsigned p = common_prime(p_, o.p_);
  if (p != p_) *this = promoted(p);
  const CycInt& rhs = o.p_ == p ? o : o.promoted(p);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(const CycInt& o) {
  const unsigned p = common_prime(p_, o.p_);
  if (p == 0) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const CycInt a = promoted(p);
  const CycInt b = o.promoted(p);
  std::vector<BigInt> poly(2 * (p - 1) - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  *this = from_polynomial(p, std::move(poly));
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.p_ == b.p_) return a.coeffs_ == b.coeffs_;
  if (a.p_ != 0 && b.p_ != 0) return false;
  const unsigned p = a.p_ ? a.p_ : b.p_;
  return a.promoted(p).coeffs_ == b.promoted(p).coeffs_;
}

bool operator<(const CycInt& a, const CycInt& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return a.coeffs_ < b.coeffs_;
}

BigInt CycInt::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

CycInt CycInt::divided_exactly(const BigInt& d) const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("cyclotomic: inexact division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << '-';
    const BigInt mag = abs(c);
    if (k == 0) out << mag;
    else {
      if (mag != 1) out << mag << '*';
      out << "z";
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

CycInt cyc_arith(const CycInt& x, const CycInt& y, CycOp op) {
  switch (op) {
    case CycOp::add: return x + y;
    case CycOp::sub: return x - y;
    case CycOp::mul: return x * y;
  }
  throw std::invalid_argument("cyc_arith: unknown operation");
}

CycInt galois(const CycInt& x, unsigned r) {
  require_field(x, "galois");
  const unsigned p = x.prime();
  if (r % p == 0) throw std::invalid_argument("galois: exponent must be coprime to p");
  std::vector<BigInt> poly(p);
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) poly[(k * r) % p] += x.coeffs()[k];
  return CycInt::from_polynomial(p, std::move(poly));
}

CycInt conj(const CycInt& x) {
  if (x.prime() == 0) return x;
  return galois(x, x.prime() - 1);
}

BigInt trace(const CycInt& x) {
  require_field(x, "trace");
  const auto& a = x.coeffs();
  BigInt t = a[0] * (x.prime() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) t -= a[k];
  return t;
}

unsigned rho(const CycInt& x) {
  require_field(x, "rho");
  BigInt s = 0;
  for (const auto& c : x.coeffs()) s += c;
  BigInt m;
  mpz_fdiv_r_ui(m.get_mpz_t(), s.get_mpz_t(), x.prime());
  return static_cast<unsigned>(m.get_ui());
}

Rational pairing(const CycInt& x, const CycInt& y) {
  const unsigned p = common_prime(x.prime(), y.prime());
  if (p == 0) throw std::invalid_argument("pairing requires an element of Z[zeta_p]");
  Rational q(trace(x.promoted(p) * conj(y.promoted(p))), BigInt(p));
  q.canonicalize();
  return q;
}

BigInt field_norm(const CycInt& x) {
  require_field(x, "field_norm");
  CycInt prod = x;
  for (unsigned r = 2; r < x.prime(); ++r) prod *= galois(x, r);
  if (!prod.is_integer()) throw std::logic_error("field_norm: product of conjugates is not rational");
  return prod.coeffs()[0];
}

std::complex<double> embed(const CycInt& x, unsigned r) {
  require_field(x, "embed");
  const unsigned p = x.prime();
  if (r < 1 || r >= p) throw std::invalid_argument("embed: index out of range");
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * r) % p) / p;
    s += x.coeffs()[k].get_d() * std::polar(1.0, angle);
  }
  return s;
}

std::complex<double> real_embed_pair(const CycInt& x, unsigned l) {
  require_field(x, "real_embed_pair");
  if (l < 1 || l > (x.prime() - 1) / 2) throw std::invalid_argument("real_embed_pair: index out of range");
  return embed(x * conj(x), l);
}

CycRat::CycRat(CycInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("CycRat: zero denominator");
  normalize();
}

void CycRat::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_exactly(g);
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycRat& CycRat::operator+=(const CycRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * CycInt::integer(o.den_) + o.num_ * CycInt::integer(den_);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& o) { return *this += -o; }

CycRat& CycRat::operator*=(const CycRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

CycRat CycRat::inverse() const {
  if (is_zero()) throw std::domain_error("CycRat: inverse of zero");
  if (num_.prime() == 0) return CycRat(CycInt::integer(den_), num_.coeffs()[0]);
  // x^{-1} = (product of the other conjugates) / N(x)
  CycInt others = CycInt::integer(1, num_.prime());
  for (unsigned r = 2; r < num_.prime(); ++r) others *= galois(num_, r);
  const BigInt norm = field_norm(num_);
  return CycRat(others * CycInt::integer(den_), norm);
}

std::complex<double> CycRat::embed(unsigned r) const {
  if (num_.prime() == 0) return {num_.coeffs()[0].get_d() / den_.get_d(), 0.0};
  return theta_forge::embed(num_, r) / den_.get_d();
}

std::string CycRat::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.get_str();
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal such as 4.25
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt num(digits.empty() ? "0" : digits);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    q = Rational(num, den);
  } else {
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace theta_forge
