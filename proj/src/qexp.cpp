#include "theta_forge/qexp.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace theta_forge {

namespace {

long floor_times(const Rational& q, long n) {
  // floor(q * n)
  Rational scaled = q * n;
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return f.get_si();
}

Rational exponent(long k, long den) {
  Rational e(k, den);
  e.canonicalize();
  return e;
}

unsigned merge_prime(unsigned a, unsigned b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("q-series: coefficient fields differ");
}

}  // namespace

QSeries::QSeries(long denominator, Rational cutoff, unsigned prime)
    : den_(denominator), cutoff_(std::move(cutoff)), p_(prime) {
  if (den_ <= 0) throw std::invalid_argument("q-series: exponent denominator must be positive");
  cutoff_.canonicalize();
}

QSeries QSeries::constant(const CycRat& c, const Rational& cutoff) {
  return monomial(0, 1, c, cutoff);
}

QSeries QSeries::monomial(long k, long denominator, const CycRat& c, const Rational& cutoff) {
  QSeries s(denominator, cutoff, c.prime());
  if (exponent(k, denominator) <= s.cutoff_ && !c.is_zero()) s.terms_.emplace(k, c);
  return s;
}

CycRat QSeries::coefficient(const Rational& e) const {
  if (e > cutoff_) throw std::out_of_range("q-series: coefficient beyond the known cutoff");
  Rational scaled = e * den_;
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw std::invalid_argument("q-series: exponent is not a multiple of 1/N");
  auto it = terms_.find(scaled.get_num().get_si());
  if (it == terms_.end()) return CycRat{};
  return it->second;
}

Rational QSeries::valuation() const {
  if (terms_.empty()) return cutoff_;
  return exponent(terms_.begin()->first, den_);
}

void QSeries::set_term(long k, const CycRat& c) {
  if (exponent(k, den_) > cutoff_) throw std::out_of_range("q-series: term beyond the cutoff");
  p_ = merge_prime(p_, c.prime());
  if (c.is_zero()) terms_.erase(k);
  else terms_[k] = c;
}

void QSeries::add_term(long k, const CycRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    set_term(k, c);
    return;
  }
  p_ = merge_prime(p_, c.prime());
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QSeries QSeries::with_denominator(long new_den) const {
  if (new_den % den_ != 0) throw std::invalid_argument("q-series: new denominator must be a multiple");
  if (new_den == den_) return *this;
  QSeries out(new_den, cutoff_, p_);
  const long f = new_den / den_;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k * f, c);
  return out;
}

QSeries QSeries::truncated(const Rational& cutoff) const {
  if (cutoff > cutoff_) throw std::out_of_range("q-series: cannot extend the cutoff");
  QSeries out(den_, cutoff, p_);
  for (const auto& [k, c] : terms_)
    if (exponent(k, den_) <= out.cutoff_) out.terms_.emplace(k, c);
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const long den = std::lcm(a.den_, b.den_);
  QSeries out = a.with_denominator(den).truncated(std::min(a.cutoff_, b.cutoff_));
  const QSeries bb = b.with_denominator(den);
  for (const auto& [k, c] : bb.terms_)
    if (exponent(k, den) <= out.cutoff_) out.add_term(k, c);
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const long den = std::lcm(a.den_, b.den_);
  const QSeries aa = a.with_denominator(den);
  const QSeries bb = b.with_denominator(den);
  const Rational cutoff = std::min(a.cutoff_ + b.valuation(), b.cutoff_ + a.valuation());
  QSeries out(den, cutoff, merge_prime(a.p_, b.p_));
  const long kmax = floor_times(out.cutoff_, den);
  for (const auto& [ka, ca] : aa.terms_) {
    for (const auto& [kb, cb] : bb.terms_) {
      if (ka + kb > kmax) break;
      out.add_term(ka + kb, ca * cb);
    }
  }
  return out;
}

QSeries operator*(const CycRat& c, const QSeries& a) {
  QSeries out(a.den_, a.cutoff_, merge_prime(a.p_, c.prime()));
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.den_ == b.den_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
}

bool same_up_to(const QSeries& a, const QSeries& b, const Rational& cutoff) {
  if (a.cutoff() < cutoff || b.cutoff() < cutoff)
    throw std::out_of_range("q-series comparison beyond a known cutoff");
  const QSeries diff = (a - b).truncated(cutoff);
  return diff.is_zero();
}

bool QSeries::has_integer_coefficients() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

std::complex<double> QSeries::evaluate(std::complex<double> z, unsigned embedding) const {
  std::complex<double> total = 0;
  for (const auto& [k, c] : terms_) {
    const std::complex<double> phase = std::exp(std::complex<double>(0, 2 * std::numbers::pi) * z *
                                                (static_cast<double>(k) / static_cast<double>(den_)));
    total += c.embed(embedding) * phase;
  }
  return total;
}

std::string QSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const Rational e = exponent(k, den_);
    const std::string coef = c.to_string();
    if (e == 0) {
      out << coef;
      continue;
    }
    if (coef != "1") out << (c.num().is_integer() && c.is_integral() ? coef : "(" + coef + ")") << '*';
    out << "q";
    if (e != 1) out << "^(" << rational_string(e) << ')';
  }
  if (first) out << '0';
  out << " + O(q^(>" << rational_string(cutoff_) << "))";
  return out.str();
}

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op) {
  return op == SeriesOp::add ? a + b : a * b;
}

QSeries series_inv(const QSeries& a) {
  if (a.is_zero()) throw std::domain_error("q-series: cannot invert a series with no known nonzero term");
  const long den = a.denominator();
  const long v = a.terms().begin()->first;  // valuation * N
  const CycRat lead_inv = a.terms().begin()->second.inverse();
  const Rational valuation = a.valuation();
  // a = q^v u with u known up to cutoff - v; 1/a = q^{-v} / u known up to cutoff - 2v.
  const Rational out_cutoff = a.cutoff() - 2 * valuation;
  const long kmax = floor_times(a.cutoff() - valuation, den);

  std::vector<std::pair<long, CycRat>> u;  // shifted terms of u without the leading one
  for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it) u.emplace_back(it->first - v, it->second);

  std::vector<CycRat> inv(static_cast<std::size_t>(std::max<long>(kmax, 0) + 1));
  inv[0] = lead_inv;
  for (long e = 1; e <= kmax; ++e) {
    CycRat acc;
    for (const auto& [i, ci] : u) {
      if (i > e) break;
      const auto& prev = inv[static_cast<std::size_t>(e - i)];
      if (!prev.is_zero()) acc += ci * prev;
    }
    if (!acc.is_zero()) inv[static_cast<std::size_t>(e)] = -(lead_inv * acc);
  }
  QSeries out(den, out_cutoff, a.prime());
  for (long e = 0; e <= kmax; ++e) {
    const auto& c = inv[static_cast<std::size_t>(e)];
    if (!c.is_zero() && exponent(e - v, den) <= out.cutoff()) out.set_term(e - v, c);
  }
  return out;
}

QSeries series_pow(const QSeries& a, long e) {
  if (e < 0) return series_pow(series_inv(a), -e);
  QSeries result = QSeries::constant(CycRat::integer(1), a.cutoff());
  if (e == 0) return result;
  QSeries base = a;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      result = have ? result * base : base;
      have = true;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QSeries eta(const Rational& cutoff) {
  const Rational first(1, 24);
  if (cutoff < first) throw std::invalid_argument("eta: cutoff must be at least 1/24");
  const long degree = floor_times(cutoff - first, 1);
  std::vector<BigInt> poly(static_cast<std::size_t>(degree) + 1);
  poly[0] = 1;
  for (long n = 1; n <= degree; ++n)
    for (long d = degree; d >= n; --d) poly[static_cast<std::size_t>(d)] -= poly[static_cast<std::size_t>(d - n)];
  QSeries out(24, cutoff);
  for (long d = 0; d <= degree; ++d)
    if (poly[static_cast<std::size_t>(d)] != 0) out.set_term(1 + 24 * d, CycRat::integer(poly[static_cast<std::size_t>(d)]));
  return out;
}

QSeries compose_enumerator(const WeightEnumerator& w, const std::vector<QSeries>& thetas) {
  if (thetas.size() != w.r + 1)
    throw std::invalid_argument("compose_enumerator: expected " + std::to_string(w.r + 1) + " series, got " +
                                std::to_string(thetas.size()));
  Rational cutoff = thetas.front().cutoff();
  for (const auto& t : thetas) cutoff = std::min(cutoff, t.cutoff());
  std::vector<std::vector<QSeries>> powers(thetas.size());
  auto power = [&](std::size_t j, unsigned e) -> const QSeries& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(QSeries::constant(CycRat::integer(1), cutoff));
    while (cache.size() <= e) cache.push_back(cache.back() * thetas[j]);
    return cache[e];
  };
  long den = 1;
  for (const auto& t : thetas) den = std::lcm(den, t.denominator());
  QSeries total(den, cutoff);
  for (const auto& [profile, count] : w.coefficients) {
    QSeries term = QSeries::constant(CycRat::integer(BigInt(static_cast<unsigned long>(count))), cutoff);
    for (std::size_t j = 0; j < profile.size(); ++j)
      if (profile[j]) term = term * power(j, profile[j]);
    total = total + term.truncated(std::min(term.cutoff(), cutoff));
  }
  return total.truncated(std::min(total.cutoff(), cutoff));
}

QSeries t_shift(const QSeries& a) {
  const long n = a.denominator();
  if (n == 1) return a;
  if (n < 3 || !is_prime(static_cast<unsigned>(n)))
    throw std::invalid_argument("t_shift: exponent denominator must be 1 or an odd prime");
  const auto p = static_cast<unsigned>(n);
  if (a.prime() != 0 && a.prime() != p)
    throw std::invalid_argument("t_shift: coefficient field does not contain the required roots of unity");
  QSeries out(n, a.cutoff(), p);
  for (const auto& [k, c] : a.terms()) {
    const CycRat rotated = CycRat(CycInt::zeta_power(p, k)) * c.promoted(p);
    out.set_term(k, rotated);
  }
  return out;
}

}  // namespace theta_forge
