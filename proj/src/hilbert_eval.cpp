#include "theta_forge/hilbert_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "theta_forge/qexp.hpp"

namespace theta_forge {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::size_t real_rank(unsigned p) { return (p - 1) / 2; }

}  // namespace

double HilbertPoint::min_imag() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : z) m = std::min(m, c.imag());
  return m;
}

void HilbertPoint::validate(std::size_t r) const {
  if (z.size() != r)
    throw std::invalid_argument("Hilbert point needs " + std::to_string(r) + " coordinates, got " +
                                std::to_string(z.size()));
  for (const auto& c : z)
    if (!(c.imag() > 0)) throw std::invalid_argument("Hilbert point coordinates must have positive imaginary part");
}

long max_norm_cap() {
  const char* env = std::getenv("THETA_FORGE_MAX_NORM");
  if (!env || !*env) return 40;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw std::invalid_argument("THETA_FORGE_MAX_NORM must be a positive integer");
  return v;
}

std::complex<double> hilbert_coset_sum(const CodeLattice& L, const std::optional<Word>& shift,
                                       const HilbertPoint& z, double tail_tol) {
  if (!(tail_tol > 0)) throw std::invalid_argument("tail tolerance must be positive");
  const unsigned p = L.prime();
  const std::size_t r = real_rank(p);
  z.validate(r);
  const std::size_t block = p - 1;

  // cos/sin of 2 pi k l / p for the embeddings sigma_1..sigma_r.
  std::vector<std::vector<std::complex<double>>> root(r, std::vector<std::complex<double>>(block));
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t k = 0; k < block; ++k)
      root[l][k] = std::polar(1.0, kTwoPi * static_cast<double>((k * (l + 1)) % p) / p);

  auto term = [&](const Ambient& v) {
    std::complex<double> exponent = 0;
    for (std::size_t start = 0; start < v.size(); start += block) {
      for (std::size_t l = 0; l < r; ++l) {
        std::complex<double> s = 0;
        for (std::size_t k = 0; k < block; ++k)
          if (v[start + k]) s += static_cast<double>(v[start + k]) * root[l][k];
        exponent += z.z[l] * std::norm(s);
      }
    }
    return std::exp(std::complex<double>(0, kTwoPi / p) * exponent);
  };

  // |term| <= exp(-pi * min Im * norm).
  const double m = z.min_imag();
  const long cap = max_norm_cap();
  std::complex<double> total = 0;
  std::uint64_t seen = 0;
  std::int64_t done = -1;  // p * norm already summed
  for (std::int64_t bound = 2;; bound += 2) {
    std::uint64_t shell = 0;
    for_each_vector(L, shift, Rational(static_cast<long>(bound)), [&](const Ambient& v, std::int64_t sn) {
      if (sn <= done) return;
      total += term(v);
      ++shell;
    });
    seen += shell;
    const double lower = done < 0 ? 0.0 : static_cast<double>(done) / p;
    done = bound * static_cast<std::int64_t>(p);
    const double worst = static_cast<double>(std::max<std::uint64_t>(shell, 1)) * std::exp(-std::numbers::pi * m * lower);
    if (seen > 0 && worst < tail_tol / 10) break;
    if (bound + 2 > cap)
      throw std::runtime_error("theta evaluation did not reach tolerance below norm " + std::to_string(cap) +
                               " (raise THETA_FORGE_MAX_NORM)");
  }
  return total;
}

std::complex<double> theta_j_eval(unsigned p, unsigned j, const HilbertPoint& z, double tail_tol) {
  static thread_local std::map<unsigned, CodeLattice> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, zero_code_lattice(p, 1)).first;
  return hilbert_coset_sum(it->second, Word{static_cast<std::uint8_t>(j % p)}, z, tail_tol);
}

std::complex<double> theta_code_eval(const Code& c, const HilbertPoint& z, double tail_tol) {
  if (c.prime() == 2) throw std::invalid_argument("theta_code_eval: p must be odd");
  z.validate(real_rank(c.prime()));
  if (c.size() == 0) return 0;
  const CodeLattice L = zero_code_lattice(c.prime(), c.length());
  std::complex<double> total = 0;
  for (const auto& w : c.words()) total += hilbert_coset_sum(L, w, z, tail_tol / static_cast<double>(c.size()));
  return total;
}

std::complex<double> evaluate_enumerator(const WeightEnumerator& w, const std::vector<std::complex<double>>& x) {
  if (x.size() != w.r + 1) throw std::invalid_argument("evaluate_enumerator: wrong number of arguments");
  std::complex<double> total = 0;
  for (const auto& [profile, count] : w.coefficients) {
    std::complex<double> t = static_cast<double>(count);
    for (std::size_t j = 0; j < profile.size(); ++j) t *= std::pow(x[j], static_cast<int>(profile[j]));
    total += t;
  }
  return total;
}

std::vector<std::vector<std::size_t>> galois_permutations(unsigned p) {
  const std::size_t r = real_rank(p);
  std::vector<std::vector<std::size_t>> perms;
  for (unsigned a = 1; a <= r; ++a) {
    std::vector<std::size_t> perm(r);
    for (std::size_t l = 1; l <= r; ++l) {
      const unsigned v = static_cast<unsigned>((a * l) % p);
      perm[l - 1] = std::min(v, p - v) - 1;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

AlpbachReport verify_alpbach(const Code& c, const std::vector<HilbertPoint>& points, double tol) {
  const unsigned p = c.prime();
  const std::size_t r = real_rank(p);
  const auto we = weight_enumerator(c);
  const double tail = tol / 100;
  auto thetas_at = [&](const HilbertPoint& z) {
    std::vector<std::complex<double>> t(r + 1);
    for (std::size_t j = 0; j <= r; ++j) t[j] = theta_j_eval(p, static_cast<unsigned>(j), z, tail);
    return t;
  };
  AlpbachReport report;
  for (const auto& z : points) {
    AlpbachPoint pt;
    pt.z = z;
    pt.lhs = theta_code_eval(c, z, tail);
    pt.rhs = evaluate_enumerator(we, thetas_at(z));
    pt.residual = std::abs(pt.lhs - pt.rhs);
    for (const auto& perm : galois_permutations(p)) {
      HilbertPoint moved;
      moved.z.resize(r);
      for (std::size_t l = 0; l < r; ++l) moved.z[perm[l]] = z.z[l];
      pt.galois_residual = std::max(pt.galois_residual, std::abs(evaluate_enumerator(we, thetas_at(moved)) - pt.rhs));
    }
    pt.pass = pt.residual < tol && pt.galois_residual < tol;
    report.pass = report.pass && pt.pass;
    report.points.push_back(pt);
  }
  return report;
}

Sl2Report verify_sl2f3_action(std::complex<double> z, double tol) {
  if (!(z.imag() > 0)) throw std::invalid_argument("verify_sl2f3_action: Im(z) must be positive");
  Sl2Report rep;
  rep.z = z;
  const double tail = tol / 100;
  auto theta = [&](unsigned j, std::complex<double> w) { return theta_j_eval(3, j, HilbertPoint{{w}}, tail); };
  const std::complex<double> zeta = std::polar(1.0, kTwoPi / 3);
  // (-1 - 2 zeta) / 3
  const std::complex<double> c = (-1.0 - 2.0 * zeta) / 3.0;

  const auto t0 = theta(0, z);
  const auto t1 = theta(1, z);
  const std::complex<double> w = -1.0 / z;
  const auto s0 = theta(0, w);
  const auto s1 = theta(1, w);
  rep.s0_residual = std::abs(s0 - z * c * (t0 + 2.0 * t1));
  rep.s1_residual = std::abs(s1 - z * c * (t0 - t1));
  rep.t0_residual = std::abs(theta(0, z + 1.0) - t0);
  rep.t1_residual = std::abs(theta(1, z + 1.0) - zeta * t1);
  // S at w recovers theta(z) from theta(w) = theta(-1/z).
  const auto back0 = w * c * (s0 + 2.0 * s1);
  const auto back1 = w * c * (s0 - s1);
  rep.ss_residual = std::max(std::abs(back0 - t0), std::abs(back1 - t1));

  const Rational order = 6;
  const QSeries e0 = theta_class(3, 0, order);
  const QSeries e1 = theta_class(3, 1, order);
  rep.t_exact = same_up_to(t_shift(e0), e0, order) &&
                same_up_to(t_shift(e1), CycRat(CycInt::zeta_power(3, 1)) * e1, order);
  rep.pass = rep.s0_residual < tol && rep.s1_residual < tol && rep.t0_residual < tol && rep.t1_residual < tol &&
             rep.ss_residual < tol && rep.t_exact;
  return rep;
}

}  // namespace theta_forge
