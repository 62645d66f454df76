#include "theta_forge/voarep.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "theta_forge/codelattice.hpp"

namespace theta_forge {

namespace {

void require_odd(unsigned p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("the representation ring needs an odd prime");
}

std::size_t classes(unsigned p) { return (p - 1) / 2 + 1; }

// Half the minimal norm of P + j, found from the valuation of theta_j.
Rational class_weight(unsigned p, unsigned j) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, j});
  if (it != cache.end()) return it->second;
  Rational h = 0;
  if (j != 0) {
    for (long order = 1;; order *= 2) {
      const QSeries t = theta_class(p, j, Rational(order));
      if (!t.is_zero()) {
        h = t.valuation();
        break;
      }
    }
  }
  cache.emplace(std::make_pair(p, j), h);
  return h;
}

std::vector<unsigned> add_profiles(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() != b.size()) throw std::invalid_argument("profiles of different primes");
  std::vector<unsigned> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::size_t rank_over_q(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t OrbitClass::length() const { return std::accumulate(profile.begin(), profile.end(), std::size_t{0}); }

OrbitClass orbit_of(unsigned p, const Word& w) {
  require_odd(p);
  OrbitClass o{p, std::vector<unsigned>(classes(p), 0)};
  for (auto d : w) {
    if (d >= p) throw std::invalid_argument("orbit_of: digit out of range");
    ++o.profile[symbol_class(p, d)];
  }
  return o;
}

OrbitClass parse_orbit(unsigned p, const std::string& text) {
  require_odd(p);
  OrbitClass o{p, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad orbit profile '" + text + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size() || v < 0) throw std::invalid_argument("bad orbit profile '" + text + "'");
    o.profile.push_back(static_cast<unsigned>(v));
  }
  if (o.profile.size() != classes(p))
    throw std::invalid_argument("orbit profile for p = " + std::to_string(p) + " needs " +
                                std::to_string(classes(p)) + " entries");
  return o;
}

Word orbit_representative(const OrbitClass& o) {
  Word w;
  for (std::size_t j = 0; j < o.profile.size(); ++j) w.insert(w.end(), o.profile[j], static_cast<std::uint8_t>(j));
  return w;
}

std::vector<OrbitClass> enumerate_orbits(unsigned p, std::size_t n) {
  require_odd(p);
  std::set<OrbitClass> seen;
  Word w(n, 0);
  while (true) {
    seen.insert(orbit_of(p, w));
    std::size_t i = 0;
    while (i < n && ++w[i] == p) w[i++] = 0;
    if (i == n) break;
  }
  return {seen.begin(), seen.end()};
}

RepElement RepElement::unit(unsigned p) {
  RepElement e{p, {}};
  e.terms.emplace(std::vector<unsigned>{}, CycRat::integer(1));
  return e;
}

RepElement RepElement::of(const OrbitClass& o, const CycRat& coefficient) {
  RepElement e{o.p, {}};
  e.add(o.profile, coefficient);
  return e;
}

void RepElement::add(const std::vector<unsigned>& profile, const CycRat& c) {
  if (!profile.empty() && profile.size() != classes(p)) throw std::invalid_argument("profile length does not match p");
  auto& slot = terms[profile];
  slot += c;
  if (slot.is_zero()) terms.erase(profile);
}

bool RepElement::has_integer_coefficients() const {
  for (const auto& [profile, c] : terms)
    if (!c.is_integer()) return false;
  return true;
}

RepElement operator+(const RepElement& a, const RepElement& b) {
  if (a.p != b.p) throw std::invalid_argument("RepElement: different primes");
  RepElement out = a;
  for (const auto& [profile, c] : b.terms) out.add(profile, c);
  return out;
}

RepElement rep_mul(const RepElement& a, const RepElement& b) {
  if (a.p != b.p) throw std::invalid_argument("rep_mul: different primes");
  RepElement out{a.p, {}};
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) out.add(add_profiles(pa, pb), ca * cb);
  return out;
}

std::pair<QSeries, PartitionMeta> partition_function(const OrbitClass& o, const Rational& cutoff) {
  require_odd(o.p);
  const std::size_t n = o.length();
  PartitionMeta meta;
  meta.central_charge = static_cast<long>(n * (o.p - 1));
  for (std::size_t j = 0; j < o.profile.size(); ++j) meta.conformal_weight += o.profile[j] * class_weight(o.p, j);
  meta.leading_exponent = meta.conformal_weight - Rational(meta.central_charge, 24);
  meta.leading_exponent.canonicalize();

  const Rational shift(meta.central_charge, 24);
  const Rational inner = cutoff + shift;
  // prod (1 - q^n) = q^{-1/24} eta
  const QSeries euler = eta(inner + Rational(1, 24)) * QSeries::monomial(-1, 24, CycRat::integer(1), inner + 1);
  const QSeries theta = n == 0 ? QSeries::constant(CycRat::integer(1), inner) : coset_theta(o.p, orbit_representative(o), inner);
  QSeries z = series_pow(euler, -meta.central_charge) * theta;
  z = QSeries::monomial(-meta.central_charge, 24, CycRat::integer(1), cutoff + 1 + inner) * z;
  return {z.truncated(cutoff), meta};
}

QSeries z_map(const RepElement& x, const Rational& cutoff) {
  require_odd(x.p);
  QSeries total(x.p, cutoff);
  for (const auto& [profile, c] : x.terms) {
    const bool empty = std::accumulate(profile.begin(), profile.end(), 0u) == 0;
    const QSeries t = empty ? QSeries::constant(CycRat::integer(1), cutoff)
                                      : coset_theta(x.p, orbit_representative(OrbitClass{x.p, profile}), cutoff);
    total = total + c * t;
  }
  return total;
}

std::size_t ThetaMonomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::size_t{0});
}

ThetaMonomial z_tilde(const OrbitClass& o) { return ThetaMonomial{o.profile}; }

ThetaMonomial operator*(const ThetaMonomial& a, const ThetaMonomial& b) {
  return ThetaMonomial{add_profiles(a.exponents, b.exponents)};
}

QSeries monomial_series(unsigned p, const ThetaMonomial& m, const Rational& cutoff) {
  require_odd(p);
  if (m.exponents.size() != classes(p)) throw std::invalid_argument("monomial_series: wrong number of exponents");
  WeightEnumerator w;
  w.p = p;
  w.r = static_cast<unsigned>(classes(p) - 1);
  w.coefficients[m.exponents] = 1;
  std::vector<QSeries> thetas;
  for (unsigned j = 0; j < classes(p); ++j) thetas.push_back(theta_class(p, j, cutoff));
  return compose_enumerator(w, thetas);
}

RepElement module_of_code(const Code& c) {
  require_odd(c.prime());
  RepElement out{c.prime(), {}};
  for (const auto& w : c.words()) out.add(orbit_of(c.prime(), w).profile, CycRat::integer(1));
  return out;
}

MainTheoremReport main_theorem_check(unsigned p, std::size_t n, std::size_t independence_rank_limit) {
  require_odd(p);
  MainTheoremReport rep;
  rep.p = p;
  rep.n = n;
  const std::size_t r = classes(p) - 1;
  const auto orbits = enumerate_orbits(p, n);
  rep.orbit_count = orbits.size();
  const BigInt expected = binomial(n + r, r);
  rep.monomial_count = expected.get_ui();

  std::set<std::vector<unsigned>> images;
  for (const auto& o : orbits) images.insert(z_tilde(o).exponents);
  rep.z_tilde_injective = images.size() == orbits.size();
  rep.isomorphism_claimed = p == 3 || p == 5;

  if (n * (p - 1) <= independence_rank_limit) {
    // Grow the cutoff until the images have full rank or clearly stall.
    bool independent = false;
    Rational cutoff(static_cast<long>((orbits.size() + p - 1) / p));
    for (int attempt = 0; attempt < 4 && !independent; ++attempt, cutoff += 1) {
      std::vector<QSeries> series;
      for (const auto& o : orbits) series.push_back(z_map(RepElement::of(o), cutoff));
      std::set<long> keys;
      for (auto& s : series) {
        s = s.with_denominator(p);
        for (const auto& [k, c] : s.terms()) keys.insert(k);
      }
      std::vector<std::vector<Rational>> m;
      for (const auto& s : series) {
        std::vector<Rational> row;
        for (long k : keys) {
          const auto it = s.terms().find(k);
          row.push_back(it == s.terms().end() ? Rational(0) : Rational(it->second.num().coeffs().front()));
        }
        m.push_back(std::move(row));
      }
      independent = rank_over_q(std::move(m)) == orbits.size();
      rep.independence_cutoff = cutoff;
    }
    rep.images_independent = independent;
  }
  rep.pass = rep.orbit_count == rep.monomial_count && rep.z_tilde_injective && rep.images_independent.value_or(true);
  return rep;
}

bool orbit_invariance_check(unsigned p, std::size_t n, const Rational& cutoff) {
  require_odd(p);
  std::map<OrbitClass, QSeries> first;
  if (n == 0) return true;
  const CodeLattice zero = zero_code_lattice(p, n);
  Word w(n, 0);
  while (true) {
    const QSeries t = theta_series(zero, w, cutoff);
    const auto [it, fresh] = first.emplace(orbit_of(p, w), t);
    if (!fresh && !(it->second == t)) return false;
    std::size_t i = 0;
    while (i < n && ++w[i] == p) w[i++] = 0;
    if (i == n) break;
  }
  return true;
}

}  // namespace theta_forge
