#include "theta_forge/octower.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "theta_forge/cliffcode.hpp"

namespace theta_forge {

namespace {

constexpr std::size_t kMaxGroup = 100000;

void require_small(std::size_t n, std::size_t limit) {
  if (n < 1 || n > limit)
    throw std::invalid_argument("n must lie between 1 and " + std::to_string(limit) + ", got " + std::to_string(n));
}

SignedPerm from_perm(std::vector<unsigned> sigma, std::uint32_t signs = 0) { return {std::move(sigma), signs}; }

SignedPerm three_cycle(std::size_t n, unsigned a, unsigned b, unsigned c) {
  SignedPerm g = SignedPerm::identity(n);
  g.sigma[a] = b;
  g.sigma[b] = c;
  g.sigma[c] = a;
  return g;
}

std::vector<SignedPerm> alternating_generators(std::size_t n) {
  std::vector<SignedPerm> gens;
  for (unsigned k = 2; k < n; ++k) gens.push_back(three_cycle(n, 0, 1, k));
  return gens;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

SignedPerm commutator(const SignedPerm& a, const SignedPerm& b) { return a * b * inverse(a) * inverse(b); }

// Rank over F_2 of rows stored as 64-bit blocks.
std::size_t rank_f2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][word] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i][word] & bit))
        for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm g;
  g.sigma.resize(n);
  std::iota(g.sigma.begin(), g.sigma.end(), 0u);
  return g;
}

bool SignedPerm::even_permutation() const {
  std::size_t transpositions = 0;
  std::vector<bool> seen(n(), false);
  for (std::size_t i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool SignedPerm::evenly_signed() const { return std::popcount(signs) % 2 == 0; }

int SignedPerm::determinant() const { return (even_permutation() == evenly_signed()) ? 1 : -1; }

std::vector<std::vector<int>> SignedPerm::matrix() const {
  std::vector<std::vector<int>> m(n(), std::vector<int>(n(), 0));
  for (std::size_t i = 0; i < n(); ++i) m[sigma[i]][i] = (signs >> sigma[i] & 1u) ? -1 : 1;
  return m;
}

std::uint64_t SignedPerm::encode() const {
  std::uint64_t code = signs;
  for (auto v : sigma) code = code * 16 + v;
  return code;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("SignedPerm: different n");
  SignedPerm c;
  c.sigma.resize(a.n());
  c.signs = a.signs;
  for (std::size_t i = 0; i < a.n(); ++i) {
    c.sigma[i] = a.sigma[b.sigma[i]];
    if (b.signs >> i & 1u) c.signs ^= 1u << a.sigma[i];
  }
  return c;
}

SignedPerm inverse(const SignedPerm& a) {
  SignedPerm inv;
  inv.sigma.resize(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    inv.sigma[a.sigma[i]] = static_cast<unsigned>(i);
    if (a.signs >> a.sigma[i] & 1u) inv.signs |= 1u << i;
  }
  return inv;
}

std::vector<SignedPerm> hyperoctahedral_group(std::size_t n) {
  require_small(n, 6);
  std::vector<SignedPerm> out;
  std::vector<unsigned> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  do {
    for (std::uint32_t s = 0; s < (1u << n); ++s) out.push_back(from_perm(sigma, s));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<SignedPerm> subgroup_H(std::size_t n) {
  std::vector<SignedPerm> out;
  for (const auto& g : hyperoctahedral_group(n))
    if (g.even_permutation() && g.evenly_signed()) out.push_back(g);
  return out;
}

std::vector<SignedPerm> closure(const std::vector<SignedPerm>& generators, std::size_t n) {
  std::vector<SignedPerm> elements{SignedPerm::identity(n)};
  std::unordered_set<std::uint64_t> seen{elements.front().encode()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : generators) {
      SignedPerm g = elements[i] * s;
      if (seen.insert(g.encode()).second) {
        elements.push_back(std::move(g));
        if (elements.size() > kMaxGroup) throw std::invalid_argument("closure: group too large");
      }
    }
  }
  return elements;
}

bool is_perfect(const std::vector<SignedPerm>& group) {
  if (group.size() > kMaxGroup) throw std::invalid_argument("is_perfect: group too large");
  if (group.size() <= 1) return true;
  const std::size_t n = group.front().n();

  // A generating set, chosen greedily.
  std::vector<SignedPerm> gens;
  std::unordered_set<std::uint64_t> span{SignedPerm::identity(n).encode()};
  for (const auto& g : group) {
    if (span.count(g.encode())) continue;
    gens.push_back(g);
    span.clear();
    for (const auto& h : closure(gens, n)) span.insert(h.encode());
  }
  if (span.size() != group.size()) throw std::invalid_argument("is_perfect: element list is not a group");

  // Normal closure of the commutators of generators is the derived subgroup.
  std::vector<SignedPerm> derived_gens;
  for (const auto& a : gens)
    for (const auto& b : gens) derived_gens.push_back(commutator(a, b));
  std::vector<SignedPerm> derived = closure(derived_gens, n);
  while (true) {
    std::unordered_set<std::uint64_t> in;
    for (const auto& d : derived) in.insert(d.encode());
    bool grew = false;
    for (const auto& s : gens) {
      for (const auto& d : derived_gens) {
        const SignedPerm c = s * d * inverse(s);
        if (!in.count(c.encode())) {
          derived_gens.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) break;
    derived = closure(derived_gens, n);
  }
  return derived.size() == group.size();
}

CrossedHomReport crossed_hom_space(std::size_t n) {
  require_small(n, 6);
  CrossedHomReport rep;
  rep.n = n;
  rep.dim_dual = n - 1;
  const std::size_t d = n - 1;
  const std::uint32_t full = (1u << n) - 1;
  // E* = F_2^n / <1>, represented by vectors with bit n-1 clear.
  auto reduce = [&](std::uint32_t v) { return (v >> (n - 1) & 1u) ? v ^ full : v; };
  auto act = [&](const SignedPerm& g, std::uint32_t v) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v >> i & 1u) out |= 1u << g.sigma[i];
    return reduce(out);
  };

  const auto gens = alternating_generators(n);
  const auto group = closure(gens, n);

  for (std::uint32_t v = 0; v < (1u << d); ++v)
    if (std::all_of(gens.begin(), gens.end(), [&](const SignedPerm& g) { return act(g, v) == v; })) ++rep.dim_invariants;
  rep.dim_invariants = static_cast<std::size_t>(std::countr_zero(rep.dim_invariants));
  rep.dim_principal = d - rep.dim_invariants;

  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i].encode(), i);
  const std::size_t cols = group.size() * d;
  const std::size_t blocks = (cols + 63) / 64 + 1;
  auto set = [&](std::vector<std::uint64_t>& row, std::size_t c) { row[c / 64] ^= std::uint64_t{1} << (c % 64); };

  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t bit = 0; bit < d; ++bit) {
    std::vector<std::uint64_t> row(blocks, 0);
    set(row, index.at(SignedPerm::identity(n).encode()) * d + bit);
    rows.push_back(std::move(row));
  }
  // f(s h) + f(s) + s.f(h) = 0 coordinatewise.
  for (const auto& s : gens) {
    const std::size_t is = index.at(s.encode());
    std::vector<std::uint32_t> image(d);
    for (std::size_t j = 0; j < d; ++j) image[j] = act(s, 1u << j);
    for (std::size_t ih = 0; ih < group.size(); ++ih) {
      const std::size_t ish = index.at((s * group[ih]).encode());
      for (std::size_t bit = 0; bit < d; ++bit) {
        std::vector<std::uint64_t> row(blocks, 0);
        set(row, ish * d + bit);
        set(row, is * d + bit);
        for (std::size_t j = 0; j < d; ++j)
          if (image[j] >> bit & 1u) set(row, ih * d + j);
        rows.push_back(std::move(row));
      }
    }
  }
  rep.dim_crossed = d == 0 ? 0 : cols - rank_f2(std::move(rows), cols);
  rep.h1_dim = rep.dim_crossed - rep.dim_principal;
  return rep;
}

BetaFormReport beta_form_check(unsigned n) {
  if (n < 2 || n > 12) throw std::invalid_argument("beta_form_check: n must lie between 2 and 12");
  BetaFormReport rep;
  auto form = [&](std::uint32_t h, std::uint32_t k) {
    unsigned v = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (i != j && (h >> i & 1u) && (k >> j & 1u)) ++v;
    return v % 2;
  };
  for (std::uint32_t h = 0; h < (1u << n); ++h) {
    if (std::popcount(h) % 2) continue;
    for (std::uint32_t k = 0; k < (1u << n); ++k) {
      if (std::popcount(k) % 2) continue;
      const CliffordWord a{n, 1, h}, b{n, 1, k};
      const bool anticommute = word_mul(a, b).sign != word_mul(b, a).sign;
      ++rep.even_pairs;
      if (std::popcount(h) == 2 && std::popcount(k) == 2) ++rep.weight_two_pairs;
      if (anticommute != (form(h, k) == 1)) ++rep.mismatches;
    }
  }
  rep.pass = rep.mismatches == 0;
  return rep;
}

IndexTwoReport index_two_check(std::size_t n) {
  require_small(n, 4);
  IndexTwoReport rep;
  rep.n = n;
  const auto group = hyperoctahedral_group(n);
  rep.order = group.size();
  std::vector<SignedPerm> a, b, c;
  for (const auto& g : group) {
    if (g.determinant() == 1) a.push_back(g);
    if (g.even_permutation()) b.push_back(g);
    if (g.evenly_signed()) c.push_back(g);
    rep.intersection += g.determinant() == 1 && g.even_permutation() && g.evenly_signed();
  }
  rep.det_one = a.size();
  rep.even_perms = b.size();
  rep.even_signs = c.size();
  auto closed = [](const std::vector<SignedPerm>& s) {
    std::unordered_set<std::uint64_t> in;
    for (const auto& g : s) in.insert(g.encode());
    for (const auto& x : s)
      for (const auto& y : s)
        if (!in.count((x * y).encode())) return false;
    return true;
  };
  rep.subgroups = closed(a) && closed(b) && closed(c) && 2 * a.size() == rep.order && 2 * b.size() == rep.order &&
                  2 * c.size() == rep.order;
  rep.intersection_is_h = rep.intersection == subgroup_H(n).size();
  rep.pass = rep.order == (std::size_t{1} << n) * factorial(n) && rep.subgroups && rep.intersection_is_h;
  return rep;
}

TowerReport tower_check(std::size_t n) {
  TowerReport rep;
  rep.n = n;
  const auto h = subgroup_H(n);
  rep.order = h.size();
  rep.perfect = is_perfect(h);
  rep.h1_dim = crossed_hom_space(n).h1_dim;
  return rep;
}

}  // namespace theta_forge
