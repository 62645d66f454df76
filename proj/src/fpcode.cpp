#include "theta_forge/fpcode.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "theta_forge/fano.hpp"

namespace theta_forge {

namespace {

constexpr std::size_t kMaxWords = 20'000'000;

unsigned inverse_mod(unsigned a, unsigned p) {
  // p is prime, so a^(p-2) is the inverse.
  unsigned long long result = 1, base = a % p;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<unsigned>(result);
}

void validate_words(unsigned p, std::size_t n, const std::vector<Word>& words) {
  if (!is_prime(p)) throw std::invalid_argument("code: modulus " + std::to_string(p) + " is not prime");
  if (p > 255) throw std::invalid_argument("code: primes above 255 are not supported");
  for (const auto& w : words) {
    if (w.size() != n)
      throw std::invalid_argument("code: word of length " + std::to_string(w.size()) +
                                  " in a code of length " + std::to_string(n));
    for (auto d : w)
      if (d >= p) throw std::invalid_argument("code: entry " + std::to_string(d) + " out of range");
  }
}

std::vector<Word> enumerate_span(unsigned p, std::size_t n, const std::vector<Word>& basis) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (count > kMaxWords / p) throw std::invalid_argument("code: span too large to enumerate");
    count *= p;
  }
  std::vector<Word> out;
  out.reserve(count);
  std::vector<unsigned> coef(basis.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Word w(n, 0);
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (!coef[g]) continue;
      for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<std::uint8_t>((w[j] + coef[g] * basis[g][j]) % p);
    }
    out.push_back(std::move(w));
    for (std::size_t g = 0; g < coef.size(); ++g) {
      if (++coef[g] < p) break;
      coef[g] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<Word> row_reduce(unsigned p, std::vector<Word> rows, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [col](const Word& r) { return r[col] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    auto& pivot = rows[rank];
    const unsigned inv = inverse_mod(pivot[col], p);
    for (auto& d : pivot) d = static_cast<std::uint8_t>(d * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const unsigned f = rows[r][col];
      for (std::size_t j = 0; j < n; ++j)
        rows[r][j] = static_cast<std::uint8_t>((rows[r][j] + p * p - f * pivot[j]) % p);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

Code Code::from_words(unsigned p, std::size_t n, std::vector<Word> words) {
  validate_words(p, n, words);
  Code c(p, n);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  c.words_ = std::move(words);

  // Linear iff the words are exactly the span of their row-reduced basis.
  const bool has_zero = !c.words_.empty() &&
                        std::all_of(c.words_.front().begin(), c.words_.front().end(),
                                    [](std::uint8_t d) { return d == 0; });
  if (has_zero) {
    auto basis = row_reduce(p, c.words_);
    double expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= p;
    if (expected == static_cast<double>(c.words_.size()) && enumerate_span(p, n, basis) == c.words_)
      c.generators_ = std::move(basis);
  }
  return c;
}

Code Code::from_generators(unsigned p, std::size_t n, std::vector<Word> generators) {
  validate_words(p, n, generators);
  Code c(p, n);
  auto basis = row_reduce(p, std::move(generators));
  c.words_ = enumerate_span(p, n, basis);
  c.generators_ = std::move(basis);
  return c;
}

const std::vector<Word>& Code::generators() const {
  if (!generators_) throw std::logic_error("code: operation requires a linear code");
  return *generators_;
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

Code dual_code(const Code& c) {
  const auto& gens = c.generators();
  const unsigned p = c.prime();
  const std::size_t n = c.length();
  std::vector<std::size_t> pivots;
  const auto rref = row_reduce(p, gens, &pivots);
  // Null space basis: one vector per free column.
  std::vector<bool> is_pivot(n, false);
  for (auto col : pivots) is_pivot[col] = true;
  std::vector<Word> null_basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Word v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rref.size(); ++r)
      v[pivots[r]] = static_cast<std::uint8_t>((p - rref[r][free]) % p);
    null_basis.push_back(std::move(v));
  }
  return Code::from_generators(p, n, std::move(null_basis));
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (const auto& [_, count] : coefficients) t += count;
  return t;
}

unsigned symbol_class(unsigned p, unsigned digit) {
  digit %= p;
  return std::min(digit, p - digit) % p;
}

std::size_t symbol_class_count(unsigned p) { return p == 2 ? 2 : (p - 1) / 2 + 1; }

std::vector<unsigned> weight_profile(unsigned p, const Word& w) {
  std::vector<unsigned> profile(symbol_class_count(p), 0);
  for (auto d : w) ++profile[symbol_class(p, d)];
  return profile;
}

WeightEnumerator weight_enumerator(const Code& c) {
  WeightEnumerator we;
  we.p = c.prime();
  we.r = symbol_class_count(c.prime()) - 1;
  for (const auto& w : c.words()) ++we.coefficients[weight_profile(c.prime(), w)];
  return we;
}

std::size_t hamming_weight(const Word& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint8_t d) { return d != 0; }));
}

unsigned dot(unsigned p, const Word& a, const Word& b) {
  unsigned long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<unsigned long long>(a[i]) * b[i];
  return static_cast<unsigned>(s % p);
}

bool is_self_orthogonal(const Code& c) {
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (dot(c.prime(), g[i], g[j]) != 0) return false;
  return true;
}

bool is_self_dual(const Code& c) {
  return is_self_orthogonal(c) && 2 * c.dimension() == c.length();
}

bool is_doubly_even(const Code& c) {
  if (c.prime() != 2) throw std::invalid_argument("doubly even is only defined for binary codes");
  return std::all_of(c.words().begin(), c.words().end(),
                     [](const Word& w) { return hamming_weight(w) % 4 == 0; });
}

std::optional<std::size_t> min_distance(const Code& c) {
  std::optional<std::size_t> best;
  for (const auto& w : c.words()) {
    const auto wt = hamming_weight(w);
    if (wt && (!best || wt < *best)) best = wt;
  }
  return best;
}

bool is_simply_error_correcting(const Code& c) {
  const auto d = min_distance(c);
  return d && *d >= 3;
}

CodePredicates code_predicates(const Code& c) {
  CodePredicates out;
  if (c.is_linear()) {
    out.self_orthogonal = is_self_orthogonal(c);
    out.self_dual = is_self_dual(c);
  }
  if (c.prime() == 2) out.doubly_even = is_doubly_even(c);
  out.min_distance = min_distance(c);
  return out;
}

namespace {

Code hamming8() {
  // H_7 = C (+) <1>, with C spanned by the right-hand line complements, then
  // the parity map v -> (|v|, v). Coordinate 0 is the parity bit, coordinate
  // i is point i of the Fano plane.
  const auto fano = fano_structures();
  std::vector<std::uint8_t> gens(fano.cvecs.begin(), fano.cvecs.end());
  gens.push_back(0x7f);
  std::vector<Word> words;
  for (auto v : f2_span(gens)) {
    Word w(8, 0);
    unsigned parity = 0;
    for (unsigned i = 0; i < 7; ++i) {
      w[i + 1] = (v >> i) & 1u;
      parity ^= w[i + 1];
    }
    w[0] = static_cast<std::uint8_t>(parity);
    words.push_back(std::move(w));
  }
  return Code::from_words(2, 8, std::move(words));
}

Code tetracode() {
  // (s, a, a+s, a+2s): s = 0, a = 1 and s = 1, a = 0.
  return Code::from_generators(3, 4, {{0, 1, 1, 1}, {1, 0, 1, 2}});
}

Code golay12() {
  // Extended ternary Golay code, generator [I_6 | S] with S the symmetric
  // Paley-type matrix of order 6.
  return Code::from_generators(3, 12,
                               {
                                   {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                                   {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
                                   {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2},
                                   {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
                                   {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1},
                                   {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0},
                               });
}

}  // namespace

Code standard_code(std::string_view name) {
  if (name == "hamming8") return hamming8();
  if (name == "tetracode") return tetracode();
  if (name == "golay12") return golay12();
  throw std::invalid_argument("unknown code name '" + std::string(name) + "'");
}

MonomialTransform MonomialTransform::identity(std::size_t n) {
  MonomialTransform t;
  t.sigma.resize(n);
  std::iota(t.sigma.begin(), t.sigma.end(), std::size_t{0});
  t.scalars.assign(n, 1);
  return t;
}

Word MonomialTransform::apply(unsigned p, const Word& w) const {
  Word out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto src = sigma[j];
    out[j] = static_cast<std::uint8_t>(static_cast<unsigned>(scalars[src]) * w[src] % p);
  }
  return out;
}

MonomialTransform compose(const MonomialTransform& h, const MonomialTransform& g) {
  const std::size_t n = g.sigma.size();
  MonomialTransform k;
  k.sigma.resize(n);
  k.scalars.resize(n);
  std::vector<std::size_t> g_inv(n);
  for (std::size_t j = 0; j < n; ++j) g_inv[g.sigma[j]] = j;
  for (std::size_t j = 0; j < n; ++j) k.sigma[j] = g.sigma[h.sigma[j]];
  for (std::size_t i = 0; i < n; ++i)
    k.scalars[i] = static_cast<std::uint8_t>(static_cast<unsigned>(g.scalars[i]) * h.scalars[g_inv[i]]);
  return k;
}

Code apply_monomial(const Code& c, const MonomialTransform& g) {
  const unsigned p = c.prime();
  const std::size_t n = c.length();
  if (g.sigma.size() != n || g.scalars.size() != n)
    throw std::invalid_argument("monomial transform length does not match the code");
  std::vector<bool> seen(n, false);
  for (auto s : g.sigma) {
    if (s >= n || seen[s]) throw std::invalid_argument("monomial transform: sigma is not a permutation");
    seen[s] = true;
  }
  for (auto s : g.scalars)
    if (s % p == 0) throw std::invalid_argument("monomial transform: zero scalar");
  MonomialTransform reduced = g;
  for (auto& s : reduced.scalars) s = static_cast<std::uint8_t>(s % p);

  std::vector<Word> image;
  image.reserve(c.size());
  for (const auto& w : c.words()) image.push_back(reduced.apply(p, w));
  if (c.is_linear()) {
    std::vector<Word> gens;
    for (const auto& w : c.generators()) gens.push_back(reduced.apply(p, w));
    return Code::from_generators(p, n, std::move(gens));
  }
  return Code::from_words(p, n, std::move(image));
}

Code parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<Word> words;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> p >> n)) throw std::invalid_argument("code file: expected 'p n' header on line " + std::to_string(line_no));
      have_header = true;
      continue;
    }
    Word w;
    long digit = 0;
    while (ls >> digit) {
      if (digit < 0 || digit >= static_cast<long>(p))
        throw std::invalid_argument("code file: entry out of range on line " + std::to_string(line_no));
      w.push_back(static_cast<std::uint8_t>(digit));
    }
    if (!ls.eof()) throw std::invalid_argument("code file: malformed entry on line " + std::to_string(line_no));
    if (w.size() != n)
      throw std::invalid_argument("code file: line " + std::to_string(line_no) + " has " +
                                  std::to_string(w.size()) + " entries, expected " + std::to_string(n));
    words.push_back(std::move(w));
  }
  if (!have_header) throw std::invalid_argument("code file: missing header");
  return Code::from_words(p, n, std::move(words));
}

Code read_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open code file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_code(buf.str());
}

std::string format_code(const Code& c) {
  std::ostringstream out;
  out << c.prime() << ' ' << c.length() << '\n';
  for (const auto& w : c.words()) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << static_cast<unsigned>(w[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace theta_forge
