#include "theta_forge/cliffcode.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace theta_forge {

namespace {

constexpr std::array<std::array<int, 8>, 7> kESigns = {{
    {-1, 1, -1, 1, 1, -1, 1, -1},
    {-1, 1, 1, -1, -1, 1, 1, -1},
    {-1, -1, 1, 1, -1, -1, 1, 1},
    {-1, -1, 1, 1, 1, 1, -1, -1},
    {-1, 1, -1, 1, -1, 1, -1, 1},
    {-1, -1, -1, -1, 1, 1, 1, 1},
    {-1, 1, 1, -1, 1, -1, -1, 1},
}};

constexpr std::array<std::uint32_t, 4> kHBasis = {0xFFu, 0x0Fu, 0x33u, 0x55u};

bool in_hamming8(std::uint32_t s) {
  // Right-hand Fano numbering: coordinate t is the point 4a+2b+c.
  for (std::uint32_t a = 0; a < 8; ++a) {
    std::uint32_t v = 0;
    for (std::uint32_t t = 0; t < 8; ++t)
      if (std::popcount(a & t) % 2) v |= 1u << t;
    if (s == v || s == (v ^ 0xFFu)) return true;
  }
  return false;
}

void require_f8(const CliffordWord& w) {
  if (w.n != 8) throw std::invalid_argument("spinor representations are defined on F_8");
}

std::size_t rank_mod_prime(std::vector<std::vector<long long>> m) {
  constexpr long long P = 1000000007LL;
  auto power = [](long long b, long long e) {
    long long r = 1;
    b %= P;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& x : row) x = ((x % P) + P) % P;
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = power(m[rank][c], P - 2);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const long long f = m[i][c] * inv % P;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[rank][k]) % P + P) % P;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CliffordWord CliffordWord::one(unsigned n) { return {n, 1, 0}; }

CliffordWord CliffordWord::generator(unsigned n, unsigned i) {
  if (i >= n) throw std::invalid_argument("generator index out of range");
  return {n, 1, 1u << i};
}

CliffordWord CliffordWord::from_indices(unsigned n, const std::vector<unsigned>& indices, int sign) {
  CliffordWord w = one(n);
  w.sign = sign;
  for (unsigned i : indices) w = word_mul(w, generator(n, i));
  return w;
}

CliffordWord CliffordWord::omega(unsigned n) { return {n, 1, n >= 32 ? ~0u : (1u << n) - 1}; }

unsigned CliffordWord::weight() const { return static_cast<unsigned>(std::popcount(support)); }

std::uint32_t CliffordWord::index() const { return support | (sign < 0 ? 1u << n : 0u); }

std::string CliffordWord::to_string() const {
  std::ostringstream out;
  out << (sign < 0 ? "-" : "+");
  if (support == 0) out << "1";
  bool first = true;
  for (unsigned i = 0; i < n; ++i)
    if (support >> i & 1u) {
      out << (first ? "" : "*") << "e" << i;
      first = false;
    }
  return out.str();
}

CliffordWord word_mul(const CliffordWord& a, const CliffordWord& b) {
  if (a.n != b.n) throw std::invalid_argument("word_mul: different n");
  unsigned swaps = 0;
  for (unsigned j = 0; j < b.n; ++j)
    if (b.support >> j & 1u) swaps += static_cast<unsigned>(std::popcount(a.support >> (j + 1)));
  swaps += static_cast<unsigned>(std::popcount(a.support & b.support));
  return {a.n, a.sign * b.sign * (swaps % 2 ? -1 : 1), a.support ^ b.support};
}

CliffordWord word_inverse(const CliffordWord& a) {
  // w * w = +-1, so w^{-1} = (w*w) w
  const CliffordWord sq = word_mul(a, a);
  return {a.n, a.sign * sq.sign, a.support};
}

std::vector<CliffordWord> clifford_words(unsigned n) {
  if (n > 12) throw std::invalid_argument("clifford_words: n too large");
  std::vector<CliffordWord> out;
  for (int s : {1, -1})
    for (std::uint32_t m = 0; m < (1u << n); ++m) out.push_back({n, s, m});
  return out;
}

std::vector<CliffordWord> even_clifford_words(unsigned n) {
  std::vector<CliffordWord> out;
  for (const auto& w : clifford_words(n))
    if (w.even()) out.push_back(w);
  return out;
}

SignedMatrix SignedMatrix::identity(std::size_t d) {
  SignedMatrix m;
  m.perm.resize(d);
  for (std::size_t i = 0; i < d; ++i) m.perm[i] = static_cast<unsigned>(i);
  m.sign.assign(d, 1);
  return m;
}

std::vector<std::vector<int>> SignedMatrix::dense() const {
  std::vector<std::vector<int>> d(dim(), std::vector<int>(dim(), 0));
  for (std::size_t r = 0; r < dim(); ++r) d[r][perm[r]] = sign[r];
  return d;
}

long SignedMatrix::trace() const {
  long t = 0;
  for (std::size_t r = 0; r < dim(); ++r)
    if (perm[r] == r) t += sign[r];
  return t;
}

bool SignedMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < dim(); ++r)
    if (perm[r] != r) return false;
  return true;
}

SignedMatrix SignedMatrix::transpose() const {
  SignedMatrix t = *this;
  for (std::size_t r = 0; r < dim(); ++r) {
    t.perm[perm[r]] = static_cast<unsigned>(r);
    t.sign[perm[r]] = sign[r];
  }
  return t;
}

SignedMatrix SignedMatrix::operator-() const {
  SignedMatrix m = *this;
  for (auto& s : m.sign) s = -s;
  return m;
}

SignedMatrix operator*(const SignedMatrix& a, const SignedMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("SignedMatrix: dimension mismatch");
  SignedMatrix m = a;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    m.perm[r] = b.perm[a.perm[r]];
    m.sign[r] = a.sign[r] * b.sign[a.perm[r]];
  }
  return m;
}

std::string SignedMatrix::to_string() const {
  std::ostringstream out;
  for (const auto& row : dense()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      out << (c ? " " : "") << (v > 0 ? " 1" : v < 0 ? "-1" : " .");
    }
    out << "\n";
  }
  return out.str();
}

SignedMatrix kron(const SignedMatrix& a, const SignedMatrix& b) {
  SignedMatrix m;
  const std::size_t da = a.dim(), db = b.dim();
  m.perm.resize(da * db);
  m.sign.resize(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k) {
      m.perm[i * db + k] = static_cast<unsigned>(a.perm[i] * db + b.perm[k]);
      m.sign[i * db + k] = a.sign[i] * b.sign[k];
    }
  return m;
}

SignedMatrix pauli(Pauli k) {
  switch (k) {
    case Pauli::s0:
      return SignedMatrix::identity(2);
    case Pauli::s1:
      return {{1, 0}, {1, 1}};
    case Pauli::s1s3:
      return {{1, 0}, {-1, 1}};
    case Pauli::s3:
      return {{0, 1}, {1, -1}};
  }
  throw std::invalid_argument("unknown Pauli matrix");
}

SignedMatrix pauli_tensor(const std::vector<Pauli>& factors) {
  SignedMatrix m = SignedMatrix::identity(1);
  for (auto f : factors) m = kron(m, pauli(f));
  return m;
}

PauliHammingReport pauli_hamming() {
  PauliHammingReport rep;
  for (int s : {1, -1})
    for (unsigned a = 0; a < 2; ++a)
      for (unsigned b = 0; b < 2; ++b)
        for (unsigned c = 0; c < 2; ++c) {
          SignedMatrix m = pauli_tensor({a ? Pauli::s3 : Pauli::s0, b ? Pauli::s3 : Pauli::s0, c ? Pauli::s3 : Pauli::s0});
          if (s < 0) m = -m;
          Word w(8);
          for (std::size_t t = 0; t < 8; ++t) w[t] = m.sign[t] < 0 ? 1 : 0;
          rep.group.push_back(m);
          rep.diagonals.push_back(w);
        }
  rep.matches_hamming8 = rep.diagonals.size() == 16 &&
                         Code::from_words(2, 8, rep.diagonals) == standard_code("hamming8");
  return rep;
}

const std::vector<SignedMatrix>& e_matrices() {
  static const std::vector<SignedMatrix> mats = [] {
    std::vector<SignedMatrix> out;
    for (unsigned i = 1; i <= 7; ++i) {
      SignedMatrix m;
      for (unsigned r = 0; r < 8; ++r) {
        m.perm.push_back(r ^ i);
        m.sign.push_back(kESigns[i - 1][r]);
      }
      out.push_back(m);
    }
    return out;
  }();
  return mats;
}

bool e_matrices_satisfy_clifford_relations() {
  const auto& e = e_matrices();
  const SignedMatrix minus = -SignedMatrix::identity(8);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!(e[i] * e[i] == minus)) return false;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && !(e[i] * e[j] == -(e[j] * e[i]))) return false;
  }
  return true;
}

SignedMatrix spinor_rep(int sign, const CliffordWord& w) {
  require_f8(w);
  if (!w.even()) throw std::invalid_argument("spinor_rep: word must be even");
  if (sign != 1 && sign != -1) throw std::invalid_argument("spinor_rep: sign must be +1 or -1");
  // For a, b >= 1: e_a e_b = (e_0 e_a)(e_0 e_b), and e_0 e_b is a generator.
  SignedMatrix m = SignedMatrix::identity(8);
  for (unsigned i = 1; i < 8; ++i)
    if (w.support >> i & 1u) m = m * e_matrices()[i - 1];
  int s = w.sign;
  if (sign < 0 && (w.support & 1u)) s = -s;
  return s < 0 ? -m : m;
}

CliffordWord b_lift(unsigned i) {
  if (i < 1 || i > 7) throw std::invalid_argument("b_lift: index must be 1..7");
  for (const auto& w : even_clifford_words(8)) {
    std::uint32_t x = 0;
    for (unsigned k = 1; k < 8; ++k)
      if (w.support >> k & 1u) x ^= k;
    if (x != i) continue;
    const SignedMatrix m = spinor_rep(1, w);
    if (std::all_of(m.sign.begin(), m.sign.end(), [](int s) { return s == 1; })) return w;
  }
  throw std::logic_error("no positive lift of b_" + std::to_string(i));
}

bool in_h_tilde(const CliffordWord& w) { return w.n == 8 && in_hamming8(w.support); }

int chi(int sign, const CliffordWord& h) {
  if (!in_h_tilde(h)) throw std::invalid_argument("chi: word is not in H~");
  // Express the support in the basis and compare with the product of positive lifts.
  CliffordWord lift = CliffordWord::one(8);
  std::uint32_t rest = h.support;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (mask >> k & 1u) s ^= kHBasis[k];
    if (s != rest) continue;
    for (std::size_t k = 0; k < 4; ++k)
      if (mask >> k & 1u) lift = word_mul(lift, CliffordWord{8, 1, kHBasis[k]});
    rest = 0;
    break;
  }
  if (rest != 0) throw std::logic_error("chi: basis does not span H");
  int value = h.sign * lift.sign;
  if (sign < 0 && (h.support & 1u)) value = -value;
  return value;
}

InducedCharacterReport induced_character_check() {
  InducedCharacterReport rep;
  const auto group = even_clifford_words(8);
  std::size_t h_order = 0;
  for (const auto& g : group) h_order += in_h_tilde(g);
  for (const auto& g : group) {
    long ind_plus = 0, ind_minus = 0;
    for (const auto& x : group) {
      const CliffordWord c = word_mul(word_mul(x, g), word_inverse(x));
      if (!in_h_tilde(c)) continue;
      ind_plus += chi(1, c);
      ind_minus += chi(-1, c);
    }
    ind_plus /= static_cast<long>(h_order);
    ind_minus /= static_cast<long>(h_order);
    const long tp = spinor_rep(1, g).trace();
    const long tm = spinor_rep(-1, g).trace();
    rep.mismatches_plus += ind_plus != tp;
    rep.mismatches_minus += ind_minus != tm;
    rep.differing += tp != tm;
    if (g == CliffordWord::one(8)) {
      rep.dim_plus = ind_plus;
      rep.dim_minus = ind_minus;
    }
    if (g == CliffordWord{8, -1, 0}) rep.value_at_minus_one = ind_plus;
  }
  rep.elements = group.size();
  rep.pass = rep.elements == 256 && h_order == 32 && rep.mismatches_plus == 0 && rep.mismatches_minus == 0 &&
             rep.dim_plus == 8 && rep.dim_minus == 8 && rep.value_at_minus_one == -8;
  return rep;
}

SignedMatrix bott_rep(const CliffordWord& w) {
  require_f8(w);
  const CliffordWord e0 = CliffordWord::generator(8, 0);
  const CliffordWord e0inv = word_inverse(e0);
  // Block (j, i) is Delta^+(k) where g * rep_i = rep_j * k.
  SignedMatrix m;
  m.perm.resize(16);
  m.sign.resize(16);
  auto place = [&](unsigned row_block, unsigned col_block, const SignedMatrix& b) {
    for (unsigned r = 0; r < 8; ++r) {
      m.perm[row_block * 8 + r] = col_block * 8 + b.perm[r];
      m.sign[row_block * 8 + r] = b.sign[r];
    }
  };
  if (w.even()) {
    place(0, 0, spinor_rep(1, w));
    place(1, 1, spinor_rep(1, word_mul(word_mul(e0inv, w), e0)));
  } else {
    place(1, 0, spinor_rep(1, word_mul(e0inv, w)));
    place(0, 1, spinor_rep(1, word_mul(w, e0)));
  }
  return m;
}

BottReport bott_check() {
  BottReport rep;
  const auto words = clifford_words(8);
  std::vector<SignedMatrix> images;
  images.reserve(words.size());
  for (const auto& w : words) images.push_back(bott_rep(w));

  rep.homomorphism = true;
  for (const auto& a : words) {
    for (const auto& b : words)
      if (!(images[word_mul(a, b).index()] == images[a.index()] * images[b.index()])) {
        rep.homomorphism = false;
        break;
      }
    if (!rep.homomorphism) break;
  }
  rep.minus_one_faithful = images[CliffordWord{8, -1, 0}.index()] == -SignedMatrix::identity(16);

  const SignedMatrix i8 = SignedMatrix::identity(8);
  rep.omega_is_s3 = images[CliffordWord::omega(8).index()] == kron(pauli(Pauli::s3), i8);
  rep.e1_image = images[CliffordWord::generator(8, 1).index()];
  rep.e1_is_s1 = rep.e1_image == kron(pauli(Pauli::s1), i8);

  std::vector<std::vector<long long>> flat;
  for (std::uint32_t s = 0; s < 256; ++s) {
    const SignedMatrix& m = images[s];
    std::vector<long long> row(256, 0);
    for (unsigned r = 0; r < 16; ++r) row[r * 16 + m.perm[r]] = m.sign[r];
    flat.push_back(std::move(row));
  }
  rep.rank = rank_mod_prime(std::move(flat));

  // Matrices up to sign, normalized so that row 0 has a positive entry.
  auto projective = [](const SignedMatrix& m) {
    std::vector<int> key(m.perm.begin(), m.perm.end());
    for (int s : m.sign) key.push_back(s * m.sign[0]);
    return key;
  };
  std::set<std::vector<int>> tensors;
  const std::array<Pauli, 4> all = {Pauli::s0, Pauli::s1, Pauli::s1s3, Pauli::s3};
  for (auto a : all)
    for (auto b : all)
      for (auto c : all)
        for (auto d : all) tensors.insert(projective(pauli_tensor({a, b, c, d})));
  std::set<std::vector<int>> hit;
  bool all_tensors = tensors.size() == 256;
  for (std::uint32_t s = 0; s < 256; ++s) {
    const auto key = projective(images[s]);
    all_tensors = all_tensors && tensors.count(key);
    hit.insert(key);
  }
  rep.pauli_bijection = all_tensors && hit.size() == 256;

  rep.restriction = true;
  for (const auto& g : even_clifford_words(8)) {
    const SignedMatrix& m = images[g.index()];
    if (m.trace() != spinor_rep(1, g).trace() + spinor_rep(-1, g).trace()) rep.restriction = false;
  }
  rep.pass = rep.homomorphism && rep.minus_one_faithful && rep.omega_is_s3 && rep.rank == 256 &&
             rep.pauli_bijection && rep.restriction;
  return rep;
}

SignedMatrix vector_rep(const CliffordWord& w) {
  SignedMatrix m = SignedMatrix::identity(w.n);
  const CliffordWord inv = word_inverse(w);
  for (unsigned i = 0; i < w.n; ++i) m.sign[i] = word_mul(word_mul(w, CliffordWord::generator(w.n, i)), inv).sign;
  return m;
}

TrialityReport triality_kernels() {
  TrialityReport rep;
  const SignedMatrix i8 = SignedMatrix::identity(8);
  for (const auto& g : even_clifford_words(8)) {
    if (spinor_rep(1, g) == i8) rep.ker_plus.push_back(g);
    if (spinor_rep(-1, g) == i8) rep.ker_minus.push_back(g);
    if (vector_rep(g) == i8) rep.ker_pi.push_back(g);
  }
  const CliffordWord one = CliffordWord::one(8);
  const CliffordWord omega = CliffordWord::omega(8);
  const CliffordWord minus_one{8, -1, 0};
  const CliffordWord minus_omega = word_mul(minus_one, omega);
  rep.pass = rep.ker_plus == std::vector<CliffordWord>{one, omega} &&
             rep.ker_minus == std::vector<CliffordWord>{one, minus_omega} &&
             rep.ker_pi == std::vector<CliffordWord>{one, minus_one};
  return rep;
}

CliffordGroupReport clifford_group_check() {
  CliffordGroupReport rep;
  const auto all = clifford_words(8);
  const auto even = even_clifford_words(8);
  rep.order = all.size();
  rep.even_order = even.size();

  std::mt19937 rng(1);
  rep.associative = true;
  for (int t = 0; t < 2000; ++t) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    if (!(word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c)))) rep.associative = false;
  }

  auto commute = [](const CliffordWord& a, const CliffordWord& b) { return word_mul(a, b) == word_mul(b, a); };
  for (const auto& z : even)
    if (std::all_of(even.begin(), even.end(), [&](const CliffordWord& g) { return commute(z, g); }))
      rep.centre_even.push_back(z);

  std::vector<CliffordWord> h;
  for (const auto& g : even)
    if (in_h_tilde(g)) h.push_back(g);
  rep.h_tilde_abelian = h.size() == 32;
  rep.h_tilde_elementary = true;
  for (const auto& a : h) {
    for (const auto& b : h) rep.h_tilde_abelian = rep.h_tilde_abelian && commute(a, b);
    rep.h_tilde_elementary = rep.h_tilde_elementary && word_mul(a, a) == CliffordWord::one(8);
  }
  rep.h_tilde_maximal_abelian = true;
  for (const auto& g : even)
    if (!in_h_tilde(g) && std::all_of(h.begin(), h.end(), [&](const CliffordWord& x) { return commute(g, x); }))
      rep.h_tilde_maximal_abelian = false;

  // B = span of {0,1}, {0,2}, {0,4}: e_b maps row r to r xor b-index under Delta^+.
  std::vector<std::uint32_t> b_space;
  for (std::uint32_t m = 0; m < 8; ++m) {
    std::uint32_t s = 0;
    if (m & 1u) s ^= 0x03u;
    if (m & 2u) s ^= 0x05u;
    if (m & 4u) s ^= 0x11u;
    b_space.push_back(s);
  }
  rep.semidirect_factorization = true;
  for (const auto& g : even) {
    int count = 0;
    for (auto b : b_space)
      for (const auto& x : h) count += word_mul(CliffordWord{8, 1, b}, x) == g;
    if (count != 1) rep.semidirect_factorization = false;
  }
  rep.b_action = true;
  for (auto b : b_space) {
    const CliffordWord lb{8, 1, b};
    for (const auto& x : h) {
      const CliffordWord conj = word_mul(word_mul(lb, x), word_inverse(lb));
      const int expected = std::popcount(b & x.support) % 2 ? -x.sign : x.sign;
      if (!(conj == CliffordWord{8, expected, x.support})) rep.b_action = false;
    }
  }

  std::set<std::uint32_t> cosets;
  for (unsigned i = 0; i < 8; ++i) {
    // The coset e_i H~ is determined by the support class modulo H.
    std::uint32_t best = ~0u;
    for (const auto& x : h) best = std::min(best, (1u << i) ^ x.support);
    cosets.insert(best);
  }
  std::size_t odd_covered = 0;
  for (const auto& g : all) {
    if (g.even()) continue;
    bool found = false;
    for (unsigned i = 0; i < 8 && !found; ++i) found = in_h_tilde(word_mul(word_inverse(CliffordWord::generator(8, i)), g));
    odd_covered += found;
  }
  rep.coset_representatives = cosets.size() == 8 && odd_covered == 256;

  rep.commutator_law = true;
  for (const auto& a : even)
    for (const auto& b : even)
      if (commute(a, b) != (std::popcount(a.support & b.support) % 2 == 0)) rep.commutator_law = false;

  rep.homomorphisms = true;
  for (int s : {1, -1})
    for (const auto& a : even)
      for (const auto& b : even)
        if (!(spinor_rep(s, word_mul(a, b)) == spinor_rep(s, a) * spinor_rep(s, b))) rep.homomorphisms = false;

  const CliffordWord omega = CliffordWord::omega(8);
  const std::vector<CliffordWord> centre = {CliffordWord::one(8), omega, CliffordWord{8, -1, 0},
                                            CliffordWord{8, -1, omega.support}};
  auto sorted = [](std::vector<CliffordWord> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index() < b.index(); });
    return v;
  };
  rep.pass = rep.order == 512 && rep.even_order == 256 && sorted(rep.centre_even) == sorted(centre) &&
             rep.associative && rep.h_tilde_abelian && rep.h_tilde_elementary && rep.h_tilde_maximal_abelian &&
             rep.semidirect_factorization && rep.b_action && rep.coset_representatives && rep.commutator_law &&
             rep.homomorphisms;
  return rep;
}

}  // namespace theta_forge
