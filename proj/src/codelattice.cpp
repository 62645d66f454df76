#include "theta_forge/codelattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace theta_forge {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < d && m[swap][k] == 0) ++swap;
      if (swap == d) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[d - 1][d - 1];
}

// Solves t * B = s for square invertible B.
std::vector<Rational> solve_row(const std::vector<Ambient>& basis, const Ambient& s) {
  const std::size_t d = basis.size();
  // Augmented system B^T t^T = s^T.
  RatMatrix a(d, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = Rational(static_cast<long>(basis[j][i]));
    a[i][d] = Rational(static_cast<long>(s[i]));
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv][col] == 0) ++piv;
    if (piv == d) throw std::logic_error("lattice basis is singular");
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j <= d; ++j) a[col][j] *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= d; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> t(d);
  for (std::size_t i = 0; i < d; ++i) t[i] = a[i][d];
  return t;
}

struct Enumerator {
  std::size_t d = 0;
  unsigned p = 3;
  std::vector<std::vector<double>> q;  // Fincke-Pohst coefficients
  std::vector<double> t;               // shift in lattice coordinates
  const std::vector<Ambient>* basis = nullptr;
  Ambient shift;
  std::int64_t scaled_bound = 0;
  double bound = 0;
  const VectorVisitor* visit = nullptr;

  std::vector<double> y;
  std::vector<Ambient> partial;  // partial[i]: shift + sum_{k >= i} x_k b_k

  void run() {
    y.assign(d, 0.0);
    partial.assign(d + 1, shift);
    if (d == 0) {
      const auto sn = scaled_norm(p, shift);
      if (sn <= scaled_bound) (*visit)(shift, sn);
      return;
    }
    level(d - 1, bound);
  }

  void level(std::size_t i, double remaining) {
    double c = 0;
    for (std::size_t j = i + 1; j < d; ++j) c += q[i][j] * y[j];
    const double radius = std::sqrt(std::max(remaining, 0.0) / q[i][i]);
    // y_i = x_i + t_i must lie in [-c - radius, -c + radius].
    const double lo = std::ceil(-c - radius - t[i] - 1e-9);
    const double hi = std::floor(-c + radius - t[i] + 1e-9);
    const auto& b = (*basis)[i];
    for (double xv = lo; xv <= hi; xv += 1) {
      const auto x = static_cast<std::int64_t>(xv);
      y[i] = xv + t[i];
      const double dev = y[i] + c;
      const double rest = remaining - q[i][i] * dev * dev;
      if (rest < -1e-7 * (1 + bound)) continue;
      Ambient& cur = partial[i];
      const Ambient& above = partial[i + 1];
      for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = above[k] + x * b[k];
      if (i == 0) {
        const auto sn = scaled_norm(p, cur);
        if (sn <= scaled_bound) (*visit)(cur, sn);
      } else {
        level(i - 1, rest);
      }
    }
  }
};

Enumerator prepare(const CodeLattice& L, const std::optional<Word>& shift, const Rational& bound) {
  if (bound < 0) throw std::invalid_argument("enumeration bound must be nonnegative");
  Enumerator e;
  e.p = L.prime();
  e.d = L.rank();
  e.basis = &L.basis();
  e.shift = shift ? lift(L.prime(), *shift) : Ambient(L.length() * (L.prime() - 1), 0);
  if (e.shift.size() != L.length() * (L.prime() - 1)) throw std::invalid_argument("shift has the wrong length");

  const Rational scaled = bound * L.prime();
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  e.scaled_bound = fl.get_si();
  e.bound = bound.get_d() * (1 + 1e-9) + 1e-9;

  std::vector<Rational> t(e.d);
  bool shifted = std::any_of(e.shift.begin(), e.shift.end(), [](std::int64_t v) { return v != 0; });
  if (shifted) t = solve_row(L.basis(), e.shift);
  e.t.resize(e.d);
  for (std::size_t i = 0; i < e.d; ++i) e.t[i] = t[i].get_d();

  RatMatrix q(e.d, std::vector<Rational>(e.d));
  for (std::size_t i = 0; i < e.d; ++i)
    for (std::size_t j = 0; j < e.d; ++j) q[i][j] = Rational(L.gram()[i][j]);
  for (std::size_t i = 0; i < e.d; ++i) {
    for (std::size_t j = i + 1; j < e.d; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < e.d; ++k)
      for (std::size_t l = k; l < e.d; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  e.q.assign(e.d, std::vector<double>(e.d, 0.0));
  for (std::size_t i = 0; i < e.d; ++i)
    for (std::size_t j = i; j < e.d; ++j) e.q[i][j] = q[i][j].get_d();
  return e;
}

}  // namespace

std::vector<Ambient> p_basis(unsigned p) {
  std::vector<Ambient> rows;
  for (unsigned k = 0; k + 1 < p; ++k) {
    std::vector<BigInt> poly(k + 2);
    poly[k] = 1;
    poly[k + 1] = -1;
    const CycInt v = CycInt::from_polynomial(p, poly);
    Ambient row;
    for (const auto& c : v.coeffs()) row.push_back(c.get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

Ambient lift(unsigned p, const Word& w) {
  Ambient a(w.size() * (p - 1), 0);
  for (std::size_t i = 0; i < w.size(); ++i) a[i * (p - 1)] = w[i];
  return a;
}

std::vector<CycInt> to_cyclotomic(unsigned p, const Ambient& a) {
  const std::size_t n = a.size() / (p - 1);
  std::vector<CycInt> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> c(p - 1);
    for (std::size_t k = 0; k + 1 < p; ++k) c[k] = static_cast<long>(a[i * (p - 1) + k]);
    out.emplace_back(p, std::move(c));
  }
  return out;
}

Rational ambient_pairing(unsigned p, const Ambient& a, const Ambient& b) {
  // Tr(z^k z^{-l}) / p is (p-1)/p on the diagonal and -1/p elsewhere.
  BigInt total = 0;
  for (std::size_t start = 0; start < a.size(); start += p - 1) {
    long dotp = 0, sa = 0, sb = 0;
    for (std::size_t k = 0; k + 1 < p; ++k) {
      dotp += a[start + k] * b[start + k];
      sa += a[start + k];
      sb += b[start + k];
    }
    total += BigInt(static_cast<long>(p)) * dotp - BigInt(sa) * sb;
  }
  Rational r(total, BigInt(static_cast<long>(p)));
  r.canonicalize();
  return r;
}

std::int64_t scaled_norm(unsigned p, const Ambient& a) {
  std::int64_t total = 0;
  for (std::size_t start = 0; start < a.size(); start += p - 1) {
    std::int64_t sq = 0, s = 0;
    for (std::size_t k = 0; k + 1 < p; ++k) {
      sq += a[start + k] * a[start + k];
      s += a[start + k];
    }
    total += static_cast<std::int64_t>(p) * sq - s * s;
  }
  return total;
}

std::vector<CycInt> CodeLattice::basis_vector(std::size_t i) const { return to_cyclotomic(p_, basis_.at(i)); }

CodeLattice lattice_of_code(const Code& c) {
  const unsigned p = c.prime();
  if (p == 2) throw std::invalid_argument("lattice_of_code: p must be odd");
  if (!c.is_linear()) throw std::invalid_argument("lattice_of_code: code is not linear");
  if (!is_self_orthogonal(c))
    throw std::invalid_argument("lattice_of_code: code is not self-orthogonal, so rho^{-1}(C) is not even");

  CodeLattice L(c);
  L.p_ = p;
  L.n_ = c.length();
  const std::size_t block = p - 1;
  const auto pb = p_basis(p);

  std::vector<std::size_t> pivots;
  const auto rref = row_reduce(p, c.generators(), &pivots);
  std::vector<int> generator_at(L.n_, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) generator_at[pivots[r]] = static_cast<int>(r);

  for (std::size_t i = 0; i < L.n_; ++i) {
    // Pivot coordinates trade the last P-basis vector for the generator lift.
    const std::size_t count = generator_at[i] >= 0 ? block - 1 : block;
    for (std::size_t k = 0; k < count; ++k) {
      Ambient v(L.n_ * block, 0);
      std::copy(pb[k].begin(), pb[k].end(), v.begin() + static_cast<std::ptrdiff_t>(i * block));
      L.basis_.push_back(std::move(v));
    }
    if (generator_at[i] >= 0) L.basis_.push_back(lift(p, rref[static_cast<std::size_t>(generator_at[i])]));
  }

  const std::size_t d = L.basis_.size();
  L.gram_.assign(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Rational g = ambient_pairing(p, L.basis_[i], L.basis_[j]);
      if (g.get_den() != 1) throw std::logic_error("lattice_of_code: Gram matrix is not integral");
      L.gram_[i][j] = L.gram_[j][i] = g.get_num();
    }
  }
  if (!is_even(L)) throw std::logic_error("lattice_of_code: Gram matrix has an odd diagonal entry");
  BigInt expected;
  const long e = static_cast<long>(L.n_) - 2 * static_cast<long>(c.dimension());
  mpz_pow_ui(expected.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t(), static_cast<unsigned long>(e));
  if (discriminant(L) != expected) throw std::logic_error("lattice_of_code: unexpected discriminant");
  return L;
}

CodeLattice zero_code_lattice(unsigned p, std::size_t n) {
  return lattice_of_code(Code::from_generators(p, n, {}));
}

BigInt discriminant(const CodeLattice& L) { return bareiss_det(L.gram()); }

bool is_even(const CodeLattice& L) {
  for (std::size_t i = 0; i < L.rank(); ++i)
    if (!mpz_even_p(L.gram()[i][i].get_mpz_t())) return false;
  return true;
}

Rational minimal_norm(const CodeLattice& L) {
  if (L.rank() == 0) throw std::invalid_argument("minimal_norm: lattice of rank 0");
  Rational bound = 2;
  while (true) {
    std::int64_t best = -1;
    for_each_vector(L, std::nullopt, bound, [&](const Ambient&, std::int64_t sn) {
      if (sn > 0 && (best < 0 || sn < best)) best = sn;
    });
    if (best > 0) {
      Rational r(static_cast<long>(best), static_cast<long>(L.prime()));
      r.canonicalize();
      return r;
    }
    bound *= 2;
  }
}

void for_each_vector(const CodeLattice& L, const std::optional<Word>& shift, const Rational& bound,
                     const VectorVisitor& visit) {
  Enumerator e = prepare(L, shift, bound);
  e.visit = &visit;
  e.run();
}

std::vector<LatticeVector> short_vectors(const CodeLattice& L, const std::optional<Word>& shift,
                                         const Rational& bound) {
  std::vector<std::pair<std::int64_t, Ambient>> found;
  for_each_vector(L, shift, bound, [&](const Ambient& v, std::int64_t sn) { found.emplace_back(sn, v); });
  std::sort(found.begin(), found.end());
  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (const auto& [sn, v] : found) {
    Rational norm(static_cast<long>(sn), static_cast<long>(L.prime()));
    norm.canonicalize();
    out.push_back({to_cyclotomic(L.prime(), v), norm});
  }
  return out;
}

std::map<std::int64_t, std::uint64_t> norm_counts(const CodeLattice& L, const std::optional<Word>& shift,
                                                  const Rational& bound) {
  std::map<std::int64_t, std::uint64_t> counts;
  for_each_vector(L, shift, bound, [&](const Ambient&, std::int64_t sn) { ++counts[sn]; });
  return counts;
}

QSeries theta_series(const CodeLattice& L, const std::optional<Word>& shift, const Rational& order) {
  if (order < 0) throw std::invalid_argument("theta_series: order must be nonnegative");
  const auto p = static_cast<long>(L.prime());
  QSeries out(p, order);
  for (const auto& [sn, count] : norm_counts(L, shift, 2 * order)) {
    if (sn % 2 != 0) throw std::logic_error("theta_series: odd scaled norm");
    out.set_term(sn / 2, CycRat::integer(BigInt(static_cast<unsigned long>(count))));
  }
  return out;
}

QSeries coset_theta(unsigned p, const Word& w, const Rational& order) {
  for (auto d : w)
    if (d >= p) throw std::invalid_argument("coset_theta: digit out of range");
  return theta_series(zero_code_lattice(p, w.size()), w, order);
}

QSeries theta_class(unsigned p, unsigned j, const Rational& order) {
  return coset_theta(p, Word{static_cast<std::uint8_t>(j % p)}, order);
}

QSeries code_theta_by_cosets(const Code& c, const Rational& order) {
  if (c.prime() == 2) throw std::invalid_argument("code_theta_by_cosets: p must be odd");
  QSeries total(c.prime(), order);
  if (c.size() == 0) return total;
  const CodeLattice zero = zero_code_lattice(c.prime(), c.length());
  for (const auto& w : c.words()) total = total + theta_series(zero, w, order);
  return total;
}

}  // namespace theta_forge
