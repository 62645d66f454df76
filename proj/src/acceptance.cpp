#include "theta_forge/acceptance.hpp"

#include <chrono>
#include <complex>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "theta_forge/brute_lattice.hpp"
#include "theta_forge/cliffcode.hpp"
#include "theta_forge/codelattice.hpp"
#include "theta_forge/fpcode.hpp"
#include "theta_forge/hilbert_eval.hpp"
#include "theta_forge/octower.hpp"
#include "theta_forge/qexp.hpp"
#include "theta_forge/voarep.hpp"

namespace theta_forge {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAILED " << what;
    }
  }
  void note(const std::string& text) { detail << (detail.tellp() > 0 ? "; " : "") << text; }
};

BigInt int_coeff(const QSeries& s, const Rational& e) {
  const CycRat c = s.coefficient(e);
  if (!c.is_integer()) throw std::logic_error("expected an integer coefficient");
  return c.num().coeffs().front();
}

Code random_code(std::mt19937& rng, unsigned p, std::size_t max_n, std::size_t max_words, bool nonlinear) {
  while (true) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t count = 1 + rng() % max_words;
    std::vector<Word> words;
    for (std::size_t k = 0; k < count; ++k) {
      Word w(n);
      for (auto& d : w) d = static_cast<std::uint8_t>(rng() % p);
      words.push_back(w);
    }
    Code c = Code::from_words(p, n, words);
    if (!nonlinear || !c.is_linear()) return c;
  }
}

// Theta expansions for p = 3 against the printed truncations.
void criterion_1(Outcome& out) {
  const Rational order = 7;
  const QSeries t0 = theta_class(3, 0, order);
  const QSeries t1 = theta_class(3, 1, Rational(13, 3));

  // 1 + 6(q + q^2 + q^4 + 2q^7 ...)
  const std::map<long, long> printed0 = {{0, 1}, {1, 6}, {2, 6}, {3, 0}, {4, 6}, {5, 0}, {6, 0}, {7, 12}};
  std::ostringstream diff;
  for (const auto& [k, v] : printed0) {
    const BigInt got = int_coeff(t0, Rational(k));
    if (got != v) diff << (diff.tellp() > 0 ? ", " : "") << "q^" << k << " printed " << v << " computed " << got;
  }
  out.require(diff.tellp() == 0, "theta_0 against the printed expansion (" + diff.str() + ")");

  // Direct double sum over x^2 - xy + y^2.
  std::map<long, long> direct;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      const long e = x * x - x * y + y * y;
      if (e <= 7) ++direct[e];
    }
  bool double_sum = true;
  for (long k = 0; k <= 7; ++k) double_sum = double_sum && int_coeff(t0, Rational(k)) == direct[k];
  out.require(double_sum, "theta_0 against the double sum");
  if (double_sum) out.note("theta_0 equals the double sum " + t0.to_string());

  // 3q^{1/3}(1 + q + 2q^2 + 2q^4 + ...)
  const std::map<long, long> printed1 = {{1, 3}, {4, 3}, {7, 6}, {10, 0}, {13, 6}};
  bool ok1 = true;
  for (const auto& [k, v] : printed1) ok1 = ok1 && int_coeff(t1, Rational(k, 3)) == v;
  for (long k = 0; k <= 13; ++k)
    if (printed1.count(k) == 0) ok1 = ok1 && int_coeff(t1, Rational(k, 3)) == 0;
  out.require(ok1, "theta_1 against the printed expansion");
  if (ok1) out.note("theta_1 matches");
}

void criterion_2(Outcome& out) {
  const Rational cutoff = 3;
  const std::vector<QSeries> thetas = {theta_class(3, 0, cutoff), theta_class(3, 1, cutoff)};
  std::vector<Code> codes = {standard_code("tetracode")};
  std::mt19937 rng(2024);
  for (int k = 0; k < 10; ++k) codes.push_back(random_code(rng, 3, 4, 6, true));
  std::size_t agree = 0;
  for (const auto& c : codes) {
    const QSeries lhs = code_theta_by_cosets(c, cutoff);
    const QSeries rhs = compose_enumerator(weight_enumerator(c), thetas);
    agree += same_up_to(lhs, rhs, cutoff);
  }
  out.require(agree == codes.size(), "exact identity on " + std::to_string(codes.size() - agree) + " codes");
  out.note(std::to_string(agree) + "/" + std::to_string(codes.size()) + " codes agree up to q^3");
}

void criterion_3(Outcome& out) {
  using C = std::complex<double>;
  const std::vector<HilbertPoint> points = {
      {{C(0, 1), C(0, 1.3)}}, {{C(0.2, 1.1), C(-0.3, 1.5)}}, {{C(0.5, 2.0), C(0.1, 1.0)}}};
  std::mt19937 rng(55);
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    Code c = random_code(rng, 5, 2, 5, false);
    while (c.length() != 2) c = random_code(rng, 5, 2, 5, false);
    const auto rep = verify_alpbach(c, points, 1e-8);
    for (const auto& pt : rep.points) worst = std::max(worst, pt.residual);
    out.require(rep.pass, "numerical identity for code " + std::to_string(k));
  }
  std::ostringstream s;
  s << "max residual " << std::scientific << std::setprecision(2) << worst;
  out.note(s.str());
}

void criterion_4(Outcome& out) {
  const Code t = standard_code("tetracode");
  const CodeLattice L = lattice_of_code(t);
  out.require(L.rank() == 8, "rank 8");
  out.require(is_even(L), "even");
  out.require(discriminant(L) == 1, "discriminant 1");
  const auto brute = oracle::brute_norm_counts(3, 4, t.words(), 18);
  const auto fp = norm_counts(L, std::nullopt, Rational(6));
  out.require(brute == fp, "brute force and Fincke-Pohst agree");
  const std::vector<std::uint64_t> expected = {1, 240, 2160, 6720};
  std::ostringstream s;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto it = brute.find(static_cast<std::int64_t>(6 * k));
    const std::uint64_t got = it == brute.end() ? 0 : it->second;
    out.require(got == expected[k], "coefficient of q^" + std::to_string(k));
    s << (k ? ", " : "") << got;
  }
  out.note("theta coefficients " + s.str());
}

void criterion_5(Outcome& out) {
  const Code g = standard_code("golay12");
  out.require(g.size() == 729, "|C| = 729");
  out.require(is_self_dual(g), "self-dual");
  const CodeLattice L = lattice_of_code(g);
  out.require(L.rank() == 24, "rank 24");
  out.require(is_even(L), "even");
  out.require(discriminant(L) == 1, "discriminant 1");
  const auto counts = norm_counts(L, std::nullopt, Rational(4));
  const std::uint64_t n2 = counts.count(6) ? counts.at(6) : 0;
  const std::uint64_t n4 = counts.count(12) ? counts.at(12) : 0;
  // An even unimodular rank 24 lattice with R roots has theta E_4^3 + (R - 720) Delta.
  const QSeries e4 = theta_series(lattice_of_code(standard_code("tetracode")), std::nullopt, 2);
  const QSeries delta = series_pow(eta(3), 24);
  const QSeries model = e4 * e4 * e4 + CycRat::integer(BigInt(static_cast<long>(n2)) - 720) * delta;
  out.require(int_coeff(model, 2) == BigInt(static_cast<unsigned long>(n4)), "norm 4 count against the modular form");
  out.note("norm 2: " + std::to_string(n2) + ", norm 4: " + std::to_string(n4));
}

void criterion_6(Outcome& out) {
  for (unsigned p : {3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n)
      out.require(orbit_invariance_check(p, n, 3), "orbit invariance p=" + std::to_string(p) + " n=" + std::to_string(n));

  std::mt19937 rng(6);
  int ring_ok = 0;
  for (int k = 0; k < 20; ++k) {
    const unsigned p = k % 2 ? 5 : 3;
    auto pick = [&] {
      Word w(1 + rng() % 2);
      for (auto& d : w) d = static_cast<std::uint8_t>(rng() % p);
      return RepElement::of(orbit_of(p, w));
    };
    const RepElement a = pick(), b = pick();
    const Rational cut = 2;
    ring_ok += same_up_to(z_map(rep_mul(a, b), cut), z_map(a, cut) * z_map(b, cut), cut);
  }
  out.require(ring_ok == 20, "ring map on random pairs");

  for (unsigned p : {3u, 5u})
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto r = main_theorem_check(p, n);
      out.require(r.pass, "orbit/monomial bijection p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  out.note("orbit invariance, 20 ring-map pairs and the counts C(n+r, r) for n <= 8 checked");
}

void criterion_7(Outcome& out) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto r = main_theorem_check(3, n);
    std::set<std::vector<unsigned>> expected, got;
    for (std::size_t k = 0; k <= n; ++k) expected.insert({static_cast<unsigned>(n - k), static_cast<unsigned>(k)});
    for (const auto& o : enumerate_orbits(3, n)) got.insert(z_tilde(o).exponents);
    out.require(r.pass && r.orbit_count == n + 1 && got == expected, "grade " + std::to_string(n));
  }
  out.note("n+1 orbits and monomials for n <= 8");
}

void criterion_8(Outcome& out) {
  using C = std::complex<double>;
  double worst = 0;
  for (C z : {C(0, 1), C(0, 2), C(0.3, 1.5)}) {
    const auto r = verify_sl2f3_action(z, 1e-7);
    worst = std::max({worst, r.s0_residual, r.s1_residual, r.ss_residual});
    out.require(r.pass, "S/T formulas at z = " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
  }
  std::ostringstream s;
  s << "T exact, max S residual " << std::scientific << std::setprecision(2) << worst;
  out.note(s.str());
}

void criterion_9(Outcome& out) {
  out.require(e_matrices_satisfy_clifford_relations(), "E-matrix Clifford relations");
  const auto ind = induced_character_check();
  out.require(ind.pass, "induced characters");
  const auto bott = bott_check();
  out.require(bott.pass, "Bott isomorphism");
  out.require(triality_kernels().pass, "triality kernels");
  out.require(pauli_hamming().matches_hamming8, "Pauli diagonal subgroup");
  out.note("Bott rank " + std::to_string(bott.rank));
}

void criterion_10(Outcome& out) {
  const Code h = standard_code("hamming8");
  const auto pr = code_predicates(h);
  out.require(pr.self_dual.value_or(false), "self-dual");
  out.require(pr.doubly_even.value_or(false), "doubly even");
  out.require(pr.min_distance.value_or(0) == 4, "minimum distance 4");
  std::map<std::size_t, int> spectrum;
  for (const auto& w : h.words()) ++spectrum[hamming_weight(w)];
  out.require(spectrum == std::map<std::size_t, int>{{0, 1}, {4, 14}, {8, 1}}, "weight spectrum");
  out.note("weights {0:1, 4:14, 8:1}");
}

void criterion_11(Outcome& out) {
  const auto t5 = tower_check(5);
  out.require(t5.order == 960 && t5.perfect, "H perfect at n=5");
  out.require(!is_perfect(subgroup_H(4)), "H not perfect at n=4");
  for (std::size_t n : {5u, 6u})
    out.require(crossed_hom_space(n).h1_dim == 0, "H^1 vanishes at n=" + std::to_string(n));
  out.require(beta_form_check(8).pass, "commutator form at n=8");
  out.note("|H| = 960 perfect, H^1 = 0 for n = 5, 6");
}

struct Spec {
  const char* title;
  double limit;
  std::function<void(Outcome&)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all = {
      {"theta expansions for p = 3", 1, criterion_1},
      {"exact theta identity for p = 3 codes", 10, criterion_2},
      {"numerical theta identity for p = 5", 30, criterion_3},
      {"E8 from the tetracode", 10, criterion_4},
      {"Golay lattice", 300, criterion_5},
      {"representation ring maps", 60, criterion_6},
      {"grade-n bases for p = 3", 1, criterion_7},
      {"SL2(F3) action", 10, criterion_8},
      {"Clifford and Bott suite", 30, criterion_9},
      {"Hamming-8 properties", 1, criterion_10},
      {"Whitehead-tower group theory", 120, criterion_11},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion must lie between 1 and 11");
  const Spec& spec = specs()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  r.limit_seconds = spec.limit;
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.limit_seconds) out.require(false, "time limit");
  r.pass = out.pass;
  r.detail = out.detail.str();
  return r;
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  (" << std::fixed
    << std::setprecision(2) << r.seconds << " s, limit " << std::setprecision(0) << r.limit_seconds << " s)  "
    << r.detail;
  return s.str();
}

}  // namespace theta_forge
