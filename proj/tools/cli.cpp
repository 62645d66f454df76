#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "theta_forge/acceptance.hpp"
#include "theta_forge/cliffcode.hpp"
#include "theta_forge/codelattice.hpp"
#include "theta_forge/fpcode.hpp"
#include "theta_forge/hilbert_eval.hpp"
#include "theta_forge/octower.hpp"
#include "theta_forge/qexp.hpp"
#include "theta_forge/voarep.hpp"

namespace theta_forge::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, csv, pretty };

struct VerificationFailed {};

Code resolve_code(const std::string& spec) {
  if (spec == "tetracode" || spec == "hamming8" || spec == "golay12") return standard_code(spec);
  std::ifstream probe(spec);
  if (!probe) throw std::invalid_argument("unknown code '" + spec + "' (not a built-in name or readable file)");
  return read_code_file(spec);
}

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad list '" + text + "'");
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("bad list '" + text + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("complex numbers are written re,im: '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    const double re = std::stod(text.substr(0, comma), &a);
    const double im = std::stod(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument("");
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad complex number '" + text + "'");
  }
}

// One point per line, r coordinates "re,im" separated by whitespace.
std::vector<HilbertPoint> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read points file '" + path + "'");
  std::vector<HilbertPoint> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    HilbertPoint pt;
    std::string tok;
    while (ls >> tok) pt.z.push_back(parse_complex(tok));
    if (!pt.z.empty()) points.push_back(pt);
  }
  if (points.empty()) throw std::invalid_argument("points file '" + path + "' has no points");
  return points;
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json cyc_json(const CycRat& c) {
  json coeffs = json::array();
  for (const auto& v : c.num().coeffs()) coeffs.push_back(v.get_str());
  return json{{"coeffs", coeffs}, {"den", c.den().get_str()}};
}

json series_json(const QSeries& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) {
    Rational e(k, s.denominator());
    e.canonicalize();
    terms.push_back(json{{"exp", rational_string(e)}, {"coef", cyc_json(c)}});
  }
  return json{{"denominator", s.denominator()},
              {"cutoff", rational_string(s.cutoff())},
              {"terms", terms},
              {"text", s.to_string()}};
}

json enumerator_json(const WeightEnumerator& w) {
  json out = json::array();
  for (const auto& [profile, count] : w.coefficients) out.push_back(json{{"profile", profile}, {"count", count}});
  return out;
}

json words_json(const std::vector<CliffordWord>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_pretty(const json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      emit_pretty(value, out, indent + "  ");
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void emit(const json& j, Format f, std::ostream& out) {
  switch (f) {
    case Format::json:
      out << j.dump(2) << "\n";
      return;
    case Format::csv:
      if (j.is_object() && j.contains("terms")) {
        out << "exp,coeffs,den\n";
        for (const auto& t : j["terms"]) {
          std::string coeffs;
          for (const auto& c : t["coef"]["coeffs"]) coeffs += (coeffs.empty() ? "" : ";") + c.get<std::string>();
          out << t["exp"].get<std::string>() << "," << coeffs << "," << t["coef"]["den"].get<std::string>() << "\n";
        }
      } else if (j.is_array()) {
        if (j.empty()) return;
        std::string header;
        for (const auto& [key, v] : j.front().items()) header += (header.empty() ? "" : ",") + key;
        out << header << "\n";
        for (const auto& row : j) {
          std::string line;
          bool first = true;
          for (const auto& [key, v] : row.items()) {
            line += (first ? "" : ",") + scalar_text(v);
            first = false;
          }
          out << line << "\n";
        }
      } else {
        out << "key,value\n";
        for (const auto& [key, value] : j.items()) out << key << "," << scalar_text(value) << "\n";
      }
      return;
    case Format::pretty:
      if (j.is_object() && j.contains("text") && j.contains("terms")) {
        out << j["text"].get<std::string>() << "\n";
        for (const auto& [key, value] : j.items())
          if (key != "denominator" && key != "cutoff" && key != "terms" && key != "text")
            out << key << ": " << scalar_text(value) << "\n";
      } else if (j.is_object() && j.contains("matrix_text")) {
        out << j["matrix_text"].get<std::string>();
      } else if (j.is_array()) {
        for (const auto& row : j) {
          emit_pretty(row, out, "");
          out << "\n";
        }
      } else {
        emit_pretty(j, out, "");
      }
      return;
  }
}

json criterion_json(const CriterionResult& r) {
  return json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Codes, lattices, theta series and the groups around them"};
  app.name("theta-forge");
  app.require_subcommand(1);
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();

  std::function<json()> action;
  bool fails = false;

  // code
  auto* code_cmd = app.add_subcommand("code", "Code properties and weight enumerator");
  std::string code_spec;
  bool code_dual = false, code_words = false;
  code_cmd->add_option("--code", code_spec, "Built-in name (tetracode, hamming8, golay12) or code file")->required();
  code_cmd->add_flag("--dual", code_dual, "Report on the dual code");
  code_cmd->add_flag("--words", code_words, "List the words");
  code_cmd->callback([&] {
    action = [&] {
      Code c = resolve_code(code_spec);
      if (code_dual) c = dual_code(c);
      const auto pr = code_predicates(c);
      json j{{"p", c.prime()}, {"n", c.length()}, {"size", c.size()}, {"linear", c.is_linear()}};
      j["dimension"] = c.is_linear() ? json(c.dimension()) : json(nullptr);
      j["self_orthogonal"] = pr.self_orthogonal ? json(*pr.self_orthogonal) : json(nullptr);
      j["self_dual"] = pr.self_dual ? json(*pr.self_dual) : json(nullptr);
      j["doubly_even"] = pr.doubly_even ? json(*pr.doubly_even) : json(nullptr);
      j["min_distance"] = pr.min_distance ? json(*pr.min_distance) : json(nullptr);
      j["weight_enumerator"] = enumerator_json(weight_enumerator(c));
      if (code_words) {
        json ws = json::array();
        for (const auto& w : c.words()) ws.push_back(std::vector<unsigned>(w.begin(), w.end()));
        j["words"] = ws;
      }
      return j;
    };
  });

  // lattice
  auto* lat_cmd = app.add_subcommand("lattice", "Lattice rho^{-1}(C) of a self-orthogonal code");
  std::string lat_code;
  bool lat_info = false;
  std::string lat_theta;
  lat_cmd->add_option("--code", lat_code, "Built-in name or code file")->required();
  lat_cmd->add_flag("--info", lat_info, "Rank, discriminant, evenness and minimal norm (default)");
  lat_cmd->add_option("--theta", lat_theta, "Also print the theta series up to this exponent");
  lat_cmd->callback([&] {
    action = [&] {
      const Code c = resolve_code(lat_code);
      const CodeLattice L = lattice_of_code(c);
      json j{{"p", c.prime()},
             {"n", c.length()},
             {"rank", L.rank()},
             {"discriminant", discriminant(L).get_str()},
             {"even", is_even(L)},
             {"minimal_norm", rational_string(minimal_norm(L))}};
      if (!lat_theta.empty()) j["theta"] = series_json(theta_series(L, std::nullopt, parse_rational(lat_theta)));
      return j;
    };
  });

  // qexp
  auto* q_cmd = app.add_subcommand("qexp", "Truncated q-expansions");
  std::string q_kind = "eta", q_order = "3", q_code;
  long q_power = 1;
  unsigned q_prime = 3, q_class = 0;
  q_cmd->add_option("--kind", q_kind, "eta, theta or enumerator")
      ->check(CLI::IsMember({"eta", "theta", "enumerator"}))
      ->capture_default_str();
  q_cmd->add_option("--order", q_order, "Exponent cutoff (rational)")->capture_default_str();
  q_cmd->add_option("--power", q_power, "Power of the series (negative allowed)")->capture_default_str();
  q_cmd->add_option("--prime", q_prime, "Prime for theta classes")->capture_default_str();
  q_cmd->add_option("--class", q_class, "Symbol class j of theta_j")->capture_default_str();
  q_cmd->add_option("--code", q_code, "Code for W_C(theta_0, ..., theta_r)");
  q_cmd->callback([&] {
    action = [&] {
      const Rational order = parse_rational(q_order);
      QSeries s;
      if (q_kind == "eta") {
        // eta^k with k < 0 needs the base series further out.
        const Rational extra = q_power < 0 ? Rational(-q_power, 12) : Rational(0);
        s = series_pow(eta(order + extra), q_power);
      } else if (q_kind == "theta") {
        s = series_pow(theta_class(q_prime, q_class, order), q_power);
      } else {
        if (q_code.empty()) throw std::invalid_argument("--kind enumerator needs --code");
        const Code c = resolve_code(q_code);
        std::vector<QSeries> thetas;
        for (unsigned j = 0; j < symbol_class_count(c.prime()); ++j) thetas.push_back(theta_class(c.prime(), j, order));
        s = series_pow(compose_enumerator(weight_enumerator(c), thetas), q_power);
      }
      return series_json(s.cutoff() > order ? s.truncated(order) : s);
    };
  });

  // theta
  auto* th_cmd = app.add_subcommand("theta", "Theta series of P + j, P^n + w or a code");
  unsigned th_prime = 3, th_class = 0;
  std::string th_order = "3", th_word, th_code;
  th_cmd->add_option("--prime", th_prime, "Odd prime")->capture_default_str();
  auto* th_class_opt = th_cmd->add_option("--class", th_class, "Symbol class j");
  auto* th_word_opt = th_cmd->add_option("--word", th_word, "Coset word, comma separated digits");
  auto* th_code_opt = th_cmd->add_option("--code", th_code, "Sum over the cosets of a code");
  th_class_opt->excludes(th_word_opt)->excludes(th_code_opt);
  th_word_opt->excludes(th_code_opt);
  th_cmd->add_option("--order", th_order, "Exponent cutoff (rational)")->capture_default_str();
  th_cmd->callback([&] {
    action = [&] {
      const Rational order = parse_rational(th_order);
      if (!th_word.empty()) {
        const auto digits = parse_list(th_word);
        return series_json(coset_theta(th_prime, Word(digits.begin(), digits.end()), order));
      }
      if (!th_code.empty()) return series_json(code_theta_by_cosets(resolve_code(th_code), order));
      return series_json(theta_class(th_prime, th_class, order));
    };
  });

  // rep
  auto* rep_cmd = app.add_subcommand("rep", "Representation ring of the Eisenstein vertex algebras");
  rep_cmd->require_subcommand(1);
  unsigned rep_prime = 3;
  std::string rep_orbit, rep_order = "3", rep_code;
  std::size_t rep_n = 0, rep_rank_limit = 16;
  auto* zmap_cmd = rep_cmd->add_subcommand("zmap", "eta^{n(p-1)} times the partition function of an orbit");
  zmap_cmd->add_option("--prime", rep_prime, "Odd prime")->capture_default_str();
  zmap_cmd->add_option("--orbit", rep_orbit, "Profile l0,l1,...,lr")->required();
  zmap_cmd->add_option("--order", rep_order, "Exponent cutoff")->capture_default_str();
  zmap_cmd->callback([&] {
    action = [&] { return series_json(z_map(RepElement::of(parse_orbit(rep_prime, rep_orbit)), parse_rational(rep_order))); };
  });
  auto* part_cmd = rep_cmd->add_subcommand("partition", "Partition function and conformal data of an orbit");
  part_cmd->add_option("--prime", rep_prime, "Odd prime")->capture_default_str();
  part_cmd->add_option("--orbit", rep_orbit, "Profile l0,l1,...,lr")->required();
  part_cmd->add_option("--order", rep_order, "Exponent cutoff")->capture_default_str();
  part_cmd->callback([&] {
    action = [&] {
      const auto [z, meta] = partition_function(parse_orbit(rep_prime, rep_orbit), parse_rational(rep_order));
      json j = series_json(z);
      j["central_charge"] = meta.central_charge;
      j["conformal_weight"] = rational_string(meta.conformal_weight);
      j["leading_exponent"] = rational_string(meta.leading_exponent);
      return j;
    };
  });
  auto* main_cmd = rep_cmd->add_subcommand("check-main", "Orbit/monomial correspondence in grade n");
  main_cmd->add_option("--prime", rep_prime, "Odd prime")->capture_default_str();
  main_cmd->add_option("--n", rep_n, "Grade")->required();
  main_cmd->add_option("--rank-limit", rep_rank_limit, "Largest lattice rank for the independence check")
      ->capture_default_str();
  main_cmd->callback([&] {
    action = [&] {
      const auto r = main_theorem_check(rep_prime, rep_n, rep_rank_limit);
      fails = !r.pass;
      json j{{"p", r.p},
             {"n", r.n},
             {"orbits", r.orbit_count},
             {"monomials", r.monomial_count},
             {"z_tilde_injective", r.z_tilde_injective}};
      j["images_independent"] = r.images_independent ? json(*r.images_independent) : json(nullptr);
      if (r.images_independent) j["independence_cutoff"] = rational_string(r.independence_cutoff);
      j["status"] = r.isomorphism_claimed ? "bijective" : "well-defined, bijectivity not asserted";
      j["pass"] = r.pass;
      return j;
    };
  });
  auto* mod_cmd = rep_cmd->add_subcommand("module", "Class of the module M_C of a code");
  mod_cmd->add_option("--code", rep_code, "Built-in name or code file")->required();
  mod_cmd->callback([&] {
    action = [&] {
      const RepElement m = module_of_code(resolve_code(rep_code));
      json terms = json::array();
      for (const auto& [profile, c] : m.terms) terms.push_back(json{{"profile", profile}, {"coef", cyc_json(c)}});
      return json{{"p", m.p}, {"terms", terms}};
    };
  });

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Verification suites");
  ver_cmd->require_subcommand(1);
  auto* alp_cmd = ver_cmd->add_subcommand("alpbach", "theta_C = W_C(theta_0, ..., theta_r)");
  unsigned alp_prime = 0;
  std::string alp_code, alp_points, alp_order = "3";
  double alp_tol = 1e-8;
  alp_cmd->add_option("--prime", alp_prime, "Expected prime of the code");
  alp_cmd->add_option("--code", alp_code, "Built-in name or code file")->required();
  alp_cmd->add_option("--points", alp_points, "Points of H^r, one per line as re,im pairs (numerical mode)");
  alp_cmd->add_option("--tol", alp_tol, "Residual tolerance in numerical mode")->capture_default_str();
  alp_cmd->add_option("--order", alp_order, "Exponent cutoff in exact mode")->capture_default_str();
  alp_cmd->callback([&] {
    action = [&] {
      const Code c = resolve_code(alp_code);
      if (alp_prime != 0 && alp_prime != c.prime())
        throw std::invalid_argument("--prime " + std::to_string(alp_prime) + " does not match the code over F_" +
                                    std::to_string(c.prime()));
      if (!alp_points.empty()) {
        const auto rep = verify_alpbach(c, read_points(alp_points), alp_tol);
        json pts = json::array();
        for (const auto& p : rep.points) {
          json z = json::array();
          for (const auto& v : p.z.z) z.push_back(complex_json(v));
          pts.push_back(json{{"point", z},
                             {"lhs", complex_json(p.lhs)},
                             {"rhs", complex_json(p.rhs)},
                             {"residual", p.residual},
                             {"galois_residual", p.galois_residual},
                             {"pass", p.pass}});
        }
        fails = !rep.pass;
        return json{{"mode", "numerical"}, {"tol", alp_tol}, {"points", pts}, {"pass", rep.pass}};
      }
      const Rational order = parse_rational(alp_order);
      std::vector<QSeries> thetas;
      for (unsigned j = 0; j < symbol_class_count(c.prime()); ++j) thetas.push_back(theta_class(c.prime(), j, order));
      const QSeries lhs = code_theta_by_cosets(c, order);
      const QSeries rhs = compose_enumerator(weight_enumerator(c), thetas);
      const bool ok = same_up_to(lhs, rhs, order);
      fails = !ok;
      return json{{"mode", "exact"}, {"order", rational_string(order)}, {"lhs", lhs.to_string()},
                  {"rhs", rhs.to_string()}, {"pass", ok}};
    };
  });
  auto* sl2_cmd = ver_cmd->add_subcommand("sl2", "S and T formulas for theta_0, theta_1 at p = 3");
  std::string sl2_z = "0.3,1.5";
  double sl2_tol = 1e-7;
  sl2_cmd->add_option("--z", sl2_z, "Point re,im of the upper half plane")->capture_default_str();
  sl2_cmd->add_option("--tol", sl2_tol, "Residual tolerance")->capture_default_str();
  sl2_cmd->callback([&] {
    action = [&] {
      const auto r = verify_sl2f3_action(parse_complex(sl2_z), sl2_tol);
      fails = !r.pass;
      return json{{"z", complex_json(r.z)},         {"s0_residual", r.s0_residual}, {"s1_residual", r.s1_residual},
                  {"t0_residual", r.t0_residual}, {"t1_residual", r.t1_residual}, {"ss_residual", r.ss_residual},
                  {"t_exact", r.t_exact},         {"pass", r.pass}};
    };
  });
  auto* all_cmd = ver_cmd->add_subcommand("all", "Run every acceptance criterion");
  std::string level = "desk";
  bool timings = false;
  all_cmd->add_option("--level", level, "Scale of the suite")->check(CLI::IsMember({"desk"}))->capture_default_str();
  all_cmd->add_flag("--timings", timings, "Include running times (output is then not byte-stable)");
  all_cmd->callback([&] {
    action = [&] {
      json rows = json::array();
      for (int id = 1; id <= kCriterionCount; ++id) {
        err << "criterion " << id << "/" << kCriterionCount << "..." << std::endl;
        const auto r = run_criterion(id);
        json row = criterion_json(r);
        if (timings) row["seconds"] = r.seconds;
        rows.push_back(row);
        fails = fails || !r.pass;
      }
      return rows;
    };
  });

  // clifford
  auto* cl_cmd = app.add_subcommand("clifford", "Clifford groups, spinors and Bott periodicity");
  cl_cmd->require_subcommand(1);
  auto* clv_cmd = cl_cmd->add_subcommand("verify", "Run all Clifford checks");
  clv_cmd->callback([&] {
    action = [&] {
      const bool rel = e_matrices_satisfy_clifford_relations();
      const auto ph = pauli_hamming();
      const auto ind = induced_character_check();
      const auto bott = bott_check();
      const auto tri = triality_kernels();
      const auto grp = clifford_group_check();
      json lifts = json::array();
      for (unsigned i = 1; i <= 7; ++i) lifts.push_back(b_lift(i).to_string());
      const bool ok = rel && ph.matches_hamming8 && ind.pass && bott.pass && tri.pass && grp.pass;
      fails = !ok;
      return json{
          {"e_matrices_clifford_relations", rel},
          {"pauli_diagonals_are_hamming8", ph.matches_hamming8},
          {"group",
           json{{"order", grp.order},
                {"even_order", grp.even_order},
                {"centre_even", words_json(grp.centre_even)},
                {"h_tilde_maximal_abelian", grp.h_tilde_maximal_abelian},
                {"semidirect_factorization", grp.semidirect_factorization},
                {"coset_representatives", grp.coset_representatives},
                {"commutator_law", grp.commutator_law},
                {"spinor_homomorphisms", grp.homomorphisms},
                {"pass", grp.pass}}},
          {"b_lifts", lifts},
          {"induced_characters",
           json{{"elements", ind.elements},
                {"mismatches_plus", ind.mismatches_plus},
                {"mismatches_minus", ind.mismatches_minus},
                {"dimension", ind.dim_plus},
                {"pass", ind.pass}}},
          {"bott",
           json{{"rank", bott.rank},
                {"homomorphism", bott.homomorphism},
                {"omega_is_sigma3", bott.omega_is_s3},
                {"e1_is_sigma1", bott.e1_is_s1},
                {"pauli_bijection", bott.pauli_bijection},
                {"restriction", bott.restriction},
                {"pass", bott.pass}}},
          {"triality",
           json{{"ker_plus", words_json(tri.ker_plus)},
                {"ker_minus", words_json(tri.ker_minus)},
                {"ker_pi", words_json(tri.ker_pi)},
                {"pass", tri.pass}}},
          {"pass", ok}};
    };
  });
  auto* cld_cmd = cl_cmd->add_subcommand("delta", "Matrix of a Clifford word");
  std::string cl_word;
  std::string cl_rep = "plus";
  bool cl_negative = false;
  cld_cmd->add_option("--word", cl_word, "Generator indices, e.g. 0,1")->required();
  cld_cmd->add_option("--rep", cl_rep, "plus, minus (8x8 spinors) or full (16x16)")
      ->check(CLI::IsMember({"plus", "minus", "full"}))
      ->capture_default_str();
  cld_cmd->add_flag("--negative", cl_negative, "Multiply the word by -1");
  cld_cmd->callback([&] {
    action = [&] {
      const auto idx = parse_list(cl_word);
      for (auto i : idx)
        if (i >= 8) throw std::invalid_argument("generator indices must lie in 0..7");
      const CliffordWord w = CliffordWord::from_indices(8, idx, cl_negative ? -1 : 1);
      const SignedMatrix m = cl_rep == "full" ? bott_rep(w) : spinor_rep(cl_rep == "plus" ? 1 : -1, w);
      return json{{"word", w.to_string()}, {"rep", cl_rep}, {"matrix", m.dense()}, {"matrix_text", m.to_string()}};
    };
  });

  // tower
  auto* tw_cmd = app.add_subcommand("tower", "Hyperoctahedral Whitehead tower");
  tw_cmd->require_subcommand(1);
  auto* twc_cmd = tw_cmd->add_subcommand("check", "Order, perfectness and H^1 of H = A_n x| (F_2^n)^ev");
  std::size_t tw_n = 5;
  twc_cmd->add_option("--n", tw_n, "Degree, at most 6")->capture_default_str();
  twc_cmd->callback([&] {
    action = [&] {
      const auto r = tower_check(tw_n);
      return json{{"n", r.n}, {"order", r.order}, {"perfect", r.perfect}, {"h1_dim", r.h1_dim}};
    };
  });

  std::vector<const char*> argv{"theta-forge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Format format = format_name == "csv" ? Format::csv : format_name == "pretty" ? Format::pretty : Format::json;
  try {
    max_norm_cap();
    if (!action) return 2;
    emit(action(), format, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return fails ? 1 : 0;
}

}  // namespace theta_forge::cli
