#include "nhol/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "nhol/autc.hpp"
#include "nhol/forms.hpp"
#include "nhol/holo.hpp"
#include "nhol/oracle.hpp"
#include "nhol/pigroup.hpp"

namespace nhol {

namespace {

using json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string case_name;
  std::uint32_t prime = 0;  // 0 = not given
  std::string custom;
  std::string suite = "all";
  bool json = false;
  bool allow_small_p = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 0;  // 0 = not given
};

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions o;
  o.budget = cfg.budget;
  o.workers = cfg.workers;
  if (o.workers == 0) {
    o.workers = 1;
    if (const char* env = std::getenv("NHOL_WORKERS")) {
      char* end = nullptr;
      const unsigned long w = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && w > 0) o.workers = static_cast<unsigned>(w);
    }
  }
  return o;
}

Prime checked_prime(std::uint32_t p) {
  try {
    return Prime(p);
  } catch (const Error& e) {
    throw ConfigError(std::to_string(p) + " is not an odd prime");
  }
}

PiSpec read_custom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pi_spec(buf.str());
  } catch (const Error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Label checked_label(const std::string& name) {
  const auto label = parse_label(name);
  if (!label || *label == Label::custom) throw ConfigError("unknown case \"" + name + "\"");
  return *label;
}

// Catalog spec at an explicit or default prime, enforcing p >= 5 where required.
PiSpec catalog_spec(Label label, const RunConfig& cfg) {
  const std::uint32_t p = cfg.prime ? cfg.prime : hypothesis_min_prime(label);
  const Prime prime = checked_prime(p);
  if (p < hypothesis_min_prime(label) && !cfg.allow_small_p)
    throw ConfigError("case " + std::string(label_name(label)) + " needs p >= " +
                      std::to_string(hypothesis_min_prime(label)) + " (pass --allow-small-p to run anyway)");
  return catalog(label, prime);
}

PiSpec resolve_spec(const RunConfig& cfg) {
  if (!cfg.custom.empty() && !cfg.case_name.empty()) throw ConfigError("give either --case or --custom, not both");
  if (!cfg.custom.empty()) {
    PiSpec spec = read_custom(cfg.custom);
    if (cfg.prime && cfg.prime != spec.p.value())
      throw ConfigError("--prime disagrees with the prime in " + cfg.custom);
    return spec;
  }
  if (cfg.case_name.empty()) throw ConfigError("--case or --custom is required");
  return catalog_spec(checked_label(cfg.case_name), cfg);
}

json group_order_json(std::uint32_t p, std::size_t k) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > UINT64_MAX / p) return std::to_string(p) + "^" + std::to_string(k);
    v *= p;
  }
  return v;
}

json checks_json(const CheckReport& r) {
  json a = json::array();
  for (const auto& c : r.checks) a.push_back({{"name", c.name}, {"pass", c.pass}});
  return a;
}

json report_json(const TGReport& r) {
  json j;
  j["case"] = std::string(label_name(r.label));
  j["p"] = r.p;
  j["n"] = r.n;
  j["group_order"] = group_order_json(r.p, r.group_log_order);
  j["dim_s"] = r.dim_s;
  j["dim_sprime"] = r.dim_sprime;
  j["admissible"] = r.admissible;
  j["t_order"] = r.t_order;
  j["t_structure"] = r.t_structure;
  j["assumption_ok"] = r.assumption_ok;
  j["within_hypotheses"] = r.within_hypotheses;
  j["checks"] = checks_json(r.checks);
  return j;
}

void print_checks(std::ostream& out, const CheckReport& r) {
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.pass && !c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  const PiSpec spec = resolve_spec(cfg);
  const TGReport r = t_g_report(spec, solver_options(cfg));
  const bool has_expectation = catalog_expectation(spec.label, spec.p).has_value();
  const int code = r.within_hypotheses && !r.checks.all_passed() ? kExitMismatch : kExitOk;
  if (cfg.json) {
    out << report_json(r).dump(2) << '\n';
    return code;
  }
  out << "case         " << label_name(r.label) << '\n'
      << "p            " << r.p << '\n'
      << "n            " << r.n << '\n'
      << "|G|          " << r.p << '^' << r.group_log_order << " = " << group_order_json(r.p, r.group_log_order).dump()
      << '\n'
      << "dim S        " << r.dim_s << '\n'
      << "dim S'       " << r.dim_sprime << "  (" << r.sprime_basis << ")\n"
      << "admissible   " << r.admissible << '\n'
      << "T(G)         " << r.t_structure << "  (order " << r.t_order << ")\n"
      << "assumption   " << (r.assumption_ok ? "holds" : "fails, result is conditional") << '\n';
  if (r.within_hypotheses)
    out << "hypotheses   within\n";
  else if (has_expectation)
    out << "hypotheses   outside (p < " << hypothesis_min_prime(r.label) << " for this case)\n";
  else
    out << "hypotheses   no catalog expectation for this input\n";
  print_checks(out, r.checks);
  out << "result       " << (!r.within_hypotheses ? "not compared" : code == kExitOk ? "PASS" : "FAIL") << '\n';
  return code;
}

// ---- verify ------------------------------------------------------------------

struct Verifier {
  std::ostream& out;
  bool json_mode;
  json lines = json::array();
  std::size_t run = 0, failed = 0, warned = 0, skipped = 0;

  void add(const std::string& suite, const PiSpec& spec, const Check& c, bool counts) {
    ++run;
    std::string tag = c.pass ? "PASS" : counts ? "FAIL" : "WARN";
    if (!c.pass) ++(counts ? failed : warned);
    if (json_mode) {
      lines.push_back({{"suite", suite}, {"case", std::string(label_name(spec.label))}, {"p", spec.p.value()},
                       {"name", c.name}, {"pass", c.pass}, {"counted", counts}});
      return;
    }
    out << tag << "  " << suite << ' ' << label_name(spec.label) << " p=" << spec.p.value() << ' ' << c.name;
    if (!c.pass && !c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  void add_all(const std::string& suite, const PiSpec& spec, const CheckReport& r, bool counts) {
    for (const auto& c : r.checks) add(suite, spec, c, counts);
  }
  void note(const std::string& text) {
    if (!json_mode) out << "      " << text << '\n';
  }
  void skip(const std::string& suite, const std::string& what, const std::string& why) {
    ++skipped;
    if (!json_mode) out << "SKIP  " << suite << ' ' << what << "  (" << why << ")\n";
  }
};

CheckReport group_checks(const PiSpec& spec) {
  CheckReport r = verify_presentation(spec);
  std::mt19937_64 rng(7);
  const std::uint32_t p = spec.p.value();
  std::vector<GElement> xs;
  for (int i = 0; i < 60; ++i) xs.push_back(g_random(spec, rng));

  bool assoc = true, inverse = true, identity = true, power_hom = true;
  const GElement one = g_identity(spec);
  for (const auto& x : xs) {
    inverse = inverse && g_mul(spec, x, g_inv(spec, x)) == one && g_mul(spec, g_inv(spec, x), x) == one;
    identity = identity && g_mul(spec, one, x) == x && g_mul(spec, x, one) == x;
    for (const auto& y : xs) {
      power_hom = power_hom && g_pow(spec, g_mul(spec, x, y), p) == g_mul(spec, g_pow(spec, x, p), g_pow(spec, y, p));
      for (int k = 0; k < 3; ++k) {
        const GElement& z = xs[(k * 17 + y.v[0]) % xs.size()];
        assoc = assoc && g_mul(spec, g_mul(spec, x, y), z) == g_mul(spec, x, g_mul(spec, y, z));
      }
    }
  }
  r.add("associativity_sampled", assoc);
  r.add("inverses_sampled", inverse);
  r.add("identity_sampled", identity);
  r.add("power_map_homomorphism_sampled", power_hom);

  // x^p = pi(x) for x = (v, 0): exhaustive over v when small.
  std::uint64_t vs = 1;
  for (std::size_t i = 0; i < spec.n; ++i) vs *= p;
  bool linear = true;
  for (std::uint64_t idx = 0; idx < std::min<std::uint64_t>(vs, 4096); ++idx) {
    GElement x = one;
    std::uint64_t t = vs <= 4096 ? idx : rng();
    for (std::size_t i = 0; i < spec.n; ++i) x.v.set(i, static_cast<std::int64_t>(t % p)), t /= p;
    linear = linear && g_pow(spec, x, p) == g_central(spec, x.v * spec.pi);
  }
  r.add(vs <= 4096 ? "power_map_is_pi_exhaustive" : "power_map_is_pi_sampled", linear);

  const std::size_t log_order = spec.group_log_order();
  if (log_order <= 3 && p <= 5) {
    // Whole group, every triple.
    std::vector<GElement> all;
    for (std::uint64_t idx = 0; idx < vs * p; ++idx) {
      GElement x = one;
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < spec.n; ++i) x.v.set(i, static_cast<std::int64_t>(t % p)), t /= p;
      x.w.set(0, static_cast<std::int64_t>(t % p));
      all.push_back(x);
    }
    bool ok = true;
    for (const auto& x : all)
      for (const auto& y : all) {
        const GElement xy = g_mul(spec, x, y);
        for (const auto& z : all) ok = ok && g_mul(spec, xy, z) == g_mul(spec, x, g_mul(spec, y, z));
      }
    r.add("associativity_exhaustive", ok);
  }
  return r;
}

void autc_suite(Verifier& v, const PiSpec& spec, const SolverOptions& opts, bool counted) {
  CheckReport r;
  const GeneratorSet gs = autc_generators(spec, opts);
  const auto gens = gs.matrices();
  bool members = true, products = true;
  for (const auto& a : gens) members = members && is_autc(spec, a);
  for (const auto& a : gens)
    for (const auto& b : gens) products = products && is_autc(spec, a * b);
  r.add("generators_in_autc", members);
  r.add("generator_products_in_autc", products);

  std::vector<FpMatrix> pg;
  for (const auto& x : gs.p_gens) pg.push_back(x.alpha);
  try {
    const auto pcl = group_closure(pg, spec.n, spec.p, 200'000);
    const std::set<FpMatrix> pset(pcl.begin(), pcl.end());
    bool normal = true;
    for (const auto& q : gs.q_gens)
      for (const auto& x : pg) normal = normal && pset.count(inverse(q.alpha) * x * q.alpha);
    r.add("p_normalized_by_q", normal);
  } catch (const BudgetExceeded&) {
    v.skip("autc", std::string(label_name(spec.label)), "P too large to close");
  }

  const std::uint64_t candidates = candidate_count(autc_search_shape(spec), spec.p);
  if (candidates <= std::min<std::uint64_t>(opts.budget, 2'000'000)) {
    const auto found = enumerate_autc(spec, opts);
    const auto cl = group_closure(gens, spec.n, spec.p, 2 * found.size() + 1);
    const std::set<FpMatrix> a(found.begin(), found.end()), b(cl.begin(), cl.end());
    r.add("generated_group_equals_enumeration", a == b,
          std::to_string(found.size()) + " enumerated, " + std::to_string(cl.size()) + " generated");
    v.note(std::string(label_name(spec.label)) + " p=" + std::to_string(spec.p.value()) + ": |Aut^c(pi)| = " +
           std::to_string(found.size()));
  } else {
    v.skip("autc", std::string(label_name(spec.label)) + " p=" + std::to_string(spec.p.value()) + " enumeration",
           std::to_string(candidates) + " candidates");
  }
  v.add_all("autc", spec, r, true);

  const HomSearchResult h = search_equivariant_homs(spec, opts);
  v.add("autc", spec, {"no_equivariant_hom", h.only_trivial, std::to_string(h.homs) + " homs"}, counted);
}

void forms_suite(Verifier& v, const PiSpec& spec, const SolverOptions& opts, bool counts) {
  CheckReport r;
  const FormSpace s = solve_S(spec, opts), sp = solve_Sprime(spec, opts);
  const auto ex = catalog_expectation(spec.label, spec.p);
  r.add("dim_S_is_0", s.dim() == 0, "got " + std::to_string(s.dim()));
  if (ex) r.add("dim_Sprime", sp.dim() == ex->dim_sprime, "got " + std::to_string(sp.dim()));

  const auto gens = autc_generators(spec, opts).matrices();
  std::mt19937_64 rng(11);
  std::vector<FpMatrix> words;
  for (int k = 0; k < 20 && !gens.empty(); ++k) {
    FpMatrix w = FpMatrix::identity(spec.n, spec.p);
    for (int t = 0; t < 6; ++t) w = w * gens[rng() % gens.size()];
    words.push_back(w);
  }
  bool eq = true;
  for (const auto& f : s.basis) eq = eq && is_equivariant(f, words);
  for (const auto& f : sp.basis) eq = eq && is_equivariant(f, words);
  r.add("basis_equivariant_under_random_words", eq);

  FpMatrix sigma(spec.wedge_dim(), spec.wedge_dim(), spec.p);
  BilinearForm f(spec.n, spec.p);
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = 0; j < spec.n; ++j) {
      FpVector w(spec.wedge_dim(), spec.p);
      for (std::size_t m = 0; m < w.size(); ++m) w.set(m, static_cast<std::int64_t>(rng() % spec.p.value()));
      f.set_value(i, j, w);
    }
  const auto [sym, anti] = split(f);
  r.add("split_recombines", sym + anti == f && sym.symmetry_holds() && anti.symmetry_holds());
  v.add_all("forms", spec, r, counts);
}

void holo_suite(Verifier& v, const PiSpec& spec, const SolverOptions& opts, bool counts) {
  const TGReport r = t_g_report(spec, opts);
  for (const auto& c : r.checks.checks) v.add("holo", spec, c, counts || c.name != "assumption");
  v.add_all("holo", spec, power_map_check(spec), true);
  v.note(std::string(label_name(spec.label)) + " p=" + std::to_string(r.p) + ": T(G) = " + r.t_structure +
         ", order " + std::to_string(r.t_order));
}

void oracle_suite(Verifier& v, Prime p, const SolverOptions& opts) {
  const PiSpec spec = catalog(Label::n2, p);
  const OracleResult o = run_oracle(p, opts.budget);
  const TGReport r = t_g_report(spec, opts);
  v.add_all("oracle", spec, o.checks, true);
  v.add("oracle", spec, {"oracle_t_order_is_p_minus_1", o.t_order == p.value() - 1, "got " + std::to_string(o.t_order)},
        true);
  const bool agree = o.t_order == r.t_order;
  v.add("oracle", spec,
        {"pipeline_agrees", agree,
         "oracle " + std::to_string(o.t_order) + ", pipeline " + std::to_string(r.t_order)},
        r.assumption_ok);
  v.note("n2 p=" + std::to_string(p.value()) + ": |Aut(G)| = " + std::to_string(o.aut_order) + ", gammas = " +
         std::to_string(o.gamma_count) + ", oracle T = " + std::to_string(o.t_order) + ", pipeline T = " +
         std::to_string(r.t_order) + (r.assumption_ok ? "" : " (assumption fails for n2 here)") +
         (agree ? ", agree" : ", DISAGREE"));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  static const std::set<std::string> suites{"group", "autc", "forms", "holo", "oracle", "all"};
  if (!suites.count(cfg.suite)) throw ConfigError("unknown suite \"" + cfg.suite + "\"");
  const SolverOptions opts = solver_options(cfg);
  const bool all = cfg.suite == "all";
  Verifier v{out, cfg.json};

  std::vector<PiSpec> specs;
  if (!cfg.custom.empty() || !cfg.case_name.empty()) {
    specs.push_back(resolve_spec(cfg));
  } else {
    if (cfg.prime) checked_prime(cfg.prime);
    for (Label l : catalog_labels()) {
      const std::uint32_t p = cfg.prime ? cfg.prime : hypothesis_min_prime(l);
      specs.push_back(catalog(l, Prime(p)));
    }
  }
  const bool explicit_case = specs.size() == 1;

  for (const auto& spec : specs) {
    const Label l = spec.label;
    const bool catalog_case = catalog_expectation(l, spec.p).has_value();
    const bool within = within_hypotheses(l, spec.p);
    const bool small = catalog_case && !within;
    const std::string what = std::string(label_name(l)) + " p=" + std::to_string(spec.p.value());

    if (all || cfg.suite == "group") v.add_all("group", spec, group_checks(spec), true);
    if (small && !cfg.allow_small_p && !explicit_case) {
      if (!all && cfg.suite == "group") continue;
      if (all || cfg.suite != "oracle") v.skip(cfg.suite, what, "outside hypotheses; pass --allow-small-p");
      continue;
    }
    if (all || cfg.suite == "autc") autc_suite(v, spec, opts, within);
    if (!catalog_case && l != Label::custom) continue;  // zero3, zero4, n2: group and autc only
    if (all || cfg.suite == "forms") forms_suite(v, spec, opts, within || l == Label::custom);
    if (all || cfg.suite == "holo") holo_suite(v, spec, opts, within);
  }

  if (all || cfg.suite == "oracle") {
    const std::uint32_t p = cfg.prime ? cfg.prime : 3;
    if (p == 3 || p == 5) {
      if (explicit_case && specs[0].label != Label::n2 && !all)
        throw ConfigError("the oracle runs on case n2 only");
      if (!explicit_case || specs[0].label == Label::n2) oracle_suite(v, Prime(p), opts);
    } else if (!all) {
      throw ConfigError("the oracle supports p = 3 and p = 5 only");
    } else {
      v.skip("oracle", "n2 p=" + std::to_string(p), "oracle needs p in {3, 5}");
    }
  }

  if (cfg.json) {
    json j;
    j["suite"] = cfg.suite;
    j["checks"] = v.lines;
    j["failed"] = v.failed;
    j["warned"] = v.warned;
    j["skipped"] = v.skipped;
    out << j.dump(2) << '\n';
  } else {
    out << "verify " << cfg.suite << ": " << v.run << " checks, " << v.failed << " failed";
    if (v.warned) out << ", " << v.warned << " outside hypotheses";
    if (v.skipped) out << ", " << v.skipped << " skipped";
    out << '\n';
  }
  return v.failed ? kExitMismatch : kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const std::uint32_t p = cfg.prime ? cfg.prime : 3;
  const Prime prime = checked_prime(p);
  if (p != 3 && p != 5) throw ConfigError("the oracle supports p = 3 and p = 5 only");
  const SolverOptions opts = solver_options(cfg);
  const OracleResult o = run_oracle(prime, opts.budget);
  const TGReport r = t_g_report(catalog(Label::n2, prime), opts);
  const bool agree = o.t_order == r.t_order;
  const bool ok = o.checks.all_passed() && o.t_order == p - 1 && (agree || !r.assumption_ok);
  if (cfg.json) {
    json j;
    j["case"] = "n2";
    j["p"] = p;
    j["group_order"] = o.group_order;
    j["aut_order"] = o.aut_order;
    j["gamma_count"] = o.gamma_count;
    j["t_order"] = o.t_order;
    j["pipeline_t_order"] = r.t_order;
    j["pipeline_assumption_ok"] = r.assumption_ok;
    j["agree"] = agree;
    j["checks"] = checks_json(o.checks);
    out << j.dump(2) << '\n';
  } else {
    out << "case            n2\n"
        << "p               " << p << '\n'
        << "|G|             " << o.group_order << '\n'
        << "|Aut(G)|        " << o.aut_order << '\n'
        << "gammas          " << o.gamma_count << '\n'
        << "T(G) oracle     " << o.t_order << '\n'
        << "T(G) pipeline   " << r.t_order << (r.assumption_ok ? "" : "  (assumption fails, conditional)") << '\n'
        << "agreement       " << (agree ? "yes" : "no") << '\n';
    print_checks(out, o.checks);
    out << "result          " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_canonicalize(const RunConfig& cfg, std::ostream& out) {
  if (cfg.custom.empty()) throw ConfigError("canonicalize needs a pi file (--custom PATH)");
  const PiSpec spec = read_custom(cfg.custom);
  RankOneForm form{Label::custom, FpMatrix(1, 1, spec.p)};
  try {
    form = canonical_rank_one(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRankOne) throw;
    if (cfg.json) {
      out << json{{"rank_one", false}, {"reason", e.what()}}.dump(2) << '\n';
    } else {
      out << "not rank one: " << e.what() << '\n';
    }
    return kExitNotRankOne;
  }
  if (cfg.json) {
    json rows = json::array();
    for (std::size_t i = 0; i < form.basis_change.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < form.basis_change.cols(); ++j) row.push_back(form.basis_change(i, j));
      rows.push_back(row);
    }
    out << json{{"rank_one", true}, {"label", std::string(label_name(form.label))}, {"basis_change", rows}}.dump(2)
        << '\n';
  } else {
    out << "label         " << label_name(form.label) << '\n' << "basis change  (rows = new basis)\n";
    for (std::size_t i = 0; i < form.basis_change.rows(); ++i) {
      out << "  ";
      for (std::size_t j = 0; j < form.basis_change.cols(); ++j) out << (j ? " " : "") << form.basis_change(i, j);
      out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple holomorphs of the class-two p-groups G_pi", "nhol"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--case", cfg.case_name, "catalog case: a b c d e zero3 zero4 n2");
    sub->add_option("--prime", cfg.prime, "odd prime p");
    sub->add_option("--custom", cfg.custom, "file with a custom pi");
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_flag("--allow-small-p", cfg.allow_small_p, "run cases a, c, e below p = 5");
    sub->add_option("--budget", cfg.budget, "enumeration budget")->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "worker threads (default NHOL_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
  };
  auto* report = app.add_subcommand("report", "compute T(G) and compare with the catalog");
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  auto* oracle = app.add_subcommand("oracle", "brute-force T(G) at order p^3");
  auto* canon = app.add_subcommand("canonicalize", "bring a rank-one pi to catalog form");
  for (auto* s : {report, verify, oracle, canon}) common(s);
  verify->add_option("--suite", cfg.suite, "group, autc, forms, holo, oracle or all");
  canon->add_option("path", cfg.custom, "pi file (same as --custom)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (report->parsed()) return cmd_report(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (canon->parsed()) return cmd_canonicalize(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse ? kExitConfig : kExitMismatch;
  }
  return kExitConfig;
}

}  // namespace nhol
