// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "nhol/autc.hpp"
#include "nhol/holo.hpp"
#include "nhol/linalg.hpp"
#include "nhol/oracle.hpp"
#include "support.hpp"

using namespace nhol;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<Label> kCases{Label::a, Label::b, Label::c, Label::d, Label::e};

std::string tag(Label l, std::uint32_t p) { return "(" + std::string(label_name(l)) + "," + std::to_string(p) + ")"; }

// ---- 1 ---------------------------------------------------------------------

void t_g_table(Outcome& o) {
  struct Row {
    Label l;
    std::uint32_t p;
    std::uint64_t order;
    const char* structure;
  };
  const std::vector<Row> rows{{Label::a, 5, 4, "C4"},  {Label::b, 3, 2, "C2"}, {Label::b, 5, 4, "C4"},
                              {Label::c, 5, 4, "C4"},  {Label::d, 3, 2, "C2"}, {Label::d, 5, 4, "C4"},
                              {Label::e, 5, 16, "C4 x C4"}};
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& r : rows) {
    const TGReport rep = t_g_report(catalog(r.l, Prime(r.p)));
    o.require(rep.t_order == r.order, tag(r.l, r.p) + " |T| = " + std::to_string(rep.t_order));
    o.require(rep.t_structure == r.structure, tag(r.l, r.p) + " T = " + rep.t_structure);
    o.require(rep.checks.all_passed(), tag(r.l, r.p) + " internal checks");
  }
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail << rows.size() << " cases in " << dt << " s";
}

// ---- 2 ---------------------------------------------------------------------

void s_trivial(Outcome& o) {
  const std::vector<std::pair<Label, std::uint32_t>> runs{
      {Label::a, 5}, {Label::b, 3}, {Label::b, 5}, {Label::c, 5}, {Label::d, 3},
      {Label::d, 5}, {Label::e, 5}, {Label::b, 7}, {Label::d, 7}};
  for (const auto& [l, p] : runs) {
    const std::size_t d = solve_S(catalog(l, Prime(p))).dim();
    o.require(d == 0, tag(l, p) + " dim S = " + std::to_string(d));
  }
  if (o.pass) o.detail << runs.size() << " runs";
}

// ---- 3 ---------------------------------------------------------------------

void sprime_dims(Outcome& o) {
  for (Label l : kCases) {
    const PiSpec s = catalog(l, Prime(hypothesis_min_prime(l)));
    const FormSpace sp = solve_Sprime(s);
    const std::size_t want = l == Label::e ? 2 : 1;
    o.require(sp.dim() == want, tag(l, s.p) + " dim S' = " + std::to_string(sp.dim()));
    std::vector<FpVector> expected{delta_lambda(s, 1).as_vector()};
    if (l == Label::e) expected.push_back(delta_star(s, 1).as_vector());
    std::vector<FpVector> both = expected;
    for (const auto& f : sp.basis) both.push_back(f.as_vector());
    o.require(rank(FpMatrix::from_rows(both)) == rank(FpMatrix::from_rows(expected)),
              tag(l, s.p) + " basis leaves the expected span");
  }
}

// ---- 4 ---------------------------------------------------------------------

void admissible_counts(Outcome& o) {
  for (Label l : kCases)
    for (std::uint32_t p : {3u, 5u}) {
      if (p < hypothesis_min_prime(l)) continue;
      const PiSpec s = catalog(l, Prime(p));
      const AdmissibleSet a = admissible_taus(s);
      const std::size_t want = l == Label::e ? (p - 1) * (p - 1) : p - 1;
      o.require(a.taus.size() == want, tag(l, p) + " admissible = " + std::to_string(a.taus.size()));
      o.require(a.inadmissible == 0, tag(l, p) + " has inadmissible invertible taus");
      if (l == Label::e) continue;
      // The only excluded commutant element is tau = 0, i.e. lambda = -1/2.
      o.require(a.singular == 1, tag(l, p) + " singular = " + std::to_string(a.singular));
      const std::uint32_t minus_half = (p - 1) / 2;
      const FpMatrix tau = tau_from_sigma(FpMatrix::scalar(s.wedge_dim(), minus_half, s.p));
      o.require(tau.is_zero(), tag(l, p) + " tau(-1/2) != 0");
      for (const auto& t : a.taus)
        o.require(t.tau == FpMatrix::scalar(s.wedge_dim(), t.tau(0, 0), s.p) && t.tau(0, 0) != 0,
                  tag(l, p) + " non-scalar admissible tau");
    }
  // case e: excluded exactly where kappa = +-lambda
  const PiSpec s = catalog(Label::e, Prime(5));
  const FpMatrix t = sigma_of(delta_star(s, 1));
  std::set<FpMatrix> got;
  for (const auto& x : admissible_taus(s).taus) got.insert(x.tau);
  std::set<FpMatrix> want;
  for (std::int64_t l = 0; l < 5; ++l)
    for (std::int64_t k = 0; k < 5; ++k)
      if ((l - k) % 5 != 0 && (l + k) % 5 != 0)
        want.insert(FpMatrix::scalar(6, l, s.p) + t.scaled(static_cast<std::uint32_t>(k)));
  o.require(got == want, "(e,5) admissible set is not {kappa != +-lambda}");
}

// ---- 5 ---------------------------------------------------------------------

void e_group_law(Outcome& o) {
  const PiSpec s = catalog(Label::e, Prime(5));
  const FpMatrix t = sigma_of(delta_star(s, 1));
  auto tau = [&](std::int64_t l, std::int64_t k) {
    return FpMatrix::scalar(6, l, s.p) + t.scaled(static_cast<std::uint32_t>(oracle::md(k, 5)));
  };
  std::map<FpMatrix, std::pair<std::int64_t, std::int64_t>> coords;
  for (std::int64_t l = 0; l < 5; ++l)
    for (std::int64_t k = 0; k < 5; ++k) coords[tau(l, k)] = {l, k};

  const auto elems = admissible_taus(s).taus;
  o.require(elems.size() == 16, "expected 16 admissible parameters");
  std::size_t matched = 0;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const auto [l1, k1] = coords.at(x.tau);
      const auto [l2, k2] = coords.at(y.tau);
      const auto [sigma, pair] = sprime_compose(s, sigma_from_tau(x.tau), x.pair, sigma_from_tau(y.tau), y.pair);
      matched += tau_from_sigma(sigma) == tau(l1 * l2 + k1 * k2, l1 * k2 + l2 * k1);
    }
  o.require(matched == 256, std::to_string(matched) + "/256 products match");
  if (o.pass) o.detail << "256/256 products";
}

// ---- 6 ---------------------------------------------------------------------

void oracle_agreement(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint32_t p : {3u, 5u}) {
    const OracleResult r = run_oracle(Prime(p));
    o.require(r.checks.all_passed(), "oracle checks at p=" + std::to_string(p));
    o.require(r.t_order == p - 1, "oracle T at p=" + std::to_string(p) + " is " + std::to_string(r.t_order));
    const TGReport rep = t_g_report(catalog(Label::n2, Prime(p)));
    if (rep.assumption_ok)
      o.require(rep.t_order == r.t_order, "pipeline disagrees at p=" + std::to_string(p));
    if (o.pass)
      o.detail << "p=" << p << ": oracle " << r.t_order << ", pipeline " << rep.t_order
               << (rep.assumption_ok ? " (compared)" : " (assumption fails, not compared)") << "; ";
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail << dt << " s";
}

// ---- 7 ---------------------------------------------------------------------

void autc_orders(Outcome& o) {
  const std::vector<std::pair<Label, std::size_t>> want{
      {Label::a, 9 * 4}, {Label::b, 9 * 48}, {Label::c, 27 * 2 * 48}, {Label::d, 243 * 2 * 48}, {Label::e, 27 * 48}};
  for (const auto& [l, n] : want) {
    const std::size_t got = enumerate_autc(catalog(l, Prime(3)), {kDefaultBudget, 4, false}).size();
    o.require(got == n, tag(l, 3) + " |Aut^c| = " + std::to_string(got));
  }
  for (std::uint32_t p : {3u, 5u})
    for (Label l : kCases) {
      const PiSpec s = catalog(l, Prime(p));
      for (const auto& g : generator_catalog(s).matrices()) o.require(is_autc(s, g), tag(l, p) + " generator");
    }
}

// ---- 8 ---------------------------------------------------------------------

void assumption(Outcome& o) {
  for (Label l : kCases)
    for (std::uint32_t p : {3u, 5u}) {
      if (p < hypothesis_min_prime(l)) continue;
      o.require(check_no_equivariant_hom(catalog(l, Prime(p))), tag(l, p) + " has a nontrivial hom");
    }
}

// ---- 9 ---------------------------------------------------------------------

void group_arithmetic(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (Label l : catalog_labels()) {
      const PiSpec s = catalog(l, Prime(p));
      o.require(verify_presentation(s).all_passed(), tag(l, p) + " presentation");
      const WedgeBasis b(s.n);
      for (std::size_t m = 0; m < b.size(); ++m) {
        const auto [j, k] = b.pairs()[m];
        o.require(g_comm(s, g_generator(s, j), g_generator(s, k)) == g_central(s, FpVector::unit(b.size(), m, s.p)),
                  tag(l, p) + " commutator identification");
      }
      for (std::size_t i = 0; i < s.n; ++i)
        o.require(g_pow(s, g_generator(s, i), p) == g_central(s, s.pi.row(i)), tag(l, p) + " power relation");
    }
  const PiSpec s = catalog(Label::n2, Prime(3));
  std::vector<GElement> all;
  for (std::uint32_t idx = 0; idx < 27; ++idx) {
    GElement g = g_identity(s);
    g.v.set(0, idx % 3);
    g.v.set(1, idx / 3 % 3);
    g.w.set(0, idx / 9);
    all.push_back(g);
  }
  bool assoc = true;
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) assoc = assoc && g_mul(s, g_mul(s, x, y), z) == g_mul(s, x, g_mul(s, y, z));
  o.require(assoc, "associativity at order 27");
}

// ---- 10 --------------------------------------------------------------------

using Block = std::function<oracle::Mat(std::int64_t s, std::int64_t t, const oracle::Mat& a, std::int64_t d)>;

struct Component {
  std::vector<int> basis;
  Block action;
};

// Rows of `m` indexed by a component: the block on the component must match
// and everything outside it must vanish.
bool component_ok(const oracle::Mat& m, const Component& c, std::int64_t s, std::int64_t t, const oracle::Mat& a,
                  std::int64_t d, std::int64_t p) {
  const oracle::Mat want = c.action(s, t, a, d);
  for (std::size_t r = 0; r < c.basis.size(); ++r)
    for (std::size_t col = 0; col < m.size(); ++col) {
      std::int64_t expect = 0;
      for (std::size_t q = 0; q < c.basis.size(); ++q)
        if (static_cast<std::size_t>(c.basis[q]) == col) expect = oracle::md(want[r][q], p);
      if (m[c.basis[r]][col] != expect) return false;
    }
  return true;
}

oracle::Mat scalar1(std::int64_t x) { return {{x}}; }
oracle::Mat scaled(const oracle::Mat& a, std::int64_t x) {
  return {{a[0][0] * x, a[0][1] * x}, {a[1][0] * x, a[1][1] * x}};
}

void module_tables(Outcome& o) {
  const std::int64_t p = 5;
  const Prime prime(5);
  const auto gl2 = oracle::gl2(p);
  const oracle::Mat none{{1, 0}, {0, 1}};

  struct Case {
    Label label;
    bool uses_s, uses_t, uses_a;
    std::function<oracle::Mat(std::int64_t, std::int64_t, const oracle::Mat&, std::int64_t)> alpha;
    std::vector<Component> wedge, sym;
  };
  auto diag_block = [](std::size_t n, std::vector<std::int64_t> head, const oracle::Mat* a) {
    oracle::Mat m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < head.size(); ++i) m[i][i] = head[i];
    if (a)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m[head.size() + i][head.size() + j] = (*a)[i][j];
    return m;
  };

  const std::vector<Case> cases{
      {Label::a, true, true, false,
       [&](auto s, auto t, auto&, auto) { return diag_block(3, {s, 1, t}, nullptr); },
       {{{0}, [](auto s, auto, auto&, auto) { return scalar1(s); }},
        {{1}, [](auto s, auto t, auto&, auto) { return scalar1(s * t); }},
        {{2}, [](auto, auto t, auto&, auto) { return scalar1(t); }}},
       {{{0}, [](auto s, auto, auto&, auto) { return scalar1(s * s); }},
        {{1}, [](auto s, auto, auto&, auto) { return scalar1(s); }},
        {{2}, [](auto s, auto t, auto&, auto) { return scalar1(s * t); }},
        {{3}, [](auto, auto, auto&, auto) { return scalar1(1); }},
        {{4}, [](auto, auto t, auto&, auto) { return scalar1(t); }},
        {{5}, [](auto, auto t, auto&, auto) { return scalar1(t * t); }}}},
      {Label::b, false, false, true,
       [&](auto, auto, auto& a, auto d) { return diag_block(3, {d}, &a); },
       {{{0, 1}, [](auto, auto, auto& a, auto d) { return scaled(a, d); }},
        {{2}, [](auto, auto, auto&, auto d) { return scalar1(d); }}},
       {{{0}, [](auto, auto, auto&, auto d) { return scalar1(d * d); }},
        {{1, 2}, [](auto, auto, auto& a, auto d) { return scaled(a, d); }}}},
      {Label::c, true, false, true,
       [&](auto s, auto, auto& a, auto) { return diag_block(4, {s, 1}, &a); },
       {{{0}, [](auto s, auto, auto&, auto) { return scalar1(s); }},
        {{1, 2}, [](auto s, auto, auto& a, auto) { return scaled(a, s); }},
        {{3, 4}, [](auto, auto, auto& a, auto) { return a; }},
        {{5}, [](auto, auto, auto&, auto d) { return scalar1(d); }}},
       {{{0}, [](auto s, auto, auto&, auto) { return scalar1(s * s); }},
        {{1}, [](auto s, auto, auto&, auto) { return scalar1(s); }},
        {{2, 3}, [](auto s, auto, auto& a, auto) { return scaled(a, s); }},
        {{4}, [](auto, auto, auto&, auto) { return scalar1(1); }},
        {{5, 6}, [](auto, auto, auto& a, auto) { return a; }}}},
      {Label::d, true, false, true,
       [&](auto s, auto, auto& a, auto d) { return diag_block(4, {d, s}, &a); },
       {{{0}, [](auto s, auto, auto&, auto d) { return scalar1(s * d); }},
        {{1, 2}, [](auto, auto, auto& a, auto d) { return scaled(a, d); }},
        {{3, 4}, [](auto s, auto, auto& a, auto) { return scaled(a, s); }},
        {{5}, [](auto, auto, auto&, auto d) { return scalar1(d); }}},
       {{{0}, [](auto, auto, auto&, auto d) { return scalar1(d * d); }},
        {{1}, [](auto s, auto, auto&, auto d) { return scalar1(s * d); }},
        {{2, 3}, [](auto, auto, auto& a, auto d) { return scaled(a, d); }},
        {{4}, [](auto s, auto, auto&, auto) { return scalar1(s * s); }},
        {{5, 6}, [](auto s, auto, auto& a, auto) { return scaled(a, s); }}}},
      {Label::e, false, false, true,
       [&](auto, auto, auto& a, auto d) { return diag_block(4, {d, 1}, &a); },
       {{{0}, [](auto, auto, auto&, auto d) { return scalar1(d); }},
        {{1, 2}, [](auto, auto, auto& a, auto d) { return scaled(a, d); }},
        {{3, 4}, [](auto, auto, auto& a, auto) { return a; }},
        {{5}, [](auto, auto, auto&, auto d) { return scalar1(d); }}},
       {{{0}, [](auto, auto, auto&, auto d) { return scalar1(d * d); }},
        {{1}, [](auto, auto, auto&, auto d) { return scalar1(d); }},
        {{2, 3}, [](auto, auto, auto& a, auto d) { return scaled(a, d); }},
        {{4}, [](auto, auto, auto&, auto) { return scalar1(1); }},
        {{5, 6}, [](auto, auto, auto& a, auto) { return a; }}}},
  };

  std::size_t elements = 0;
  for (const auto& c : cases) {
    const PiSpec spec = catalog(c.label, prime);
    const std::vector<oracle::Mat> as = c.uses_a ? gl2 : std::vector<oracle::Mat>{none};
    bool ok = true;
    for (std::int64_t s = 1; s < (c.uses_s ? p : 2); ++s)
      for (std::int64_t t = 1; t < (c.uses_t ? p : 2); ++t)
        for (const auto& a : as) {
          const std::int64_t d = oracle::det2(a, p);
          const oracle::Mat alpha = c.alpha(s, t, a, d);
          const FpMatrix am = from_mat(alpha, prime);
          ++elements;
          if (!is_autc(spec, am)) {
            ok = false;
            continue;
          }
          const oracle::Mat wedge = to_mat(induced_hat(am));
          const oracle::Mat sym = oracle::sym_square(alpha, p);
          for (const auto& comp : c.wedge) ok = ok && component_ok(wedge, comp, s, t, a, d, p);
          for (const auto& comp : c.sym) ok = ok && component_ok(sym, comp, s, t, a, d, p);
        }
    o.require(ok, tag(c.label, 5) + " table mismatch");
  }
  if (o.pass) o.detail << elements << " elements of Q";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"T(G) for the catalog cases", t_g_table},
      {"S trivial", s_trivial},
      {"S' dimensions and spans", sprime_dims},
      {"admissible tau counts", admissible_counts},
      {"case e group law", e_group_law},
      {"oracle agreement at order p^3", oracle_agreement},
      {"Aut^c orders and generators", autc_orders},
      {"no equivariant homs", assumption},
      {"group arithmetic", group_arithmetic},
      {"Q-module tables at p = 5", module_tables},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  " << criteria[i].first;
    const std::string d = o.detail.str();
    if (!d.empty()) std::cout << "  (" << d << ')';
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
