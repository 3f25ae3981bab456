#include "nhol/holo.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nhol/linalg.hpp"
#include "nhol/wedge.hpp"

namespace nhol {

namespace {

FpMatrix reshape(const FpVector& x, std::size_t c) {
  return FpMatrix(c, c, x.raw(), x.modulus());
}

// pi * hat(eta) computed only through the rows of hat(eta) that pi reaches.
class CriterionTester {
 public:
  explicit CriterionTester(const PiSpec& spec) : spec_(spec), basis_(spec.n) {
    for (std::size_t m = 0; m < spec.wedge_dim(); ++m)
      if (!spec.pi.transposed().row(m).is_zero()) support_.push_back(m);
  }

  bool holds(const FpMatrix& eta, const FpMatrix& tau) const {
    const std::size_t n = spec_.n, c = spec_.wedge_dim();
    const std::uint64_t p = spec_.p.value();
    std::vector<std::uint64_t> ph(n * c, 0);
    for (std::size_t r : support_) {
      const auto [j, k] = basis_.pairs()[r];
      for (std::size_t m = 0; m < c; ++m) {
        const auto [s, t] = basis_.pairs()[m];
        const std::uint64_t h = (std::uint64_t{eta(j, s)} * eta(k, t) + p * p - std::uint64_t{eta(j, t)} * eta(k, s)) % p;
        if (!h) continue;
        for (std::size_t i = 0; i < n; ++i) ph[i * c + m] += std::uint64_t{spec_.pi(i, r)} * h % p;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < c; ++m) {
        std::uint64_t lhs = 0, rhs = 0;
        for (std::size_t l = 0; l < c; ++l) lhs += ph[i * c + l] % p * tau(l, m);
        for (std::size_t k = 0; k < n; ++k) rhs += std::uint64_t{eta(i, k)} * spec_.pi(k, m);
        if (lhs % p != rhs % p) return false;
      }
    return true;
  }

 private:
  const PiSpec& spec_;
  WedgeBasis basis_;
  std::vector<std::size_t> support_;
};

std::uint32_t inv_mod_p2(std::uint32_t k, std::uint32_t p) {
  const std::uint64_t m = std::uint64_t{p} * p;
  for (std::uint64_t x = 1; x < m; ++x)
    if (x * k % m == 1) return static_cast<std::uint32_t>(x);
  throw Error(ErrorCode::ZeroInverse, "not invertible mod p^2");
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    unsigned e = 0;
    while (n % q == 0) n /= q, ++e;
    if (e) out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

std::vector<FpMatrix> commutant(const PiSpec& spec, const SolverOptions& opts) {
  const std::size_t c = spec.wedge_dim();
  const auto gens = autc_generators(spec, opts).matrices();
  std::vector<FpMatrix> basis;
  if (gens.empty()) {
    for (std::size_t k = 0; k < c * c; ++k) basis.push_back(reshape(FpVector::unit(c * c, k, spec.p), c));
    return basis;
  }
  // Unknown sigma(a, b) sits at column a * c + b.
  FpMatrix sys(gens.size() * c * c, c * c, spec.p);
  std::size_t row = 0;
  for (const auto& g : gens) {
    const FpMatrix h = induced_hat(g);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j, ++row)
        for (std::size_t k = 0; k < c; ++k) {
          sys.set(row, i * c + k, std::int64_t{sys(row, i * c + k)} + h(k, j));
          sys.set(row, k * c + j, std::int64_t{sys(row, k * c + j)} - h(i, k));
        }
  }
  for (const auto& x : nullspace(sys)) basis.push_back(reshape(x, c));
  return basis;
}

bool in_commutant(const FpMatrix& tau, const std::vector<FpMatrix>& gens) {
  for (const auto& g : gens) {
    const FpMatrix h = induced_hat(g);
    if (!(tau * h == h * tau)) return false;
  }
  return true;
}

bool satisfies_criterion(const PiSpec& spec, const FpMatrix& eta, const FpMatrix& tau) {
  return spec.pi * induced_hat(eta) * tau == eta * spec.pi;
}

CriterionResult criterion_solve(const PiSpec& spec, const FpMatrix& tau, const SolverOptions& opts) {
  const std::size_t n = spec.n;
  const Prime p = spec.p;
  if (tau.rows() != spec.wedge_dim() || tau.cols() != spec.wedge_dim())
    throw Error(ErrorCode::DimMismatch, "tau must act on Lambda^2 V");
  if (!in_commutant(tau, autc_generators(spec, opts).matrices()))
    throw Error(ErrorCode::NotInCommutant, "tau does not commute with hat(Aut^c(pi))");
  if (!is_invertible(tau)) throw Error(ErrorCode::NotInvertible, "tau is singular");

  const CriterionTester tester(spec);
  auto found = [&](FpMatrix eta, const char* how) {
    FpMatrix zeta = induced_hat(eta) * tau;
    return CriterionResult{CriterionStatus::found, ResPair{std::move(eta), std::move(zeta)}, how};
  };

  for (std::uint32_t c = 1; c < p.value(); ++c) {
    FpMatrix eta = FpMatrix::scalar(n, c, p);
    if (tester.holds(eta, tau)) return found(std::move(eta), "scalar");
  }

  std::uint64_t diag_count = 1;
  for (std::size_t i = 0; i < n && diag_count <= opts.budget; ++i) diag_count *= p.value() - 1;
  if (diag_count <= opts.budget) {
    std::vector<std::uint32_t> d(n, 1);
    FpMatrix eta = FpMatrix::identity(n, p);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) eta.set(i, i, d[i]);
      if (tester.holds(eta, tau)) return found(eta, "diagonal");
      std::size_t k = n;
      while (k > 0 && d[k - 1] == p.value() - 1) d[--k] = 1;
      if (k == 0) break;
      ++d[k - 1];
    }
  }

  // eta maps ker(pi) into itself, so the Aut^c search shape applies.
  const MatrixShape shape = autc_search_shape(spec);
  const std::uint64_t total = candidate_count(shape, p);
  if (total > opts.budget) return {CriterionStatus::unknown, std::nullopt, {}};
  std::optional<FpMatrix> hit;
  constexpr std::uint64_t kChunk = 1 << 14;
  for (std::uint64_t begin = 0; begin < total && !hit; begin += kChunk)
    enumerate_matrices_range(shape, p, begin, begin + kChunk, [&](const FpMatrix& eta) {
      if (!hit && tester.holds(eta, tau) && is_invertible(eta)) hit = eta;
    });
  if (hit) return found(std::move(*hit), "exhaustive");
  return {CriterionStatus::none, std::nullopt, "exhaustive"};
}

bool coset_equal(const PiSpec& spec, const ResPair& a, const ResPair& b) {
  if (!is_invertible(a.eta) || !is_invertible(a.zeta)) return false;
  const FpMatrix delta = b.eta * inverse(a.eta);
  if (!is_invertible(delta) || !is_autc(spec, delta)) return false;
  return b.zeta * inverse(a.zeta) == induced_hat(delta);
}

FpMatrix sigma_from_tau(const FpMatrix& tau) {
  const Prime p = tau.modulus();
  return (tau - FpMatrix::identity(tau.rows(), p)).scaled(inv_mod(2, p));
}

FpMatrix tau_from_sigma(const FpMatrix& sigma) {
  return FpMatrix::identity(sigma.rows(), sigma.modulus()) + sigma.scaled(2);
}

std::pair<FpMatrix, ResPair> sprime_compose(const PiSpec& spec, const FpMatrix& sigma1, const ResPair& r1,
                                            const FpMatrix& sigma2, const ResPair& r2) {
  const BilinearForm moved = transform_form(delta_sigma(spec, sigma1), r2.eta, r2.zeta);
  const FpMatrix sigma = sigma_of(moved + delta_sigma(spec, sigma2));
  return {sigma, ResPair{r1.eta * r2.eta, r1.zeta * r2.zeta}};
}

AdmissibleSet admissible_taus(const PiSpec& spec, const SolverOptions& opts) {
  AdmissibleSet out;
  out.basis = commutant(spec, opts);
  const std::size_t d = out.basis.size(), c = spec.wedge_dim();
  const std::uint32_t p = spec.p.value();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= p;
    if (total > opts.budget) throw BudgetExceeded(total, opts.budget, "commutant enumeration");
  }
  std::size_t unknown = 0;
  std::vector<std::uint32_t> params(d, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = d; i-- > 0;) params[i] = static_cast<std::uint32_t>(r % p), r /= p;
    FpMatrix tau(c, c, spec.p);
    for (std::size_t i = 0; i < d; ++i) tau = tau + out.basis[i].scaled(params[i]);
    if (!is_invertible(tau)) {
      ++out.singular;
      continue;
    }
    CriterionResult res = criterion_solve(spec, tau, opts);
    if (res.status == CriterionStatus::found)
      out.taus.push_back({params, std::move(tau), std::move(*res.pair), res.strategy});
    else if (res.status == CriterionStatus::none)
      ++out.inadmissible;
    else
      ++unknown;
  }
  if (unknown)
    throw Error(ErrorCode::UnknownAdmissibility,
                std::to_string(unknown) + " commutant elements could not be decided within budget");
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const std::vector<std::size_t>& table, std::size_t order,
                                              std::size_t identity) {
  auto power = [&](std::size_t x, std::uint64_t k) {
    std::size_t r = identity;
    for (std::uint64_t i = 0; i < k; ++i) r = table[r * order + x];
    return r;
  };
  // Per prime q: exponents of the cyclic q-factors, largest first.
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> primary;
  for (auto [q, a] : factorize(order)) {
    std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
    unsigned prev_log = 0;
    std::uint64_t qk = 1;
    for (unsigned k = 1; prev_log < a; ++k) {
      qk *= q;
      std::uint64_t count = 0;
      for (std::size_t x = 0; x < order; ++x) count += power(x, qk) == identity;
      unsigned log = 0;
      while (count % q == 0 && count > 1) count /= q, ++log;
      at_least.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<unsigned> exps;
    for (unsigned j = 0; j < (at_least.empty() ? 0 : at_least[0]); ++j) {
      unsigned e = 0;
      for (unsigned m : at_least) e += m > j;
      exps.push_back(e);
    }
    primary.emplace_back(q, exps);
  }
  std::size_t count = 0;
  for (const auto& [q, e] : primary) count = std::max(count, e.size());
  std::vector<std::uint64_t> inv(count, 1);
  for (const auto& [q, e] : primary)
    for (std::size_t j = 0; j < e.size(); ++j)
      for (unsigned t = 0; t < e[j]; ++t) inv[j] *= q;
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::string structure_name(const std::vector<std::uint64_t>& invariants) {
  if (invariants.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    s += (i ? " x C" : "C") + std::to_string(invariants[i]);
  return s;
}

ResGroup res_sprime_group(const PiSpec& spec, const SolverOptions& opts) {
  ResGroup g;
  g.elements = admissible_taus(spec, opts).taus;
  const std::size_t order = g.order();
  std::map<FpMatrix, std::size_t> by_tau;
  for (std::size_t i = 0; i < order; ++i) by_tau.emplace(g.elements[i].tau, i);
  const FpMatrix one = FpMatrix::identity(spec.wedge_dim(), spec.p);
  const auto id_it = by_tau.find(one);
  g.checks.add("identity_present", id_it != by_tau.end());
  if (id_it == by_tau.end()) return g;
  g.identity = id_it->second;

  std::vector<FpMatrix> sigmas;
  for (const auto& e : g.elements) sigmas.push_back(sigma_from_tau(e.tau));
  g.table.assign(order * order, 0);
  bool closed = true, solves = true, same_coset = true;
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      const auto [sigma, pair] = sprime_compose(spec, sigmas[i], g.elements[i].pair, sigmas[j], g.elements[j].pair);
      const FpMatrix tau = tau_from_sigma(sigma);
      const auto it = by_tau.find(tau);
      if (it == by_tau.end()) {
        closed = false;
        continue;
      }
      g.table[i * order + j] = it->second;
      if (!satisfies_criterion(spec, pair.eta, tau)) solves = false;
      if (!coset_equal(spec, pair, g.elements[it->second].pair)) same_coset = false;
    }
  g.checks.add("closed_under_composition", closed);
  g.checks.add("composite_solves_criterion", solves);
  g.checks.add("composite_in_expected_coset", same_coset);
  if (!closed) return g;

  bool identity_ok = true, inverses = true, assoc = true;
  g.abelian = true;
  for (std::size_t i = 0; i < order; ++i) {
    identity_ok = identity_ok && g.table[g.identity * order + i] == i && g.table[i * order + g.identity] == i;
    bool has_inv = false;
    for (std::size_t j = 0; j < order; ++j) {
      has_inv = has_inv || g.table[i * order + j] == g.identity;
      g.abelian = g.abelian && g.table[i * order + j] == g.table[j * order + i];
      for (std::size_t k = 0; k < order && assoc; ++k)
        assoc = g.table[g.table[i * order + j] * order + k] == g.table[i * order + g.table[j * order + k]];
    }
    inverses = inverses && has_inv;
  }
  g.checks.add("identity_law", identity_ok);
  g.checks.add("inverses", inverses);
  g.checks.add("associativity", assoc);
  if (g.abelian) {
    g.invariants = abelian_invariants(g.table, order, g.identity);
    g.structure = structure_name(g.invariants);
  } else {
    g.structure = "non-abelian of order " + std::to_string(order);
  }
  return g;
}

CheckReport power_map_check(const PiSpec& spec, std::size_t samples) {
  CheckReport report;
  const std::uint32_t p = spec.p.value();
  std::vector<GElement> xs;
  for (std::size_t i = 0; i < spec.n; ++i) xs.push_back(g_generator(spec, i));
  std::mt19937_64 rng(0x5eed);
  while (xs.size() < samples) xs.push_back(g_random(spec, rng));
  for (std::uint32_t lambda = 0; lambda < p; ++lambda) {
    const std::uint32_t t = (1 + 2 * lambda) % p;
    if (t == 0) continue;
    const std::uint32_t kappa = inv_mod(t, spec.p);
    const std::uint32_t kappa_inv = inv_mod_p2(kappa, p);
    const BilinearForm f = delta_lambda(spec, lambda);
    bool bij = true, conj = true;
    for (const auto& x : xs)
      bij = bij && g_pow(spec, g_pow(spec, x, kappa), kappa_inv) == x;
    for (const auto& z : xs)
      for (const auto& y : xs) {
        const GElement lhs = g_pow(spec, g_mul(spec, g_pow(spec, z, kappa_inv), y), kappa);
        const GElement yk = g_pow(spec, y, kappa);
        const GElement rhs = g_mul(spec, gamma_apply(spec, f, yk, z), yk);
        if (!(lhs == rhs)) conj = false;
      }
    const std::string tag = "[lambda=" + std::to_string(lambda) + ",kappa=" + std::to_string(kappa) + "]";
    report.add("power_map_bijective" + tag, bij);
    report.add("power_map_conjugates_translations" + tag, conj);
  }
  return report;
}

std::optional<Expectation> catalog_expectation(Label label, Prime p) {
  const std::uint64_t q = p.value() - 1;
  const std::string c = "C" + std::to_string(q);
  switch (label) {
    case Label::a:
    case Label::b:
    case Label::c:
    case Label::d: return Expectation{q, c, 1};
    case Label::e: return Expectation{q * q, c + " x " + c, 2};
    default: return std::nullopt;
  }
}

bool within_hypotheses(Label label, Prime p) {
  return catalog_expectation(label, p).has_value() && p.value() >= hypothesis_min_prime(label);
}

TGReport t_g_report(const PiSpec& spec, const SolverOptions& opts) {
  TGReport r;
  r.label = spec.label;
  r.p = spec.p.value();
  r.n = spec.n;
  r.group_log_order = spec.group_log_order();
  r.within_hypotheses = within_hypotheses(spec.label, spec.p);

  try {
    const HomSearchResult h = search_equivariant_homs(spec, opts);
    r.assumption_ok = h.only_trivial;
    r.checks.add("assumption", h.only_trivial, std::to_string(h.homs) + " equivariant homs");
  } catch (const BudgetExceeded& e) {
    r.checks.add("assumption", false, e.what());
  }

  const FormSpace s = solve_S(spec, opts);
  const FormSpace sp = solve_Sprime(spec, opts);
  r.dim_s = s.dim();
  r.dim_sprime = sp.dim();

  std::vector<BilinearForm> expected_span{delta_lambda(spec, 1)};
  if (spec.label == Label::e) expected_span.push_back(delta_star(spec, 1));
  auto stacked_rank = [](const std::vector<BilinearForm>& fs) {
    std::vector<FpVector> rows;
    for (const auto& f : fs) rows.push_back(f.as_vector());
    return rows.empty() ? 0 : rank(FpMatrix::from_rows(rows));
  };
  std::vector<BilinearForm> both = sp.basis;
  both.insert(both.end(), expected_span.begin(), expected_span.end());
  const bool in_span = stacked_rank(both) == stacked_rank(expected_span);
  if (in_span && sp.dim() == expected_span.size())
    r.sprime_basis = spec.label == Label::e ? "Delta_[1], Delta*_[1]" : "Delta_[1]";
  else
    r.sprime_basis = "dimension " + std::to_string(sp.dim());

  const ResGroup g = res_sprime_group(spec, opts);
  r.checks.append(g.checks);
  r.admissible = g.order();
  r.res_order = g.order();
  r.res_structure = g.structure;
  r.t_order = g.order();
  for (std::size_t i = 0; i < r.dim_s; ++i) r.t_order *= r.p;
  if (r.dim_s == 0) {
    r.t_structure = g.structure;
  } else {
    // Symmetric forms are taken to give regular subgroups isomorphic to G.
    r.t_structure = "C" + std::to_string(r.p) + "^" + std::to_string(r.dim_s) + " x| (" + g.structure + ")";
  }

  if (const auto ex = catalog_expectation(spec.label, spec.p)) {
    r.checks.add("dim_s", r.dim_s == 0, "got " + std::to_string(r.dim_s));
    r.checks.add("dim_sprime", r.dim_sprime == ex->dim_sprime, "got " + std::to_string(r.dim_sprime));
    r.checks.add("sprime_basis_span", in_span);
    r.checks.add("admissible_count", r.admissible == ex->t_order, "got " + std::to_string(r.admissible));
    r.checks.add("t_order", r.t_order == ex->t_order, "got " + std::to_string(r.t_order));
    r.checks.add("t_structure", r.t_structure == ex->t_structure, "got " + r.t_structure);
  }
  return r;
}

}  // namespace nhol
