#include "nhol/autc.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "nhol/wedge.hpp"

namespace nhol {

namespace {

// Membership test that only builds the rows of hat(alpha) reached by pi.
class AutcTester {
 public:
  explicit AutcTester(const PiSpec& spec) : spec_(spec), basis_(spec.n) {
    for (std::size_t m = 0; m < spec.wedge_dim(); ++m)
      for (std::size_t i = 0; i < spec.n; ++i)
        if (spec.pi(i, m)) {
          support_.push_back(m);
          break;
        }
  }

  bool satisfies(const FpMatrix& a) const {
    const std::size_t n = spec_.n, c = spec_.wedge_dim();
    const std::uint64_t p = spec_.p.value();
    const auto& pi = spec_.pi;
    std::vector<std::uint64_t> lhs(n * c, 0);
    for (std::size_t r : support_) {
      const auto [j, k] = basis_.pairs()[r];
      for (std::size_t m = 0; m < c; ++m) {
        const auto [s, t] = basis_.pairs()[m];
        const std::uint64_t h = (std::uint64_t{a(j, s)} * a(k, t) + p * p - std::uint64_t{a(j, t)} * a(k, s)) % p;
        if (!h) continue;
        for (std::size_t i = 0; i < n; ++i)
          if (pi(i, r)) lhs[i * c + m] += pi(i, r) * h;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < c; ++m) {
        std::uint64_t rhs = 0;
        for (std::size_t k = 0; k < n; ++k) rhs += std::uint64_t{a(i, k)} * pi(k, m);
        if (lhs[i * c + m] % p != rhs % p) return false;
      }
    return true;
  }

 private:
  const PiSpec& spec_;
  WedgeBasis basis_;
  std::vector<std::size_t> support_;
};

FpMatrix elementary(std::size_t n, Prime p, std::initializer_list<std::tuple<std::size_t, std::size_t, std::int64_t>> cells) {
  FpMatrix m = FpMatrix::identity(n, p);
  for (auto [i, j, x] : cells) m.set(i, j, x);
  return m;
}

// diag(prefix..., A) with A a 2x2 block in the last two coordinates.
FpMatrix with_block(std::vector<std::int64_t> prefix, const FpMatrix& a) {
  const std::size_t n = prefix.size() + 2;
  FpMatrix m(n, n, a.modulus());
  for (std::size_t i = 0; i < prefix.size(); ++i) m.set(i, i, prefix[i]);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.set(n - 2 + i, n - 2 + j, a(i, j));
  return m;
}

std::vector<FpMatrix> gl2_generators(Prime p) {
  const std::int64_t g = primitive_root(p);
  return {FpMatrix(2, 2, {g, 0, 0, 1}, p), FpMatrix(2, 2, {1, 1, 0, 1}, p),
          FpMatrix(2, 2, {0, 1, 1, 0}, p)};
}

std::vector<AutcElement> make_all(const PiSpec& spec, std::vector<FpMatrix> ms) {
  std::vector<AutcElement> out;
  for (auto& m : ms) out.push_back(AutcElement::make(spec, std::move(m)));
  return out;
}

}  // namespace

AutcElement AutcElement::make(const PiSpec& spec, FpMatrix alpha) {
  if (!is_autc(spec, alpha))
    throw Error(ErrorCode::SpecMismatch, "matrix is not in Aut^c(pi): " + to_string(alpha));
  FpMatrix hat = induced_hat(alpha);
  return {std::move(alpha), std::move(hat)};
}

std::vector<FpMatrix> GeneratorSet::matrices() const {
  std::vector<FpMatrix> out;
  for (const auto& g : p_gens) out.push_back(g.alpha);
  for (const auto& g : q_gens) out.push_back(g.alpha);
  return out;
}

bool is_autc(const PiSpec& spec, const FpMatrix& alpha) {
  if (alpha.rows() != spec.n || alpha.cols() != spec.n)
    throw Error(ErrorCode::DimMismatch, "alpha must be n x n");
  if (!is_invertible(alpha)) throw Error(ErrorCode::Singular, "alpha is not invertible");
  return spec.pi * induced_hat(alpha) == alpha * spec.pi;
}

std::vector<FpMatrix> gl_generators(std::size_t n, Prime p) {
  std::vector<FpMatrix> gens;
  FpMatrix d = FpMatrix::identity(n, p);
  d.set(0, 0, primitive_root(p));
  gens.push_back(d);
  gens.push_back(elementary(n, p, {{0, 1, 1}}));
  FpMatrix swap(n, n, p), cycle(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    swap.set(i, i < 2 ? 1 - i : i, 1);
    cycle.set(i, (i + 1) % n, 1);
  }
  gens.push_back(swap);
  if (n > 2) gens.push_back(cycle);
  return gens;
}

GeneratorSet generator_catalog(const PiSpec& spec) {
  const Prime p = spec.p;
  const std::int64_t g = primitive_root(p);
  const auto gl2 = gl2_generators(p);
  std::vector<FpMatrix> pg, qg;
  auto det2 = [](const FpMatrix& a) { return static_cast<std::int64_t>(det(a).value()); };

  switch (spec.label) {
    case Label::a:
      pg = {elementary(3, p, {{0, 1, 1}}), elementary(3, p, {{2, 1, 1}})};
      qg = {FpMatrix::diagonal({g, 1, 1}, p), FpMatrix::diagonal({1, 1, g}, p)};
      break;
    case Label::b:
      pg = {elementary(3, p, {{0, 1, 1}}), elementary(3, p, {{0, 2, 1}})};
      for (const auto& a : gl2) qg.push_back(with_block({det2(a)}, a));
      break;
    case Label::c:
      pg = {elementary(4, p, {{0, 1, 1}}), elementary(4, p, {{2, 1, 1}}),
            elementary(4, p, {{3, 1, 1}})};
      qg = {FpMatrix::diagonal({g, 1, 1, 1}, p)};
      for (const auto& a : gl2) qg.push_back(with_block({1, 1}, a));
      break;
    case Label::d:
      pg = {elementary(4, p, {{0, 1, 1}}), elementary(4, p, {{0, 2, 1}}),
            elementary(4, p, {{0, 3, 1}}), elementary(4, p, {{1, 2, 1}}),
            elementary(4, p, {{1, 3, 1}})};
      qg = {FpMatrix::diagonal({1, g, 1, 1}, p)};
      for (const auto& a : gl2) qg.push_back(with_block({det2(a), 1}, a));
      break;
    case Label::e:
      pg = {elementary(4, p, {{0, 1, 1}}), elementary(4, p, {{0, 3, 1}, {2, 1, 1}}),
            elementary(4, p, {{0, 2, -1}, {3, 1, 1}})};
      for (const auto& a : gl2) qg.push_back(with_block({det2(a), 1}, a));
      break;
    case Label::n2:
      pg = {elementary(2, p, {{0, 1, 1}})};
      qg = {FpMatrix::diagonal({g, 1}, p)};
      break;
    case Label::zero3:
    case Label::zero4: qg = gl_generators(spec.n, p); break;
    case Label::custom: throw Error(ErrorCode::UnknownLabel, "custom pi has no generator catalog");
  }
  return {make_all(spec, std::move(pg)), make_all(spec, std::move(qg)), true};
}

GeneratorSet autc_generators(const PiSpec& spec, const SolverOptions& opts) {
  if (spec.label != Label::custom) return generator_catalog(spec);
  if (spec.pi.is_zero()) return {{}, make_all(spec, gl_generators(spec.n, spec.p)), true};
  if (spec.n <= 4 && rank(spec.pi) == 1) {
    const RankOneForm form = canonical_rank_one(spec);
    const FpMatrix m_inv = inverse(form.basis_change);
    const GeneratorSet base = generator_catalog(catalog(form.label, spec.p));
    auto conj = [&](const std::vector<AutcElement>& gs) {
      std::vector<FpMatrix> out;
      for (const auto& x : gs) out.push_back(m_inv * x.alpha * form.basis_change);
      return make_all(spec, std::move(out));
    };
    return {conj(base.p_gens), conj(base.q_gens), true};
  }
  // No structural description: take enough elements of the full group.
  GeneratorSet gs;
  gs.p_is_complete = false;
  std::vector<FpMatrix> chosen;
  std::unordered_set<FpMatrix, FpMatrixHash> reached{FpMatrix::identity(spec.n, spec.p)};
  for (auto& m : enumerate_autc(spec, opts)) {
    if (reached.count(m)) continue;
    chosen.push_back(m);
    const auto cl = group_closure(chosen, spec.n, spec.p, opts.budget);
    reached = {cl.begin(), cl.end()};
  }
  gs.q_gens = make_all(spec, std::move(chosen));
  return gs;
}

MatrixShape autc_search_shape(const PiSpec& spec) {
  MatrixShape shape = MatrixShape::free(spec.n, spec.n);
  bool rest_zero = !spec.pi.row(0).is_zero();
  for (std::size_t i = 1; i < spec.n && rest_zero; ++i) rest_zero = spec.pi.row(i).is_zero();
  // ker(pi) = <e_2..e_n> is invariant, so e_i alpha has no e_1 component for i > 1.
  if (rest_zero)
    for (std::size_t i = 1; i < spec.n; ++i) shape.fix(i, 0, 0);
  return shape;
}

std::vector<FpMatrix> enumerate_autc(const PiSpec& spec, const SolverOptions& opts) {
  const MatrixShape shape = autc_search_shape(spec);
  const std::uint64_t total = candidate_count(shape, spec.p);
  if (total > opts.budget) throw BudgetExceeded(total, opts.budget, "Aut^c enumeration");
  const AutcTester tester(spec);
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, 64));
  std::vector<std::vector<FpMatrix>> found(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
    enumerate_matrices_range(shape, spec.p, begin, end, [&](const FpMatrix& m) {
      if (tester.satisfies(m) && is_invertible(m)) found[w].push_back(m);
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<FpMatrix> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<FpMatrix> group_closure(const std::vector<FpMatrix>& gens, std::size_t n, Prime p,
                                    std::uint64_t limit) {
  std::vector<FpMatrix> elems{FpMatrix::identity(n, p)};
  std::unordered_set<FpMatrix, FpMatrixHash> seen{elems.front()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      FpMatrix y = elems[head] * g;
      if (seen.insert(y).second) {
        elems.push_back(std::move(y));
        if (elems.size() > limit) throw BudgetExceeded(elems.size(), limit, "group closure");
      }
    }
  }
  return elems;
}

HomSearchResult search_equivariant_homs(const PiSpec& spec, const SolverOptions& opts) {
  const std::size_t n = spec.n;
  const Prime p = spec.p;
  const GeneratorSet gens = autc_generators(spec, opts);
  const std::vector<FpMatrix> all = gens.matrices();

  std::vector<FpMatrix> domain_gens;
  if (opts.assumption_full_autc || !gens.p_is_complete)
    domain_gens = all;
  else
    for (const auto& g : gens.p_gens) domain_gens.push_back(g.alpha);
  const std::vector<FpMatrix> dom = group_closure(domain_gens, n, p, opts.budget);
  std::unordered_map<FpMatrix, std::size_t, FpMatrixHash> index;
  for (std::size_t i = 0; i < dom.size(); ++i) index.emplace(dom[i], i);

  const FpMatrix id = FpMatrix::identity(n, p);
  // powers[x][k] = dom[x]^k for k < p
  std::vector<std::vector<FpMatrix>> powers(dom.size());
  std::vector<char> order_p(dom.size(), 0);
  for (std::size_t x = 0; x < dom.size(); ++x) {
    powers[x].push_back(id);
    for (std::uint32_t k = 1; k < p.value(); ++k) powers[x].push_back(powers[x].back() * dom[x]);
    order_p[x] = (powers[x].back() * dom[x]).is_identity();
  }
  // conj[a][x] = alpha_a^-1 dom[x] alpha_a, as an index into dom, or -1.
  std::vector<std::vector<long>> conj(all.size(), std::vector<long>(dom.size(), -1));
  for (std::size_t a = 0; a < all.size(); ++a) {
    const FpMatrix ai = inverse(all[a]);
    for (std::size_t x = 0; x < dom.size(); ++x) {
      auto it = index.find(ai * dom[x] * all[a]);
      if (it != index.end()) conj[a][x] = static_cast<long>(it->second);
    }
  }

  struct Constraint {
    std::size_t gen, i;
  };
  // Each constraint gamma(e_i alpha) = alpha^-1 X_i alpha is checked at the
  // level of the last variable it mentions.
  std::vector<std::vector<Constraint>> at_level(n);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t last = i;
      for (std::size_t k = 0; k < n; ++k)
        if (all[a](i, k)) last = std::max(last, k);
      at_level[last].push_back({a, i});
    }

  std::vector<std::size_t> assign(n, 0);
  auto holds = [&](const Constraint& c) {
    const long target = conj[c.gen][assign[c.i]];
    if (target < 0) return false;
    FpMatrix val = id;
    for (std::size_t k = 0; k < n; ++k)
      if (const std::uint32_t e = all[c.gen](c.i, k)) val = val * powers[assign[k]][e];
    return val == dom[static_cast<std::size_t>(target)];
  };

  // Candidates per variable after the constraints that mention it alone.
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (!order_p[x]) continue;
      assign[i] = x;
      bool ok = true;
      for (const auto& c : at_level[i]) {
        bool unary = c.i == i;
        for (std::size_t k = 0; k < n && unary; ++k)
          if (k != i && all[c.gen](c.i, k)) unary = false;
        if (unary && !holds(c)) {
          ok = false;
          break;
        }
      }
      if (ok) cand[i].push_back(x);
    }

  HomSearchResult res;
  std::function<void(std::size_t)> dfs = [&](std::size_t level) {
    if (level == n) {
      ++res.homs;
      return;
    }
    for (std::size_t x : cand[level]) {
      if (++res.nodes > opts.budget) throw BudgetExceeded(res.nodes, opts.budget, "equivariant hom search");
      assign[level] = x;
      bool ok = true;
      for (std::size_t k = 0; k < level && ok; ++k)
        ok = dom[assign[k]] * dom[x] == dom[x] * dom[assign[k]];
      for (std::size_t c = 0; c < at_level[level].size() && ok; ++c) ok = holds(at_level[level][c]);
      if (ok) dfs(level + 1);
    }
  };
  dfs(0);
  res.only_trivial = res.homs == 1;
  return res;
}

bool check_no_equivariant_hom(const PiSpec& spec, const SolverOptions& opts) {
  return search_equivariant_homs(spec, opts).only_trivial;
}

}  // namespace nhol
