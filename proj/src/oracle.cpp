#include "nhol/oracle.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "nhol/linalg.hpp"

namespace nhol {

namespace {

struct AutTable {
  std::size_t count;
  std::vector<std::uint32_t> mult;  // first then second
  std::vector<std::uint32_t> inv;
  std::uint32_t identity = 0;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mult[std::size_t{a} * count + b]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = identity;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
};

AutTable aut_table(const std::vector<Perm>& auts) {
  AutTable t;
  t.count = auts.size();
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < auts.size(); ++i) index.emplace(auts[i], i);
  t.mult.resize(t.count * t.count);
  t.inv.resize(t.count);
  Perm c(auts.empty() ? 0 : auts[0].size());
  for (std::size_t a = 0; a < t.count; ++a) {
    for (std::size_t b = 0; b < t.count; ++b) {
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = auts[b][auts[a][x]];
      const auto it = index.find(c);
      if (it == index.end()) throw std::logic_error("automorphism list is not closed");
      t.mult[a * t.count + b] = it->second;
    }
  }
  for (std::uint32_t a = 0; a < t.count; ++a) {
    bool ident = true;
    for (std::size_t x = 0; x < c.size(); ++x) ident = ident && auts[a][x] == x;
    if (ident) t.identity = a;
  }
  for (std::uint32_t a = 0; a < t.count; ++a)
    for (std::uint32_t b = 0; b < t.count; ++b)
      if (t.mul(a, b) == t.identity) t.inv[a] = b;
  return t;
}

// Exponents (v_1, v_2, w) of an element in normal form x_1^v1 x_2^v2 [x_1,x_2]^w.
std::array<std::uint32_t, 3> digits(const GElement& g) { return {g.v[0], g.v[1], g.w[0]}; }

// Subgroup generated by `gens` inside a group given by a table.
std::size_t closure_size(const std::vector<std::uint32_t>& table, std::size_t order, std::uint32_t identity,
                         const std::vector<std::uint32_t>& gens) {
  std::vector<char> seen(order, 0);
  std::vector<std::uint32_t> queue{identity};
  seen[identity] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto s : gens) {
      const std::uint32_t y = table[std::size_t{queue[h]} * order + s];
      if (!seen[y]) seen[y] = 1, queue.push_back(y);
    }
  return queue.size();
}

}  // namespace

std::uint32_t SmallGroup::index_of(const GElement& g) const {
  const std::uint32_t p = spec.p.value();
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < g.v.size(); ++i) idx = idx * p + g.v[i];
  for (std::size_t m = 0; m < g.w.size(); ++m) idx = idx * p + g.w[m];
  return idx;
}

std::uint32_t SmallGroup::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = identity;
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

SmallGroup build_small_group(const PiSpec& spec) {
  if (spec.n != 2 || spec.p.value() > 5)
    throw Error(ErrorCode::TooLarge, "the oracle handles n = 2 and p <= 5 only");
  SmallGroup g{spec, 0, {}, {}, {}, 0, {}};
  const std::uint32_t p = spec.p.value();
  g.order = std::size_t{p} * p * p;
  for (std::uint32_t idx = 0; idx < g.order; ++idx) {
    GElement x = g_identity(spec);
    x.v.set(0, idx / (p * p));
    x.v.set(1, idx / p % p);
    x.w.set(0, idx % p);
    g.elements.push_back(x);
  }
  g.mult.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      g.mult[a * g.order + b] = g.index_of(g_mul(spec, g.elements[a], g.elements[b]));
  g.identity = g.index_of(g_identity(spec));
  g.gens = {g.index_of(g_generator(spec, 0)), g.index_of(g_generator(spec, 1))};

  g.inv.assign(g.order, 0);
  for (std::uint32_t a = 0; a < g.order; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < g.order && !found; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inv[a] = b, found = true;
    if (!found) throw std::logic_error("table has an element without inverse");
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) throw std::logic_error("identity law fails");
  }
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      for (std::size_t c = 0; c < g.order; ++c)
        if (g.mult[g.mult[a * g.order + b] * g.order + c] != g.mult[a * g.order + g.mult[b * g.order + c]])
          throw std::logic_error("table is not associative");
  return g;
}

std::vector<Perm> enumerate_aut(const SmallGroup& g) {
  const std::uint32_t p = g.spec.p.value();
  const auto& pi = g.spec.pi;
  std::vector<Perm> out;
  auto comm = [&](std::uint32_t a, std::uint32_t b) { return g.mul(g.mul(g.inv[a], g.inv[b]), g.mul(a, b)); };
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b) {
      const auto da = digits(g.elements[a]), db = digits(g.elements[b]);
      if ((std::uint64_t{da[0]} * db[1] + std::uint64_t{p - da[1]} * db[0]) % p == 0) continue;  // not generating
      const std::uint32_t c = comm(a, b);
      if (g.pow(a, p) != g.pow(c, pi(0, 0)) || g.pow(b, p) != g.pow(c, pi(1, 0))) continue;
      Perm phi(g.order);
      for (std::uint32_t x = 0; x < g.order; ++x) {
        const auto d = digits(g.elements[x]);
        phi[x] = g.mul(g.mul(g.pow(a, d[0]), g.pow(b, d[1])), g.pow(c, d[2]));
      }
      bool hom = true;
      for (std::uint32_t x = 0; x < g.order && hom; ++x)
        for (std::uint32_t y = 0; y < g.order && hom; ++y) hom = phi[g.mul(x, y)] == g.mul(phi[x], phi[y]);
      std::vector<char> hit(g.order, 0);
      for (auto y : phi) hit[y] = 1;
      bool bij = true;
      for (char h : hit) bij = bij && h;
      if (hom && bij) out.push_back(std::move(phi));
    }
  return out;
}

std::vector<GammaMap> enumerate_gamma(const SmallGroup& g, const std::vector<Perm>& auts, std::uint64_t budget) {
  const std::uint64_t pairs = std::uint64_t{auts.size()} * auts.size();
  if (pairs > budget) throw BudgetExceeded(pairs, budget, "gamma candidates");
  const std::uint32_t p = g.spec.p.value();
  const auto& pi = g.spec.pi;
  const AutTable t = aut_table(auts);
  const std::uint32_t n_aut = static_cast<std::uint32_t>(t.count);
  auto conj = [&](std::uint32_t beta, std::uint32_t x) { return t.mul(t.mul(t.inv[beta], x), beta); };

  // delta(x) = gamma(x)^-1 is a homomorphism G -> Aut(G), determined by
  // A = delta(x_1), B = delta(x_2) subject to the defining relations.
  std::vector<GammaMap> out;
  for (std::uint32_t A = 0; A < n_aut; ++A)
    for (std::uint32_t B = 0; B < n_aut; ++B) {
      const std::uint32_t C = t.mul(t.mul(t.inv[A], t.inv[B]), t.mul(A, B));
      if (t.mul(C, A) != t.mul(A, C) || t.mul(C, B) != t.mul(B, C)) continue;
      if (t.pow(A, p) != t.pow(C, pi(0, 0)) || t.pow(B, p) != t.pow(C, pi(1, 0))) continue;
      auto delta = [&](std::uint32_t x) {
        const auto d = digits(g.elements[x]);
        return t.mul(t.mul(t.pow(A, d[0]), t.pow(B, d[1])), t.pow(C, d[2]));
      };
      bool ok = true;
      for (std::uint32_t beta = 0; beta < n_aut && ok; ++beta)
        ok = delta(auts[beta][g.gens[0]]) == conj(beta, A) && delta(auts[beta][g.gens[1]]) == conj(beta, B);
      if (!ok) continue;

      std::vector<std::uint32_t> d(g.order);
      for (std::uint32_t x = 0; x < g.order; ++x) d[x] = delta(x);
      for (std::uint32_t x = 0; x < g.order && ok; ++x)
        for (std::uint32_t y = 0; y < g.order && ok; ++y) ok = d[g.mul(x, y)] == t.mul(d[x], d[y]);
      for (std::uint32_t x = 0; x < g.order && ok; ++x)
        for (std::uint32_t beta = 0; beta < n_aut && ok; ++beta) ok = d[auts[beta][x]] == conj(beta, d[x]);
      if (!ok) continue;
      GammaMap gm;
      for (auto v : d) gm.values.push_back(t.inv[v]);
      out.push_back(std::move(gm));
    }
  return out;
}

OracleCount count_t(const SmallGroup& g, const std::vector<Perm>& auts, const std::vector<GammaMap>& gammas) {
  OracleCount res;
  const std::size_t N = g.order;
  const std::uint32_t p = g.spec.p.value();
  const auto& pi = g.spec.pi;

  // A generating set of Aut(G), picked greedily.
  const AutTable t = aut_table(auts);
  std::vector<std::uint32_t> aut_gens;
  for (std::uint32_t a = 0; a < t.count; ++a) {
    if (closure_size(t.mult, t.count, t.identity, aut_gens) == t.count) break;
    auto with = aut_gens;
    with.push_back(a);
    if (closure_size(t.mult, t.count, t.identity, with) > closure_size(t.mult, t.count, t.identity, aut_gens))
      aut_gens = with;
  }

  std::vector<std::uint32_t> g_order(N);
  for (std::uint32_t x = 0; x < N; ++x) {
    std::uint32_t k = 1, y = x;
    while (y != g.identity) y = g.mul(y, x), ++k;
    g_order[x] = k;
  }

  bool all_regular = true, all_normal = true;
  for (const auto& gm : gammas) {
    // perm[x][z] = z^{gamma(x)} x
    std::vector<Perm> perm(N, Perm(N));
    for (std::uint32_t x = 0; x < N; ++x)
      for (std::uint32_t z = 0; z < N; ++z) perm[x][z] = g.mul(auts[gm.values[x]][z], x);

    // Subgroup of Sym(G): perm[x] perm[y] = perm[x o y] with x o y = perm[y][x];
    // regular because perm[x] sends 1 to x.
    bool regular = true;
    std::vector<std::uint32_t> circ(N * N);
    for (std::uint32_t x = 0; x < N && regular; ++x) {
      std::vector<char> hit(N, 0);
      for (auto z : perm[x]) hit[z] = 1;
      for (char h : hit) regular = regular && h;
      regular = regular && perm[x][g.identity] == x;
      for (std::uint32_t y = 0; y < N && regular; ++y) {
        const std::uint32_t xy = perm[y][x];
        circ[std::size_t{x} * N + y] = xy;
        for (std::uint32_t z = 0; z < N && regular; ++z) regular = perm[y][perm[x][z]] == perm[xy][z];
      }
    }
    if (!regular) {
      all_regular = false;
      continue;
    }

    // Normalized by Hol(G): conjugates of each perm[x] by right translations
    // by x_i and by generators of Aut(G) lie in N_gamma again.
    std::vector<Perm> hol;
    for (auto s : g.gens) {
      Perm r(N);
      for (std::uint32_t z = 0; z < N; ++z) r[z] = g.mul(z, s);
      hol.push_back(r);
    }
    for (auto a : aut_gens) hol.push_back(auts[a]);
    bool normal = true;
    for (const auto& h : hol) {
      Perm hinv(N);
      for (std::uint32_t z = 0; z < N; ++z) hinv[h[z]] = z;
      for (std::uint32_t x = 0; x < N && normal; ++x) {
        // z -> h(perm_x(hinv(z)))
        const std::uint32_t y = h[perm[x][hinv[g.identity]]];
        for (std::uint32_t z = 0; z < N && normal; ++z) normal = h[perm[x][hinv[z]]] == perm[y][z];
      }
    }
    if (!normal) {
      all_normal = false;
      continue;
    }
    ++res.regular_normal;

    // (G, o) is isomorphic to G iff it has a generating pair satisfying the
    // defining relations of G (equal orders make the quotient map injective).
    auto cmul = [&](std::uint32_t a, std::uint32_t b) { return circ[std::size_t{a} * N + b]; };
    auto cpow = [&](std::uint32_t a, std::uint64_t k) {
      std::uint32_t r = g.identity;
      for (std::uint64_t i = 0; i < k; ++i) r = cmul(r, a);
      return r;
    };
    std::vector<std::uint32_t> cinv(N), c_order(N);
    for (std::uint32_t a = 0; a < N; ++a) {
      for (std::uint32_t b = 0; b < N; ++b)
        if (cmul(a, b) == g.identity) cinv[a] = b;
      std::uint32_t k = 1, y = a;
      while (y != g.identity) y = cmul(y, a), ++k;
      c_order[a] = k;
    }
    bool iso = false;
    for (std::uint32_t a = 0; a < N && !iso; ++a) {
      if (c_order[a] != g_order[g.gens[0]]) continue;
      for (std::uint32_t b = 0; b < N && !iso; ++b) {
        if (c_order[b] != g_order[g.gens[1]]) continue;
        const std::uint32_t c = cmul(cmul(cinv[a], cinv[b]), cmul(a, b));
        if (cmul(c, a) != cmul(a, c) || cmul(c, b) != cmul(b, c)) continue;
        if (cpow(a, p) != cpow(c, pi(0, 0)) || cpow(b, p) != cpow(c, pi(1, 0))) continue;
        iso = closure_size(circ, N, g.identity, {a, b}) == N;
      }
    }
    res.isomorphic += iso;
  }
  res.checks.add("every_n_gamma_regular", all_regular);
  res.checks.add("every_n_gamma_normalized_by_hol", all_normal);
  return res;
}

OracleResult run_oracle(Prime p, std::uint64_t budget) {
  OracleResult r;
  const SmallGroup g = build_small_group(catalog(Label::n2, p));
  const auto auts = enumerate_aut(g);
  const auto gammas = enumerate_gamma(g, auts, budget);
  const OracleCount c = count_t(g, auts, gammas);
  r.group_order = g.order;
  r.aut_order = auts.size();
  r.gamma_count = gammas.size();
  r.t_order = c.isomorphic;
  r.checks = c.checks;
  bool has_trivial = false;
  for (const auto& gm : gammas) {
    bool triv = true;
    for (auto v : gm.values) triv = triv && auts[v][g.gens[0]] == g.gens[0] && auts[v][g.gens[1]] == g.gens[1];
    has_trivial = has_trivial || triv;
  }
  r.checks.add("trivial_gamma_present", has_trivial);
  return r;
}

}  // namespace nhol
