#include <doctest.h>

#include <set>

#include "nhol/error.hpp"
#include "nhol/oracle.hpp"

using namespace nhol;

namespace {

std::size_t generated_size(const SmallGroup& g, std::uint32_t a, std::uint32_t b) {
  std::set<std::uint32_t> seen{g.identity};
  std::vector<std::uint32_t> frontier{g.identity};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier)
      for (auto y : {a, b}) {
        const auto z = g.mul(x, y);
        if (seen.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Pairs (a, b) satisfying the defining relations and generating G; each one
// is the image of (x_1, x_2) under exactly one automorphism.
std::size_t count_generating_pairs(const SmallGroup& g) {
  const std::uint32_t p = g.spec.p.value();
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b) {
      const auto comm = g.mul(g.mul(g.inv[a], g.inv[b]), g.mul(a, b));
      if (g.pow(b, p) != g.identity || g.pow(a, p) != comm) continue;
      count += generated_size(g, a, b) == g.order;
    }
  return count;
}

}  // namespace

TEST_CASE("small group construction") {
  const SmallGroup g3 = build_small_group(catalog(Label::n2, Prime(3)));
  CHECK(g3.order == 27);
  const SmallGroup g5 = build_small_group(catalog(Label::n2, Prime(5)));
  CHECK(g5.order == 125);
  for (std::uint32_t x = 0; x < g3.order; ++x) {
    CHECK(g3.mul(g3.identity, x) == x);
    CHECK(g3.mul(x, g3.identity) == x);
    CHECK(g3.mul(x, g3.inv[x]) == g3.identity);
    CHECK(g3.index_of(g3.elements[x]) == x);
  }
  CHECK_THROWS_AS(build_small_group(catalog(Label::n2, Prime(7))), Error);
  CHECK_THROWS_AS(build_small_group(catalog(Label::a, Prime(3))), Error);
}

TEST_CASE("automorphisms of the order-27 group") {
  const SmallGroup g = build_small_group(catalog(Label::n2, Prime(3)));
  const auto auts = enumerate_aut(g);
  CHECK(auts.size() == 54);
  CHECK(auts.size() == count_generating_pairs(g));
  std::set<Perm> distinct(auts.begin(), auts.end());
  CHECK(distinct.size() == auts.size());
  for (const auto& a : auts) {
    CHECK(a[g.identity] == g.identity);
    for (std::uint32_t x = 0; x < g.order; ++x)
      for (std::uint32_t y = 0; y < g.order; ++y) REQUIRE(a[g.mul(x, y)] == g.mul(a[x], a[y]));
  }
}

TEST_CASE("automorphisms of the order-125 group") {
  const SmallGroup g = build_small_group(catalog(Label::n2, Prime(5)));
  const auto auts = enumerate_aut(g);
  CHECK(auts.size() == 500);
  CHECK(auts.size() == count_generating_pairs(g));
}

TEST_CASE("equivariant anti-homomorphisms") {
  const SmallGroup g = build_small_group(catalog(Label::n2, Prime(3)));
  const auto auts = enumerate_aut(g);
  const auto gammas = enumerate_gamma(g, auts);
  CHECK(gammas.size() >= 3);
  bool trivial = false;
  std::uint32_t id_aut = 0;
  for (std::uint32_t i = 0; i < auts.size(); ++i) {
    bool is_id = true;
    for (std::uint32_t x = 0; x < g.order; ++x) is_id = is_id && auts[i][x] == x;
    if (is_id) id_aut = i;
  }
  for (const auto& gm : gammas) {
    CHECK(gm.values[g.identity] == id_aut);
    bool all_id = true;
    for (auto v : gm.values) all_id = all_id && v == id_aut;
    trivial = trivial || all_id;
    // gamma(xy) = gamma(y) gamma(x), maps on the right
    for (std::uint32_t x = 0; x < g.order; ++x)
      for (std::uint32_t y = 0; y < g.order; ++y) {
        const Perm& gx = auts[gm.values[x]];
        const Perm& gy = auts[gm.values[y]];
        const Perm& gxy = auts[gm.values[g.mul(x, y)]];
        for (std::uint32_t z = 0; z < g.order; ++z) REQUIRE(gxy[z] == gx[gy[z]]);
      }
  }
  CHECK(trivial);
  CHECK_THROWS_AS(enumerate_gamma(g, auts, 10), BudgetExceeded);
}

TEST_CASE("T(G) at order p^3") {
  const OracleResult r3 = run_oracle(Prime(3));
  CHECK(r3.group_order == 27);
  CHECK(r3.aut_order == 54);
  CHECK(r3.t_order == 2);
  CHECK(r3.checks.all_passed());
  const OracleResult r5 = run_oracle(Prime(5));
  CHECK(r5.group_order == 125);
  CHECK(r5.t_order == 4);
  CHECK(r5.checks.all_passed());
}
