#include <doctest.h>

#include <map>
#include <set>
#include <random>

#include "nhol/error.hpp"
#include "nhol/holo.hpp"
#include "nhol/linalg.hpp"
#include "support.hpp"

using namespace nhol;

namespace {

// tau = lambda I + kappa T in case e, with T the sigma of Delta*_[1].
FpMatrix e_tau(const PiSpec& s, std::int64_t lambda, std::int64_t kappa) {
  const FpMatrix t = sigma_of(delta_star(s, 1));
  return FpMatrix::scalar(6, lambda, s.p) + t.scaled(static_cast<std::uint32_t>(kappa));
}

std::vector<std::size_t> cyclic_product_table(const std::vector<std::uint64_t>& mods) {
  std::size_t order = 1;
  for (auto m : mods) order *= m;
  std::vector<std::size_t> table(order * order);
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d;
    for (auto m : mods) d.push_back(x % m), x /= m;
    return d;
  };
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto da = digits(a), db = digits(b);
      std::size_t c = 0, scale = 1;
      for (std::size_t i = 0; i < mods.size(); ++i) c += (da[i] + db[i]) % mods[i] * scale, scale *= mods[i];
      table[a * order + b] = c;
    }
  return table;
}

bool ref_criterion(const PiSpec& s, const FpMatrix& eta, const FpMatrix& tau) {
  const std::int64_t p = s.p.value();
  const auto pi = to_mat(s.pi), e = to_mat(eta);
  return oracle::mul(oracle::mul(pi, oracle::hat(e, p), p), to_mat(tau), p) == oracle::mul(e, pi, p);
}

}  // namespace

TEST_CASE("commutant dimension equals dim S'") {
  for (Label l : {Label::a, Label::b, Label::c, Label::d, Label::e}) {
    const PiSpec s = catalog(l, Prime(5));
    CAPTURE(label_name(l));
    CHECK(commutant(s).size() == solve_Sprime(s).dim());
  }
  CHECK(commutant(catalog(Label::e, Prime(5))).size() == 2);
}

TEST_CASE("commutant elements commute with every hat") {
  const PiSpec s = catalog(Label::e, Prime(5));
  const auto gens = autc_generators(s).matrices();
  for (const auto& c : commutant(s)) CHECK(in_commutant(c, gens));
  const FpMatrix t = sigma_of(delta_star(s, 1));
  CHECK(t * t == FpMatrix::identity(6, s.p));
  CHECK(in_commutant(t, gens));
}

TEST_CASE("diagonal solution in case e") {
  const PiSpec s = catalog(Label::e, Prime(5));
  // (lambda, kappa) = (1, 2): eta = diag(lambda + kappa, (lambda + kappa)^-1, 1, 1)
  const FpMatrix eta = FpMatrix::diagonal({3, 2, 1, 1}, s.p);
  const FpMatrix tau = e_tau(s, 1, 2);
  CHECK(satisfies_criterion(s, eta, tau));
  CHECK(ref_criterion(s, eta, tau));
  const CriterionResult r = criterion_solve(s, tau);
  REQUIRE(r.status == CriterionStatus::found);
  CHECK(ref_criterion(s, r.pair->eta, tau));
  CHECK(r.pair->zeta == induced_hat(r.pair->eta) * tau);
}

TEST_CASE("criterion solutions check out against the reference") {
  for (Label l : {Label::a, Label::b, Label::c, Label::d, Label::e}) {
    const PiSpec s = catalog(l, Prime(5));
    for (const auto& t : admissible_taus(s).taus) {
      CHECK(is_invertible(t.pair.eta));
      CHECK(ref_criterion(s, t.pair.eta, t.tau));
    }
  }
}

TEST_CASE("criterion input errors") {
  const PiSpec s = catalog(Label::e, Prime(5));
  FpMatrix odd = FpMatrix::identity(6, s.p);
  odd.set(0, 3, 1);
  CHECK_THROWS_AS(criterion_solve(s, odd), Error);
  CHECK_THROWS_AS(criterion_solve(s, FpMatrix(6, 6, s.p)), Error);
  CHECK_THROWS_AS(criterion_solve(s, FpMatrix::identity(3, s.p)), Error);
}

TEST_CASE("admissible taus in cases a-d are the nonzero scalars") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (Label l : {Label::a, Label::b, Label::c, Label::d}) {
      if (p < hypothesis_min_prime(l)) continue;
      const PiSpec s = catalog(l, Prime(p));
      const AdmissibleSet a = admissible_taus(s);
      CAPTURE(label_name(l));
      CAPTURE(p);
      CHECK(a.taus.size() == p - 1);
      CHECK(a.singular == 1);
      CHECK(a.inadmissible == 0);
      for (const auto& t : a.taus) {
        const std::uint32_t c = t.tau(0, 0);
        CHECK(c != 0);
        CHECK(t.tau == FpMatrix::scalar(s.wedge_dim(), c, s.p));
      }
    }
  // the excluded scalar: Delta_[lambda] with lambda = -1/2 has tau = 0
  CHECK(tau_from_sigma(FpMatrix::scalar(3, 1, Prime(3))).is_zero());
  CHECK(tau_from_sigma(FpMatrix::scalar(3, 2, Prime(5))).is_zero());
}

TEST_CASE("admissible taus in case e avoid kappa = +-lambda") {
  const PiSpec s = catalog(Label::e, Prime(5));
  const AdmissibleSet a = admissible_taus(s);
  CHECK(a.taus.size() == 16);
  CHECK(a.singular == 9);
  std::set<FpMatrix> got;
  for (const auto& t : a.taus) got.insert(t.tau);
  std::set<FpMatrix> want;
  for (std::int64_t l = 0; l < 5; ++l)
    for (std::int64_t k = 0; k < 5; ++k)
      if ((l * l - k * k) % 5 != 0) want.insert(e_tau(s, l, k));
  CHECK(got == want);
}

TEST_CASE("case e group law") {
  const PiSpec s = catalog(Label::e, Prime(5));
  const ResGroup g = res_sprime_group(s);
  REQUIRE(g.order() == 16);
  CHECK(g.checks.all_passed());
  std::map<FpMatrix, std::pair<std::int64_t, std::int64_t>> coords;
  for (std::int64_t l = 0; l < 5; ++l)
    for (std::int64_t k = 0; k < 5; ++k) coords[e_tau(s, l, k)] = {l, k};
  std::size_t matched = 0;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const auto [l1, k1] = coords.at(g.elements[i].tau);
      const auto [l2, k2] = coords.at(g.elements[j].tau);
      const FpMatrix want = e_tau(s, l1 * l2 + k1 * k2, l1 * k2 + l2 * k1);
      matched += g.elements[g.table[i * 16 + j]].tau == want;
    }
  CHECK(matched == 256);
  CHECK(g.structure == "C4 x C4");
}

TEST_CASE("composition agrees with direct Delta arithmetic") {
  const PiSpec s = catalog(Label::b, Prime(5));
  const auto a = admissible_taus(s).taus;
  for (const auto& x : a)
    for (const auto& y : a) {
      const FpMatrix s1 = sigma_from_tau(x.tau), s2 = sigma_from_tau(y.tau);
      const auto [sigma, pair] = sprime_compose(s, s1, x.pair, s2, y.pair);
      CHECK(tau_from_sigma(sigma) == x.tau * y.tau);
      CHECK(pair.eta == x.pair.eta * y.pair.eta);
    }
}

TEST_CASE("sigma and tau") {
  const Prime p(7);
  std::mt19937_64 rng(16);
  FpMatrix m(3, 3, p);
  for (std::size_t i = 0; i < 9; ++i) m.set(i / 3, i % 3, rng() % 7);
  CHECK(sigma_from_tau(tau_from_sigma(m)) == m);
  CHECK(tau_from_sigma(sigma_from_tau(m)) == m);
}

TEST_CASE("cosets") {
  const PiSpec s = catalog(Label::a, Prime(5));
  const auto pair = [&](std::int64_t c) {
    const FpMatrix e = FpMatrix::scalar(3, c, s.p);
    return ResPair{e, induced_hat(e)};
  };
  CHECK_FALSE(coset_equal(s, pair(2), pair(3)));
  CHECK(coset_equal(s, pair(2), pair(2)));
  const FpMatrix g = FpMatrix::diagonal({2, 1, 3}, s.p);
  const ResPair moved{g * pair(2).eta, induced_hat(g) * pair(2).zeta};
  CHECK(coset_equal(s, pair(2), moved));
}

TEST_CASE("abelian invariants") {
  auto run = [](const std::vector<std::uint64_t>& mods) {
    std::size_t order = 1;
    for (auto m : mods) order *= m;
    return abelian_invariants(cyclic_product_table(mods), order, 0);
  };
  CHECK(run({12}) == std::vector<std::uint64_t>{12});
  CHECK(run({4, 3}) == std::vector<std::uint64_t>{12});
  CHECK(run({2, 6}) == std::vector<std::uint64_t>{2, 6});
  CHECK(run({4, 4}) == std::vector<std::uint64_t>{4, 4});
  CHECK(run({2, 2, 3}) == std::vector<std::uint64_t>{2, 6});
  CHECK(run({1}).empty());
  CHECK(structure_name({}) == "1");
  CHECK(structure_name({4, 4}) == "C4 x C4");
  CHECK(structure_name({6}) == "C6");
}

TEST_CASE("power map represents Delta_[lambda]") {
  CHECK(power_map_check(catalog(Label::b, Prime(3))).all_passed());
  CHECK(power_map_check(catalog(Label::e, Prime(5))).all_passed());
  CHECK(power_map_check(catalog(Label::n2, Prime(7)), 20).all_passed());
}

TEST_CASE("report beyond the tabulated primes") {
  const TGReport r = t_g_report(catalog(Label::b, Prime(7)));
  CHECK(r.t_order == 6);
  CHECK(r.t_structure == "C6");
  CHECK(r.checks.all_passed());
  CHECK(r.within_hypotheses);
}

TEST_CASE("report outside the hypotheses is still produced") {
  const TGReport r = t_g_report(catalog(Label::a, Prime(3)));
  CHECK_FALSE(r.within_hypotheses);
  CHECK_FALSE(r.assumption_ok);
  const TGReport n = t_g_report(catalog(Label::n2, Prime(5)));
  CHECK(n.t_order == 4);
  CHECK_FALSE(catalog_expectation(Label::n2, Prime(5)).has_value());
  CHECK_FALSE(n.within_hypotheses);
}
