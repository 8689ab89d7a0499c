#include <doctest.h>

#include "anydim/definetti/actions.hpp"
#include "anydim/definetti/finite_map.hpp"
#include "anydim/definetti/laws.hpp"
#include "anydim/definetti/rates.hpp"
#include "anydim/graphalg/counts.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace anydim;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix<Rational> x(rows, cols);
  for (auto& v : x.data()) v = testutil::random_rational(rng);
  return x;
}

Matrix<Rational> random_symmetric(std::mt19937_64& rng, int n) {
  Matrix<Rational> x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) x(i, j) = x(j, i) = testutil::random_rational(rng);
  return x;
}

Rational l1(const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& v : x) s += abs(v);
  return s;
}

Rational l1(const Matrix<Rational>& x) {
  Rational s = 0;
  for (const auto& v : x.data()) s += abs(v);
  return s;
}

}  // namespace

TEST_CASE("finite map constructors") {
  auto e = FiniteMap::equipartition(3, 2);
  CHECK(e.values() == std::vector<int>{0, 0, 1, 1, 2, 2});
  CHECK(FiniteMap::inclusion(2, 4).values() == std::vector<int>{0, 1});
  CHECK_THROWS(FiniteMap(2, 2, {0, 2}));
  CHECK_THROWS(FiniteMap::permutation({0, 0}));
  CHECK(FiniteMap::from_index(3, 2, 5).values() == std::vector<int>{1, 0, 1});
}

TEST_CASE("vector actions") {
  std::mt19937_64 rng(1);
  auto x = random_matrix(rng, 2, 5);
  auto first = act_vec(FiniteMap::inclusion(3, 5), x);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) CHECK(first(r, c) == x(r, c));
  std::vector<Rational> v{1, 2, 3};
  CHECK(act_vec(FiniteMap::equipartition(3, 2), v) == std::vector<Rational>{1, 1, 2, 2, 3, 3});
  auto same = act_vec(FiniteMap::constant(4, 3, 1), v);
  CHECK(same == std::vector<Rational>{2, 2, 2, 2});
  CHECK_THROWS(act_vec(FiniteMap::identity(2), v));
}

TEST_CASE("matrix actions") {
  std::mt19937_64 rng(2);
  auto x = random_symmetric(rng, 3);
  CHECK(act_matrix(FiniteMap::identity(3), x) == x);
  auto dup = act_matrix(FiniteMap::equipartition(3, 2), x);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(dup(i, j) == x(i / 2, j / 2));
  for (int t = 0; t < 10; ++t) CHECK(act_matrix(FiniteMap::random(4, 3, rng), x).is_symmetric());
}

TEST_CASE("fiber sums") {
  std::vector<Rational> x{1, 2, 3, 4, 5, 6};
  CHECK(coact_vec(FiniteMap::equipartition(3, 2), x) == std::vector<Rational>{3, 7, 11});
  auto perm = FiniteMap::permutation({2, 0, 1});
  CHECK(coact_vec(perm, std::vector<Rational>{1, 2, 3}) == std::vector<Rational>{2, 3, 1});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto v = testutil::random_vector(rng, 6);
    auto f = FiniteMap::random(6, 3, rng);
    auto y = coact_vec(f, v);
    Rational s1 = 0, s2 = 0;
    for (auto& a : v) s1 += a;
    for (auto& a : y) s2 += a;
    CHECK(s1 == s2);
    CHECK(l1(y) <= l1(v));
    auto m = random_symmetric(rng, 6);
    CHECK(l1(coact_matrix(f, m)) <= l1(m));
  }
}

TEST_CASE("actions compose") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto g = FiniteMap::random(3, 4, rng);  // [3] -> [4]
    auto f = FiniteMap::random(4, 5, rng);  // [4] -> [5]
    auto x = testutil::random_vector(rng, 5);
    CHECK(act_vec(compose(f, g), x) == act_vec(g, act_vec(f, x)));
    auto m = random_symmetric(rng, 5);
    CHECK(act_matrix(compose(f, g), m) == act_matrix(g, act_matrix(f, m)));
    auto y = testutil::random_vector(rng, 3);
    CHECK(coact_vec(compose(f, g), y) == coact_vec(f, coact_vec(g, y)));
  }
}

TEST_CASE("factorization through an equipartition") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    int m = 1 + static_cast<int>(rng() % 7), n = 1 + static_cast<int>(rng() % 5);
    auto f = FiniteMap::random(m, n, rng);
    int k = f.max_fiber();
    auto g = factorization_permutation(f);
    CHECK(g.is_injective());
    auto rebuilt = compose(FiniteMap::equipartition(n, k), compose(g, FiniteMap::inclusion(m, n * k)));
    CHECK(rebuilt == f);
  }
}

TEST_CASE("expectation over maps") {
  std::mt19937_64 rng(6);
  auto x = random_symmetric(rng, 4);
  Rational e = expect_exact<Rational>(2, 4, [&](const FiniteMap& f) {
    auto y = act_matrix(f, x);
    return y(0, 1);
  });
  GraphClass k2(parse_graph("K2"));
  CHECK(e == t_density(k2, x));
  CHECK(expect_exact<Rational>(3, 3, [](const FiniteMap&) { return Rational(7, 3); }) == Rational(7, 3));
  CHECK_THROWS(expect_exact<Rational>(30, 5, [](const FiniteMap&) { return Rational(0); }));

  // Goodman dual cost against its cost
  GraphPoly p(GraphBasis::T);
  p.add(GraphClass(parse_graph("K3")), 1);
  p.add(GraphClass(parse_graph("K2uK2")), -2);
  p.add(GraphClass(parse_graph("K2")), 1);
  GraphPoly q = dualize_graph_density(p);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 3; ++t) {
      Matrix<Rational> g(n, n, Rational(0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 2) g(i, j) = g(j, i) = 1;
      Rational rhs = expect_exact<Rational>(4, n, [&](const FiniteMap& f) { return evaluate<Rational>(q, act_matrix(f, g)); });
      CHECK(evaluate<Rational>(p, g) == rhs);
    }

  auto xd = Matrix<double>(4, 4, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) xd(i, j) = to_double(x(i, j));
  auto eval = [&](const FiniteMap& f) { return act_matrix(f, xd)(0, 1); };
  auto exact = expect_over_maps(2, 4, eval, ExpectationMode::exact());
  CHECK(exact.exact);
  CHECK(exact.mean == doctest::Approx(to_double(e)));
  auto mc1 = expect_over_maps(2, 4, eval, ExpectationMode::monte_carlo(20000, 9));
  auto mc2 = expect_over_maps(2, 4, eval, ExpectationMode::monte_carlo(20000, 9));
  CHECK(mc1.mean == mc2.mean);
  CHECK(std::abs(mc1.mean - exact.mean) < 5 * mc1.std_error + 1e-12);
}

TEST_CASE("total variation") {
  FiniteLaw a, b;
  a.add({1}, 1);
  b.add({2}, 1);
  CHECK(tv_exact(a, a) == 0);
  CHECK(tv_exact(a, b) == 2);
  for (int n = 2; n <= 8; ++n) {
    std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    CHECK(tv_rate_experiment(n, 2, ones).tv == 0);
    std::vector<Rational> spike(static_cast<std::size_t>(n), Rational(0));
    spike[0] = 1;
    auto r = tv_rate_experiment(n, 2, spike);
    CHECK(r.pass);
    CHECK(r.tv <= Rational(2, n));
    std::vector<Rational> distinct;
    for (int i = 0; i < n; ++i) distinct.emplace_back(i);
    CHECK(tv_rate_experiment(n, 2, distinct).tv == Rational(2, n));
    CHECK(map_law_tv_experiment(n, 2).tv == Rational(2, n));
    // i.i.d. fair bits: only the coincident draws differ, and half of them agree with the product law
    CHECK(bernoulli_tv_experiment(n, 2).tv == Rational(1, n));
  }
  CHECK_THROWS(tv_rate_experiment(9, 2, std::vector<Rational>(9, Rational(0))));
}

TEST_CASE("W1 to a point mass") {
  FiniteLaw d;
  d.add({Rational(1, 2), Rational(1, 2)}, 1);
  CHECK(w1_to_dirac(d, {Rational(1, 2), Rational(1, 2)}) == 0);
  for (int n : {2, 4, 8, 16, 32}) {
    auto r = w1_tightness_experiment(n);
    // E|B - n| for B ~ Bin(2n, 1/2) equals n C(2n, n) / 4^n
    BigInt binom = 1;
    for (int i = 1; i <= n; ++i) binom = binom * (n + i) / i;
    BigInt four = 1;
    for (int i = 0; i < n; ++i) four *= 4;
    CHECK(r.w1 == Rational(binom, four));
    CHECK(r.pass);
  }
}

TEST_CASE("gap bounds") {
  auto mfg = setting_descriptor("means");
  CHECK(gap_bound(mfg, 3, 12, {10, 0, 0}) == doctest::Approx(5));
  CHECK(gap_bound_duplication(1, 7, 3.0) == 0);
  CHECK(gap_bound_zero_padding(2, 2, 8, 1, 1) == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK_THROWS_WITH(gap_bound_zero_padding(1, 3, 8, 1, 1), "bound requires k | n");
}
