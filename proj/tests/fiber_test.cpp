#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "monoconv/fiber.hpp"
#include "monoconv/newton.hpp"
#include "monoconv/reduction.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace monoconv {
namespace {

using testing::ExpSet;

Exponent e2(std::int64_t a, std::int64_t b) { return (Exponent(2) << a, b).finished(); }

const MonomialIdeal kJ1(2, {{6, 0}, {2, 1}, {1, 2}, {0, 6}});
const MonomialIdeal kJ2(2, {{8, 0}, {6, 1}, {2, 7}, {0, 12}});
const MonomialIdeal kX3(1, {{3}});
const MonomialIdeal kParallelogram(3, {{2, 1, 0}, {1, 2, 0}, {1, 0, 2}, {0, 1, 2}});

// Degree-k points of the reduced fiber ring of a 2-variable extremal ideal:
// compositions supported on one lower-hull edge (consecutive generators).
ExpSet reduced_points_2d(const MonomialIdeal& j, int k) {
  const auto& g = j.generators();
  ExpSet out;
  if (g.size() == 1) {
    out.insert(k * g[0]);
    return out;
  }
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    for (int a = 0; a <= k; ++a) out.insert(a * g[i] + (k - a) * g[i + 1]);
  return out;
}

std::vector<std::size_t> brute_hilbert(const MonomialIdeal& j, int k_max) {
  std::vector<std::size_t> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(testing::brute_power(j.generators(), k, j.dim()).size());
  return out;
}

TEST(AnalyticSpread, Examples) {
  EXPECT_EQ(analytic_spread(MonomialIdeal(2, {{3, 4}})), 1);
  EXPECT_EQ(analytic_spread(kJ1), 2);
  EXPECT_EQ(analytic_spread(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 3);
  EXPECT_EQ(analytic_spread(kParallelogram), 3);
  EXPECT_THROW(analytic_spread(MonomialIdeal::unit(2)), std::invalid_argument);
  EXPECT_THROW(analytic_spread(MonomialIdeal::zero(2)), std::invalid_argument);
}

TEST(PersistentGenerator, Examples) {
  const std::vector<std::size_t> mid = {1, 2};
  const std::vector<std::int64_t> ones = {1, 1};
  EXPECT_TRUE(is_persistent_generator(kJ1, mid, ones));
  EXPECT_TRUE(is_minimal_generator(power(kJ1, 2), e2(3, 3)));
  EXPECT_TRUE(product_is_minimal_generator(kJ1, mid, ones));

  const std::vector<std::size_t> far = {1, 3};
  EXPECT_FALSE(is_persistent_generator(kJ2, far, ones));
  EXPECT_TRUE(product_is_minimal_generator(kJ2, far, ones)) << "x^6 y^13 is in G(J2^2)";
  const std::vector<std::int64_t> big = {4, 4};
  EXPECT_FALSE(product_is_minimal_generator(kJ2, far, big));

  const std::vector<std::size_t> one = {0};
  const std::vector<std::int64_t> five = {5};
  EXPECT_TRUE(is_persistent_generator(kJ2, one, five));
  EXPECT_TRUE(product_is_minimal_generator(kJ2, one, five));

  EXPECT_THROW(is_persistent_generator(kJ1, {}, {}), std::invalid_argument);
  const std::vector<std::int64_t> zero = {0, 1};
  EXPECT_THROW(is_persistent_generator(kJ1, mid, zero), std::invalid_argument);
  EXPECT_THROW(is_persistent_generator(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}), one, five),
               std::invalid_argument);
}

TEST(FiberHilbert, Examples) {
  EXPECT_EQ(fiber_hilbert_actual(kJ1, 2), (std::vector<std::size_t>{4, 7}));
  EXPECT_EQ(fiber_hilbert_actual(kJ2, 2), (std::vector<std::size_t>{4, 9}));
  EXPECT_EQ(fiber_hilbert_actual(kX3, 3), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(brute_hilbert(kJ1, 4), fiber_hilbert_actual(kJ1, 4));
  EXPECT_EQ(brute_hilbert(kJ2, 4), fiber_hilbert_actual(kJ2, 4));

  EXPECT_EQ(reduced_points_2d(kJ1, 2),
            (ExpSet{e2(12, 0), e2(8, 1), e2(4, 2), e2(3, 3), e2(2, 4), e2(1, 8), e2(0, 12)}));
  EXPECT_EQ(reduced_points_2d(kJ2, 2),
            (ExpSet{e2(16, 0), e2(14, 1), e2(12, 2), e2(8, 8), e2(4, 14), e2(2, 19), e2(0, 24)}));
  EXPECT_EQ(fiber_hilbert_reduced(kJ1, 2), (std::vector<std::size_t>{4, 7}));
  EXPECT_EQ(fiber_hilbert_reduced(kJ2, 2), (std::vector<std::size_t>{4, 7}));
  EXPECT_EQ(fiber_hilbert_reduced(kX3, 4), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(FiberHilbert, ReducedMatchesEdgeEnumerationIn2D) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 40; ++t) {
    const auto j = minimal_monomial_reduction(testing::random_ideal(rng, 2, 8, 6));
    const auto got = fiber_hilbert_reduced(j, 4);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(got[k - 1], reduced_points_2d(j, k).size());
    EXPECT_EQ(fiber_hilbert_actual(j, 3), brute_hilbert(j, 3));
  }
}

TEST(ReducednessVerdict, Examples) {
  const auto v1 = reducedness_verdict(kJ1, 4);
  EXPECT_TRUE(v1.reduced);
  EXPECT_EQ(v1.degree, 4);
  const auto v2 = reducedness_verdict(kJ2, 4);
  EXPECT_FALSE(v2.reduced);
  EXPECT_EQ(v2.degree, 2);
  const auto v3 = reducedness_verdict(kX3, 5);
  EXPECT_TRUE(v3.reduced);
  EXPECT_EQ(v3.degree, 5);
}

TEST(MinimalPrimes, J1) {
  const auto primes = minimal_primes(kJ1, 4);
  ASSERT_EQ(primes.size(), 3u);
  std::set<std::vector<std::size_t>> p_parts;
  for (const auto& p : primes) {
    p_parts.insert(p.monomial_part);
    EXPECT_TRUE(p.binomial_part.empty());
    EXPECT_EQ(p.degree_bound, 4);
  }
  EXPECT_EQ(p_parts, (std::set<std::vector<std::size_t>>{{2, 3}, {0, 3}, {0, 1}}));
  EXPECT_EQ(monomial_part_intersection(primes, 4), MonomialIdeal(4, {{1, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}}));
}

TEST(MinimalPrimes, J2AndPrincipal) {
  const auto primes = minimal_primes(kJ2, 4);
  ASSERT_EQ(primes.size(), 3u);
  std::set<std::vector<std::size_t>> p_parts;
  for (const auto& p : primes) {
    p_parts.insert(p.monomial_part);
    EXPECT_TRUE(p.binomial_part.empty());
  }
  EXPECT_EQ(p_parts, (std::set<std::vector<std::size_t>>{{2, 3}, {0, 3}, {0, 1}}));

  const auto single = minimal_primes(kX3, 4);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].monomial_part.empty());
  EXPECT_TRUE(single[0].binomial_part.empty());
  EXPECT_TRUE(monomial_part_intersection(single, 1).is_zero());
}

TEST(MinimalPrimes, ParallelogramHasOneBinomial) {
  const auto primes = minimal_primes(kParallelogram, 2);
  ASSERT_EQ(primes.size(), 1u);
  EXPECT_TRUE(primes[0].monomial_part.empty());
  ASSERT_EQ(primes[0].binomial_part.size(), 1u);
  const auto& b = primes[0].binomial_part[0];
  std::set<std::vector<std::int64_t>> sides = {b.lhs, b.rhs};
  EXPECT_EQ(sides, (std::set<std::vector<std::int64_t>>{{1, 0, 0, 1}, {0, 1, 1, 0}}));
  EXPECT_TRUE(is_fiber_domain(kParallelogram));
  // Supports are disjoint, so y_i * (y1 y4 - y2 y3) is not listed; the next
  // kernel binomial is y1^2 y4^2 - y2^2 y3^2 in degree 4.
  EXPECT_EQ(minimal_primes(kParallelogram, 3)[0].binomial_part.size(), 1u);
  EXPECT_EQ(minimal_primes(kParallelogram, 4)[0].binomial_part.size(), 2u);
}

TEST(IsFiberDomain, Examples) {
  EXPECT_TRUE(is_fiber_domain(MonomialIdeal(2, {{2, 1}, {1, 2}})));
  EXPECT_FALSE(is_fiber_domain(kJ1));
  EXPECT_TRUE(is_fiber_domain(kX3));
}

TEST(HilbertCrosscheck, Examples) {
  EXPECT_TRUE(face_lattice_hilbert_crosscheck(kJ1, 3));
  EXPECT_TRUE(face_lattice_hilbert_crosscheck(kJ2, 3));
  EXPECT_TRUE(face_lattice_hilbert_crosscheck(kX3, 3));
  EXPECT_TRUE(face_lattice_hilbert_crosscheck(kParallelogram, 3));
}

TEST(FiberReport, Invariants) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 40; ++t) {
    const auto n = testing::random_dim(rng, 1, 3);
    const auto ideal = testing::random_ideal(rng, n, 4, 5);
    const auto rep = fiber_report(ideal, 3, 3);
    const auto& j = rep.reduction;
    const auto& ext = j.generators();
    EXPECT_EQ(j, minimal_monomial_reduction(ideal));
    EXPECT_EQ(rep.is_domain, rep.max_faces.size() == 1);
    EXPECT_EQ(rep.spread, c_invariant(newton_polyhedron(j)) + 1);
    EXPECT_EQ(rep.spread, analytic_spread(ideal));
    EXPECT_EQ(analytic_spread(ideal), analytic_spread(j));
    bool all_equal = true;
    for (std::size_t k = 0; k < rep.hilbert_actual.size(); ++k) {
      EXPECT_GE(rep.hilbert_actual[k], rep.hilbert_reduced[k]);
      all_equal = all_equal && rep.hilbert_actual[k] == rep.hilbert_reduced[k];
    }
    EXPECT_EQ(rep.verdict.reduced, all_equal);
    if (rep.is_domain) EXPECT_TRUE(rep.verdict.reduced);
    EXPECT_TRUE(face_lattice_hilbert_crosscheck(j, 3));
    ASSERT_EQ(rep.primes.size(), rep.max_faces.size());
    for (const auto& p : rep.primes) {
      std::vector<std::size_t> complement;
      for (std::size_t i = 0; i < ext.size(); ++i)
        if (!std::binary_search(p.face.vertices.begin(), p.face.vertices.end(), i)) complement.push_back(i);
      EXPECT_EQ(p.monomial_part, complement);
      for (const auto& b : p.binomial_part) {
        Exponent lhs = Exponent::Zero(n), rhs = Exponent::Zero(n);
        std::int64_t dl = 0, dr = 0;
        for (std::size_t i = 0; i < ext.size(); ++i) {
          lhs += b.lhs[i] * ext[i];
          rhs += b.rhs[i] * ext[i];
          dl += b.lhs[i];
          dr += b.rhs[i];
          if (b.lhs[i] || b.rhs[i]) EXPECT_TRUE(std::binary_search(p.face.vertices.begin(), p.face.vertices.end(), i));
          EXPECT_FALSE(b.lhs[i] && b.rhs[i]);
        }
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(dl, dr);
        EXPECT_LE(dl, 3);
      }
    }
  }
}

TEST(PersistentGenerator, FaceCriterionMatchesExpansion) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 12; ++t) {
    const auto n = testing::random_dim(rng, 2, 3);
    const auto j = minimal_monomial_reduction(testing::random_ideal(rng, n, 4, 5));
    const std::size_t r = j.size();
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1u) support.push_back(i);
      if (support.size() > 3) continue;
      // every l >= 1 with sum l <= 4
      std::vector<std::int64_t> l(support.size(), 1);
      const bool face = is_persistent_generator(j, support, l);
      while (true) {
        std::int64_t sum = 0;
        for (auto v : l) sum += v;
        if (sum <= 4) {
          EXPECT_EQ(is_persistent_generator(j, support, l), face);
          if (face) EXPECT_TRUE(product_is_minimal_generator(j, support, l));
        }
        std::size_t i = 0;
        while (i < l.size() && l[i] == 4) l[i++] = 1;
        if (i == l.size()) break;
        ++l[i];
      }
    }
  }
}

TEST(FiberReport, Json) {
  const auto rep = fiber_report(kJ2, 4, 4);
  const auto js = to_json(rep);
  EXPECT_EQ(js["reduced"]["verdict"], "NotReduced");
  EXPECT_EQ(js["reduced"]["degree"], 2);
  EXPECT_EQ(js["hilbert_actual"][1], 9);
  EXPECT_EQ(js["hilbert_reduced"][1], 7);
  EXPECT_EQ(js["primes"].size(), 3u);
  EXPECT_THROW(fiber_report(MonomialIdeal::unit(2), 2, 2), std::invalid_argument);
}

}  // namespace
}  // namespace monoconv
