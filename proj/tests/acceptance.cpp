// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monoconv/closure.hpp"
#include "monoconv/fiber.hpp"
#include "monoconv/newton.hpp"
#include "monoconv/reduction.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace monoconv;
using testing::ExpSet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;
std::vector<MonomialIdeal> full_corpus;  // every random ideal used, for criterion 10

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.detail += " [over time limit " + std::to_string(static_cast<int>(limit_seconds)) + " s]";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-44s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

// n <= 3 throughout, weighted toward three variables.
std::vector<MonomialIdeal> corpus(std::uint64_t seed, int count, int max_exp, int max_gens) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  for (int i = 0; i < count; ++i)
    out.push_back(testing::random_ideal(rng, testing::random_dim_upto3(rng), max_exp, max_gens));
  full_corpus.insert(full_corpus.end(), out.begin(), out.end());
  return out;
}

std::vector<MonomialIdeal> extremal_corpus(std::uint64_t seed, int count, int max_exp, int max_gens) {
  std::vector<MonomialIdeal> out;
  for (const auto& i : corpus(seed, count, max_exp, max_gens)) out.push_back(minimal_monomial_reduction(i));
  return out;
}

testing::ExpFamily families(const std::vector<CompactFace>& faces) {
  testing::ExpFamily out;
  for (const auto& f : faces) out.insert(ExpSet(f.points.begin(), f.points.end()));
  return out;
}

std::string ideal_text(const MonomialIdeal& i) {
  std::string s = "{";
  for (const Exponent& g : i.generators()) {
    s += "(";
    for (Eigen::Index j = 0; j < g.size(); ++j) s += (j ? "," : "") + std::to_string(g(j));
    s += ")";
  }
  return s + "}";
}

const MonomialIdeal kJ1(2, {{6, 0}, {2, 1}, {1, 2}, {0, 6}});
const MonomialIdeal kJ2(2, {{8, 0}, {6, 1}, {2, 7}, {0, 12}});

}  // namespace

int main() {
  criterion(1, "J1 fiber: 3 faces, primes, Reduced(6)", 5, [] {
    const auto rep = fiber_report(kJ1, 6, 4);
    std::set<std::vector<std::size_t>> p_parts;
    bool b_empty = true;
    for (const auto& p : rep.primes) {
      p_parts.insert(p.monomial_part);
      b_empty = b_empty && p.binomial_part.empty();
    }
    const MonomialIdeal expected_meet(4, {{1, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    Outcome o;
    o.pass = rep.max_faces.size() == 3 && p_parts == std::set<std::vector<std::size_t>>{{2, 3}, {0, 3}, {0, 1}} &&
             b_empty && rep.monomial_intersection == expected_meet && rep.verdict.reduced &&
             rep.verdict.degree == 6 && !rep.is_domain;
    o.detail = std::to_string(rep.max_faces.size()) + " maximal faces, " +
               (rep.verdict.reduced ? "Reduced(" : "NotReduced(") + std::to_string(rep.verdict.degree) + "), domain=" +
               (rep.is_domain ? "yes" : "no");
    return o;
  });

  criterion(2, "J2 fiber: NotReduced(2), 9 vs 7", 5, [] {
    // Independent values first: multiset expansion of J2^2, and the degree-2
    // points supported on one lower-hull edge.
    const auto brute_actual = testing::brute_power(kJ2.generators(), 2, 2).size();
    const auto chain = testing::newton_chain_2d(kJ2.generators());
    ExpSet reduced;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      for (int a = 0; a <= 2; ++a) reduced.insert(a * chain[i] + (2 - a) * chain[i + 1]);
    const auto rep = fiber_report(kJ2, 6, 4);
    Outcome o;
    o.pass = brute_actual == 9 && reduced.size() == 7 && !rep.verdict.reduced && rep.verdict.degree == 2 &&
             rep.hilbert_actual.at(1) == brute_actual && rep.hilbert_reduced.at(1) == reduced.size();
    o.detail = "brute " + std::to_string(brute_actual) + "/" + std::to_string(reduced.size()) + ", pipeline " +
               std::to_string(rep.hilbert_actual.at(1)) + "/" + std::to_string(rep.hilbert_reduced.at(1)) + ", " +
               (rep.verdict.reduced ? "Reduced(" : "NotReduced(") + std::to_string(rep.verdict.degree) + ")";
    return o;
  });

  criterion(3, "squarefree ideals are extremal (200, n<=5)", 0, [] {
    std::mt19937_64 rng(3003);
    int ok = 0;
    for (int i = 0; i < 200; ++i) {
      const auto ideal = testing::random_squarefree(rng, testing::random_dim(rng, 1, 5), 8);
      full_corpus.push_back(ideal);
      ok += is_extremal(ideal) ? 1 : 0;
    }
    return Outcome{ok == 200, std::to_string(ok) + "/200 extremal"};
  });

  const auto geometry = corpus(4004, 100, 8, 6);

  criterion(4, "bracket powers J^[m] = mmr(I^m), m<=4", 60, [&] {
    int bad = 0;
    std::string first;
    for (const auto& ideal : geometry)
      for (int m = 1; m <= 4; ++m)
        if (minimal_monomial_reduction(power(ideal, m)) != bracket_power(ideal, m)) {
          if (!bad++) first = ideal_text(ideal) + " m=" + std::to_string(m);
        }
    return Outcome{bad == 0, std::to_string(400 - bad) + "/400 agree" + (bad ? "; first: " + first : "")};
  });

  criterion(5, "face scaling F -> mF onto faces of I^m, m<=3", 0, [&] {
    int bad = 0;
    std::string first;
    for (const auto& ideal : geometry) {
      const auto faces = compact_faces(newton_polyhedron(ideal));
      for (int m = 1; m <= 3; ++m) {
        std::vector<CompactFace> scaled;
        for (const auto& f : faces) scaled.push_back(scale_face(f, m));
        const auto target = compact_faces(newton_polyhedron(power(ideal, m)));
        if (families(scaled) != families(target) || scaled.size() != target.size()) {
          if (!bad++) first = ideal_text(ideal) + " m=" + std::to_string(m);
        }
      }
    }
    return Outcome{bad == 0, std::to_string(300 - bad) + "/300 agree" + (bad ? "; first: " + first : "")};
  });

  criterion(6, "deg of k -> mu(J^k) on [6,10] = spread - 1", 0, [] {
    const auto ideals = extremal_corpus(6006, 50, 5, 5);
    int bad = 0;
    std::string first;
    for (const auto& j : ideals) {
      std::vector<Integer> v;
      for (int k = 6; k <= 10; ++k) v.emplace_back(static_cast<long>(power(j, k).size()));
      // smallest d whose (d+1)-th differences vanish on the window
      int degree = -1;
      std::vector<Integer> diff = v;
      for (int d = 0; d < 5; ++d) {
        bool constant = true;
        for (std::size_t i = 1; i < diff.size(); ++i) constant = constant && diff[i] == diff[0];
        if (constant && diff.size() >= 2) {
          degree = d;
          break;
        }
        std::vector<Integer> next;
        for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
        diff = next;
      }
      const int spread = analytic_spread(j);
      if (degree != spread - 1) {
        if (!bad++) first = ideal_text(j) + " degree " + std::to_string(degree) + " spread " + std::to_string(spread);
      }
    }
    return Outcome{bad == 0, std::to_string(50 - bad) + "/50 agree" + (bad ? "; first: " + first : "")};
  });

  const auto closure_corpus = corpus(7007, 100, 6, 5);

  criterion(7, "closure identity for m in [l, l+2]", 0, [&] {
    int bad = 0, checks = 0;
    std::string first;
    for (const auto& ideal : closure_corpus) {
      const int l = analytic_spread(ideal);
      for (int m = l; m <= l + 2; ++m) {
        ++checks;
        if (!check_closure_identity(ideal, m)) {
          if (!bad++) first = ideal_text(ideal) + " m=" + std::to_string(m);
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " hold" +
                                 (bad ? "; first: " + first : "")};
  });

  criterion(8, "normality: regressions and Normal => closed", 0, [&] {
    const auto sq = normality_certificate(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    const auto diag = normality_certificate(MonomialIdeal(2, {{2, 0}, {0, 2}}));
    bool ok = sq.verdict == NormalityVerdict::Normal && diag.verdict == NormalityVerdict::NotNormal &&
              diag.witness && *diag.witness == 1;
    std::vector<MonomialIdeal> pool = {MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}})};
    pool.insert(pool.end(), closure_corpus.begin(), closure_corpus.end());
    std::mt19937_64 rng(8008);
    for (int i = 0; i < 30; ++i) {
      pool.push_back(testing::random_squarefree(rng, testing::random_dim(rng, 1, 3), 4));
      full_corpus.push_back(pool.back());
    }
    int normal = 0, bad = 0;
    std::string first;
    for (const auto& ideal : pool) {
      const auto cert = normality_certificate(ideal);
      if (cert.verdict != NormalityVerdict::Normal) continue;
      ++normal;
      for (int a = 1; a <= cert.spread + 3; ++a)
        if (!is_integrally_closed(power(ideal, a))) {
          if (!bad++) first = ideal_text(ideal) + " a=" + std::to_string(a);
          break;
        }
    }
    ok = ok && bad == 0;
    return Outcome{ok, std::string("(x^2,xy,y^2) ") + to_string(sq.verdict) + ", (x^2,y^2) " + to_string(diag.verdict) +
                           "(" + (diag.witness ? std::to_string(*diag.witness) : "-") + "), " +
                           std::to_string(normal) + " certified Normal, " + std::to_string(bad) + " violations" +
                           (bad ? "; first: " + first : "")};
  });

  // Persistence is a property of a support S: x^(sum l_i a_i) is a minimal
  // generator of J^(sum l) for every l >= 1. The face criterion is compared
  // with that property truncated to sum l <= 5, for every support. On a
  // support off every compact face, non-persistence can first show up beyond
  // sum l = 5; for each such support the smallest witnessing sum l <= 12 is
  // printed, and a face support that ever fails counts as a forward violation.
  criterion(9, "persistence: face criterion vs G(J^m), sum l<=5", 0, [] {
    const auto ideals = extremal_corpus(9009, 30, 5, 5);
    long supports = 0, disagree = 0, forward = 0, tuples = 0;
    std::string first, late;
    // Calls f(l) for every l >= 1 of the given length with sum l <= cap, in
    // order of increasing sum; stops early when f returns true.
    auto tuples_upto = [](std::size_t len, std::int64_t cap, const auto& f) {
      for (std::int64_t sum = static_cast<std::int64_t>(len); sum <= cap; ++sum) {
        std::vector<std::int64_t> l(len, 1);
        auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> bool {
          if (i + 1 == len) {
            l[i] = left;
            return f(l);
          }
          for (std::int64_t v = 1; v <= left - static_cast<std::int64_t>(len - i - 1); ++v) {
            l[i] = v;
            if (self(self, i + 1, left - v)) return true;
          }
          return false;
        };
        if (rec(rec, 0, sum)) return;
      }
    };
    for (const auto& j : ideals) {
      const std::size_t r = j.size();
      for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < r; ++i)
          if (mask >> i & 1u) support.push_back(i);
        if (support.size() > 5) continue;
        ++supports;
        const std::vector<std::int64_t> ones(support.size(), 1);
        const bool face = is_persistent_generator(j, support, ones);
        bool all_minimal = true;
        tuples_upto(support.size(), 5, [&](const std::vector<std::int64_t>& l) {
          ++tuples;
          if (is_persistent_generator(j, support, l) != face) all_minimal = false;  // must not depend on l
          if (!product_is_minimal_generator(j, support, l)) all_minimal = false;
          return false;
        });
        if (all_minimal == face) continue;
        ++disagree;
        if (face) ++forward;
        std::string where = ideal_text(j) + " S=";
        for (auto x : support) where += std::to_string(x);
        if (first.empty()) first = where + (face ? " (on a face)" : " (on no face)");
        if (!face) {
          std::int64_t found = 0;
          tuples_upto(support.size(), 12, [&](const std::vector<std::int64_t>& l) {
            if (product_is_minimal_generator(j, support, l)) return false;
            for (auto x : l) found += x;
            return true;
          });
          late += " " + (found ? std::to_string(found) : std::string(">12"));
        }
      }
    }
    return Outcome{disagree == 0,
                   std::to_string(supports - disagree) + "/" + std::to_string(supports) + " supports agree (" +
                       std::to_string(tuples) + " tuples), forward violations " + std::to_string(forward) +
                       (disagree ? "; first: " + first : "") +
                       (late.empty() ? "" : "; off-face supports first fail at sum l =" + late)};
  });

  criterion(10, "mu(Rad I) <= |ext(I)| on the full corpus", 0, [] {
    int bad = 0;
    for (const auto& ideal : full_corpus) bad += radical_bound_check(ideal).ok ? 0 : 1;
    return Outcome{bad == 0, std::to_string(full_corpus.size() - bad) + "/" + std::to_string(full_corpus.size()) +
                                 " satisfy the bound"};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
