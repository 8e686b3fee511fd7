#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "monoconv/ideal.hpp"
#include "monoconv/newton.hpp"

namespace monoconv {

/// y^lhs - y^rhs over the fiber variables y_1..y_r (one per generator of J).
struct Binomial {
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
};

/// The prime (P_F, B_F) attached to a maximal compact face F.
struct FiberPrime {
  CompactFace face;
  std::vector<std::size_t> monomial_part;  // {j : a_j not in F}, 0-based
  std::vector<Binomial> binomial_part;     // kernel binomials of degree <= degree_bound
  int degree_bound = 0;
};

/// Reduced(degree): Hilbert functions agree through `degree` (not a proof).
/// NotReduced(degree): first degree where they differ.
struct ReducedVerdict {
  bool reduced = true;
  int degree = 0;
};

struct FiberReport {
  MonomialIdeal reduction;  // the extremal ideal J
  bool input_extremal = true;
  std::vector<CompactFace> max_faces;
  std::vector<FiberPrime> primes;
  MonomialIdeal monomial_intersection;  // ∩ P_F in the fiber variables
  int spread = 0;
  bool is_domain = false;
  ReducedVerdict verdict;
  std::vector<std::size_t> hilbert_actual;
  std::vector<std::size_t> hilbert_reduced;
};

/// l = c(I) + 1. Rejects the zero and unit ideals.
int analytic_spread(const MonomialIdeal& ideal);

/// Face criterion: the generators indexed by `support` lie on a common
/// compact face, equivalently every product f^l is a minimal generator of
/// J^(sum l). `exponents` must be positive and match `support` in length.
bool is_persistent_generator(const MonomialIdeal& j, std::span<const std::size_t> support,
                             std::span<const std::int64_t> exponents);

/// Direct route: expands J^(sum l) and asks whether the product is a minimal generator.
bool product_is_minimal_generator(const MonomialIdeal& j, std::span<const std::size_t> support,
                                  std::span<const std::int64_t> exponents);

/// [mu(J^k) for k = 1..K]
std::vector<std::size_t> fiber_hilbert_actual(const MonomialIdeal& j, int max_degree);

/// Degree-k dimension of F(J)_red: distinct points sum l_j a_j with sum l_j = k
/// and {a_j : l_j > 0} on a common compact face.
std::vector<std::size_t> fiber_hilbert_reduced(const MonomialIdeal& j, int max_degree);

ReducedVerdict reducedness_verdict(const MonomialIdeal& j, int max_degree);

/// One prime per maximal compact face, B_F truncated at fiber degree `degree_bound`.
std::vector<FiberPrime> minimal_primes(const MonomialIdeal& j, int degree_bound);

/// ∩ P_F as a monomial ideal in r variables (zero ideal if some P_F is empty).
MonomialIdeal monomial_part_intersection(std::span<const FiberPrime> primes, std::size_t fiber_vars);

/// F(J) is a domain iff there is exactly one maximal compact face.
bool is_fiber_domain(const MonomialIdeal& j);

/// Counts the degree-k part of the inverse limit over the compact face
/// lattice by inclusion-exclusion over maximal faces and compares with
/// fiber_hilbert_reduced for k = 1..K.
bool face_lattice_hilbert_crosscheck(const MonomialIdeal& j, int max_degree);

/// Full report for I; analysis runs on the minimal monomial reduction J.
FiberReport fiber_report(const MonomialIdeal& ideal, int max_degree, int degree_bound);

nlohmann::json to_json(const FiberReport& report);

}  // namespace monoconv
