#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monoconv/rational.hpp"

namespace monoconv {

/// Lex order with x1 > x2 > ... : `a` precedes `b` when the first differing
/// coordinate of `a` is larger. This is the canonical generator order.
bool lex_before(const Exponent& a, const Exponent& b);

struct LexBefore {
  bool operator()(const Exponent& a, const Exponent& b) const { return lex_before(a, b); }
};

/// Componentwise a <= b, i.e. x^a divides x^b.
bool divides(const Exponent& a, const Exponent& b);

std::int64_t total_degree(const Exponent& a);

/// A monomial ideal in n variables, stored as its minimal generating set
/// sorted by `lex_before`. The zero ideal has no generators; the unit ideal
/// has the single generator 0.
class MonomialIdeal {
 public:
  /// Builds the ideal generated by `gens`, discarding non-minimal ones.
  /// Throws std::invalid_argument on mixed dimensions or negative entries.
  MonomialIdeal(Eigen::Index dim, std::span<const Exponent> gens);
  MonomialIdeal(Eigen::Index dim, std::initializer_list<std::initializer_list<std::int64_t>> gens);

  static MonomialIdeal zero(Eigen::Index dim);
  static MonomialIdeal unit(Eigen::Index dim);

  Eigen::Index dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  MonomialIdeal(Eigen::Index dim, std::vector<Exponent> minimal_sorted, bool /*trusted*/)
      : dim_(dim), gens_(std::move(minimal_sorted)) {}

  Eigen::Index dim_;
  std::vector<Exponent> gens_;

  friend MonomialIdeal minimalize(Eigen::Index dim, std::vector<Exponent> gens);
};

/// The componentwise-minimal antichain of `gens`, sorted canonically.
MonomialIdeal minimalize(Eigen::Index dim, std::vector<Exponent> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int m);
MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// x^b in I iff some generator divides x^b.
bool contains_monomial(const MonomialIdeal& ideal, const Exponent& b);
/// True iff b is one of the minimal generators.
bool is_minimal_generator(const MonomialIdeal& ideal, const Exponent& b);
/// mu(I), the number of minimal generators.
std::size_t num_min_gens(const MonomialIdeal& ideal);

/// Sum of `gens` weighted by `weights` (a point of the semigroup they span).
Exponent weighted_sum(std::span<const Exponent> gens, std::span<const std::int64_t> weights);

}  // namespace monoconv
