#include "monoconv/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace monoconv {

bool lex_before(const Exponent& a, const Exponent& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) > b(i);
  }
  return a.size() < b.size();
}

bool divides(const Exponent& a, const Exponent& b) {
  return a.size() == b.size() && (a.array() <= b.array()).all();
}

std::int64_t total_degree(const Exponent& a) { return a.sum(); }

namespace {

void check_dim(Eigen::Index dim, const Exponent& e) {
  if (e.size() != dim) {
    throw std::invalid_argument("exponent vector of length " + std::to_string(e.size()) +
                                " in an ideal of dimension " + std::to_string(dim));
  }
  if ((e.array() < 0).any()) throw std::invalid_argument("negative exponent");
}

void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

MonomialIdeal minimalize(Eigen::Index dim, std::vector<Exponent> gens) {
  if (dim < 0) throw std::invalid_argument("negative ambient dimension");
  for (const Exponent& g : gens) check_dim(dim, g);
  // A divisor has total degree <= its multiple, so scanning by degree lets
  // each candidate be checked only against already accepted generators.
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    const auto da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : lex_before(a, b);
  });
  std::vector<Exponent> kept;
  for (Exponent& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Exponent& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), LexBefore{});
  return MonomialIdeal(dim, std::move(kept), true);
}

MonomialIdeal::MonomialIdeal(Eigen::Index dim, std::span<const Exponent> gens)
    : MonomialIdeal(minimalize(dim, std::vector<Exponent>(gens.begin(), gens.end()))) {}

MonomialIdeal::MonomialIdeal(Eigen::Index dim,
                             std::initializer_list<std::initializer_list<std::int64_t>> gens)
    : dim_(dim) {
  std::vector<Exponent> vs;
  for (const auto& g : gens) {
    Exponent e(static_cast<Eigen::Index>(g.size()));
    std::copy(g.begin(), g.end(), e.begin());
    vs.push_back(std::move(e));
  }
  *this = minimalize(dim, std::move(vs));
}

MonomialIdeal MonomialIdeal::zero(Eigen::Index dim) { return MonomialIdeal(dim, {}, true); }

MonomialIdeal MonomialIdeal::unit(Eigen::Index dim) {
  return MonomialIdeal(dim, {Exponent::Zero(dim)}, true);
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && (gens_[0].array() == 0).all(); }

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.dim_ == b.dim_ && a.gens_.size() == b.gens_.size() &&
         std::equal(a.gens_.begin(), a.gens_.end(), b.gens_.begin(),
                    [](const Exponent& x, const Exponent& y) { return x == y; });
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  std::vector<Exponent> sums;
  sums.reserve(a.size() * b.size());
  for (const Exponent& x : a.generators())
    for (const Exponent& y : b.generators()) sums.push_back(x + y);
  return minimalize(a.dim(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& ideal, int m) {
  if (m < 0) throw std::invalid_argument("negative power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.dim());
  for (int i = 0; i < m; ++i) result = multiply(result, ideal);
  return result;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Exponent> gens;
  for (const Exponent& g : ideal.generators()) gens.push_back((g.array() > 0).cast<std::int64_t>());
  return minimalize(ideal.dim(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  std::vector<Exponent> lcms;
  for (const Exponent& x : a.generators())
    for (const Exponent& y : b.generators()) lcms.push_back(x.cwiseMax(y));
  return minimalize(a.dim(), std::move(lcms));
}

bool contains_monomial(const MonomialIdeal& ideal, const Exponent& b) {
  if (b.size() != ideal.dim()) throw std::invalid_argument("monomial dimension mismatch");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Exponent& g) { return divides(g, b); });
}

bool is_minimal_generator(const MonomialIdeal& ideal, const Exponent& b) {
  if (b.size() != ideal.dim()) throw std::invalid_argument("monomial dimension mismatch");
  return std::binary_search(ideal.generators().begin(), ideal.generators().end(), b, LexBefore{});
}

std::size_t num_min_gens(const MonomialIdeal& ideal) { return ideal.size(); }

Exponent weighted_sum(std::span<const Exponent> gens, std::span<const std::int64_t> weights) {
  if (gens.size() != weights.size()) throw std::invalid_argument("weighted_sum: size mismatch");
  if (gens.empty()) throw std::invalid_argument("weighted_sum: empty");
  Exponent s = Exponent::Zero(gens.front().size());
  for (std::size_t i = 0; i < gens.size(); ++i) s += weights[i] * gens[i];
  return s;
}

}  // namespace monoconv
