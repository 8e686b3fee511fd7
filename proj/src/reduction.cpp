#include "monoconv/reduction.hpp"

#include <algorithm>

namespace monoconv {

MonomialIdeal minimal_monomial_reduction(const NewtonPolyhedron& poly) {
  return MonomialIdeal(poly.dim(), poly.extreme_points());
}

MonomialIdeal minimal_monomial_reduction(const MonomialIdeal& ideal) {
  return minimal_monomial_reduction(newton_polyhedron(ideal));
}

bool is_extremal(const MonomialIdeal& ideal) {
  return newton_polyhedron(ideal).extreme_points().size() == ideal.size();
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, int m) {
  if (m < 1) throw std::invalid_argument("bracket_power: m must be positive");
  const MonomialIdeal j = minimal_monomial_reduction(ideal);
  std::vector<Exponent> gens;
  for (const Exponent& a : j.generators()) gens.push_back(m * a);
  return MonomialIdeal(j.dim(), gens);
}

std::int64_t kodiyalam_slope(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("kodiyalam_slope: zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("kodiyalam_slope: unit ideal has no proper reduction");
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  std::int64_t p = 0;
  for (const Exponent& a : poly.extreme_points()) p = std::max(p, total_degree(a));
  return p;
}

bool is_reduction(const MonomialIdeal& candidate, const MonomialIdeal& ideal) {
  if (candidate.dim() != ideal.dim()) throw std::invalid_argument("is_reduction: dimension mismatch");
  if (candidate.is_zero() || ideal.is_zero()) throw std::invalid_argument("is_reduction: zero ideal");
  for (const Exponent& g : candidate.generators())
    if (!contains_monomial(ideal, g)) return false;
  const NewtonPolyhedron small = newton_polyhedron(candidate);
  const NewtonPolyhedron big = newton_polyhedron(ideal);
  for (const Exponent& g : ideal.generators())
    if (!membership(small, g)) return false;
  for (const Exponent& g : candidate.generators())
    if (!membership(big, g)) return false;
  return true;
}

int reduction_number(const MonomialIdeal& ideal, const MonomialIdeal& reduction, int cutoff) {
  if (!is_reduction(reduction, ideal)) throw std::invalid_argument("reduction_number: not a reduction");
  MonomialIdeal pw = MonomialIdeal::unit(ideal.dim());  // I^m
  for (int m = 0; m <= cutoff; ++m) {
    MonomialIdeal next = multiply(pw, ideal);
    if (multiply(reduction, pw) == next) return m;
    pw = std::move(next);
  }
  throw CutoffExceeded("reduction number not found", cutoff);
}

RadicalBound radical_bound_check(const MonomialIdeal& ideal) {
  RadicalBound r;
  r.radical_gens = num_min_gens(radical(ideal));
  r.ext_count = newton_polyhedron(ideal).extreme_points().size();
  r.ok = r.radical_gens <= r.ext_count;
  return r;
}

ReductionReport reduction_report(const MonomialIdeal& ideal) {
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  ReductionReport r{minimal_monomial_reduction(poly), 0, false, poly.extreme_points().size()};
  r.input_extremal = r.ext_count == ideal.size();
  r.slope = kodiyalam_slope(ideal);
  return r;
}

}  // namespace monoconv
