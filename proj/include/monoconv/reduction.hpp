#pragma once

#include <stdexcept>

#include "monoconv/ideal.hpp"
#include "monoconv/newton.hpp"

namespace monoconv {

/// Raised when a search bounded by a caller-supplied cutoff finds nothing.
class CutoffExceeded : public std::runtime_error {
 public:
  CutoffExceeded(const std::string& what, int cutoff)
      : std::runtime_error(what + " (cutoff " + std::to_string(cutoff) + ")"), cutoff_(cutoff) {}
  int cutoff() const { return cutoff_; }

 private:
  int cutoff_;
};

struct ReductionReport {
  MonomialIdeal reduction;  // J, generated by ext(I)
  std::int64_t slope = 0;   // Kodiyalam slope p = max degree over G(J)
  bool input_extremal = false;
  std::size_t ext_count = 0;
};

/// The unique minimal monomial reduction J, with G(J) = ext(I).
MonomialIdeal minimal_monomial_reduction(const MonomialIdeal& ideal);
MonomialIdeal minimal_monomial_reduction(const NewtonPolyhedron& poly);

bool is_extremal(const MonomialIdeal& ideal);

/// J^[m], generated by m*a for a in G(J). A non-extremal argument is first
/// replaced by its minimal monomial reduction.
MonomialIdeal bracket_power(const MonomialIdeal& ideal, int m);

/// p = max total degree over ext(I). Rejects the zero and unit ideals.
std::int64_t kodiyalam_slope(const MonomialIdeal& ideal);

/// L is a reduction of I: L is contained in I and conv(L) = conv(I).
bool is_reduction(const MonomialIdeal& candidate, const MonomialIdeal& ideal);

/// Least m <= cutoff with L*I^m = I^(m+1). Throws std::invalid_argument if
/// L is not a reduction of I and CutoffExceeded if no m <= cutoff works.
int reduction_number(const MonomialIdeal& ideal, const MonomialIdeal& reduction, int cutoff = 20);

struct RadicalBound {
  std::size_t radical_gens = 0;
  std::size_t ext_count = 0;
  bool ok = false;
};

/// mu(Rad I) against |ext(I)|.
RadicalBound radical_bound_check(const MonomialIdeal& ideal);

ReductionReport reduction_report(const MonomialIdeal& ideal);

}  // namespace monoconv
