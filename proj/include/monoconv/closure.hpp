#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monoconv/ideal.hpp"

namespace monoconv {

struct ClosureReport {
  MonomialIdeal closure;
  bool was_closed = false;
};

/// The monomial ideal whose exponent set is conv(I) ∩ N^n.
///
/// Minimal generators of the closure lie in the box prod_j [0, max_{a in ext} a(j)]:
/// if b(j) exceeds that bound then b - e_j is still in conv(I). The box is
/// scanned in lex order so every componentwise predecessor of a point is seen
/// before it; points dominated by a generator already found are skipped, and
/// the rest are decided by LP membership. Valid inequalities from compact face
/// certificates reject most outside points before any LP is run.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);
ClosureReport closure_report(const MonomialIdeal& ideal);

bool is_integrally_closed(const MonomialIdeal& ideal);

/// closure(I^m) == J * closure(I^(m-1)), with I^0 the unit ideal.
bool check_closure_identity(const MonomialIdeal& ideal, int m);

enum class NormalityVerdict { Normal, NotNormal, Inconclusive };

struct NormalityCertificate {
  int spread = 0;
  std::vector<std::pair<int, bool>> checked_powers;  // (a, I^a closed) for a = 1..spread-1
  NormalityVerdict verdict = NormalityVerdict::Inconclusive;
  std::optional<int> witness;  // a power that is not integrally closed
};

/// If I^a is closed for all a < l (l the analytic spread) then I is normal.
/// A failing power is itself a witness of non-normality, so Inconclusive is
/// never produced by this implementation.
NormalityCertificate normality_certificate(const MonomialIdeal& ideal);

const char* to_string(NormalityVerdict v);

}  // namespace monoconv
