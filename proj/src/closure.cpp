#include "monoconv/closure.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "monoconv/fiber.hpp"
#include "monoconv/newton.hpp"
#include "monoconv/reduction.hpp"

namespace monoconv {

namespace {

// Valid inequalities <b,u> >= c for conv(I): compact face certificates and
// the coordinate bounds b(j) >= min_a a(j).
std::vector<SupportingHyperplane> cheap_cuts(const NewtonPolyhedron& poly) {
  std::vector<SupportingHyperplane> cuts;
  for (const CompactFace& f : compact_faces(poly)) cuts.push_back(f.certificate);
  const auto n = poly.dim();
  for (Eigen::Index j = 0; j < n; ++j) {
    SupportingHyperplane h{Exponent::Unit(n, j), std::numeric_limits<std::int64_t>::max()};
    for (const Exponent& a : poly.extreme_points()) h.offset = std::min(h.offset, a(j));
    if (h.offset > 0) cuts.push_back(std::move(h));
  }
  return cuts;
}

}  // namespace

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("integral_closure: zero ideal");
  if (ideal.is_unit()) return ideal;
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  const auto n = poly.dim();
  Exponent hi = Exponent::Zero(n);
  for (const Exponent& a : poly.extreme_points()) hi = hi.cwiseMax(a);
  const auto cuts = cheap_cuts(poly);

  std::vector<Exponent> found;
  Exponent b = Exponent::Zero(n);
  while (true) {
    const bool dominated =
        std::any_of(found.begin(), found.end(), [&](const Exponent& g) { return divides(g, b); });
    if (!dominated) {
      const bool cut = std::any_of(cuts.begin(), cuts.end(),
                                   [&](const SupportingHyperplane& h) { return h.evaluate(b) < h.offset; });
      if (!cut && membership(poly, b)) found.push_back(b);
    }
    // odometer, last coordinate fastest: lex ascending
    Eigen::Index j = n - 1;
    while (j >= 0 && b(j) == hi(j)) b(j--) = 0;
    if (j < 0) break;
    ++b(j);
  }
  return MonomialIdeal(n, found);
}

ClosureReport closure_report(const MonomialIdeal& ideal) {
  MonomialIdeal c = integral_closure(ideal);
  const bool closed = c == ideal;
  return {std::move(c), closed};
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

bool check_closure_identity(const MonomialIdeal& ideal, int m) {
  if (m < 1) throw std::invalid_argument("check_closure_identity: m must be positive");
  const MonomialIdeal lhs = integral_closure(power(ideal, m));
  const MonomialIdeal rhs =
      multiply(minimal_monomial_reduction(ideal), integral_closure(power(ideal, m - 1)));
  return lhs == rhs;
}

NormalityCertificate normality_certificate(const MonomialIdeal& ideal) {
  NormalityCertificate cert;
  cert.spread = analytic_spread(ideal);
  MonomialIdeal pw = MonomialIdeal::unit(ideal.dim());
  for (int a = 1; a < cert.spread; ++a) {
    pw = multiply(pw, ideal);
    const bool closed = is_integrally_closed(pw);
    cert.checked_powers.emplace_back(a, closed);
    if (!closed && !cert.witness) cert.witness = a;
  }
  cert.verdict = cert.witness ? NormalityVerdict::NotNormal : NormalityVerdict::Normal;
  return cert;
}

const char* to_string(NormalityVerdict v) {
  switch (v) {
    case NormalityVerdict::Normal: return "Normal";
    case NormalityVerdict::NotNormal: return "NotNormal";
    case NormalityVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

}  // namespace monoconv
