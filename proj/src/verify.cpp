#include "monoconv/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "monoconv/closure.hpp"
#include "monoconv/fiber.hpp"
#include "monoconv/newton.hpp"
#include "monoconv/reduction.hpp"

namespace monoconv {

namespace {

struct PointListBefore {
  bool operator()(const std::vector<Exponent>& a, const std::vector<Exponent>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexBefore{});
  }
};
using FaceFamily = std::set<std::vector<Exponent>, PointListBefore>;

FaceFamily point_family(std::span<const CompactFace> faces) {
  FaceFamily out;
  for (const CompactFace& f : faces) out.insert(f.points);
  return out;
}

// Caches J^m.
class PowerCache {
 public:
  explicit PowerCache(const MonomialIdeal& base) : powers_{MonomialIdeal::unit(base.dim())}, base_(base) {}
  const MonomialIdeal& operator[](std::size_t m) {
    while (powers_.size() <= m) powers_.push_back(multiply(powers_.back(), base_));
    return powers_[m];
  }

 private:
  std::vector<MonomialIdeal> powers_;
  MonomialIdeal base_;
};

// Calls f(l) for each l with l_i >= 1, size t, sum <= total.
template <typename F>
void for_each_positive_tuple(std::size_t t, int total, F&& f) {
  std::vector<std::int64_t> l(t, 1);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == t) {
      f(l);
      return;
    }
    for (int v = 1; v <= left - static_cast<int>(t - i - 1); ++v) {
      l[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (static_cast<int>(t) <= total) rec(rec, 0, total);
}

Exponent product_point(const MonomialIdeal& j, const std::vector<std::size_t>& support,
                       const std::vector<std::int64_t>& l) {
  Exponent b = Exponent::Zero(j.dim());
  for (std::size_t i = 0; i < support.size(); ++i) b += l[i] * j.generators()[support[i]];
  return b;
}

}  // namespace

std::vector<PropertyCheck> verify_invariants(const MonomialIdeal& ideal, const VerifyOptions& opts) {
  if (ideal.is_zero() || ideal.is_unit()) throw std::invalid_argument("verify needs a nonzero proper ideal");
  std::vector<PropertyCheck> out;
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  const MonomialIdeal j = minimal_monomial_reduction(poly);
  const auto faces = compact_faces(poly);
  const int spread = static_cast<int>(c_invariant(faces)) + 1;

  {
    PropertyCheck c{"bracket powers: J^[m] is the minimal reduction of I^m", CheckStatus::Passed, ""};
    for (int m = 1; m <= opts.bracket_powers; ++m) {
      if (!(bracket_power(j, m) == minimal_monomial_reduction(power(ideal, m)))) {
        c.status = CheckStatus::Failed;
        c.detail = "fails at m=" + std::to_string(m);
        break;
      }
    }
    if (c.status == CheckStatus::Passed) c.detail = "m=1.." + std::to_string(opts.bracket_powers);
    out.push_back(std::move(c));
  }
  {
    PropertyCheck c{"face scaling: compact faces of I^m are m times those of I", CheckStatus::Passed, ""};
    for (int m = 2; m <= opts.face_scaling; ++m) {
      std::vector<CompactFace> scaled;
      for (const CompactFace& f : faces) scaled.push_back(scale_face(f, m));
      const auto direct = compact_faces(newton_polyhedron(power(ideal, m)));
      if (point_family(direct) != point_family(scaled)) {
        c.status = CheckStatus::Failed;
        c.detail = "fails at m=" + std::to_string(m);
        break;
      }
    }
    if (c.status == CheckStatus::Passed) c.detail = "m=2.." + std::to_string(opts.face_scaling);
    out.push_back(std::move(c));
  }
  {
    PropertyCheck c{"closure identity: closure(I^m) = J closure(I^(m-1)) for m >= l", CheckStatus::Passed, ""};
    for (int m = spread; m <= spread + 2; ++m) {
      if (!check_closure_identity(ideal, m)) {
        c.status = CheckStatus::Failed;
        c.detail = "fails at m=" + std::to_string(m);
        break;
      }
    }
    if (c.status == CheckStatus::Passed) {
      c.detail = "m=" + std::to_string(spread) + ".." + std::to_string(spread + 2);
    }
    out.push_back(std::move(c));
  }

  // Persistence criterion on J.
  PowerCache powers(j);
  std::set<std::vector<std::size_t>> cofacial;
  for (const CompactFace& f : maximal_faces(faces)) {
    const std::size_t t = f.vertices.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << t); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < t; ++i)
        if (mask >> i & 1) s.push_back(f.vertices[i]);
      cofacial.insert(std::move(s));
    }
  }
  {
    PropertyCheck c{"persistence: products over a compact face are minimal generators", CheckStatus::Passed, ""};
    std::size_t checked = 0;
    for (const auto& s : cofacial) {
      for_each_positive_tuple(s.size(), opts.persistent_degree, [&](const std::vector<std::int64_t>& l) {
        if (c.status == CheckStatus::Failed) return;
        std::int64_t m = 0;
        for (auto v : l) m += v;
        ++checked;
        if (!is_minimal_generator(powers[static_cast<std::size_t>(m)], product_point(j, s, l))) {
          c.status = CheckStatus::Failed;
          c.detail = "non-minimal product found";
        }
      });
    }
    if (c.status == CheckStatus::Passed) c.detail = std::to_string(checked) + " products checked";
    out.push_back(std::move(c));
  }
  {
    PropertyCheck c{"persistence converse: off-face products eventually stop being minimal", CheckStatus::Passed, ""};
    std::size_t resolved = 0, unresolved = 0;
    const std::size_t r = j.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1) s.push_back(i);
      if (cofacial.contains(s)) continue;
      bool found = false;
      for (int big_l = 1; big_l <= opts.converse_search; ++big_l) {
        const auto m = static_cast<int>(s.size()) * big_l;
        if (m > opts.converse_power_cap) break;
        const std::vector<std::int64_t> l(s.size(), big_l);
        if (!is_minimal_generator(powers[static_cast<std::size_t>(m)], product_point(j, s, l))) {
          found = true;
          break;
        }
      }
      (found ? resolved : unresolved)++;
    }
    c.detail = std::to_string(resolved) + " off-face supports resolved, " + std::to_string(unresolved) +
               " beyond the search bound";
    if (unresolved > 0) c.status = CheckStatus::Reported;
    out.push_back(std::move(c));
  }
  {
    const RadicalBound rb = radical_bound_check(ideal);
    out.push_back({"radical bound: mu(Rad I) <= |ext(I)|", rb.ok ? CheckStatus::Passed : CheckStatus::Failed,
                   std::to_string(rb.radical_gens) + " <= " + std::to_string(rb.ext_count)});
  }
  {
    const bool same = analytic_spread(j) == spread;
    out.push_back({"analytic spread agrees for I and J", same ? CheckStatus::Passed : CheckStatus::Failed,
                   "l=" + std::to_string(spread)});
  }
  {
    const bool ok = face_lattice_hilbert_crosscheck(j, opts.hilbert_degree);
    out.push_back({"reduced fiber Hilbert function matches the face lattice count",
                   ok ? CheckStatus::Passed : CheckStatus::Failed,
                   "k=1.." + std::to_string(opts.hilbert_degree)});
  }
  return out;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed: return "PASS";
    case CheckStatus::Failed: return "FAIL";
    case CheckStatus::Reported: return "REPORT";
  }
  return "?";
}

}  // namespace monoconv
