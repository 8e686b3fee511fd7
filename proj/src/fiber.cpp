#include "monoconv/fiber.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "monoconv/io.hpp"
#include "monoconv/reduction.hpp"

namespace monoconv {

namespace {

NewtonPolyhedron extremal_polyhedron(const MonomialIdeal& j) {
  if (j.is_zero()) throw std::invalid_argument("fiber ring of the zero ideal");
  NewtonPolyhedron poly = newton_polyhedron(j);
  if (poly.extreme_points().size() != j.size()) {
    throw std::invalid_argument("fiber analysis requires an extremal ideal; use its minimal monomial reduction");
  }
  return poly;
}

void check_degree(int k) {
  if (k < 1) throw std::invalid_argument("degree bound must be positive");
}

// Calls f(l) for every l in N^parts with sum l = k.
template <typename F>
void for_each_composition(int k, std::size_t parts, F&& f) {
  if (parts == 0) return;
  std::vector<std::int64_t> l(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == parts) {
      l[i] = left;
      f(l);
      return;
    }
    for (std::int64_t v = left; v >= 0; --v) {
      l[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, k);
}

using PointSet = std::set<Exponent, LexBefore>;

Exponent point_of(const std::vector<Exponent>& gens, const std::vector<std::size_t>& idx,
                  const std::vector<std::int64_t>& l) {
  Exponent p = Exponent::Zero(gens.front().size());
  for (std::size_t i = 0; i < idx.size(); ++i) p += l[i] * gens[idx[i]];
  return p;
}

std::vector<std::size_t> hilbert_reduced_impl(const std::vector<Exponent>& ext,
                                               const std::vector<CompactFace>& max_faces, int max_degree) {
  const std::size_t r = ext.size();
  std::vector<std::vector<bool>> on_face;
  for (const CompactFace& f : max_faces) {
    std::vector<bool> mask(r, false);
    for (std::size_t v : f.vertices) mask[v] = true;
    on_face.push_back(std::move(mask));
  }
  std::vector<std::size_t> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = i;

  std::vector<std::size_t> out;
  for (int k = 1; k <= max_degree; ++k) {
    PointSet points;
    for_each_composition(k, r, [&](const std::vector<std::int64_t>& l) {
      const bool cofacial = std::any_of(on_face.begin(), on_face.end(), [&](const std::vector<bool>& mask) {
        for (std::size_t j = 0; j < r; ++j)
          if (l[j] > 0 && !mask[j]) return false;
        return true;
      });
      if (cofacial) points.insert(point_of(ext, all, l));
    });
    out.push_back(points.size());
  }
  return out;
}

std::vector<std::size_t> hilbert_actual_impl(const MonomialIdeal& j, int max_degree) {
  std::vector<std::size_t> out;
  MonomialIdeal pw = MonomialIdeal::unit(j.dim());
  for (int k = 1; k <= max_degree; ++k) {
    pw = multiply(pw, j);
    out.push_back(num_min_gens(pw));
  }
  return out;
}

ReducedVerdict verdict_from(const std::vector<std::size_t>& actual, const std::vector<std::size_t>& reduced) {
  for (std::size_t k = 0; k < actual.size(); ++k) {
    if (actual[k] != reduced[k]) return {false, static_cast<int>(k + 1)};
  }
  return {true, static_cast<int>(actual.size())};
}

std::vector<FiberPrime> primes_impl(const std::vector<Exponent>& ext, const std::vector<CompactFace>& max_faces,
                                    int degree_bound) {
  const std::size_t r = ext.size();
  std::vector<FiberPrime> primes;
  for (const CompactFace& f : max_faces) {
    FiberPrime p;
    p.face = f;
    p.degree_bound = degree_bound;
    for (std::size_t j = 0; j < r; ++j)
      if (!std::binary_search(f.vertices.begin(), f.vertices.end(), j)) p.monomial_part.push_back(j);

    // Kernel of y_j -> x^{a_j} t on the face: monomials of equal degree with equal image.
    for (int d = 2; d <= degree_bound; ++d) {
      std::map<Exponent, std::vector<std::vector<std::int64_t>>, LexBefore> fibres;
      for_each_composition(d, f.vertices.size(), [&](const std::vector<std::int64_t>& l) {
        fibres[point_of(ext, f.vertices, l)].push_back(l);
      });
      for (const auto& [point, monos] : fibres) {
        for (std::size_t a = 0; a < monos.size(); ++a) {
          for (std::size_t b = a + 1; b < monos.size(); ++b) {
            bool disjoint = true;
            for (std::size_t i = 0; i < f.vertices.size() && disjoint; ++i)
              disjoint = monos[a][i] == 0 || monos[b][i] == 0;
            if (!disjoint) continue;
            Binomial bin{std::vector<std::int64_t>(r, 0), std::vector<std::int64_t>(r, 0)};
            for (std::size_t i = 0; i < f.vertices.size(); ++i) {
              bin.lhs[f.vertices[i]] = monos[a][i];
              bin.rhs[f.vertices[i]] = monos[b][i];
            }
            p.binomial_part.push_back(std::move(bin));
          }
        }
      }
    }
    primes.push_back(std::move(p));
  }
  return primes;
}

}  // namespace

int analytic_spread(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("analytic_spread: zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("analytic_spread: unit ideal");
  return static_cast<int>(c_invariant(newton_polyhedron(ideal))) + 1;
}

namespace {

void check_product_args(const MonomialIdeal& j, std::span<const std::size_t> support,
                        std::span<const std::int64_t> exponents) {
  if (support.empty()) throw std::invalid_argument("empty support");
  if (support.size() != exponents.size()) throw std::invalid_argument("support/exponent length mismatch");
  std::set<std::size_t> seen;
  for (std::size_t s : support) {
    if (s >= j.size()) throw std::invalid_argument("support index out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("repeated support index");
  }
  for (std::int64_t l : exponents)
    if (l < 1) throw std::invalid_argument("exponents must be positive");
}

}  // namespace

bool is_persistent_generator(const MonomialIdeal& j, std::span<const std::size_t> support,
                             std::span<const std::int64_t> exponents) {
  check_product_args(j, support, exponents);
  const NewtonPolyhedron poly = extremal_polyhedron(j);
  return on_common_compact_face(poly, support);
}

bool product_is_minimal_generator(const MonomialIdeal& j, std::span<const std::size_t> support,
                                  std::span<const std::int64_t> exponents) {
  check_product_args(j, support, exponents);
  Exponent b = Exponent::Zero(j.dim());
  std::int64_t m = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    b += exponents[i] * j.generators()[support[i]];
    m += exponents[i];
  }
  return is_minimal_generator(power(j, static_cast<int>(m)), b);
}

std::vector<std::size_t> fiber_hilbert_actual(const MonomialIdeal& j, int max_degree) {
  check_degree(max_degree);
  extremal_polyhedron(j);
  return hilbert_actual_impl(j, max_degree);
}

std::vector<std::size_t> fiber_hilbert_reduced(const MonomialIdeal& j, int max_degree) {
  check_degree(max_degree);
  const NewtonPolyhedron poly = extremal_polyhedron(j);
  return hilbert_reduced_impl(poly.extreme_points(), maximal_compact_faces(poly), max_degree);
}

ReducedVerdict reducedness_verdict(const MonomialIdeal& j, int max_degree) {
  return verdict_from(fiber_hilbert_actual(j, max_degree), fiber_hilbert_reduced(j, max_degree));
}

std::vector<FiberPrime> minimal_primes(const MonomialIdeal& j, int degree_bound) {
  check_degree(degree_bound);
  const NewtonPolyhedron poly = extremal_polyhedron(j);
  return primes_impl(poly.extreme_points(), maximal_compact_faces(poly), degree_bound);
}

MonomialIdeal monomial_part_intersection(std::span<const FiberPrime> primes, std::size_t fiber_vars) {
  const auto r = static_cast<Eigen::Index>(fiber_vars);
  MonomialIdeal acc = MonomialIdeal::unit(r);
  for (const FiberPrime& p : primes) {
    std::vector<Exponent> gens;
    for (std::size_t v : p.monomial_part) gens.push_back(Exponent::Unit(r, static_cast<Eigen::Index>(v)));
    acc = intersect(acc, MonomialIdeal(r, gens));
  }
  return acc;
}

bool is_fiber_domain(const MonomialIdeal& j) {
  return maximal_compact_faces(extremal_polyhedron(j)).size() == 1;
}

bool face_lattice_hilbert_crosscheck(const MonomialIdeal& j, int max_degree) {
  check_degree(max_degree);
  const NewtonPolyhedron poly = extremal_polyhedron(j);
  const auto& ext = poly.extreme_points();
  const auto max_faces = maximal_compact_faces(poly);
  if (max_faces.size() > 20) throw std::invalid_argument("too many maximal faces for inclusion-exclusion");

  // Semigroup points of degree k generated by a face's vertices.
  std::map<std::pair<std::vector<std::size_t>, int>, std::size_t> cache;
  auto face_count = [&](const std::vector<std::size_t>& verts, int k) -> std::size_t {
    if (verts.empty()) return 0;
    auto key = std::make_pair(verts, k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    PointSet points;
    for_each_composition(k, verts.size(), [&](const std::vector<std::int64_t>& l) {
      points.insert(point_of(ext, verts, l));
    });
    return cache[key] = points.size();
  };

  const auto reduced = hilbert_reduced_impl(ext, max_faces, max_degree);
  const std::size_t subsets = std::size_t{1} << max_faces.size();
  for (int k = 1; k <= max_degree; ++k) {
    long long total = 0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      std::vector<std::size_t> common;
      bool first = true;
      for (std::size_t f = 0; f < max_faces.size(); ++f) {
        if (!(mask >> f & 1)) continue;
        if (first) {
          common = max_faces[f].vertices;
          first = false;
        } else {
          std::vector<std::size_t> tmp;
          std::set_intersection(common.begin(), common.end(), max_faces[f].vertices.begin(),
                                max_faces[f].vertices.end(), std::back_inserter(tmp));
          common = std::move(tmp);
        }
      }
      const auto c = static_cast<long long>(face_count(common, k));
      total += (std::popcount(mask) % 2 == 1) ? c : -c;
    }
    if (total != static_cast<long long>(reduced[k - 1])) return false;
  }
  return true;
}

FiberReport fiber_report(const MonomialIdeal& ideal, int max_degree, int degree_bound) {
  check_degree(max_degree);
  check_degree(degree_bound);
  if (ideal.is_unit()) throw std::invalid_argument("fiber ring of the unit ideal");
  FiberReport rep{minimal_monomial_reduction(ideal), true, {}, {}, MonomialIdeal::zero(1), 0, false, {}, {}, {}};
  rep.input_extremal = rep.reduction.size() == ideal.size();
  const NewtonPolyhedron poly = extremal_polyhedron(rep.reduction);
  const auto faces = compact_faces(poly);
  rep.max_faces = maximal_faces(faces);
  rep.primes = primes_impl(poly.extreme_points(), rep.max_faces, degree_bound);
  rep.monomial_intersection = monomial_part_intersection(rep.primes, rep.reduction.size());
  rep.spread = static_cast<int>(c_invariant(faces)) + 1;
  rep.is_domain = rep.max_faces.size() == 1;
  rep.hilbert_actual = hilbert_actual_impl(rep.reduction, max_degree);
  rep.hilbert_reduced = hilbert_reduced_impl(poly.extreme_points(), rep.max_faces, max_degree);
  rep.verdict = verdict_from(rep.hilbert_actual, rep.hilbert_reduced);
  return rep;
}

nlohmann::json to_json(const FiberReport& rep) {
  nlohmann::json faces = nlohmann::json::array();
  for (const CompactFace& f : rep.max_faces) {
    faces.push_back({{"verts", f.vertices},
                     {"normal", to_json(f.certificate.normal)},
                     {"offset", f.certificate.offset},
                     {"dim", f.dim}});
  }
  nlohmann::json primes = nlohmann::json::array();
  for (const FiberPrime& p : rep.primes) {
    nlohmann::json bins = nlohmann::json::array();
    for (const Binomial& b : p.binomial_part) bins.push_back({b.lhs, b.rhs});
    primes.push_back({{"face", p.face.vertices},
                      {"P", p.monomial_part},
                      {"B", bins},
                      {"degree_bound", p.degree_bound}});
  }
  return {{"J", to_json(rep.reduction)},
          {"input_extremal", rep.input_extremal},
          {"max_compact_faces", faces},
          {"primes", primes},
          {"monomial_intersection", to_json(rep.monomial_intersection)},
          {"spread", rep.spread},
          {"is_domain", rep.is_domain},
          {"reduced", {{"verdict", rep.verdict.reduced ? "Reduced" : "NotReduced"}, {"degree", rep.verdict.degree}}},
          {"hilbert_actual", rep.hilbert_actual},
          {"hilbert_reduced", rep.hilbert_reduced}};
}

}  // namespace monoconv
