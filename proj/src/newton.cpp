#include "monoconv/newton.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "monoconv/linalg.hpp"
#include "monoconv/lp.hpp"

namespace monoconv {

namespace {

bool in_hull_impl(std::span<const Exponent> points, const RationalVector& b) {
  if (points.empty()) return false;
  const auto n = b.size();
  const auto s = static_cast<Eigen::Index>(points.size());
  // weights k_i >= 0, sum k_i = 1, sum k_i a_i(j) <= b(j)
  LinearSystem sys(s);
  sys.add(RationalVector::Ones(s), Relation::Equal, Rational(1));
  for (Eigen::Index j = 0; j < n; ++j) {
    RationalVector row(s);
    for (Eigen::Index i = 0; i < s; ++i) row(i) = Rational(-points[i](j));
    sys.add(std::move(row), Relation::GreaterEqual, Rational(-b(j)));
  }
  return lp_feasible(sys).has_value();
}

// LP over (w, c), normal u = w + 1 >= 1 componentwise:
//   <a,u> = c on the subset, <b,u> >= c + gap elsewhere.
Feasibility face_system(const std::vector<Exponent>& ext, std::span<const std::size_t> subset,
                        bool strict) {
  const auto n = ext.front().size();
  std::vector<bool> in(ext.size(), false);
  for (std::size_t i : subset) in.at(i) = true;
  LinearSystem sys(n + 1);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    RationalVector row(n + 1);
    for (Eigen::Index j = 0; j < n; ++j) row(j) = Rational(ext[i](j));
    row(n) = Rational(-1);
    const Rational base(-total_degree(ext[i]));
    if (in[i]) {
      sys.add(std::move(row), Relation::Equal, base);
    } else {
      sys.add(std::move(row), Relation::GreaterEqual, strict ? base + 1 : base);
    }
  }
  std::set<Eigen::Index> nonneg;
  for (Eigen::Index j = 0; j < n; ++j) nonneg.insert(j);
  return lp_feasible(sys, nonneg);
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("certificate coefficient does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

SupportingHyperplane integral_certificate(const std::vector<Exponent>& ext,
                                          std::span<const std::size_t> subset,
                                          const RationalVector& witness) {
  const auto n = witness.size() - 1;
  RationalVector u = witness.head(n).array() + Rational(1);
  Integer l = 1;
  for (Eigen::Index j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(u(j)));
  std::vector<Integer> scaled(n);
  Integer g = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    scaled[j] = numerator(u(j) * Rational(l));
    g = boost::multiprecision::gcd(g, scaled[j]);
  }
  SupportingHyperplane h;
  h.normal.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) h.normal(j) = to_int64(scaled[j] / g);
  h.offset = h.evaluate(ext[subset.front()]);
  return h;
}

Eigen::Index face_dim(const std::vector<Exponent>& points) {
  const auto n = points.front().size();
  RationalMatrix m(n, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = cast_to<Rational>(points[i]);
  return affine_dimension(m);
}

CompactFace make_face(const std::vector<Exponent>& ext, std::vector<std::size_t> subset,
                      SupportingHyperplane cert) {
  CompactFace f;
  for (std::size_t i : subset) f.points.push_back(ext[i]);
  f.vertices = std::move(subset);
  f.certificate = std::move(cert);
  f.dim = face_dim(f.points);
  return f;
}

void enumerate(const std::vector<Exponent>& ext, std::vector<std::size_t>& current,
               std::size_t start, std::vector<CompactFace>& out) {
  for (std::size_t i = start; i < ext.size(); ++i) {
    current.push_back(i);
    if (auto w = face_system(ext, current, true)) {
      out.push_back(make_face(ext, current, integral_certificate(ext, current, *w)));
      enumerate(ext, current, i + 1, out);
    } else if (face_system(ext, current, false)) {
      enumerate(ext, current, i + 1, out);
    }
    current.pop_back();
  }
}

bool strictly_contains(const CompactFace& big, const CompactFace& small) {
  return big.vertices.size() > small.vertices.size() &&
         std::includes(big.vertices.begin(), big.vertices.end(), small.vertices.begin(),
                       small.vertices.end());
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("the zero ideal has no Newton polyhedron");
  const auto& gens = ideal.generators();
  std::vector<Exponent> ext;
  std::vector<Exponent> others;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    others.clear();
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (k != i) others.push_back(gens[k]);
    if (!in_hull_impl(others, cast_to<Rational>(gens[i]))) ext.push_back(gens[i]);
  }
  return NewtonPolyhedron(ideal, std::move(ext));
}

bool in_newton_hull(std::span<const Exponent> points, const RationalVector& b) {
  for (const Exponent& p : points)
    if (p.size() != b.size()) throw std::invalid_argument("in_newton_hull: dimension mismatch");
  return in_hull_impl(points, b);
}

bool membership(const NewtonPolyhedron& poly, const RationalVector& b) {
  if (b.size() != poly.dim()) throw std::invalid_argument("membership: dimension mismatch");
  return in_hull_impl(poly.extreme_points(), b);
}

bool membership(const NewtonPolyhedron& poly, const Exponent& b) {
  return membership(poly, cast_to<Rational>(b));
}

bool is_supporting(const NewtonPolyhedron& poly, const SupportingHyperplane& h) {
  if (h.normal.size() != poly.dim()) throw std::invalid_argument("is_supporting: dimension mismatch");
  if ((h.normal.array() < 0).any()) throw std::invalid_argument("is_supporting: normal must be >= 0");
  if ((h.normal.array() == 0).all()) throw std::invalid_argument("is_supporting: normal must be nonzero");
  bool touches = false;
  for (const Exponent& a : poly.extreme_points()) {
    const auto v = h.evaluate(a);
    if (v < h.offset) return false;
    touches = touches || v == h.offset;
  }
  return touches;
}

std::optional<SupportingHyperplane> compact_face_certificate(const NewtonPolyhedron& poly,
                                                             std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("compact_face_certificate: empty subset");
  auto w = face_system(poly.extreme_points(), subset, true);
  if (!w) return std::nullopt;
  return integral_certificate(poly.extreme_points(), subset, *w);
}

bool on_common_compact_face(const NewtonPolyhedron& poly, std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("on_common_compact_face: empty subset");
  return face_system(poly.extreme_points(), subset, false).has_value();
}

std::vector<CompactFace> compact_faces(const NewtonPolyhedron& poly) {
  std::vector<CompactFace> faces;
  std::vector<std::size_t> current;
  enumerate(poly.extreme_points(), current, 0, faces);
  std::sort(faces.begin(), faces.end(), [](const CompactFace& a, const CompactFace& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  return faces;
}

std::vector<CompactFace> maximal_faces(std::span<const CompactFace> faces) {
  std::vector<CompactFace> out;
  for (const CompactFace& f : faces) {
    const bool covered = std::any_of(faces.begin(), faces.end(),
                                     [&](const CompactFace& g) { return strictly_contains(g, f); });
    if (!covered) out.push_back(f);
  }
  return out;
}

std::vector<CompactFace> maximal_compact_faces(const NewtonPolyhedron& poly) {
  return maximal_faces(compact_faces(poly));
}

Eigen::Index c_invariant(std::span<const CompactFace> faces) {
  Eigen::Index c = 0;
  for (const CompactFace& f : faces) c = std::max(c, f.dim);
  return c;
}

Eigen::Index c_invariant(const NewtonPolyhedron& poly) { return c_invariant(compact_faces(poly)); }

CompactFace scale_face(const CompactFace& face, int m) {
  if (m < 1) throw std::invalid_argument("scale_face: m must be positive");
  CompactFace out = face;
  for (Exponent& p : out.points) p *= m;
  out.certificate.offset *= m;
  return out;
}

nlohmann::json face_report(const NewtonPolyhedron& poly, std::span<const CompactFace> faces) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Exponent& a : poly.extreme_points()) {
    auto v = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.size(); ++j) v.push_back(a(j));
    vertices.push_back(v);
  }
  const auto maximal = maximal_faces(faces);
  nlohmann::json fs = nlohmann::json::array();
  for (const CompactFace& f : faces) {
    auto normal = nlohmann::json::array();
    for (Eigen::Index j = 0; j < f.certificate.normal.size(); ++j) normal.push_back(f.certificate.normal(j));
    const bool is_max = std::any_of(maximal.begin(), maximal.end(),
                                    [&](const CompactFace& g) { return g.vertices == f.vertices; });
    fs.push_back({{"verts", f.vertices},
                  {"normal", normal},
                  {"offset", f.certificate.offset},
                  {"dim", f.dim},
                  {"maximal", is_max}});
  }
  return {{"vertices", vertices}, {"faces", fs}};
}

}  // namespace monoconv
