#pragma once

#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "monoconv/ideal.hpp"
#include "monoconv/rational.hpp"

namespace monoconv {

/// Hyperplane <v,u> = c with integer normal u >= 0.
struct SupportingHyperplane {
  Exponent normal;
  std::int64_t offset = 0;

  std::int64_t evaluate(const Exponent& v) const { return v.dot(normal); }
};

/// conv(I) = conv(ext(I)) + R^n_{>=0}, held by its extreme points.
class NewtonPolyhedron {
 public:
  Eigen::Index dim() const { return source_.dim(); }
  /// ext(I), a subset of the minimal generator exponents, in canonical order.
  const std::vector<Exponent>& extreme_points() const { return ext_; }
  const MonomialIdeal& source_ideal() const { return source_; }

 private:
  NewtonPolyhedron(MonomialIdeal source, std::vector<Exponent> ext)
      : source_(std::move(source)), ext_(std::move(ext)) {}

  MonomialIdeal source_;
  std::vector<Exponent> ext_;

  friend NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);
};

/// Computes ext(I): a generator is kept iff it does not lie in
/// conv(other generators) + R^n_{>=0}. Throws on the zero ideal.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// b in conv(points) + R^n_{>=0}. False for an empty point set.
bool in_newton_hull(std::span<const Exponent> points, const RationalVector& b);

bool membership(const NewtonPolyhedron& poly, const RationalVector& b);
bool membership(const NewtonPolyhedron& poly, const Exponent& b);

/// <a,u> >= c on every extreme point with equality on at least one.
/// Requires u >= 0 and u != 0 (std::invalid_argument otherwise).
bool is_supporting(const NewtonPolyhedron& poly, const SupportingHyperplane& h);

/// A nonempty compact face, identified by the extreme points it contains.
struct CompactFace {
  std::vector<std::size_t> vertices;  // indices into extreme_points(), ascending
  std::vector<Exponent> points;       // the corresponding extreme points
  /// Normal with every component >= 1; exactly `points` attain the offset.
  SupportingHyperplane certificate;
  Eigen::Index dim = 0;
};

/// Integer certificate (u >= 1, c) with <a,u> = c on the chosen extreme
/// points and <b,u> >= c+1 on the rest, if one exists.
std::optional<SupportingHyperplane> compact_face_certificate(const NewtonPolyhedron& poly,
                                                             std::span<const std::size_t> subset);

/// True iff the chosen extreme points all lie on one compact face.
bool on_common_compact_face(const NewtonPolyhedron& poly, std::span<const std::size_t> subset);

/// All nonempty compact faces, ordered by dimension then vertex indices.
///
/// Enumerates subsets of ext(I) depth-first, extending a subset only while
/// it still lies on some compact face; that family is closed under taking
/// subsets, so nothing is missed. Each visited subset costs one or two small
/// LPs. Worst case is exponential in |ext(I)|, which is fine for the desk-scale
/// ideals this library targets.
std::vector<CompactFace> compact_faces(const NewtonPolyhedron& poly);

/// The faces of `faces` not strictly contained in another one.
std::vector<CompactFace> maximal_faces(std::span<const CompactFace> faces);
std::vector<CompactFace> maximal_compact_faces(const NewtonPolyhedron& poly);

/// c(I) = max dim over compact faces.
Eigen::Index c_invariant(const NewtonPolyhedron& poly);
Eigen::Index c_invariant(std::span<const CompactFace> faces);

/// F -> mF, a compact face of conv(I^m). Throws for m < 1.
CompactFace scale_face(const CompactFace& face, int m);

/// {"vertices":[[...]],"faces":[{"verts":[...],"normal":[...],"offset":c,"dim":d,"maximal":b}]}
nlohmann::json face_report(const NewtonPolyhedron& poly, std::span<const CompactFace> faces);

}  // namespace monoconv
