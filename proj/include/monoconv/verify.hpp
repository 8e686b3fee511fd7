#pragma once

#include <string>
#include <vector>

#include "monoconv/ideal.hpp"

namespace monoconv {

enum class CheckStatus { Passed, Failed, Reported };

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::Passed;
  std::string detail;
};

struct VerifyOptions {
  int bracket_powers = 4;     // m <= this for ext(I^m) = m ext(I)
  int face_scaling = 3;       // m <= this for compact_faces(I^m) = m compact_faces(I)
  int persistent_degree = 5;  // sum l <= this in the face criterion check
  int converse_search = 6;    // balanced exponents L <= this for the converse
  int converse_power_cap = 12;
  int hilbert_degree = 4;
};

/// Runs the structural invariants on one ideal and reports each property.
/// Checks with no a-priori bound (the converse of the persistence criterion)
/// are Reported rather than Failed when the search bound is hit.
std::vector<PropertyCheck> verify_invariants(const MonomialIdeal& ideal, const VerifyOptions& opts = {});

const char* to_string(CheckStatus s);

}  // namespace monoconv
