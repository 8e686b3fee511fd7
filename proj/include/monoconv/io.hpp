#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "monoconv/ideal.hpp"

namespace monoconv {

/// Syntax error in ideal text, with the 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "x^6, x^2*y, x*y^2, y^6" style text. Variables are x1..xn; for
/// n <= 3 the aliases x, y, z stand for x1, x2, x3. "1" is the unit ideal
/// and "0" the zero ideal. Without `dim` the ambient dimension is the largest
/// variable index used (at least 1). A `dim` smaller than that index is an
/// error.
MonomialIdeal parse_ideal(std::string_view text, std::optional<Eigen::Index> dim = std::nullopt);

std::string format_monomial(const Exponent& e);
std::string format_ideal(const MonomialIdeal& ideal);

/// {"n": int, "gens": [[int,...],...]}
nlohmann::json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Exponent& e);

}  // namespace monoconv
