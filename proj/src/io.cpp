#include "monoconv/io.hpp"

#include <cctype>
#include <vector>

namespace monoconv {

namespace {

struct Factor {
  Eigen::Index var;  // 0-based; -1 for the constant 1
  std::int64_t exp;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<std::vector<Factor>> monomials() {
    std::vector<std::vector<Factor>> out;
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty ideal text");
    while (true) {
      out.push_back(monomial());
      skip_ws();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != ',') throw ParseError(pos_, std::string("expected ',' but found '") + s_[pos_] + "'");
      ++pos_;
    }
    return out;
  }

  bool saw_zero() const { return saw_zero_; }
  Eigen::Index max_var() const { return max_var_; }
  bool used_alias() const { return used_alias_; }

 private:
  std::vector<Factor> monomial() {
    std::vector<Factor> fs;
    fs.push_back(factor());
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        fs.push_back(factor());
      } else {
        break;
      }
    }
    return fs;
  }

  Factor factor() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(pos_, "expected a variable or 1");
    const std::size_t start = pos_;
    const char c = s_[pos_];
    Factor f{-1, 1};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::int64_t v = number();
      if (v == 0) {
        saw_zero_ = true;
      } else if (v != 1) {
        throw ParseError(start, "coefficients other than 1 are not allowed");
      }
      f.exp = 0;
      return f;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        const std::int64_t idx = number();
        if (idx < 1) throw ParseError(start, "variable indices start at 1");
        f.var = idx - 1;
      } else {
        f.var = c - 'x';
        used_alias_ = true;
      }
      max_var_ = std::max(max_var_, f.var + 1);
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw ParseError(pos_, "expected exponent after '^'");
      }
      f.exp = number();
    }
    return f;
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) throw ParseError(start, "number too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Eigen::Index max_var_ = 0;
  bool saw_zero_ = false;
  bool used_alias_ = false;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<Eigen::Index> dim) {
  Parser p(text);
  const auto monos = p.monomials();
  Eigen::Index n = std::max<Eigen::Index>(p.max_var(), 1);
  if (dim) {
    if (*dim < 1) throw ParseError(0, "number of variables must be positive");
    if (*dim < p.max_var()) {
      throw ParseError(0, "variable x" + std::to_string(p.max_var()) + " used but only " +
                              std::to_string(*dim) + " variables declared");
    }
    n = *dim;
  }
  if (p.used_alias() && n > 3) {
    throw ParseError(0, "aliases x, y, z are only valid with at most 3 variables");
  }
  if (p.saw_zero()) {
    if (monos.size() != 1 || monos[0].size() != 1) {
      throw ParseError(0, "0 may only appear alone (the zero ideal)");
    }
    return MonomialIdeal::zero(n);
  }
  std::vector<Exponent> gens;
  for (const auto& mono : monos) {
    Exponent e = Exponent::Zero(n);
    for (const Factor& f : mono) {
      if (f.var >= 0) e(f.var) += f.exp;
    }
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(n, gens);
}

std::string format_monomial(const Exponent& e) {
  std::string out;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (e(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += e.size() <= 3 ? std::string(1, static_cast<char>('x' + i)) : "x" + std::to_string(i + 1);
    if (e(i) != 1) out += "^" + std::to_string(e(i));
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const Exponent& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

nlohmann::json to_json(const Exponent& e) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < e.size(); ++i) arr.push_back(e(i));
  return arr;
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
  auto gens = nlohmann::json::array();
  for (const Exponent& g : ideal.generators()) gens.push_back(to_json(g));
  return {{"n", ideal.dim()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
    throw std::invalid_argument("ideal JSON must be an object with \"n\" and \"gens\"");
  }
  const auto n = j.at("n").get<Eigen::Index>();
  std::vector<Exponent> gens;
  for (const auto& g : j.at("gens")) {
    const auto coords = g.get<std::vector<std::int64_t>>();
    Exponent e(static_cast<Eigen::Index>(coords.size()));
    std::copy(coords.begin(), coords.end(), e.begin());
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(n, gens);
}

}  // namespace monoconv
