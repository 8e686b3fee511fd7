#include "monoconv/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monoconv/closure.hpp"
#include "monoconv/fiber.hpp"
#include "monoconv/io.hpp"
#include "monoconv/newton.hpp"
#include "monoconv/reduction.hpp"
#include "monoconv/verify.hpp"

namespace monoconv::cli {

namespace {

using nlohmann::json;

std::string join_points(const std::vector<Exponent>& pts) {
  std::string s;
  for (const Exponent& p : pts) {
    if (!s.empty()) s += ", ";
    s += format_monomial(p);
  }
  return s;
}

std::string vec_text(const Exponent& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

template <typename Range>
std::string fiber_vars(const Range& idx) {
  std::string s = "{";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "y" : ", y") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::string fiber_monomial(const std::vector<std::int64_t>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "y" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string fiber_ideal_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  bool first = true;
  for (const Exponent& g : ideal.generators()) {
    std::vector<std::int64_t> e(g.begin(), g.end());
    s += (first ? "" : ", ") + fiber_monomial(e);
    first = false;
  }
  return s + ")";
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("the zero ideal has no Newton polyhedron");
  if (ideal.is_unit()) throw std::invalid_argument("unit ideal has no proper reduction");
}

int analyze(const AnalysisRequest& req, std::ostream& out) {
  require_proper(req.ideal);
  const NewtonPolyhedron poly = newton_polyhedron(req.ideal);
  const auto faces = compact_faces(poly);
  const auto maximal = maximal_faces(faces);
  const MonomialIdeal j = minimal_monomial_reduction(poly);
  const std::int64_t slope = kodiyalam_slope(req.ideal);
  const auto spread = c_invariant(faces) + 1;
  if (req.json) {
    json ext = json::array();
    for (const Exponent& a : poly.extreme_points()) ext.push_back(to_json(a));
    out << json{{"ideal", to_json(req.ideal)},
                {"ext", ext},
                {"J", to_json(j)},
                {"extremal", j == req.ideal},
                {"slope", slope},
                {"spread", spread},
                {"faces", face_report(poly, faces)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "ideal: " << format_ideal(req.ideal) << '\n'
      << "extreme points (" << poly.extreme_points().size() << "): " << join_points(poly.extreme_points()) << '\n'
      << "minimal monomial reduction J: " << format_ideal(j) << '\n'
      << "extremal: " << (j == req.ideal ? "yes" : "no") << '\n'
      << "Kodiyalam slope p: " << slope << '\n'
      << "analytic spread: " << spread << '\n'
      << "compact faces: " << faces.size() << " (" << maximal.size() << " maximal)\n";
  for (const CompactFace& f : faces) {
    const bool is_max = std::any_of(maximal.begin(), maximal.end(),
                                    [&](const CompactFace& g) { return g.vertices == f.vertices; });
    out << "  dim " << f.dim << (is_max ? " maximal " : "         ") << "{" << join_points(f.points)
        << "}  normal " << vec_text(f.certificate.normal) << " offset " << f.certificate.offset << '\n';
  }
  return kOk;
}

int reduce(const AnalysisRequest& req, std::ostream& out) {
  require_proper(req.ideal);
  const ReductionReport rep = reduction_report(req.ideal);
  const int rn = reduction_number(req.ideal, rep.reduction, req.bounds.cutoff);
  const RadicalBound rb = radical_bound_check(req.ideal);
  if (req.json) {
    out << json{{"ideal", to_json(req.ideal)},
                {"J", to_json(rep.reduction)},
                {"slope", rep.slope},
                {"input_extremal", rep.input_extremal},
                {"ext_count", rep.ext_count},
                {"reduction_number", rn},
                {"cutoff", req.bounds.cutoff},
                {"radical_gens", rb.radical_gens}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "ideal: " << format_ideal(req.ideal) << '\n'
      << "minimal monomial reduction J: " << format_ideal(rep.reduction) << '\n'
      << "extremal input: " << (rep.input_extremal ? "yes" : "no") << '\n'
      << "|ext(I)|: " << rep.ext_count << '\n'
      << "Kodiyalam slope p: " << rep.slope << '\n'
      << "reduction number of I w.r.t. J: " << rn << '\n'
      << "mu(Rad I): " << rb.radical_gens << '\n';
  return kOk;
}

int closure(const AnalysisRequest& req, std::ostream& out) {
  require_proper(req.ideal);
  const ClosureReport cr = closure_report(req.ideal);
  const NormalityCertificate nc = normality_certificate(req.ideal);
  if (req.json) {
    json checked = json::array();
    for (const auto& [a, closed] : nc.checked_powers) checked.push_back({{"power", a}, {"closed", closed}});
    json verdict = {{"verdict", to_string(nc.verdict)}};
    if (nc.witness) verdict["witness"] = *nc.witness;
    out << json{{"ideal", to_json(req.ideal)},
                {"closure", to_json(cr.closure)},
                {"was_closed", cr.was_closed},
                {"normality", {{"spread", nc.spread}, {"checked_powers", checked}, {"result", verdict}}}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "ideal: " << format_ideal(req.ideal) << '\n'
      << "integral closure: " << format_ideal(cr.closure) << '\n'
      << "integrally closed: " << (cr.was_closed ? "yes" : "no") << '\n'
      << "analytic spread: " << nc.spread << '\n';
  for (const auto& [a, closed] : nc.checked_powers) {
    out << "  I^" << a << (closed ? " closed" : " not closed") << '\n';
  }
  out << "normality: " << to_string(nc.verdict);
  if (nc.witness) out << " (I^" << *nc.witness << " is not integrally closed)";
  out << '\n';
  return kOk;
}

int fiber(const AnalysisRequest& req, std::ostream& out) {
  require_proper(req.ideal);
  const FiberReport rep = fiber_report(req.ideal, req.bounds.hilbert, req.bounds.binomial);
  if (req.json) {
    json j = to_json(rep);
    j["ideal"] = to_json(req.ideal);
    j["hilbert_bound"] = req.bounds.hilbert;
    j["binomial_bound"] = req.bounds.binomial;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "ideal: " << format_ideal(req.ideal) << '\n';
  if (!rep.input_extremal) out << "input is not extremal; analysing its minimal monomial reduction\n";
  out << "J: " << format_ideal(rep.reduction) << "  (y" << 1 << "..y" << rep.reduction.size()
      << " in this order)\n"
      << "maximal compact faces: " << rep.max_faces.size() << '\n';
  for (const FiberPrime& p : rep.primes) {
    out << "  face " << fiber_vars(p.face.vertices) << " dim " << p.face.dim << ": P = " << fiber_vars(p.monomial_part)
        << ", B (degree <= " << p.degree_bound << ") = ";
    if (p.binomial_part.empty()) out << "{}";
    for (std::size_t i = 0; i < p.binomial_part.size(); ++i) {
      out << (i ? ", " : "") << fiber_monomial(p.binomial_part[i].lhs) << " - "
          << fiber_monomial(p.binomial_part[i].rhs);
    }
    out << '\n';
  }
  out << "intersection of monomial parts: " << fiber_ideal_text(rep.monomial_intersection) << '\n'
      << "analytic spread: " << rep.spread << '\n'
      << "fiber ring is a domain: " << (rep.is_domain ? "yes" : "no") << '\n'
      << "hilbert (actual):  ";
  for (auto v : rep.hilbert_actual) out << ' ' << v;
  out << "\nhilbert (reduced): ";
  for (auto v : rep.hilbert_reduced) out << ' ' << v;
  out << '\n'
      << (rep.verdict.reduced ? "Reduced(" : "NotReduced(") << rep.verdict.degree << ")"
      << (rep.verdict.reduced ? "  [Hilbert functions agree up to degree " : "  [first differing degree ")
      << rep.verdict.degree << "]\n";
  return kOk;
}

int verify(const AnalysisRequest& req, std::ostream& out) {
  require_proper(req.ideal);
  const auto checks = verify_invariants(req.ideal);
  bool failed = false;
  if (req.json) {
    json arr = json::array();
    for (const PropertyCheck& c : checks) {
      arr.push_back({{"property", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
      failed = failed || c.status == CheckStatus::Failed;
    }
    out << json{{"ideal", to_json(req.ideal)}, {"checks", arr}}.dump(2) << '\n';
  } else {
    out << "ideal: " << format_ideal(req.ideal) << '\n';
    for (const PropertyCheck& c : checks) {
      out << '[' << to_string(c.status) << "] " << c.name << " -- " << c.detail << '\n';
      failed = failed || c.status == CheckStatus::Failed;
    }
  }
  return failed ? kComputationError : kOk;
}

}  // namespace

int run(const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.command) {
      case Command::Analyze: return analyze(req, out);
      case Command::Reduce: return reduce(req, out);
      case Command::Closure: return closure(req, out);
      case Command::Fiber: return fiber(req, out);
      case Command::Verify: return verify(req, out);
    }
  } catch (const CutoffExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kComputationError;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex-geometric invariants of monomial ideals", "monoconv"};
  app.require_subcommand(1);

  struct Cmd {
    Command command;
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {Command::Analyze, "analyze", "extreme points, minimal reduction, slope, analytic spread, compact faces"},
      {Command::Reduce, "reduce", "minimal monomial reduction, slope, reduction number"},
      {Command::Closure, "closure", "integral closure and normality certificate"},
      {Command::Fiber, "fiber", "fiber ring: maximal faces, minimal primes, reducedness up to a degree"},
      {Command::Verify, "verify", "run the structural invariant checks on the ideal"},
  };

  std::string ideal_text;
  int vars = 0;
  AnalysisRequest req;
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("ideal", ideal_text, "ideal, e.g. \"x^6, x^2*y, x*y^2, y^6\"; '-' reads stdin")->required();
    sub->add_option("--vars", vars, "number of variables (default: largest index used)")->check(CLI::PositiveNumber);
    sub->add_option("--hilbert", req.bounds.hilbert, "Hilbert function degree bound K")->check(CLI::PositiveNumber);
    sub->add_option("--binomial-bound", req.bounds.binomial, "fiber degree bound D for binomials")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cutoff", req.bounds.cutoff, "reduction number cutoff M")->check(CLI::PositiveNumber);
    sub->add_flag("--json", req.json, "emit JSON");
    sub->callback([&req, command = c.command] { req.command = command; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  if (ideal_text == "-") {
    ideal_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    req.ideal = parse_ideal(ideal_text, vars > 0 ? std::optional<Eigen::Index>(vars) : std::nullopt);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }
  return run(req, out, err);
}

}  // namespace monoconv::cli
