#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monoconv/ideal.hpp"

namespace monoconv::cli {

enum class Command { Analyze, Reduce, Closure, Fiber, Verify };

struct Bounds {
  int hilbert = 6;   // K, degree bound for Hilbert function comparison
  int binomial = 4;  // D, fiber degree bound for kernel binomials
  int cutoff = 20;   // M, reduction number search bound
};

struct AnalysisRequest {
  Command command = Command::Analyze;
  MonomialIdeal ideal = MonomialIdeal::zero(1);
  Bounds bounds;
  bool json = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kParseError = 2;

/// Runs one analysis and writes the report. Returns an exit code.
int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err);

/// Full command line handling: argument parsing, reading the ideal (from
/// stdin when the argument is "-") and run().
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace monoconv::cli
