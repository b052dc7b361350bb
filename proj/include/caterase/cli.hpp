#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "caterase/qstate.hpp"

namespace caterase::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kConfigError = 2 };

/// Malformed input file. `line` is 1-based; 0 when the problem is not tied to
/// a line (e.g. missing entries at end of file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// State file: '#' starts a comment, blank lines are ignored. The first
/// record is "dims <d_s> <d_e>", followed by d_s * d_e populations in
/// row-major (i_s, j_e) order, one or more per line.
JointState parse_state(std::istream& in, const std::string& source);
JointState read_state_file(const std::string& path);

/// Distribution file: populations separated by whitespace or newlines, with
/// the same comment rules.
ProbDist parse_distribution(std::istream& in, const std::string& source);
ProbDist read_distribution_file(const std::string& path);

/// Twelve significant digits; "nan"/"inf" spelled out.
std::string format_number(double v);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace caterase::cli
