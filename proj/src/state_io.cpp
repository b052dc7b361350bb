#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "caterase/cli.hpp"

namespace caterase::cli {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    for (std::string w; words >> w;) tokens.push_back({w, n});
  }
  return tokens;
}

double to_number(const Token& t, const std::string& source) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t.text, &used);
  } catch (const std::exception&) {
    throw ParseError(source, t.line, "expected a number, got '" + t.text + "'");
  }
  if (used != t.text.size())
    throw ParseError(source, t.line, "expected a number, got '" + t.text + "'");
  if (!std::isfinite(v) || v < 0.0)
    throw ParseError(source, t.line, "population must be finite and non-negative");
  return v;
}

std::size_t to_dim(const Token& t, const std::string& source) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t.text, &used);
  } catch (const std::exception&) {
    throw ParseError(source, t.line, "expected a dimension, got '" + t.text + "'");
  }
  if (used != t.text.size() || v < 1)
    throw ParseError(source, t.line, "expected a positive dimension, got '" + t.text + "'");
  return static_cast<std::size_t>(v);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                         what),
      line_(line) {}

JointState parse_state(std::istream& in, const std::string& source) {
  const std::vector<Token> tokens = tokenize(in);
  if (tokens.empty()) throw ParseError(source, 0, "empty state file");
  if (tokens[0].text != "dims")
    throw ParseError(source, tokens[0].line, "first record must be 'dims <d_s> <d_e>'");
  if (tokens.size() < 3 || tokens[1].line != tokens[0].line || tokens[2].line != tokens[0].line)
    throw ParseError(source, tokens[0].line, "dims needs two dimensions");
  const std::size_t ds = to_dim(tokens[1], source);
  const std::size_t de = to_dim(tokens[2], source);
  if (tokens.size() > 3 && tokens[3].line == tokens[0].line)
    throw ParseError(source, tokens[3].line, "unexpected token after dims");
  if (ds < 2 || de < 2) throw ParseError(source, tokens[0].line, "dimensions must be at least 2");

  std::vector<double> pops;
  for (std::size_t k = 3; k < tokens.size(); ++k) {
    if (pops.size() == ds * de)
      throw ParseError(source, tokens[k].line, "more than " + std::to_string(ds * de) +
                                                   " populations");
    pops.push_back(to_number(tokens[k], source));
  }
  if (pops.size() != ds * de)
    throw ParseError(source, tokens.back().line,
                     "expected " + std::to_string(ds * de) + " populations, found " +
                         std::to_string(pops.size()));
  try {
    return JointState({ds, de}, std::move(pops));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
}

JointState read_state_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_state(in, path);
}

ProbDist parse_distribution(std::istream& in, const std::string& source) {
  const std::vector<Token> tokens = tokenize(in);
  if (tokens.empty()) throw ParseError(source, 0, "empty distribution file");
  std::vector<double> p;
  for (const Token& t : tokens) p.push_back(to_number(t, source));
  try {
    return ProbDist(std::move(p));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
}

ProbDist read_distribution_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_distribution(in, path);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace caterase::cli
