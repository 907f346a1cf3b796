#pragma once

#include <stdexcept>
#include <string>

namespace fibercone {

struct fc_error : std::runtime_error {
  explicit fc_error(const std::string& w) : std::runtime_error(w) {}
};

/* Violated operation preconditions: bad inputs, non-finite lengths,
 * invalid filtrations, parse failures. CLI exit code 2. */
struct precondition_error : fc_error {
  explicit precondition_error(const std::string& w) : fc_error(w) {}
};

struct parse_error : precondition_error {
  parse_error(std::size_t line, const std::string& w)
      : precondition_error("line " + std::to_string(line) + ": " + w), line_no(line) {}
  std::size_t line_no;
};

struct not_filtration_error : precondition_error {
  not_filtration_error(int m, int n, const std::string& w)
      : precondition_error(w), pair_m(m), pair_n(n) {}
  int pair_m, pair_n;
};

/* Search budgets exhausted (windows, attempts, iteration caps). Exit code 2. */
struct budget_error : fc_error {
  explicit budget_error(const std::string& w) : fc_error(w) {}
};

/* Cross-route disagreement or a violated structural identity that the theory
 * guarantees; these are never swallowed. CLI exit code 3. */
struct consistency_error : fc_error {
  explicit consistency_error(const std::string& w) : fc_error(w) {}
};

}  // namespace fibercone
