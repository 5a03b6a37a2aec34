#pragma once

#include <optional>
#include <string>
#include <vector>

namespace circ {

// One printed number on a check line: recomputed value against the printed one.
struct CheckValue {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
};

// "lhs < rhs" / "lhs > rhs", both sides recomputed.
struct CheckInequality {
  double lhs = 0.0;
  std::string relation;  // "<", ">", "<=", ">="
  double rhs = 0.0;
  bool holds() const;
};

struct CheckLine {
  std::string block;
  std::string id;  // block + running line number
  std::string expression;
  std::vector<CheckValue> values;
  std::optional<CheckInequality> inequality;
  double tolerance = 5e-4;
  bool pass = false;
};

// Tolerance for values printed with four decimals.
inline constexpr double kPrintedTolerance = 5e-4;
// Tolerance for the eight-shortcut constants.
inline constexpr double kEightTolerance = 5e-5;
inline constexpr std::size_t kAppendixLines = 74;

std::vector<CheckLine> appendix_report();
std::vector<CheckLine> check_area_lemma();
std::vector<CheckLine> check_asymptotic_inequalities(int m);
// Constants of the eight-shortcut construction.
std::vector<CheckLine> check_eight_constants();

bool all_pass(const std::vector<CheckLine>& lines);

// Plain-text report, blocks in order, with a fixed header. Byte-stable.
std::string format_report(const std::vector<CheckLine>& lines);
std::string format_report_json(const std::vector<CheckLine>& lines);

}  // namespace circ
