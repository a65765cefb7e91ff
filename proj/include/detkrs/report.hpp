#pragma once

#include <string>
#include <vector>

namespace detkrs {

/// Line-oriented result of a verification sweep. A sweep appends one line per
/// checked item and counts failures; summary() is the canonical trailer.
struct Report {
  std::vector<std::string> lines;
  int checked = 0;
  int failures = 0;

  void pass(const std::string& line) {
    lines.push_back("PASS " + line);
    ++checked;
  }
  void fail(const std::string& line) {
    lines.push_back("FAIL " + line);
    ++checked;
    ++failures;
  }
  void note(const std::string& line) { lines.push_back(line); }
  void merge(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    checked += other.checked;
    failures += other.failures;
  }

  bool passed() const { return failures == 0; }
  std::string summary() const {
    return "CHECKED " + std::to_string(checked) + " DEGREES, " +
           std::to_string(failures) + " FAILURES";
  }
};

}  // namespace detkrs
