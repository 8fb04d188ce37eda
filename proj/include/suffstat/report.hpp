#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suffstat {

struct CheckResult {
  std::string label;
  bool pass = false;
  std::string detail;  // counterexample or context, empty when passing
};

// Outcome of a verification sweep: a named list of exact checks plus
// free-form notes (parameter grids, truncation bounds, methodology).
class Report {
 public:
  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  void add(const std::string& label, bool pass, const std::string& detail = "");
  void note(const std::string& text);
  // Appends another report's checks and notes, prefixing labels with its name.
  void merge(const Report& sub);

  bool passed() const;
  const std::string& name() const { return name_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

  // One "[PASS]/[FAIL]" line per check, then "note:" lines.
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

// Deterministic 64-bit generator (splitmix64) used wherever seeded
// pseudo-random predicates or channels are needed; a given seed produces
// the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace suffstat
