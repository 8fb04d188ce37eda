#include "suffstat/report.hpp"

namespace suffstat {

void Report::add(const std::string& label, bool pass, const std::string& detail) {
  checks_.push_back({label, pass, detail});
}

void Report::note(const std::string& text) { notes_.push_back(text); }

void Report::merge(const Report& sub) {
  const std::string prefix = sub.name_.empty() ? "" : sub.name_ + ": ";
  for (const auto& c : sub.checks_) {
    checks_.push_back({prefix + c.label, c.pass, c.detail});
  }
  for (const auto& n : sub.notes_) {
    notes_.push_back(prefix + n);
  }
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.label;
    if (!c.pass && !c.detail.empty()) {
      out += ": " + c.detail;
    }
    out += "\n";
  }
  for (const auto& n : notes_) {
    out += "note: " + n + "\n";
  }
  return out;
}

}  // namespace suffstat
