#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace gcakit {

/// Short %.3g rendering for report details.
inline std::string format_deviation(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double deviation = 0.0;
};

/// Ordered list of named checks; overall() is the conjunction of all of them.
class VerificationReport {
 public:
  void add(std::string name, bool pass, std::string detail = {}, double deviation = 0.0) {
    checks_.push_back({std::move(name), pass, std::move(detail), deviation});
  }
  void append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool overall() const {
    for (const auto& c : checks_) {
      if (!c.pass) return false;
    }
    return true;
  }
  std::optional<std::size_t> first_failure() const {
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      if (!checks_[i].pass) return i;
    }
    return std::nullopt;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace gcakit
