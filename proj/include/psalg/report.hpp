#pragma once

#include <string>
#include <vector>

namespace psalg {

struct CheckItem {
  std::string label;
  bool pass = true;
  std::string residual;  // empty when the check passed
};

// Outcome of one identity/axiom sweep. Items are appended in a deterministic
// order (sorted basis indices), so rendering is byte-stable.
struct Report {
  std::string title;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& it : items)
      if (!it.pass) ++n;
    return n;
  }
  void add(std::string label, bool ok, std::string residual = "") {
    items.push_back({std::move(label), ok, std::move(residual)});
  }
  void merge(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
  }
  std::string to_text(bool verbose = true) const;
};

}  // namespace psalg
