#pragma once

#include <string>
#include <vector>

namespace v19 {

/// One named pass/fail observation with what was expected and what was seen.
struct CheckItem {
  std::string name;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct CheckList {
  std::vector<CheckItem> items;

  void add(std::string name, std::string expected, std::string measured, bool pass) {
    items.push_back({std::move(name), std::move(expected), std::move(measured), pass});
  }
  void add(std::string name, bool pass) { add(std::move(name), "true", pass ? "true" : "false", pass); }

  bool passed() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& it : items) n += !it.pass;
    return n;
  }
};

}  // namespace v19
