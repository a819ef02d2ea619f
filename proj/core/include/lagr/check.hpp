#pragma once

#include <string>
#include <vector>

namespace lagr {

struct CheckItem {
  std::string id;
  bool pass{false};
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string id, bool pass, std::string detail = std::string()) {
    items.push_back(CheckItem{std::move(id), pass, std::move(detail)});
  }
  bool all_pass() const {
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
};

}  // namespace lagr
