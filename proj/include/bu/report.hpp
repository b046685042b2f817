#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bu {

/// One audited instance: a named identity with its index tuple and both sides.
struct CheckRecord {
  std::string relation;
  std::vector<int> indices;
  std::string lhs_word;
  std::string rhs_word;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckRecord> records;

  bool passed() const;
  std::size_t failures() const;
  std::size_t size() const { return records.size(); }
  std::size_t count(const std::string& relation) const;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& other);
};

}  // namespace bu
