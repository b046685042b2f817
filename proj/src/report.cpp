#include "bu/report.hpp"

#include <algorithm>

namespace bu {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

std::size_t Report::count(const std::string& relation) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const CheckRecord& r) { return r.relation == relation; }));
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

}  // namespace bu
