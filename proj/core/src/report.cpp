#include "dendrikit/report.hpp"

#include <sstream>

namespace dendrikit {

std::string Violation::str() const {
  std::ostringstream os;
  os << condition << " fails at (";
  for (size_t i = 0; i < where.size(); ++i) {
    if (i) os << ',';
    os << where[i];
  }
  os << "): lhs " << lhs << " != rhs " << rhs;
  return os.str();
}

void ValidationReport::add(std::string condition, std::vector<int> where, std::string lhs,
                           std::string rhs) {
  violations_.push_back({std::move(condition), std::move(where), std::move(lhs), std::move(rhs)});
}

void ValidationReport::absorb(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations_) {
    Violation copy = v;
    copy.condition = prefix.empty() ? v.condition : prefix + v.condition;
    violations_.push_back(std::move(copy));
  }
}

bool ValidationReport::mentions(std::string_view label) const {
  for (const auto& v : violations_)
    if (std::string_view(v.condition).substr(0, label.size()) == label) return true;
  return false;
}

std::string ValidationReport::str() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations_) os << v.str() << '\n';
  return os.str();
}

}  // namespace dendrikit
