#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dendrikit {

/// One failed identity: which condition, at which basis tuple, and the two
/// sides that disagreed. Invalidity is data, not an error.
struct Violation {
  std::string condition;
  std::vector<int> where;
  std::string lhs;
  std::string rhs;

  std::string str() const;
};

class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }

  void add(std::string condition, std::vector<int> where, std::string lhs, std::string rhs);
  void absorb(const ValidationReport& other, const std::string& prefix = "");

  const std::vector<Violation>& violations() const { return violations_; }

  /// True if some violation's condition label starts with `label`.
  bool mentions(std::string_view label) const;

  std::string str() const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace dendrikit
