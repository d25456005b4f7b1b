#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclicaut {

/// Malformed curve or presentation text.  `position` is a 0-based offset into
/// the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A coset enumeration or permutation closure ran past its size limit.  For
/// presentations this usually means the group is infinite.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclicaut
