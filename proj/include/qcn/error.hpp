#pragma once

#include <stdexcept>
#include <string>

namespace qcn {

/// Single error type for malformed input and violated guards; messages are one line.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcn
