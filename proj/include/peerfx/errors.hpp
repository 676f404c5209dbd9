#pragma once

#include <stdexcept>
#include <string>

namespace peerfx {

// Error taxonomy maps onto CLI exit codes: usage errors -> 1,
// data/validation errors -> 2, numerical failures -> 3.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace peerfx
