#pragma once

#include <stdexcept>

namespace lcaes {

// Bad input data or an operation that cannot be carried out on it.
// The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing/unreadable files and malformed text. The CLI maps it to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcaes
