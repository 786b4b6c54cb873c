#pragma once

#include <stdexcept>
#include <string>

namespace pod2 {

/// Malformed input: length mismatches, truncation orders out of range.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically invalid request: non-unit inversion, non-prime modulus, bad family parameters.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation was refused because it would exceed a guard rail or an available table.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pod2
