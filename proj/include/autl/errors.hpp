#pragma once

#include <stdexcept>
#include <string>

namespace autl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or non-group input (bad table, bad permutation, bad parameters).
struct InvalidPermutation : Error {
  using Error::Error;
};
struct InvalidGroupTable : Error {
  using Error::Error;
};
struct InvalidParameter : Error {
  using Error::Error;
};

// Structural preconditions.
struct ParentMismatch : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};
struct NotNilpotent : Error {
  using Error::Error;
};
struct NotAbelian : Error {
  using Error::Error;
};
struct NotPGroup : Error {
  using Error::Error;
};

// Resource limits.
struct ClosureCapExceeded : Error {
  using Error::Error;
};
struct OracleCapExceeded : Error {
  using Error::Error;
};
struct EnumerationCapExceeded : Error {
  EnumerationCapExceeded(const std::string& what, long long partial)
      : Error(what), partial_count(partial) {}
  long long partial_count;
};
struct Timeout : Error {
  using Error::Error;
};

}  // namespace autl
