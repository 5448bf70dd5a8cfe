#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schur {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input: bad partition, weight mismatch,
/// shape mismatch, non-chain map, and the like.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded (partition weight, symmetric group
/// degree, tensor-space dimension). Raising the cap is always explicit.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// Text could not be parsed. offset() is the byte position of the failure.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace schur
