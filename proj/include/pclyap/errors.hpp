#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pclyap {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible matrix/vector shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (negative entries where nonnegative
/// ones are required, asymmetric matrices, out-of-range symbols, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or JSON value. `byte_offset` is -1 when the error
/// was found after syntactic parsing (schema level).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long long byte_offset = -1)
      : Error(what), byte_offset(byte_offset) {}
  long long byte_offset;
};

/// An enumeration or search exceeded its configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A supposedly acyclic graph contained a cycle; carries one witness cycle
/// as a node-id sequence (first node repeated at the end).
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<int> cycle)
      : Error(what), cycle(std::move(cycle)) {}
  std::vector<int> cycle;
};

/// Counterexample synthesis was asked to refute a path-complete graph.
class PathCompleteInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace pclyap
