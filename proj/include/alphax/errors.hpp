#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alphax {

// Parameter outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested graph would exceed the 64-vertex bitset capacity, or the
// in-process enumeration limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

// A partition or certificate that fails a structural requirement.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(const std::string& what, int u, int v)
      : std::runtime_error(what), u_(u), v_(v) {}
  int first_vertex() const noexcept { return u_; }
  int second_vertex() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

// Search budget exhausted before a decision was reached.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace alphax
