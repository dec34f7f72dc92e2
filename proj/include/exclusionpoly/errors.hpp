#pragma once

#include <stdexcept>
#include <string>

namespace exclusionpoly {

/// Violated precondition on vector shapes, matrix invariants or malformed
/// constraint systems.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the mathematical domain of an operation (wrong totals,
/// infeasible sizes, unsupported parameter ranges).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a transfer chain is requested for vectors that are not
/// related by majorization.
class MajorizationError : public std::domain_error {
 public:
  explicit MajorizationError(const std::string& what) : std::domain_error(what) {}
};

/// Facet enumeration requires pairwise distinct weights; raised otherwise.
class GenericityError : public std::domain_error {
 public:
  explicit GenericityError(const std::string& what) : std::domain_error(what) {}
};

class LpInfeasibleError : public std::runtime_error {
 public:
  explicit LpInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

class LpUnboundedError : public std::runtime_error {
 public:
  explicit LpUnboundedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace exclusionpoly
