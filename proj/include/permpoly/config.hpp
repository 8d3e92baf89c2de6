#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permpoly {

// Largest pattern order the overlap-graph constructions accept by default.
// Ov(k) has (k-1)! vertices and k! edges, so this is a hard practical wall.
inline constexpr int kDefaultKMax = 6;

// Exhaustive face enumeration walks 2^|E| edge subsets.
inline constexpr int kDefaultFaceEdgeBudget = 16;

// Cap on the number of simple cycles materialized by polytope construction.
inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;

/// Raised when an argument violates an operation's preconditions.
class InvalidInputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured budget.
class ResourceBudgetError : public std::runtime_error {
public:
  ResourceBudgetError(const std::string& what, std::size_t partial_count = 0)
      : std::runtime_error(what), partial_count_(partial_count) {}

  /// How many items were produced before the budget tripped.
  std::size_t partial_count() const { return partial_count_; }

private:
  std::size_t partial_count_;
};

/// Raised when a graph admits no Eulerian circuit; names an offending vertex.
class NoEulerianCircuitError : public std::runtime_error {
public:
  NoEulerianCircuitError(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_vertex_(std::move(witness)) {}

  const std::string& witness_vertex() const { return witness_vertex_; }

private:
  std::string witness_vertex_;
};

/// Raised when two independent computations of the same quantity disagree.
/// This must never happen; it is a bug sentinel, not a user error.
class CrossCheckError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// K_max for overlap-graph construction, honoring the PERMPOLY_KMAX
/// environment variable when set to an integer >= 2.
int k_max();

}  // namespace permpoly
