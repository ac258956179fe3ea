#pragma once

#include <stdexcept>
#include <string>

namespace rap {

// Precondition or input violation: the request is malformed for the given data.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The numeric solver failed to reach the requested residual.
struct SolverError : std::runtime_error {
  SolverError(const std::string& what, double best)
      : std::runtime_error(what), best_residual(best) {}
  double best_residual;
};

// Cycle enumeration ran out of its node budget before completing.
struct BudgetError : std::runtime_error {
  BudgetError(const std::string& what, int reached_len, long long nodes)
      : std::runtime_error(what), max_len_reached(reached_len), nodes_visited(nodes) {}
  int max_len_reached;
  long long nodes_visited;
};

// Numeric data disagrees with the combinatorial structure it was derived from.
struct InconsistencyError : std::runtime_error {
  InconsistencyError(const std::string& what, int a, int b)
      : std::runtime_error(what), first(a), second(b) {}
  int first;
  int second;
};

}  // namespace rap
