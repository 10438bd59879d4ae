#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpd {

// Exact division was requested but no polynomial quotient exists.
struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// A boundary specification that cannot be satisfied as stated (duplicate
// labels, a label on two input edges, size mismatches).
struct InconsistentSpec : std::runtime_error {
  explicit InconsistentSpec(const std::string& what) : std::runtime_error(what) {}
};

// The frontier DP exceeded its configured state budget.  Carries the number
// of states at the moment the budget was exceeded so callers can report it.
struct InfeasibleSizeError : std::runtime_error {
  std::size_t states;
  InfeasibleSizeError(std::size_t states_, const std::string& what)
      : std::runtime_error(what), states(states_) {}
};

// Malformed caller input: bad one-line notation, bad flag values, misuse of
// an operation outside its documented domain.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized data (canonical polynomial text, grid text, JSON).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpd
