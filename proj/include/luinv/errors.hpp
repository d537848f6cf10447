#pragma once

#include <stdexcept>
#include <string>

namespace luinv {

// A cost guard tripped: the requested enumeration or contraction would
// exceed the configured step/term budget.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A structural precondition was violated (bad arity, incompatible shapes,
// sub-stable-range request, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Shape/arity mismatch between states, operators and permutation tuples.
class ShapeError : public PreconditionError {
public:
  explicit ShapeError(const std::string& what) : PreconditionError(what) {}
};

// Malformed input file or JSON document.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations of the same quantity disagreed. This always
// indicates an implementation bug, never bad user input.
class InconsistencyError : public std::logic_error {
public:
  explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace luinv
