#pragma once

#include <stdexcept>
#include <string>

namespace hoffman {

// Input that cannot be parsed or violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 / edge-list / named-graph text.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// The quantity is mathematically undefined or inapplicable for this input
// (empty graph has no Hoffman number, irregular graph has no average
// parameters, infeasible parameter tuple, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Embedded data failed its load-time self-check.
class CatalogError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace hoffman
