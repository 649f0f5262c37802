#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flopcalc {

/// Malformed textual input (diagram spec, rational literal, JSON schema).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Violated mathematical precondition (unknown node, invalid curve, zero class, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluation requested at a pole of the quantum potential.
class PoleError : public DomainError {
public:
  explicit PoleError(const std::string& msg, std::vector<long long> offending)
      : DomainError(msg), offending_class(std::move(offending)) {}
  std::vector<long long> offending_class;
};

/// Enumeration exceeded its vertex budget (e.g. chambers for I = empty in big types).
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broke; signals a bug upstream, not bad user input.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace flopcalc
