#pragma once

#include <stdexcept>
#include <string>

namespace circ {

// Argument outside the domain of a geometric or numeric function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A shortcut of length zero; it can never shorten a path.
class DegenerateShortcut : public DomainError {
 public:
  explicit DegenerateShortcut(const std::string& what) : DomainError(what) {}
};

// Root finder without a sign change or other numeric failure.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or malformed configuration document.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace circ
