#pragma once

#include <superq/poly.hpp>

#include <stdexcept>
#include <string>

namespace superq {

/// An operation needed a root that does not exist in the session field.
/// `required` is a monic polynomial (irreducible over the current field's
/// rationals in all cases we raise) whose root must be adjoined; re-run over
/// the enlarged field.
class ExtensionNeeded : public std::runtime_error {
 public:
  ExtensionNeeded(std::string what, Poly required_minpoly)
      : std::runtime_error(std::move(what)), required(std::move(required_minpoly)) {}
  Poly required;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace superq
