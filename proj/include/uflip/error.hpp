#pragma once

#include <stdexcept>
#include <string>

namespace uflip {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed identity that the theory guarantees turned out false.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A character value on a split class of W(D_n) that cannot be produced.
class SplitClassError : public Error {
 public:
  using Error::Error;
};

/// Supplied Hecke characters violate the T_{w0} scalar relation.
class ScalarRelationError : public Error {
 public:
  ScalarRelationError(const std::string& what, std::string irreducible)
      : Error(what), irreducible_(std::move(irreducible)) {}
  const std::string& irreducible() const { return irreducible_; }

 private:
  std::string irreducible_;
};

/// Requested computation exceeds a configured size gate.
class GateError : public Error {
 public:
  using Error::Error;
};

}  // namespace uflip
