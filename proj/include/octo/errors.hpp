#pragma once

#include <stdexcept>
#include <string>

namespace octo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inversion of an element whose norm is at or below the singular threshold.
class SingularElement : public Error {
 public:
  using Error::Error;
};

/// A kernel was evaluated on (or within the guard band of) its singular set.
/// `set()` names the set, e.g. "x in [y^-1]".
class Singularity : public Error {
 public:
  explicit Singularity(std::string set)
      : Error("kernel evaluated on its singular set: " + set), set_(std::move(set)) {}

  const std::string& set() const noexcept { return set_; }

 private:
  std::string set_;
};

/// A point was passed that does not lie in the interior of the domain.
class OutsideDomain : public Error {
 public:
  using Error::Error;
};

}  // namespace octo
