#pragma once

#include <stdexcept>
#include <string>

namespace tribo {

/// Inversion of the zero field element.
class ZeroElement : public std::domain_error {
 public:
  ZeroElement() : std::domain_error("zero field element has no inverse") {}
};

/// The element evaluates to zero at the real root, so no sign exists.
class ZeroAtRoot : public std::domain_error {
 public:
  ZeroAtRoot() : std::domain_error("element vanishes at the real root") {}
};

class IndexTooSmall : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A denominator in a replicated closed-form recursion vanished.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id)
      : std::invalid_argument("unknown identity: " + id) {}
};

class RangeTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace tribo
