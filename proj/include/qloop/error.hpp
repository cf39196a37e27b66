#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (R-matrix at u = q^{+-2}).
class SingularityError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed: non-exact division, non-polynomial point
// counts, ambiguous factorization, ...
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A ZQ window does not contain the support of the requested module.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

// Exchange-graph enumeration exceeded its seed cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t clusters_seen, std::size_t variables_seen)
      : Error(what), clusters_seen_(clusters_seen), variables_seen_(variables_seen) {}
  std::size_t clusters_seen() const { return clusters_seen_; }
  std::size_t variables_seen() const { return variables_seen_; }

 private:
  std::size_t clusters_seen_;
  std::size_t variables_seen_;
};

}  // namespace qloop
