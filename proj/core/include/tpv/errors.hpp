#ifndef TPV_ERRORS_HPP
#define TPV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpv {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a closure or enumeration exceeds its configured cap. Carries
// how far the computation got before it stopped.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// A construction that must succeed for valid input did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tpv

#endif  // TPV_ERRORS_HPP
