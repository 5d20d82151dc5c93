#ifndef GLIK_ERRORS_HPP
#define GLIK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glik {

// Parameters that violate a documented precondition (bad family spec,
// out-of-range vertex, non-permutation ordering, ...).
class InvalidParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An exponential-cost operation was asked to run above its configured limit.
// `limit_name` names the knob (and CLI flag) that raises it.
class LimitExceeded : public std::runtime_error {
public:
  LimitExceeded(std::string limit_name, int limit, int requested);

  const std::string& limit_name() const { return limit_name_; }
  int limit() const { return limit_; }
  int requested() const { return requested_; }

private:
  std::string limit_name_;
  int limit_;
  int requested_;
};

// Text input that is not well-formed; `offset` is the byte position of the
// first offending character.
class MalformedInput : public std::runtime_error {
public:
  MalformedInput(const std::string& what, std::size_t offset);

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class NoClosedForm : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace glik

#endif // GLIK_ERRORS_HPP
