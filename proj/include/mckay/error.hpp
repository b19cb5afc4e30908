#ifndef MCKAY_ERROR_HPP
#define MCKAY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mckay {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or malformed input. Maps to CLI exit code 2.
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

/// Internal consistency failure: a certified-exact computation produced a
/// value that cannot occur for valid input. Maps to CLI exit code 3.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace mckay

#endif  // MCKAY_ERROR_HPP
