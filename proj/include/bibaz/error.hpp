#ifndef BIBAZ_ERROR_HPP
#define BIBAZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bibaz {

// Parameter or input outside the admissible domain. CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bound or relation denominator vanished; the theorems say nothing there.
// CLI exit code 3.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series did not reach its requested tolerance within the term budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bibaz

#endif
