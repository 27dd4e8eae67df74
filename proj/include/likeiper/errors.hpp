#ifndef LIKEIPER_ERRORS_HPP
#define LIKEIPER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace likeiper {

// Invalid arguments are reported with std::invalid_argument; the types below
// cover the numerical failure modes that callers may want to tell apart.

/// Evaluation requested at (or too close to) the pole of zeta at s = 1.
class pole_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An adaptive parameter escalation hit its cap without meeting the target.
class precision_failure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed beyond tolerance.
class internal_consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string &what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace likeiper

#endif // LIKEIPER_ERRORS_HPP
