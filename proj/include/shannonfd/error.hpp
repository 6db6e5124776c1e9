#ifndef SHANNONFD_ERROR_HPP
#define SHANNONFD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shannonfd {

enum class ErrorKind {
  kOverlap,          // argument sets that must be disjoint intersect
  kEmptySet,         // a set that must be nonempty is empty
  kOutOfRange,       // variable index outside the ground set
  kCapExceeded,      // n above the enumeration or oracle cap
  kNotClose,         // conditioning set is not closed under the FDs
  kInvalidArgument,
  kLabelMismatch,    // LP rows/objective reference unknown columns
  kParse,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the 1-based line and column of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace shannonfd

#endif  // SHANNONFD_ERROR_HPP
