#pragma once

#include <stdexcept>
#include <string>

namespace endoscope {

enum class ErrorKind {
    validation,
    division_by_zero,
    parent_mismatch,
    degree_cap,
    not_squarefree,
    precision_exhausted,
    not_simple_albert_type,
    divisibility_violation,
    non_integral_element,
    wrong_albert_type,
    internal,
};

const char* to_string(ErrorKind kind) noexcept;

/* Every failure raised by the library carries one of the kinds above; the CLI
 * maps them onto exit codes and the {"error": {...}} report. */
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& detail) : std::runtime_error(detail), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace endoscope
