#ifndef DGS_ERROR_HPP
#define DGS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgs {

enum class ErrorKind {
    IndexOutOfRange,
    ParallelNonLoopArc,
    NotSimple,
    NotStronglyConnected,
    InvalidParameter,
    InvalidArgument,
    ParseError,
    DivisionByZero,
    InexactDivision,
    BothZeroMod2,
    NotMonic,
    TooLargeForEnumeration,
    TooLargeForSearch,
    // Broken internal invariant (oracle disagreement, failed exactness
    // assertion). Never caused by user input.
    InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors that indicate an implementation bug rather than bad input.
    bool is_internal() const noexcept { return kind_ == ErrorKind::InternalError; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void ensure(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::InternalError, what);
}

}  // namespace dgs

#endif
