#pragma once

#include <stdexcept>
#include <string>

namespace gridcount {

enum class ErrorKind {
    InvalidArgument,
    Precondition,
    ResourceLimit,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C layer can map
// it onto a status code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const char* message)
{
    if (!condition)
        raise(kind, message);
}

} // namespace gridcount
