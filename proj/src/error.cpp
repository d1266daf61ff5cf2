#include "gridcount/error.hpp"

namespace gridcount {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Precondition:    return "precondition";
    case ErrorKind::ResourceLimit:   return "resource-limit";
    case ErrorKind::Internal:        return "internal";
    }
    return "unknown";
}

void raise(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace gridcount
