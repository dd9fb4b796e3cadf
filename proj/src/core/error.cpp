#include "core/error.hpp"

namespace planex {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Budget: return "budget exceeded";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace planex
