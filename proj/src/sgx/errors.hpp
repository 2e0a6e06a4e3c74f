#pragma once

#include <stdexcept>
#include <string>

namespace sgx {

enum class Errc {
  invalid_argument,
  parse,
  disconnected,
  not_partial_cube,
  not_median,
  too_large,
  cap_exceeded,
  empty_minor,
  invariant,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sgx
