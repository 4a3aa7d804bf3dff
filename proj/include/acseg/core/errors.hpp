#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace acseg {

// Base error carrying a stable machine-readable code next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Bad inputs: files, shapes, colors, configs. CLI exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant. CLI exit code 3.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace acseg
