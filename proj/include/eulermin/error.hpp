#pragma once

#include <stdexcept>
#include <string>

namespace eulermin {

enum class ErrorKind {
  Parse,         // malformed input text
  InvalidGraph,  // loop, duplicate edge, bad vertex index
  Precondition,  // operation called outside its domain
  CapExceeded,   // a configured enumeration limit was hit
  NoJoin,        // requested (T,p)-join does not exist
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eulermin
