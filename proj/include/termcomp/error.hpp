#pragma once

#include <stdexcept>
#include <string>

namespace termcomp {

enum class ErrorKind {
  io,             // unreadable path, write failure
  decode,         // input bytes are not valid UTF-8
  malformed,      // a record in an input file cannot be parsed
  config,         // bad or contradictory options
  empty_input,    // zero tokens / empty vocabulary
  unknown_word,   // word is not in the domain vocabulary
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace termcomp
