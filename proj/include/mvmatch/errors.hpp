#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvmatch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A token was registered in two different view alphabets.
class DisjointnessViolation : public Error {
 public:
  DisjointnessViolation(std::string token, std::string view_a, std::string view_b)
      : Error("token '" + token + "' appears in views '" + view_a + "' and '" + view_b + "'"),
        token_(std::move(token)),
        view_a_(std::move(view_a)),
        view_b_(std::move(view_b)) {}

  const std::string& token() const noexcept { return token_; }
  const std::string& view_a() const noexcept { return view_a_; }
  const std::string& view_b() const noexcept { return view_b_; }

 private:
  std::string token_;
  std::string view_a_;
  std::string view_b_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(std::string token)
      : Error("unknown symbol '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class EmptyPattern : public Error {
 public:
  EmptyPattern() : Error("pattern must contain at least one symbol") {}
};

class OutOfBounds : public Error {
 public:
  OutOfBounds(std::size_t position, std::size_t limit)
      : Error("position " + std::to_string(position) + " exceeds last window start " +
              std::to_string(limit)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Text and pattern were interned against different registries.
class RegistryMismatch : public Error {
 public:
  RegistryMismatch() : Error("text and pattern use different alphabet registries") {}
};

/// A text violates the equal-length or per-view typing invariants.
class InvalidText : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// Malformed multi-track input. `line` is 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvmatch
