#pragma once

#include <stdexcept>
#include <string>

namespace isle {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (bad GaConfig, bad ExperimentConfig, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation called on an object in the wrong state (unevaluated population,
// empty population, unregistered island, ...).
class StateError : public Error {
 public:
  using Error::Error;
};

// Bad argument value (cut point out of range, island id out of range, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Instance/config text that does not parse. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A wire message that does not decode. Carries the offending line verbatim.
class WireError : public Error {
 public:
  WireError(const std::string& what, std::string offending_line)
      : Error(what + " [" + offending_line + "]"),
        offending_line_(std::move(offending_line)) {}
  const std::string& offending_line() const { return offending_line_; }

 private:
  std::string offending_line_;
};

// Socket-level failures: connect refused, peer gone, board shut down.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace isle
