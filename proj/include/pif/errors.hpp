#pragma once

#include <stdexcept>
#include <string>

namespace pif {

// Base of all library errors. Everything thrown on invalid input or broken
// internal invariants derives from this.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- ball construction / mutation ---

class LabelCountError : public Error {
public:
  using Error::Error;
};

class OrientationError : public Error {
public:
  using Error::Error;
};

class DisconnectedError : public Error {
public:
  using Error::Error;
};

class NotSphereError : public Error {
public:
  using Error::Error;
};

class UnknownLabelError : public Error {
public:
  using Error::Error;
};

class UnknownVertexError : public Error {
public:
  using Error::Error;
};

class UnknownFaceError : public Error {
public:
  using Error::Error;
};

class DegreeError : public Error {
public:
  using Error::Error;
};

class LoopError : public Error {
public:
  using Error::Error;
};

// --- scheme / pairing ---

class PairingError : public Error {
public:
  using Error::Error;
};

class NotStandardError : public Error {
public:
  using Error::Error;
};

// --- moves ---

class NotCycle2Error : public Error {
public:
  using Error::Error;
};

class DisconnectError : public Error {
public:
  using Error::Error;
};

class SelfMergeError : public Error {
public:
  using Error::Error;
};

class DegenerateChordError : public Error {
public:
  using Error::Error;
};

// --- catalog / search ---

class ParameterError : public Error {
public:
  using Error::Error;
};

class OddFaceCountError : public Error {
public:
  using Error::Error;
};

// --- text format ---

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// A cross-check that must hold by construction failed. Indicates a bug, not
// bad input.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

}  // namespace pif
