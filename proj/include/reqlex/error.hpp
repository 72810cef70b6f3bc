#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reqlex {

// Base for every failure the toolkit reports. Callers that only need a
// message catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document text. `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed document that does not match the manifest schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Structurally valid manifest that breaks a type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Cost-driver lookup on a cell the multiplier table leaves undefined.
class UndefinedCellError : public Error {
 public:
  using Error::Error;
};

// Lexing or structural parsing failure in a source file.
class SourceError : public Error {
 public:
  SourceError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class StructureError : public SourceError {
 public:
  using SourceError::SourceError;
};

// A metric whose definition divides by the line count was asked for on an
// empty program.
class EmptyProgramError : public Error {
 public:
  using Error::Error;
};

}  // namespace reqlex
