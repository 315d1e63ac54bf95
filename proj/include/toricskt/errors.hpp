#pragma once

#include <stdexcept>
#include <string>

namespace toricskt {

// Every throwing path in the library uses one of these. The CLI maps
// kinds to exit codes, so each error type must keep a stable kind.
enum class ErrorKind {
  Usage,    // bad argument values (indices, bounds, shapes)
  Parse,    // malformed input files / text
  Math,     // mathematical integrity failures (torsion, invalid witness, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

#define TORICSKT_ERROR(NAME, KIND)                                    \
  class NAME : public Error {                                         \
  public:                                                             \
    explicit NAME(const std::string& what)                            \
        : Error(ErrorKind::KIND, #NAME, what) {}                      \
  }

TORICSKT_ERROR(MalformedFan, Parse);
TORICSKT_ERROR(ParseError, Parse);
TORICSKT_ERROR(IndexOutOfRange, Usage);
TORICSKT_ERROR(SpecError, Usage);
TORICSKT_ERROR(JShapeError, Usage);
TORICSKT_ERROR(BoundError, Usage);
TORICSKT_ERROR(OddRankError, Usage);
TORICSKT_ERROR(DimensionMismatch, Usage);
TORICSKT_ERROR(InvalidFan, Math);
TORICSKT_ERROR(TorsionError, Math);
TORICSKT_ERROR(InvalidWitness, Math);
TORICSKT_ERROR(TraceMismatch, Math);

#undef TORICSKT_ERROR

}  // namespace toricskt
