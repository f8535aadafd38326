#pragma once

#include <stdexcept>
#include <string>

namespace tropnet {

// Error taxonomy of the library. Every throwing operation documents which
// codes it can raise.
enum class Errc {
  VerticalEdge,
  CrossingEdges,
  VertexOutsideStrip,
  DuplicateId,
  RankMissing,
  KOutOfRange,
  NotComposable,
  NOutOfRange,
  ExplosionGuard,
  NonFiniteEntry,
  NonZeroFirstColumn,
  SingularSystem,
  TraceMismatch,
  NTooLarge,
  TypeMismatch,
  TripleContact,
  InfeasibleColoring,
  UnknownCell,
  UnknownRegion,
  NotSymmetric,
  NoConvergence,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tropnet
