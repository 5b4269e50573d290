#ifndef VBRAID_ERROR_HPP
#define VBRAID_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vb {

enum class Errc {
  None = 0,
  ParseError,
  IndexOutOfRange,
  StrandMismatch,
  CategoryMismatch,
  CategoryViolation,
  NoMatch,
  TooFewStrands,
  BadSite,
  MalformedDiagram,
  MissingVirtualRecord,
  FlatCrossingPresent,
  NotFreeArc,
  NoUpArc,
  DimensionBudgetExceeded,
  CategoryModelMismatch,
  ScriptInapplicable,
  BudgetExceeded,
  BadModel,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace vb

#endif
