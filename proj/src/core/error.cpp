#include "core/error.hpp"

namespace vb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::None: return "ok";
    case Errc::ParseError: return "ParseError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::StrandMismatch: return "StrandMismatch";
    case Errc::CategoryMismatch: return "CategoryMismatch";
    case Errc::CategoryViolation: return "CategoryViolation";
    case Errc::NoMatch: return "NoMatch";
    case Errc::TooFewStrands: return "TooFewStrands";
    case Errc::BadSite: return "BadSite";
    case Errc::MalformedDiagram: return "MalformedDiagram";
    case Errc::MissingVirtualRecord: return "MissingVirtualRecord";
    case Errc::FlatCrossingPresent: return "FlatCrossingPresent";
    case Errc::NotFreeArc: return "NotFreeArc";
    case Errc::NoUpArc: return "NoUpArc";
    case Errc::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case Errc::CategoryModelMismatch: return "CategoryModelMismatch";
    case Errc::ScriptInapplicable: return "ScriptInapplicable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadModel: return "BadModel";
    case Errc::Internal: return "Internal";
  }
  return "unknown";
}

} // namespace vb
