#include "deglab/error.hpp"

namespace deglab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::AnnotationMismatch: return "AnnotationMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::Untypable: return "Untypable";
    case Errc::NotPure: return "NotPure";
    case Errc::InvalidPosition: return "InvalidPosition";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::MarkNotRedex: return "MarkNotRedex";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::MixedDegrees: return "MixedDegrees";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NormalForm: return "NormalForm";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::GenerationExhausted: return "GenerationExhausted";
  }
  return "Error";
}

}  // namespace deglab
