#include "errors.hpp"

namespace caclab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ReflexivityViolation: return "ReflexivityViolation";
    case Errc::AntisymmetryViolation: return "AntisymmetryViolation";
    case Errc::TransitivityViolation: return "TransitivityViolation";
    case Errc::ForeignElement: return "ForeignElement";
    case Errc::AnnotationIncomplete: return "AnnotationIncomplete";
    case Errc::BehaviorViolation: return "BehaviorViolation";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::NotOmegaOrdered: return "NotOmegaOrdered";
    case Errc::NotStable: return "NotStable";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotAnAntichain: return "NotAnAntichain";
    case Errc::NoSolution: return "NoSolution";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SolverFailed: return "SolverFailed";
    case Errc::NotASolution: return "NotASolution";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::MalformedMove: return "MalformedMove";
    case Errc::MachineDiverged: return "MachineDiverged";
    case Errc::UnknownSpec: return "UnknownSpec";
    case Errc::UseConsistencyViolation: return "UseConsistencyViolation";
    case Errc::HomogeneityViolation: return "HomogeneityViolation";
    case Errc::SmallBulletViolation: return "SmallBulletViolation";
    case Errc::LargeBulletViolation: return "LargeBulletViolation";
    case Errc::SideBulletViolation: return "SideBulletViolation";
    case Errc::IsolatedBulletViolation: return "IsolatedBulletViolation";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::StabilizationOutOfRange: return "StabilizationOutOfRange";
    case Errc::WrongSide: return "WrongSide";
    case Errc::UnsatisfiableSpec: return "UnsatisfiableSpec";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error make_error(Errc code, std::vector<std::uint64_t> witness,
                 std::string detail) {
  return Error{code, std::move(witness), std::move(detail)};
}

}  // namespace caclab
