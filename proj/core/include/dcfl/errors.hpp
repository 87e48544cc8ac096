#pragma once

#include <stdexcept>
#include <string>

namespace dcfl {

enum class ErrorKind {
  MalformedMachine,      // definition fails validation
  BudgetExhausted,       // run exceeded its step budget
  UndefinedTransition,   // no move available in a non-halting configuration
  InputExhausted,        // machine wants an input symbol after consuming $
  StackUnderflow,        // pop with nothing below
  NotRealTime,           // machine expected to be real-time has an epsilon move
  HeadOutOfTape,         // tape head left the marked region
  VisitDiscipline,       // cell rewritten outside its allowed visit window
  CutMisaligned,         // factorization does not concatenate to its string
  NoTurningPoint,        // region of a stack history with no turn
  ArityUnknown,          // language expression fits no supported composition kind
  BadParameter,          // out-of-range or inconsistent arguments
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedMachine: return "malformed machine";
    case ErrorKind::BudgetExhausted: return "budget exhausted";
    case ErrorKind::UndefinedTransition: return "undefined transition";
    case ErrorKind::InputExhausted: return "input exhausted";
    case ErrorKind::StackUnderflow: return "stack underflow";
    case ErrorKind::NotRealTime: return "not real-time";
    case ErrorKind::HeadOutOfTape: return "head out of tape";
    case ErrorKind::VisitDiscipline: return "visit discipline violation";
    case ErrorKind::CutMisaligned: return "cut misaligned";
    case ErrorKind::NoTurningPoint: return "no turning point";
    case ErrorKind::ArityUnknown: return "arity unknown";
    case ErrorKind::BadParameter: return "bad parameter";
  }
  return "unknown error";
}

}  // namespace dcfl
