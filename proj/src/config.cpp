#include "allsat/config.hpp"

namespace allsat {

const char* to_string(ShrinkMode m) {
  switch (m) {
    case ShrinkMode::Dynamic:
      return "dynamic";
    case ShrinkMode::Conservative:
      return "conservative";
    case ShrinkMode::None:
      return "none";
  }
  return "?";
}

const char* to_string(PolarityMode m) {
  switch (m) {
    case PolarityMode::AlwaysFalse:
      return "false";
    case PolarityMode::AlwaysTrue:
      return "true";
    case PolarityMode::Saved:
      return "saved";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Complete:
      return "complete";
    case Status::Unsat:
      return "unsat";
    case Status::Timeout:
      return "timeout";
    case Status::BudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

}  // namespace allsat
