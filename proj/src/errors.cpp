#include "qfe/errors.hpp"

namespace qfe {

std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::commutativity:
      return "commutativity";
    case Failure::non_cyclotomic:
      return "non-cyclotomic";
    case Failure::inconsistent_t0:
      return "inconsistent-t0";
    case Failure::maxima_mismatch:
      return "maxima-mismatch";
    case Failure::peeling_stall:
      return "peeling-stall";
  }
  return "unknown";
}

}  // namespace qfe
