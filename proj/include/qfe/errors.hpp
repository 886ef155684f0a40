#ifndef QFE_ERRORS_HPP
#define QFE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfe {

enum class Failure {
  commutativity,    // h_p1(q) h_p2(q^p1) != h_p2(q) h_p1(q^p2)
  non_cyclotomic,   // a generator has a zero or pole off {0} and the roots of unity
  inconsistent_t0,  // e_p / (p - 1) differs between primes
  maxima_mismatch,  // max(U_p u V_p) is not r*p for one shared r, or sides differ
  peeling_stall,    // peeling cannot make progress for every prime at once
};

std::string_view to_string(Failure f);

// The input cannot be (part of) a solution of the functional equation.
class NotASolution : public std::runtime_error {
 public:
  NotASolution(Failure reason, const std::string& detail)
      : std::runtime_error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}
  Failure reason() const { return reason_; }

 private:
  Failure reason_;
};

// Classification needs at least two primes.
class TooFewPrimes : public std::runtime_error {
 public:
  explicit TooFewPrimes(std::size_t count)
      : std::runtime_error("too few primes: decomposition needs at least 2, got " +
                           std::to_string(count)) {}
};

}  // namespace qfe

#endif  // QFE_ERRORS_HPP
