#pragma once

#include <stdexcept>
#include <string>

namespace zsm {

// Input-contract failures: bad orders, malformed colourings, invalid
// matchings, out-of-cap parameters. The CLI maps these to exit code 1.
enum class Errc {
  bad_order,
  incomplete_colouring,
  unbalanced_colouring,
  self_loop,
  vertex_out_of_range,
  not_disjoint,
  not_matching_edges,
  wrong_colours,
  too_large,
  quota_exceeded,
  odd_order,
  indivisible_quota,
  bad_matching,
  parse_error,
  precondition,
};

class InputError : public std::runtime_error {
 public:
  InputError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// A structural claim the solver relies on failed at runtime. This must never
// fire on a valid balanced instance; it carries the offending instance and
// matching so the failure can be reproduced. The CLI maps it to exit code 2,
// reserved for exactly this event.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(const std::string& what, std::string forensics)
      : std::logic_error(what), forensics_(std::move(forensics)) {}
  const std::string& forensics() const { return forensics_; }

 private:
  std::string forensics_;
};

// File-system level failures (unreadable/unwritable paths). Exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zsm
