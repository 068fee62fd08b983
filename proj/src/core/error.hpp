#pragma once

#include <stdexcept>
#include <string>

namespace hq {

enum class errc {
  invalid_argument = 1,
  domain_error = 2,        // point outside the manifold
  exactness_refused = 3,   // rule exactness below what the theory needs
  lp_infeasible = 4,
  lp_negative_weights = 5,
  parse_error = 6,
  eigen_no_convergence = 7,
  cap_exceeded = 8,
  mz_unavailable = 9,      // measured eta >= 1
  io_error = 10,
  http_error = 11,
  internal = 12,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace hq
