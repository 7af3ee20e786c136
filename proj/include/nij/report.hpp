#ifndef NIJ_REPORT_HPP
#define NIJ_REPORT_HPP

#include <optional>
#include <string>
#include <utility>

namespace nij {

/// Failing instance of a checked identity: the inputs it failed on and the
/// exact values of both sides, so the discrepancy can be re-evaluated.
struct Witness {
  std::string identity;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

/// Pass/fail verdict with either a counterexample witness or a description
/// of what was exhaustively checked.
struct CheckReport {
  bool pass = true;
  std::optional<Witness> witness;
  std::string certificate;

  static CheckReport ok(std::string cert) {
    CheckReport r;
    r.pass = true;
    r.certificate = std::move(cert);
    return r;
  }
  static CheckReport fail(Witness w, std::string cert = {}) {
    CheckReport r;
    r.pass = false;
    r.witness = std::move(w);
    r.certificate = std::move(cert);
    return r;
  }
};

}  // namespace nij

#endif
