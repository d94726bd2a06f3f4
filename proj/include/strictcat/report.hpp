#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strictcat/error.hpp"

namespace strictcat {

/// How a claim was verified: by complete enumeration of a finite object,
/// by a bounded window (or finite proxy) of an infinite one, or by a
/// rule-level identity of the symbolic grammar.
enum class Mode { exhaustive, window, structural };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::exhaustive: return "exhaustive";
    case Mode::window: return "window";
    default: return "structural";
  }
}

struct Claim {
  std::string name;
  bool pass = false;
  Mode mode = Mode::exhaustive;
  std::optional<std::string> witness;
  std::string detail;
};

struct Certificate {
  std::vector<Claim> claims;

  bool ok() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return !claims.empty();
  }

  const Claim* first_failure() const {
    for (const auto& c : claims)
      if (!c.pass) return &c;
    return nullptr;
  }

  const Claim* find(const std::string& name) const {
    for (const auto& c : claims)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Raised when a certificate has a failing claim; carries the certificate
/// built so far.
class CertificateFailure : public Error {
 public:
  CertificateFailure(const Claim& claim, Certificate certificate)
      : Error("claim '" + claim.name + "' failed" +
              (claim.witness ? ": " + *claim.witness : std::string())),
        certificate_(std::move(certificate)) {}

  const Certificate& certificate() const noexcept { return certificate_; }

 private:
  Certificate certificate_;
};

}  // namespace strictcat
