#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gpdom/domination.hpp"
#include "gpdom/robustness.hpp"
#include "gpdom/solver.hpp"

namespace gpdom {

/// {"gammas":[...], "couple_number":N, "F":[...], "type":"TypeII",
///  "pseudo_couples":[...], "self_contained":[...]}. Index lists shift by `base`.
nlohmann::json to_json(const BlockProfile& p, int base = 0);

/// {"n":N, "k":2, "fault":"u3"|null, "gamma":G, "set":[...], "engine":"CyclicDP", "verified":true}
nlohmann::json certificate_json(int n, int k, const FaultSpec& fault, const SolveResult& r, bool verified,
                                int base = 0);

/// {"n":N, "mu":{"exact":1,"witnesses":["u0"]},
///  "bondage":{"low":2,"high":3,"exact":2,"witnesses":[["u0-u1","v2-v4"]]}}
nlohmann::json to_json(const RobustnessReport& r, int base = 0);

/// One `u<i>`/`v<i>` token per line; blank lines and `#` comments ignored.
/// Throws parse-error on malformed or out-of-range tokens.
DomSet parse_set_file(std::string_view text, int n, int base = 0);

/// Parses a certificate JSON document back into (n, fault, set, gamma).
struct CertificateDoc {
  int n = 0;
  int k = 2;
  FaultSpec fault;
  int gamma = 0;
  DomSet set;
};
CertificateDoc parse_certificate_json(std::string_view text, int base = 0);

}  // namespace gpdom
