#pragma once

#include <stdexcept>
#include <string>

#include "qssim/protocol.hpp"

namespace qssim {

/// Malformed configuration input; carries a field-path diagnostic.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse a protocol configuration from its JSON text. Unknown fields are
// errors, not warnings. Schema:
//   {"parties": int,
//    "noise": {"uniform": {"kind": "pauli"|"damping", ...}}
//           | {"per_hop": [{"kind": ..., ...}, ...]},  // one entry per hop
//    "qec": {"scheme": "none"|"repetition"|"five_qubit"|"four_qubit",
//            "mode": "single_cycle"|"per_hop"},
//    "evaluation": {"mode": "exact"}
//                | {"mode": "monte_carlo", "trials": int, "seed": int}}
ProtocolConfig parse_config(const std::string& json_text);
ProtocolConfig load_config(const std::string& path);

// Deterministic JSON rendering of a report (sorted keys, 12 significant
// digits for probabilities).
std::string report_to_json(const ErrorReport& report);

}  // namespace qssim
