#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qssim/codes.hpp"
#include "qssim/noise.hpp"

namespace qssim {

enum class PartyOp { Identity, PauliY, Hadamard };
enum class Preparation { Zero, One, Plus, Minus };

// One joint assignment of Bob's preparation, the intermediate parties'
// operations and Alice's secret bit (4 * 3^(n-2) * 2 cases).
struct ChoiceTuple {
  Preparation prep = Preparation::Zero;
  std::vector<PartyOp> intermediate_ops;
  int secret = 0;
};

struct QecConfig {
  CodeScheme scheme = CodeScheme::None;
  QecMode mode = QecMode::SingleCycle;
};

enum class EvaluationMode { Exact, MonteCarlo };

struct ProtocolConfig {
  int parties = 3;
  HopAssignment hops;  // length == parties
  QecConfig qec;
  EvaluationMode evaluation = EvaluationMode::Exact;
  long trials = 100000;       // Monte Carlo only
  std::uint64_t seed = 1;     // Monte Carlo only
};

struct ErrorReport {
  std::optional<double> error_exact;
  std::optional<double> error_mc;
  std::optional<double> mc_stderr;
  std::optional<long> trials;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> per_tuple;
};

// Throws std::invalid_argument on inconsistent configs (hop count, trials,
// repetition with per-hop mode, ...).
void validate(const ProtocolConfig& cfg);

std::vector<ChoiceTuple> enumerate_tuples(int parties);
std::string tuple_label(const ChoiceTuple& t);

// Wrong-bit probability for one tuple, simulated exactly.
double run_tuple(const ProtocolConfig& cfg, const ChoiceTuple& t);

// Uniform average of run_tuple over all tuples; per_tuple populated.
ErrorReport run_exact(const ProtocolConfig& cfg);

// Seeded trajectory sampling; identical seed gives identical output.
// Sampling order per trial: tuple, then per-hop Kraus branch per qubit
// (and recovery branch under QEC), then measurement.
ErrorReport run_montecarlo(const ProtocolConfig& cfg);

// Standard teleportation where the two classical outcome bits are flipped
// independently with the given probabilities before Bob's Z^a X^b
// correction (a: phase bit, b: bit-flip bit; Bell pair (|00>+|11>)/sqrt 2).
// Returns fidelity against the input, averaged over Bell outcomes and
// bit-error events.
double teleport_fidelity(double e_phase_bit, double e_flip_bit,
                         const StateVector& input);

// Teleportation composed with the protocol: both outcome bits pass through
// a channel with the exact wrong-bit probability of cfg.
double run_ssqi(const ProtocolConfig& cfg, const StateVector& input);

std::string to_string(PartyOp op);
std::string to_string(Preparation p);

}  // namespace qssim
