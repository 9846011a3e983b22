#pragma once

#include <string>

namespace qssim::formulas {

// Closed-form error expressions for the secret-sharing protocol. These are
// implemented independently of the simulator so that each side serves as an
// oracle for the other.

enum class Prep { Zero, One, Plus, Minus };
enum class Op { Identity, PauliY, Hadamard };

// Wrong-bit probability for three equal flip channels: 3p(1-p)^2 + p^3.
double e1_flip(double p);

// Odd-flip probability over three channels with distinct flip rates.
double e1_flip_three(double p_a, double p_b, double p_c);

// n equal flip channels: (1 - (1-2p)^n) / 2.
double e1_flip_nparty(double p, int n);

// Average error over the 24 choice tuples under equal damping gamma.
double e1_damp(double gamma);

// Same with per-channel damping strengths (Alice->, Bob->, Charlie-> hops).
double e1_damp_general(double gamma_a, double gamma_b, double gamma_c);

// Per-tuple error under equal damping (24 rows).
double table1_entry(Prep prep, Op op, int secret, double gamma);

// Per-tuple error under general damping (24 rows).
double table2_entry(Prep prep, Op op, int secret, double gamma_a,
                    double gamma_b, double gamma_c);

// Majority-vote failure: 3e^2(1-e) + e^3.
double e_majority(double e);

// Repetition-coded n-party flip error: (1-q)^2 (2+q) / 4, q = (1-2p)^n.
double ef_flip_nparty(double p, int n);

// Repetition-coded damping error: e_majority(e1_damp(gamma)).
double ef_damp(double gamma);

// Majority voting strictly improves iff 0 < e < 1/2.
bool correction_effective(double e);

std::string to_string(Prep p);
std::string to_string(Op o);

}  // namespace qssim::formulas
