#pragma once

#include <cstdint>
#include <string>

namespace wsnsim {

enum class NodeClass { Normal, Advanced, Super, UltraSuper };

// Election rules, ordered by how much of the energy hierarchy they see:
// LEACH ignores residual energy entirely, DEEC distinguishes two classes,
// EDEEC three, BEENISH all four.
enum class Strategy { LEACH, DEEC, EDEEC, BEENISH };

std::string to_string(Strategy s);
std::string to_string(NodeClass c);

// Parses one of LEACH/DEEC/EDEEC/BEENISH; throws std::invalid_argument
// listing the valid names otherwise.
Strategy strategy_from_string(const std::string& name);

// Four-tier initial-energy mix. The fractions nest: of n nodes, m*n are
// advanced-or-better; of those, m0 are super-or-better; of those, m1 are
// ultra-super. Multipliers scale the base energy e0 as (1+a), (1+b), (1+u).
struct HeterogeneityParams {
  double m = 0.5;
  double m0 = 0.3;
  double m1 = 0.2;
  double a = 1.5;
  double b = 2.0;
  double u = 2.5;
  double e0 = 0.5;    // joules given to a normal node
  double p_opt = 0.1; // reference fraction of heads per round

  // Throws std::invalid_argument naming the offending field. Fractions must
  // lie in [0,1], multipliers be >= 0, e0 > 0, p_opt in (0,1], and the
  // probability denominator must come out positive.
  void validate() const;
};

struct ClassCounts {
  int normal = 0;
  int advanced = 0;
  int super = 0;
  int ultra = 0;
};

// Splits n nodes into the four classes by nested rounding: ultra-or-better,
// super-or-better and advanced-or-better counts are each rounded to the
// nearest integer (ties toward zero), then differenced. Throws
// std::invalid_argument if any difference comes out negative.
ClassCounts class_counts(int n_nodes, const HeterogeneityParams& h);

// Class of a node id under the block layout used by deployment: normal ids
// first, then advanced, super, ultra-super.
NodeClass node_class(int node_id, int n_nodes, const HeterogeneityParams& h);

// Starting energy for one node of the given class.
double initial_energy(NodeClass c, const HeterogeneityParams& h);

// Network-wide starting energy, closed form: n * e0 * D where D is the
// probability denominator below. Equals the class-wise sum whenever the
// nested products n*m, n*m*m0, n*m*m0*m1 are integers.
double total_energy(int n_nodes, const HeterogeneityParams& h);

// Probability denominator D = 1 + m*(a + m0*(-a + b + m1*(-b + u))).
double energy_denominator(const HeterogeneityParams& h);

// Linear estimate of the per-node average residual energy at round r out of
// total_rounds: (e_total / n) * (1 - r / total_rounds), clamped below at 0.
// Throws std::domain_error if total_rounds < 1.
double average_energy_estimate(std::int64_t round, std::int64_t total_rounds,
                               double e_total, int n_nodes);

// Planning horizon in rounds: floor(e_total / e_round), minimum 1. Throws
// std::domain_error if e_round <= 0.
std::int64_t lifetime_estimate(double e_total, double e_round);

// Per-round head probability for one node. Non-LEACH strategies scale p_opt
// by the node's class multiplier and its residual-to-average energy ratio,
// normalised by the strategy's own denominator; the result is clamped to 1.
// DEEC sees only normal/advanced (m0 = m1 = 0, higher classes treated as
// advanced); EDEEC adds super (m1 = 0, ultra treated as super); BEENISH sees
// all four. LEACH returns p_opt unconditionally.
// Throws std::domain_error if avg_energy <= 0 or residual < 0.
double election_probability(Strategy s, NodeClass c, double residual,
                            double avg_energy, const HeterogeneityParams& h);

// Rotation threshold for a node with per-round probability p at the given
// round: p / (1 - p*(r mod n)) with n = epoch_length(p), clamped to [0,1];
// 1 when the denominator is not positive (epoch end forces election);
// 0 when the node is not eligible. Throws std::domain_error for an eligible
// node with p outside (0,1].
double ch_threshold(double p, std::int64_t round, bool eligible);

// Rounds a node must sit out between head terms: max(1, round(1/p)).
// Throws std::domain_error if p <= 0.
std::int64_t epoch_length(double p);

}  // namespace wsnsim
