#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/election.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

struct NodeState {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  NodeClass cls = NodeClass::Normal;
  double initial_energy = 0.0;
  double residual_energy = 0.0;  // in [0, initial_energy]; 0 exactly once dead
  bool alive = true;
  std::int64_t ch_blocked_until = 0;  // first round this node may head again
};

struct SimConfig {
  int n_nodes = 100;
  double field_side = 100.0;
  double bs_x = 50.0;
  double bs_y = 50.0;
  RadioParams radio;
  HeterogeneityParams het;
  Strategy strategy = Strategy::BEENISH;
  std::uint64_t seed = 1;
  std::int64_t max_rounds = 20000;  // safety stop

  // Throws std::invalid_argument naming the offending field; delegates to
  // the radio and heterogeneity validators.
  void validate() const;
};

// One round's cluster topology. target[id] holds the head id for members,
// kToBs for nodes sending straight to the sink (only when no head exists),
// and kNone for heads and dead nodes.
struct ClusterAssignment {
  static constexpr int kToBs = -1;
  static constexpr int kNone = -2;
  std::vector<int> ch_ids;  // ascending
  std::vector<int> target;  // indexed by node id
};

struct RoundOutcome {
  std::int64_t round = 0;
  int alive = 0;  // survivors after this round's deaths
  int ch_count = 0;
  std::int64_t packets_to_ch = 0;
  std::int64_t packets_to_bs = 0;
  double energy_consumed = 0.0;  // joules actually drained this round
  double total_residual = 0.0;   // joules left network-wide
};

struct SimSummary {
  std::int64_t first_death_round = 0;
  std::int64_t half_death_round = 0;
  std::int64_t last_death_round = 0;
  std::int64_t total_packets_to_bs = 0;
  std::int64_t total_packets_to_ch = 0;
  std::int64_t rounds_simulated = 0;
  bool truncated = false;  // stopped by max_rounds with nodes still alive
};

struct SimResult {
  std::vector<RoundOutcome> rounds;
  SimSummary summary;
};

// Places n nodes uniformly over the field (one x draw then one y draw per
// node, ascending id) and assigns classes in blocks: normal ids first, then
// advanced, super, ultra-super, with block sizes from class_counts.
std::vector<NodeState> deploy(const SimConfig& config, UniformRng& rng);

// One election pass. Walks nodes in ascending id, skipping dead ones; each
// alive node consumes exactly one uniform draw whether eligible or not, so
// the variate stream stays aligned under bookkeeping changes. A node is
// elected when its draw falls below ch_threshold of its current probability;
// election blocks it for epoch_length(p) rounds. Returns elected ids,
// ascending.
std::vector<int> elect_chs(std::vector<NodeState>& nodes, std::int64_t round,
                           double avg_energy, const SimConfig& config,
                           UniformRng& rng);

// Joins every alive non-head node to its nearest head (Euclidean distance,
// ties to the lowest head id). With no heads at all, every alive node is
// assigned straight to the sink.
ClusterAssignment form_clusters(const std::vector<NodeState>& nodes,
                                const std::vector<int>& ch_ids,
                                const SimConfig& config);

// Charges the round's traffic: members pay one transmit to their head; heads
// pay one receive per member, aggregation over members plus their own frame,
// and one transmit to the sink; sink-direct nodes pay one transmit to the
// sink. Drains clamp at zero (a node can finish its last transmission), and
// any node at exactly zero is marked dead at round end. energy_consumed
// records what was actually drained, so residual-before minus residual-after
// equals it.
RoundOutcome apply_round_energy(std::vector<NodeState>& nodes,
                                const ClusterAssignment& assignment,
                                const SimConfig& config, std::int64_t round);

// Full lifetime simulation: seeds the generator, deploys, then loops
// election / clustering / energy accounting until every node is dead or
// max_rounds is hit. The average-energy normaliser is the linear estimate
// over a planning horizon fixed once at start; when the estimate hits zero
// while nodes remain, the measured average of the living takes over.
SimResult run(const SimConfig& config);

}  // namespace wsnsim
