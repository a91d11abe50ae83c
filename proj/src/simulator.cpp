#include "wsnsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wsnsim/metrics.hpp"

namespace wsnsim {

namespace {

double dist(double ax, double ay, double bx, double by) {
  // sqrt form rather than hypot: correctly-rounded per IEEE, so trajectories
  // replay bit-for-bit across C libraries
  const double dx = ax - bx;
  const double dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

void SimConfig::validate() const {
  if (n_nodes < 1) throw std::invalid_argument("sim.n_nodes: must be >= 1");
  if (!(std::isfinite(field_side) && field_side > 0.0)) {
    throw std::invalid_argument("sim.field_side: must be strictly positive and finite");
  }
  if (!std::isfinite(bs_x)) throw std::invalid_argument("sim.bs_x: must be finite");
  if (!std::isfinite(bs_y)) throw std::invalid_argument("sim.bs_y: must be finite");
  if (max_rounds < 1) throw std::invalid_argument("sim.max_rounds: must be >= 1");
  radio.validate();
  het.validate();
}

std::vector<NodeState> deploy(const SimConfig& config, UniformRng& rng) {
  config.validate();
  const ClassCounts counts = class_counts(config.n_nodes, config.het);
  std::vector<NodeState> nodes(static_cast<std::size_t>(config.n_nodes));
  for (int i = 0; i < config.n_nodes; ++i) {
    NodeState& node = nodes[static_cast<std::size_t>(i)];
    node.id = i;
    node.x = rng.next() * config.field_side;
    node.y = rng.next() * config.field_side;
    if (i < counts.normal) {
      node.cls = NodeClass::Normal;
    } else if (i < counts.normal + counts.advanced) {
      node.cls = NodeClass::Advanced;
    } else if (i < counts.normal + counts.advanced + counts.super) {
      node.cls = NodeClass::Super;
    } else {
      node.cls = NodeClass::UltraSuper;
    }
    node.initial_energy = initial_energy(node.cls, config.het);
    node.residual_energy = node.initial_energy;
  }
  return nodes;
}

std::vector<int> elect_chs(std::vector<NodeState>& nodes, std::int64_t round,
                           double avg_energy, const SimConfig& config,
                           UniformRng& rng) {
  if (!(avg_energy > 0.0)) {
    throw std::domain_error("elect_chs: avg_energy must be > 0");
  }
  std::vector<int> heads;
  for (NodeState& node : nodes) {
    if (!node.alive) continue;
    const double variate = rng.next();  // consumed even when ineligible
    const double p =
        election_probability(config.strategy, node.cls, node.residual_energy,
                             avg_energy, config.het);
    const bool eligible = round >= node.ch_blocked_until && p > 0.0;
    const double threshold = ch_threshold(p, round, eligible);
    if (variate < threshold) {
      heads.push_back(node.id);
      node.ch_blocked_until = round + epoch_length(p);
    }
  }
  return heads;
}

ClusterAssignment form_clusters(const std::vector<NodeState>& nodes,
                                const std::vector<int>& ch_ids,
                                const SimConfig& /*config*/) {
  ClusterAssignment assignment;
  assignment.ch_ids = ch_ids;
  std::sort(assignment.ch_ids.begin(), assignment.ch_ids.end());
  assignment.target.assign(nodes.size(), ClusterAssignment::kNone);
  for (const NodeState& node : nodes) {
    if (!node.alive) continue;
    if (std::binary_search(assignment.ch_ids.begin(), assignment.ch_ids.end(),
                           node.id)) {
      continue;
    }
    if (assignment.ch_ids.empty()) {
      assignment.target[static_cast<std::size_t>(node.id)] =
          ClusterAssignment::kToBs;
      continue;
    }
    // strict < over ascending head ids: equidistant heads resolve to the
    // lowest id
    int best = ClusterAssignment::kNone;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int ch : assignment.ch_ids) {
      const NodeState& head = nodes[static_cast<std::size_t>(ch)];
      const double dx = node.x - head.x;
      const double dy = node.y - head.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2) {
        best_d2 = d2;
        best = ch;
      }
    }
    assignment.target[static_cast<std::size_t>(node.id)] = best;
  }
  return assignment;
}

RoundOutcome apply_round_energy(std::vector<NodeState>& nodes,
                                const ClusterAssignment& assignment,
                                const SimConfig& config, std::int64_t round) {
  const RadioParams& radio = config.radio;
  const std::int64_t bits = radio.packet_bits;
  RoundOutcome out;
  out.round = round;
  out.ch_count = static_cast<int>(assignment.ch_ids.size());

  // Drains clamp at the node's remaining energy; energy_consumed records the
  // clamped amount so residual-before minus residual-after matches it.
  auto drain = [&out](NodeState& node, double cost) {
    const double taken = std::min(cost, node.residual_energy);
    node.residual_energy -= taken;
    out.energy_consumed += taken;
  };

  std::vector<std::int64_t> inbound(nodes.size(), 0);
  for (NodeState& node : nodes) {
    if (!node.alive) continue;
    const int target = assignment.target[static_cast<std::size_t>(node.id)];
    if (target == ClusterAssignment::kNone) continue;  // a head, or idle
    double d;
    if (target == ClusterAssignment::kToBs) {
      d = dist(node.x, node.y, config.bs_x, config.bs_y);
      ++out.packets_to_bs;
    } else {
      const NodeState& head = nodes[static_cast<std::size_t>(target)];
      d = dist(node.x, node.y, head.x, head.y);
      ++inbound[static_cast<std::size_t>(target)];
      ++out.packets_to_ch;
    }
    drain(node, tx_energy(radio, bits, d));
  }

  for (int ch : assignment.ch_ids) {
    NodeState& head = nodes[static_cast<std::size_t>(ch)];
    const std::int64_t members = inbound[static_cast<std::size_t>(ch)];
    const double cost =
        rx_energy(radio, bits) * static_cast<double>(members) +
        aggregation_energy(radio, bits, members + 1) +
        tx_energy(radio, bits, dist(head.x, head.y, config.bs_x, config.bs_y));
    ++out.packets_to_bs;
    drain(head, cost);
  }

  // deaths at round end only: a node may finish its last transmission
  for (NodeState& node : nodes) {
    if (node.alive && node.residual_energy <= 0.0) {
      node.residual_energy = 0.0;
      node.alive = false;
    }
  }
  for (const NodeState& node : nodes) {
    if (node.alive) ++out.alive;
    out.total_residual += node.residual_energy;
  }
  return out;
}

SimResult run(const SimConfig& config) {
  config.validate();
  UniformRng rng(config.seed);
  std::vector<NodeState> nodes = deploy(config, rng);

  // Planning horizon fixed once at start, from the expected per-round
  // dissipation at the optimal cluster count.
  const double e_total = total_energy(config.n_nodes, config.het);
  const int k = optimal_cluster_count(config.radio, config.n_nodes,
                                      config.field_side,
                                      avg_dist_to_bs(config.field_side));
  const double e_round =
      round_energy(config.radio, config.n_nodes, k, config.field_side);
  const std::int64_t horizon = lifetime_estimate(e_total, e_round);

  SimResult result;
  result.rounds.reserve(static_cast<std::size_t>(
      std::min<std::int64_t>(config.max_rounds, 4 * horizon)));
  for (std::int64_t r = 0; r < config.max_rounds; ++r) {
    double avg = average_energy_estimate(r, horizon, e_total, config.n_nodes);
    if (avg <= 0.0) {
      // outlived the estimate: normalise by the measured average instead
      double sum = 0.0;
      int alive = 0;
      for (const NodeState& node : nodes) {
        if (node.alive) {
          sum += node.residual_energy;
          ++alive;
        }
      }
      if (alive == 0) break;  // defensive; the loop exits on alive == 0 below
      avg = sum / static_cast<double>(alive);
      if (avg <= 0.0) break;
    }
    const std::vector<int> heads = elect_chs(nodes, r, avg, config, rng);
    const ClusterAssignment assignment = form_clusters(nodes, heads, config);
    result.rounds.push_back(apply_round_energy(nodes, assignment, config, r));
    if (result.rounds.back().alive == 0) break;
  }
  result.summary = summarize(result.rounds, config.n_nodes);
  return result;
}

}  // namespace wsnsim
