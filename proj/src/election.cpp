#include "wsnsim/election.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wsnsim {

namespace {

void require_fraction(double v, const char* field) {
  if (!(std::isfinite(v) && v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string("het.") + field +
                                ": fraction out of [0,1]");
  }
}

void require_multiplier(double v, const char* field) {
  if (!(std::isfinite(v) && v >= 0.0)) {
    throw std::invalid_argument(std::string("het.") + field +
                                ": must be >= 0 and finite");
  }
}

// Nearest integer with exact halves toward zero; the nested-count splits
// below need round(1.5) = 1 so that differencing never goes negative.
long long round_half_down(double x) {
  return static_cast<long long>(std::ceil(x - 0.5));
}

double class_multiplier(NodeClass c, const HeterogeneityParams& h) {
  switch (c) {
    case NodeClass::Normal: return 0.0;
    case NodeClass::Advanced: return h.a;
    case NodeClass::Super: return h.b;
    case NodeClass::UltraSuper: return h.u;
  }
  throw std::domain_error("class_multiplier: unknown class");
}

// DEEC and EDEEC are lower-resolution views of the same probability rule:
// they zero the fractions they cannot see and fold upper classes into the
// highest one they keep. Folding happens here so the arithmetic below is
// shared verbatim by all three strategies.
void specialize(Strategy s, NodeClass& c, HeterogeneityParams& h) {
  switch (s) {
    case Strategy::DEEC:
      h.m0 = 0.0;
      h.m1 = 0.0;
      if (c == NodeClass::Super || c == NodeClass::UltraSuper) {
        c = NodeClass::Advanced;
      }
      break;
    case Strategy::EDEEC:
      h.m1 = 0.0;
      if (c == NodeClass::UltraSuper) c = NodeClass::Super;
      break;
    case Strategy::BEENISH:
    case Strategy::LEACH:
      break;
  }
}

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::LEACH: return "LEACH";
    case Strategy::DEEC: return "DEEC";
    case Strategy::EDEEC: return "EDEEC";
    case Strategy::BEENISH: return "BEENISH";
  }
  return "?";
}

std::string to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Normal: return "Normal";
    case NodeClass::Advanced: return "Advanced";
    case NodeClass::Super: return "Super";
    case NodeClass::UltraSuper: return "UltraSuper";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& name) {
  if (name == "LEACH") return Strategy::LEACH;
  if (name == "DEEC") return Strategy::DEEC;
  if (name == "EDEEC") return Strategy::EDEEC;
  if (name == "BEENISH") return Strategy::BEENISH;
  throw std::invalid_argument("strategy: unknown name '" + name +
                              "' (valid: LEACH, DEEC, EDEEC, BEENISH)");
}

void HeterogeneityParams::validate() const {
  require_fraction(m, "m");
  require_fraction(m0, "m0");
  require_fraction(m1, "m1");
  require_multiplier(a, "a");
  require_multiplier(b, "b");
  require_multiplier(u, "u");
  if (!(std::isfinite(e0) && e0 > 0.0)) {
    throw std::invalid_argument("het.e0: must be strictly positive and finite");
  }
  if (!(std::isfinite(p_opt) && p_opt > 0.0 && p_opt <= 1.0)) {
    throw std::invalid_argument("het.p_opt: must be in (0,1]");
  }
  if (!(energy_denominator(*this) > 0.0)) {
    throw std::invalid_argument(
        "het: probability denominator 1 + m*(a + m0*(-a + b + m1*(-b + u)))"
        " must be positive");
  }
}

double energy_denominator(const HeterogeneityParams& h) {
  return 1.0 + h.m * (h.a + h.m0 * (-h.a + h.b + h.m1 * (-h.b + h.u)));
}

ClassCounts class_counts(int n_nodes, const HeterogeneityParams& h) {
  if (n_nodes < 1) throw std::domain_error("class_counts: n_nodes must be >= 1");
  const double n = static_cast<double>(n_nodes);
  const long long advanced_up = round_half_down(n * h.m);
  const long long super_up = round_half_down(n * h.m * h.m0);
  const long long ultra = round_half_down(n * h.m * h.m0 * h.m1);
  ClassCounts c;
  c.ultra = static_cast<int>(ultra);
  c.super = static_cast<int>(super_up - ultra);
  c.advanced = static_cast<int>(advanced_up - super_up);
  c.normal = static_cast<int>(n_nodes - advanced_up);
  if (c.normal < 0 || c.advanced < 0 || c.super < 0 || c.ultra < 0) {
    throw std::invalid_argument(
        "het.m/m0/m1: class split produced a negative count");
  }
  return c;
}

NodeClass node_class(int node_id, int n_nodes, const HeterogeneityParams& h) {
  if (node_id < 0 || node_id >= n_nodes) {
    throw std::domain_error("node_class: node_id out of range");
  }
  const ClassCounts c = class_counts(n_nodes, h);
  if (node_id < c.normal) return NodeClass::Normal;
  if (node_id < c.normal + c.advanced) return NodeClass::Advanced;
  if (node_id < c.normal + c.advanced + c.super) return NodeClass::Super;
  return NodeClass::UltraSuper;
}

double initial_energy(NodeClass c, const HeterogeneityParams& h) {
  return h.e0 * (1.0 + class_multiplier(c, h));
}

double total_energy(int n_nodes, const HeterogeneityParams& h) {
  if (n_nodes < 1) throw std::domain_error("total_energy: n_nodes must be >= 1");
  return static_cast<double>(n_nodes) * h.e0 * energy_denominator(h);
}

double average_energy_estimate(std::int64_t round, std::int64_t total_rounds,
                               double e_total, int n_nodes) {
  if (round < 0) {
    throw std::domain_error("average_energy_estimate: round must be >= 0");
  }
  if (total_rounds < 1) {
    throw std::domain_error("average_energy_estimate: total_rounds must be >= 1");
  }
  if (n_nodes < 1) {
    throw std::domain_error("average_energy_estimate: n_nodes must be >= 1");
  }
  if (!(e_total >= 0.0)) {
    throw std::domain_error("average_energy_estimate: e_total must be >= 0");
  }
  const double est = e_total / static_cast<double>(n_nodes) *
                     (1.0 - static_cast<double>(round) /
                                static_cast<double>(total_rounds));
  return est > 0.0 ? est : 0.0;
}

std::int64_t lifetime_estimate(double e_total, double e_round) {
  if (!(e_round > 0.0)) {
    throw std::domain_error("lifetime_estimate: e_round must be > 0");
  }
  if (!(e_total >= 0.0)) {
    throw std::domain_error("lifetime_estimate: e_total must be >= 0");
  }
  const double r = std::floor(e_total / e_round);
  if (r < 1.0) return 1;
  constexpr double kMax =
      static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4);
  if (r >= kMax) return std::numeric_limits<std::int64_t>::max() / 4;
  return static_cast<std::int64_t>(r);
}

double election_probability(Strategy s, NodeClass c, double residual,
                            double avg_energy, const HeterogeneityParams& h) {
  if (!(avg_energy > 0.0)) {
    throw std::domain_error("election_probability: avg_energy must be > 0");
  }
  if (!(residual >= 0.0)) {
    throw std::domain_error("election_probability: residual must be >= 0");
  }
  if (s == Strategy::LEACH) return h.p_opt;
  NodeClass cls = c;
  HeterogeneityParams eh = h;
  specialize(s, cls, eh);
  // residual/avg first: nodes at exactly the average cancel to 1.0, which
  // keeps the m=0 case equal to plain p_opt bit-for-bit.
  const double p = eh.p_opt * (1.0 + class_multiplier(cls, eh)) *
                   (residual / avg_energy) / energy_denominator(eh);
  return p > 1.0 ? 1.0 : p;
}

double ch_threshold(double p, std::int64_t round, bool eligible) {
  if (!eligible) return 0.0;
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("ch_threshold: p must be in (0,1] when eligible");
  }
  if (round < 0) throw std::domain_error("ch_threshold: round must be >= 0");
  const std::int64_t n = epoch_length(p);
  const double denom = 1.0 - p * static_cast<double>(round % n);
  if (denom <= 0.0) return 1.0;  // epoch end: election is certain
  const double t = p / denom;
  return t > 1.0 ? 1.0 : t;
}

std::int64_t epoch_length(double p) {
  if (!(p > 0.0)) throw std::domain_error("epoch_length: p must be > 0");
  const double inv = 1.0 / p;
  constexpr double kMax =
      static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4);
  if (inv >= kMax) return std::numeric_limits<std::int64_t>::max() / 4;
  const long long n = std::llround(inv);
  return n < 1 ? 1 : n;
}

}  // namespace wsnsim
