#include "wsnsim/radio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wsnsim {

namespace {

void require_positive_finite(double v, const char* field) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw std::invalid_argument(std::string("radio.") + field +
                                ": must be strictly positive and finite");
  }
}

}  // namespace

void RadioParams::validate() const {
  require_positive_finite(e_elec, "e_elec");
  require_positive_finite(eps_fs, "eps_fs");
  require_positive_finite(eps_mp, "eps_mp");
  require_positive_finite(e_da, "e_da");
  if (packet_bits <= 0) {
    throw std::invalid_argument("radio.packet_bits: must be a positive integer");
  }
}

double threshold_distance(const RadioParams& params) {
  return std::sqrt(params.eps_fs / params.eps_mp);
}

double tx_energy(const RadioParams& params, std::int64_t bits, double distance) {
  if (bits < 0) throw std::domain_error("tx_energy: bits must be >= 0");
  if (!(distance >= 0.0)) throw std::domain_error("tx_energy: distance must be >= 0");
  const double l = static_cast<double>(bits);
  if (distance < threshold_distance(params)) {
    return l * params.e_elec + l * params.eps_fs * distance * distance;
  }
  const double d2 = distance * distance;
  return l * params.e_elec + l * params.eps_mp * d2 * d2;
}

double rx_energy(const RadioParams& params, std::int64_t bits) {
  if (bits < 0) throw std::domain_error("rx_energy: bits must be >= 0");
  return static_cast<double>(bits) * params.e_elec;
}

double aggregation_energy(const RadioParams& params, std::int64_t bits,
                          std::int64_t signals) {
  if (bits < 0) throw std::domain_error("aggregation_energy: bits must be >= 0");
  if (signals < 0) throw std::domain_error("aggregation_energy: signals must be >= 0");
  return params.e_da * static_cast<double>(bits) * static_cast<double>(signals);
}

double avg_dist_to_ch(double field_side, int k) {
  if (k < 1) throw std::domain_error("avg_dist_to_ch: k must be >= 1");
  if (!(field_side > 0.0)) {
    throw std::domain_error("avg_dist_to_ch: field_side must be > 0");
  }
  return field_side / std::sqrt(2.0 * std::numbers::pi * k);
}

double avg_dist_to_bs(double field_side) {
  if (!(field_side >= 0.0)) {
    throw std::domain_error("avg_dist_to_bs: field_side must be >= 0");
  }
  return 0.765 * field_side / 2.0;
}

double round_energy(const RadioParams& params, int n_nodes, int k,
                    double field_side) {
  if (n_nodes < 1) throw std::domain_error("round_energy: n_nodes must be >= 1");
  if (k < 1) throw std::domain_error("round_energy: k must be >= 1");
  const double l = static_cast<double>(params.packet_bits);
  const double n = static_cast<double>(n_nodes);
  const double d_bs = avg_dist_to_bs(field_side);
  const double d_ch = avg_dist_to_ch(field_side, k);
  const double d_bs2 = d_bs * d_bs;
  return l * (2.0 * n * params.e_elec + n * params.e_da +
              k * params.eps_mp * d_bs2 * d_bs2 +
              n * params.eps_fs * d_ch * d_ch);
}

int optimal_cluster_count(const RadioParams& params, int n_nodes,
                          double field_side, double d_to_bs) {
  if (n_nodes < 1) {
    throw std::domain_error("optimal_cluster_count: n_nodes must be >= 1");
  }
  if (!(field_side > 0.0)) {
    throw std::domain_error("optimal_cluster_count: field_side must be > 0");
  }
  if (!(d_to_bs > 0.0)) {
    throw std::domain_error("optimal_cluster_count: d_to_bs must be > 0");
  }
  const double k = std::sqrt(static_cast<double>(n_nodes)) /
                   std::sqrt(2.0 * std::numbers::pi) *
                   std::sqrt(params.eps_fs / params.eps_mp) * field_side /
                   (d_to_bs * d_to_bs);
  const long long rounded = std::llround(k);
  return rounded < 1 ? 1 : static_cast<int>(rounded);
}

}  // namespace wsnsim
