#pragma once

#include <cstdint>

namespace wsnsim {

// First-order radio dissipation constants. Energies in joules, distances in
// metres, message sizes in bits. The defaults are the standard constants used
// across the DEEC protocol family; every field is configuration-overridable.
struct RadioParams {
  double e_elec = 50e-9;    // per-bit electronics cost, transmit and receive alike
  double eps_fs = 10e-12;   // free-space amplifier coefficient, J/bit/m^2
  double eps_mp = 1.3e-15;  // multipath amplifier coefficient, J/bit/m^4
  double e_da = 5e-9;       // aggregation cost, J/bit/signal
  std::int64_t packet_bits = 4000;

  // Throws std::invalid_argument naming the offending field. All fields must
  // be strictly positive and finite.
  void validate() const;
};

// Crossover distance where the free-space and multipath amplifier costs
// coincide: sqrt(eps_fs / eps_mp).
double threshold_distance(const RadioParams& params);

// Cost of sending `bits` over `distance`. Below the crossover the amplifier
// term grows as d^2, at or above it as d^4.
double tx_energy(const RadioParams& params, std::int64_t bits, double distance);

// Cost of receiving `bits`: electronics only, equal to tx_energy at distance 0.
double rx_energy(const RadioParams& params, std::int64_t bits);

// Cost of fusing `signals` frames of `bits` each into one outbound frame.
double aggregation_energy(const RadioParams& params, std::int64_t bits,
                          std::int64_t signals);

// Mean member-to-head distance for k clusters uniformly covering a square
// field of the given side: M / sqrt(2*pi*k).
double avg_dist_to_ch(double field_side, int k);

// Mean node-to-sink distance for a sink at the centre of a square field:
// 0.765 * M / 2.
double avg_dist_to_bs(double field_side);

// Expected network-wide dissipation of one full duty cycle with k clusters,
// using the mean distances above.
double round_energy(const RadioParams& params, int n_nodes, int k,
                    double field_side);

// Cluster count minimising round_energy for the given geometry, rounded to
// the nearest integer with a floor of 1.
int optimal_cluster_count(const RadioParams& params, int n_nodes,
                          double field_side, double d_to_bs);

}  // namespace wsnsim
