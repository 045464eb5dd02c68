#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tlsglass/curve.hpp"
#include "tlsglass/physics.hpp"
#include "tlsglass/rng.hpp"

namespace tlsglass {

struct McSchedule {
  int equilibration_sweeps = 2000;
  int measurement_sweeps = 10000;
  std::vector<double> anneal_temps = default_anneal_temps();
  int anneal_sweeps = 50;  // sweeps per annealing stage
  int anneal_restarts = 8;
  uint64_t rng_seed = 0;
  // When set, each grid temperature gets a fresh randomized chain instead of
  // carrying the state down from the previous temperature.
  bool independent_chains = false;

  // Geometric ladder, 10 K down to 0.01 K in 60 stages.
  static std::vector<double> default_anneal_temps();
  void validate() const;
};

// Metropolis acceptance probability min(1, exp(-dE / kB T)).
double acceptance_probability(double delta_e, double temperature);

// One sweep: N single-flip proposals in randomized order. Returns the number
// of accepted flips. Throws std::domain_error for T <= 0.
int metropolis_sweep(const PrecomputedSample& pre, SpinState& state, double temperature, Rng& rng);

// Best configuration over anneal_restarts independent runs; each run cools
// through anneal_temps and finishes with greedy single flips until no flip
// lowers the energy.
std::pair<SpinState, double> anneal_ground_state(const PrecomputedSample& pre,
                                                 const McSchedule& schedule);

// Thermal curve for the interacting model: the grid is swept descending with
// state carry-over; per-defect averages over measurement_sweeps map linearly
// to the field. Standard errors by batch means (20 batches). f0_ref comes
// from the annealed ground state (pass one in to skip the search).
FieldCurve mc_curve(const PrecomputedSample& pre, const TemperatureGrid& grid,
                    const McSchedule& schedule, const SpinState* ground = nullptr);

}  // namespace tlsglass
