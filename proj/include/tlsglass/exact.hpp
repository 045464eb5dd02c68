#pragma once

#include <utility>

#include "tlsglass/curve.hpp"
#include "tlsglass/physics.hpp"

namespace tlsglass {

// Largest system size the 2^N sums are allowed to chew on.
inline constexpr int max_enumeration_size = 20;

// Boltzmann average of one decoupled spin with local field h (J):
// tanh(h / kB T); sgn(h) in the T = 0 limit (0 if h = 0). Throws
// std::domain_error for T < 0.
double exact_spin_average(double h, double temperature);

// Closed-form curve for the non-interacting model. Requires the sample to
// have been precomputed with interaction_scale = 0; throws std::logic_error
// otherwise. f0_ref = sum_j sgn(h_j) F_j.
FieldCurve exact_curve(const PrecomputedSample& pre, const TemperatureGrid& grid);

// Exact Boltzmann averages over all 2^N states, interactions included.
// The oracle for the Monte Carlo path; refuses n > max_enumeration_size.
FieldCurve enumerate_thermal(const PrecomputedSample& pre, const TemperatureGrid& grid);

// <s_j s_k> at one temperature, by the same exhaustive sum.
double enumerate_pair_correlation(const PrecomputedSample& pre, double temperature, int j, int k);

// Thermal averages (<H_r>, <H_int>) at one temperature.
std::pair<double, double> enumerate_energy_averages(const PrecomputedSample& pre,
                                                    double temperature);

// The exact minimizer of total_energy over all 2^N states; ties broken by
// the lexicographically smallest state. Refuses n > max_enumeration_size.
std::pair<SpinState, double> ground_state_exhaustive(const PrecomputedSample& pre);

}  // namespace tlsglass
