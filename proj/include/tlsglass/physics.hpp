#pragma once

#include <span>
#include <vector>

#include "tlsglass/geometry.hpp"
#include "tlsglass/vec3.hpp"

namespace tlsglass {

// Ising configuration of the defects; entries are exactly +1 or -1.
struct SpinState {
  std::vector<double> spins;

  int size() const { return static_cast<int>(spins.size()); }
  void validate() const;

  // Elementwise with -1 < +1; deterministic tie-breaking for degenerate
  // ground states.
  bool lex_less(const SpinState& other) const;
};

// Everything a solver needs, built once per sample so a spin flip costs O(N).
struct PrecomputedSample {
  int n = 0;
  std::vector<Vec3> field_kernels;   // F_j at the qubit per unit s_j, V/m
  std::vector<double> local_fields;  // h_j = p0 (p_hat_j . E_j), J
  std::vector<double> coupling;      // J_jk, row-major n x n, J, zero diagonal
  double lambda = 1.0;               // interaction multiplier baked into coupling

  double j_at(int j, int k) const { return coupling[static_cast<size_t>(j) * n + k]; }
  const double* row(int j) const { return coupling.data() + static_cast<size_t>(j) * n; }
};

// Field of a point dipole p (C m) at displacement r (m) from it:
// [3(p.r)r - p|r|^2] / (4 pi eps0 eps_r |r|^5). Throws std::domain_error
// for r = 0.
Vec3 dipole_field(const Vec3& p, const Vec3& r, double epsilon_r);

// Kernels, local fields and the coupling matrix for one sample. The coupling
// carries the 1/(8 pi eps0 eps_r) prefactor and the interaction_scale
// multiplier. Throws std::domain_error when two defects sit closer than the
// minimum separation.
PrecomputedSample precompute(const SampleConfig& sample);

// -sum_j s_j h_j  (random-field term)
double random_field_energy(const PrecomputedSample& pre, const SpinState& state);

// -sum_{j<k} 2 J_jk s_j s_k  (the j != k double sum collapsed)
double interaction_energy(const PrecomputedSample& pre, const SpinState& state);

double total_energy(const PrecomputedSample& pre, const SpinState& state);

// Energy change from flipping spin j, in O(N):
// 2 s_j h_j + 4 s_j sum_{k != j} J_jk s_k.
double flip_delta(const PrecomputedSample& pre, const SpinState& state, int j);

// sum_j s_avg[j] F_j; accepts thermal averages, |s_avg[j]| <= 1 + 1e-9.
Vec3 qubit_field(const PrecomputedSample& pre, std::span<const double> s_avg);

// Per-defect energy scales in kelvin, evaluated at a given configuration
// (normally the best-known ground state).
struct EnergyScales {
  double t_r = 0.0;
  double t_int = 0.0;
};

EnergyScales energy_scales(const PrecomputedSample& pre, const SpinState& ground);

// Thermal-average variant of the same scales, by exhaustive Boltzmann sums;
// only for n <= 20.
EnergyScales energy_scales_thermal(const PrecomputedSample& pre, double temperature);

}  // namespace tlsglass
