#include "tlsglass/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "tlsglass/constants.hpp"

namespace tlsglass {

namespace {

void check_size(int n) {
  if (n > max_enumeration_size)
    throw std::invalid_argument("exhaustive enumeration refused: n = " + std::to_string(n) +
                                " exceeds the cap of " + std::to_string(max_enumeration_size));
}

// Walks all 2^n states in Gray-code order with O(n) incremental energy.
// Bit j of mask set means s_j = +1; the walk starts from all -1.
template <typename Visit>
void walk_states(const PrecomputedSample& pre, Visit&& visit) {
  check_size(pre.n);
  SpinState state;
  state.spins.assign(static_cast<size_t>(pre.n), -1.0);
  double energy = total_energy(pre, state);
  uint32_t mask = 0;
  visit(mask, energy, state);
  const uint64_t count = uint64_t{1} << pre.n;
  for (uint64_t i = 1; i < count; ++i) {
    const int b = std::countr_zero(i);
    energy += flip_delta(pre, state, b);
    state.spins[static_cast<size_t>(b)] = -state.spins[static_cast<size_t>(b)];
    mask ^= uint32_t{1} << b;
    visit(mask, energy, state);
  }
}

struct StateTable {
  std::vector<double> energy;
  std::vector<uint32_t> mask;
  double e_min = 0.0;
};

StateTable tabulate(const PrecomputedSample& pre) {
  StateTable t;
  const uint64_t count = uint64_t{1} << pre.n;
  t.energy.reserve(count);
  t.mask.reserve(count);
  walk_states(pre, [&](uint32_t mask, double energy, const SpinState&) {
    t.energy.push_back(energy);
    t.mask.push_back(mask);
  });
  t.e_min = t.energy[0];
  for (double e : t.energy) t.e_min = std::min(t.e_min, e);
  return t;
}

}  // namespace

double exact_spin_average(double h, double temperature) {
  if (temperature < 0.0) throw std::domain_error("exact_spin_average: negative temperature");
  if (temperature == 0.0) return h > 0.0 ? 1.0 : (h < 0.0 ? -1.0 : 0.0);
  return std::tanh(h / (constants::k_boltzmann * temperature));
}

FieldCurve exact_curve(const PrecomputedSample& pre, const TemperatureGrid& grid) {
  if (pre.lambda != 0.0)
    throw std::logic_error("exact_curve: interacting sample (set interaction_scale = 0)");
  grid.validate();

  FieldCurve curve;
  curve.grid = grid;
  curve.method = CurveMethod::Exact;
  const int m_count = grid.size();
  curve.field.resize(static_cast<size_t>(m_count));
  curve.spin_avg.resize(static_cast<size_t>(m_count));

  std::vector<double> s_avg(static_cast<size_t>(pre.n));
  for (int m = 0; m < m_count; ++m) {
    const double t = grid.temps[static_cast<size_t>(m)];
    for (int j = 0; j < pre.n; ++j)
      s_avg[static_cast<size_t>(j)] = exact_spin_average(pre.local_fields[j], t);
    curve.field[static_cast<size_t>(m)] = qubit_field(pre, s_avg);
    curve.spin_avg[static_cast<size_t>(m)] = s_avg;
  }

  for (int j = 0; j < pre.n; ++j)
    s_avg[static_cast<size_t>(j)] = exact_spin_average(pre.local_fields[j], 0.0);
  curve.f0_ref = qubit_field(pre, s_avg);
  return curve;
}

FieldCurve enumerate_thermal(const PrecomputedSample& pre, const TemperatureGrid& grid) {
  grid.validate();
  const StateTable table = tabulate(pre);
  const size_t n_states = table.energy.size();
  const int n = pre.n;

  FieldCurve curve;
  curve.grid = grid;
  curve.method = CurveMethod::Enumeration;
  const int m_count = grid.size();
  curve.field.resize(static_cast<size_t>(m_count));
  curve.spin_avg.resize(static_cast<size_t>(m_count));

  std::vector<double> ssum(static_cast<size_t>(n));
  for (int m = 0; m < m_count; ++m) {
    const double beta = 1.0 / (constants::k_boltzmann * grid.temps[static_cast<size_t>(m)]);
    double z = 0.0;
    std::fill(ssum.begin(), ssum.end(), 0.0);
    for (size_t i = 0; i < n_states; ++i) {
      const double arg = (table.energy[i] - table.e_min) * beta;
      if (arg > 745.0) continue;  // weight underflows to zero
      const double w = std::exp(-arg);
      z += w;
      const uint32_t mask = table.mask[i];
      for (int j = 0; j < n; ++j)
        ssum[static_cast<size_t>(j)] += (mask >> j) & 1u ? w : -w;
    }
    auto& s_avg = curve.spin_avg[static_cast<size_t>(m)];
    s_avg.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) s_avg[static_cast<size_t>(j)] = ssum[static_cast<size_t>(j)] / z;
    curve.field[static_cast<size_t>(m)] = qubit_field(pre, s_avg);
  }

  const auto [ground, ground_energy] = ground_state_exhaustive(pre);
  (void)ground_energy;
  curve.f0_ref = qubit_field(pre, ground.spins);
  return curve;
}

double enumerate_pair_correlation(const PrecomputedSample& pre, double temperature, int j, int k) {
  if (!(temperature > 0.0))
    throw std::domain_error("enumerate_pair_correlation: temperature must be > 0");
  const StateTable table = tabulate(pre);
  const double beta = 1.0 / (constants::k_boltzmann * temperature);
  double z = 0.0;
  double corr = 0.0;
  for (size_t i = 0; i < table.energy.size(); ++i) {
    const double arg = (table.energy[i] - table.e_min) * beta;
    if (arg > 745.0) continue;
    const double w = std::exp(-arg);
    z += w;
    const double sj = (table.mask[i] >> j) & 1u ? 1.0 : -1.0;
    const double sk = (table.mask[i] >> k) & 1u ? 1.0 : -1.0;
    corr += w * sj * sk;
  }
  return corr / z;
}

std::pair<double, double> enumerate_energy_averages(const PrecomputedSample& pre,
                                                    double temperature) {
  if (!(temperature > 0.0))
    throw std::domain_error("enumerate_energy_averages: temperature must be > 0");
  check_size(pre.n);
  const double beta = 1.0 / (constants::k_boltzmann * temperature);

  // First pass for the minimum, second for the stabilized sums.
  double e_min = 0.0;
  bool first = true;
  walk_states(pre, [&](uint32_t, double energy, const SpinState&) {
    if (first || energy < e_min) e_min = energy;
    first = false;
  });

  double z = 0.0;
  double hr_sum = 0.0;
  double hint_sum = 0.0;
  walk_states(pre, [&](uint32_t, double energy, const SpinState& state) {
    const double arg = (energy - e_min) * beta;
    if (arg > 745.0) return;
    const double w = std::exp(-arg);
    z += w;
    const double hr = random_field_energy(pre, state);
    hr_sum += w * hr;
    hint_sum += w * (energy - hr);
  });
  return {hr_sum / z, hint_sum / z};
}

std::pair<SpinState, double> ground_state_exhaustive(const PrecomputedSample& pre) {
  SpinState best;
  double best_energy = 0.0;
  bool first = true;
  walk_states(pre, [&](uint32_t, double energy, const SpinState& state) {
    if (first || energy < best_energy || (energy == best_energy && state.lex_less(best))) {
      best = state;
      best_energy = energy;
      first = false;
    }
  });
  return {best, best_energy};
}

}  // namespace tlsglass
