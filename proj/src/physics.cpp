#include "tlsglass/physics.hpp"

#include <cmath>
#include <stdexcept>

#include "tlsglass/constants.hpp"
#include "tlsglass/exact.hpp"

namespace tlsglass {

namespace {
constexpr double kFourPi = 12.566370614359172953850573533118;
}

void SpinState::validate() const {
  for (double s : spins)
    if (s != 1.0 && s != -1.0) throw std::invalid_argument("spin entries must be exactly +-1");
}

bool SpinState::lex_less(const SpinState& other) const {
  const size_t n = std::min(spins.size(), other.spins.size());
  for (size_t j = 0; j < n; ++j) {
    if (spins[j] != other.spins[j]) return spins[j] < other.spins[j];
  }
  return spins.size() < other.spins.size();
}

Vec3 dipole_field(const Vec3& p, const Vec3& r, double epsilon_r) {
  const double r2 = norm2(r);
  if (r2 <= 0.0) throw std::domain_error("dipole_field: zero separation");
  const double r1 = std::sqrt(r2);
  const double r5 = r2 * r2 * r1;
  const double pref = 1.0 / (kFourPi * constants::epsilon0 * epsilon_r * r5);
  return pref * (3.0 * dot(p, r) * r - r2 * p);
}

PrecomputedSample precompute(const SampleConfig& sample) {
  sample.validate();
  const int n = static_cast<int>(sample.defects.size());
  const double p0 = sample.params.p0;
  const double lambda = sample.params.interaction_scale;

  PrecomputedSample pre;
  pre.n = n;
  pre.lambda = lambda;
  pre.field_kernels.resize(n);
  pre.local_fields.resize(n);
  pre.coupling.assign(static_cast<size_t>(n) * n, 0.0);

  for (int j = 0; j < n; ++j) {
    const DefectSite& d = sample.defects[static_cast<size_t>(j)];
    pre.field_kernels[j] = dipole_field(p0 * d.orientation, d.position, sample.params.epsilon_r);
    pre.local_fields[j] = p0 * dot(d.orientation, d.random_field);
  }

  // J_jk = lambda p0^2 V_jk / (8 pi eps0 eps_r) with
  // V_jk = [3 (p_j.u)(p_k.u) - (p_j.p_k)|u|^2] / |u|^5, u = r_j - r_k.
  const double pair_pref =
      lambda * p0 * p0 / (2.0 * kFourPi * constants::epsilon0 * sample.params.epsilon_r);
  for (int j = 0; j < n; ++j) {
    const DefectSite& dj = sample.defects[static_cast<size_t>(j)];
    for (int k = j + 1; k < n; ++k) {
      const DefectSite& dk = sample.defects[static_cast<size_t>(k)];
      const Vec3 u = dj.position - dk.position;
      const double u2 = norm2(u);
      if (u2 < min_defect_separation * min_defect_separation)
        throw std::domain_error("precompute: defects closer than the minimum separation");
      const double u5 = u2 * u2 * std::sqrt(u2);
      const double v = (3.0 * dot(dj.orientation, u) * dot(dk.orientation, u) -
                        dot(dj.orientation, dk.orientation) * u2) /
                       u5;
      const double coupling = pair_pref * v;
      pre.coupling[static_cast<size_t>(j) * n + k] = coupling;
      pre.coupling[static_cast<size_t>(k) * n + j] = coupling;
    }
  }
  return pre;
}

double random_field_energy(const PrecomputedSample& pre, const SpinState& state) {
  double e = 0.0;
  for (int j = 0; j < pre.n; ++j) e -= state.spins[static_cast<size_t>(j)] * pre.local_fields[j];
  return e;
}

double interaction_energy(const PrecomputedSample& pre, const SpinState& state) {
  double e = 0.0;
  for (int j = 0; j < pre.n; ++j) {
    const double* row = pre.row(j);
    double acc = 0.0;
    for (int k = j + 1; k < pre.n; ++k) acc += row[k] * state.spins[static_cast<size_t>(k)];
    e -= 2.0 * state.spins[static_cast<size_t>(j)] * acc;
  }
  return e;
}

double total_energy(const PrecomputedSample& pre, const SpinState& state) {
  if (state.size() != pre.n) throw std::invalid_argument("total_energy: dimension mismatch");
  return random_field_energy(pre, state) + interaction_energy(pre, state);
}

double flip_delta(const PrecomputedSample& pre, const SpinState& state, int j) {
  if (j < 0 || j >= pre.n) throw std::out_of_range("flip_delta: index out of range");
  const double sj = state.spins[static_cast<size_t>(j)];
  const double* row = pre.row(j);
  double acc = 0.0;
  for (int k = 0; k < pre.n; ++k) acc += row[k] * state.spins[static_cast<size_t>(k)];
  return 2.0 * sj * pre.local_fields[j] + 4.0 * sj * acc;
}

Vec3 qubit_field(const PrecomputedSample& pre, std::span<const double> s_avg) {
  if (static_cast<int>(s_avg.size()) != pre.n)
    throw std::invalid_argument("qubit_field: dimension mismatch");
  Vec3 f;
  for (int j = 0; j < pre.n; ++j) {
    const double s = s_avg[static_cast<size_t>(j)];
    if (std::abs(s) > 1.0 + 1e-9)
      throw std::invalid_argument("qubit_field: |s_avg| exceeds 1");
    f += s * pre.field_kernels[j];
  }
  return f;
}

EnergyScales energy_scales(const PrecomputedSample& pre, const SpinState& ground) {
  const double nkb = pre.n * constants::k_boltzmann;
  return {std::abs(random_field_energy(pre, ground)) / nkb,
          std::abs(interaction_energy(pre, ground)) / nkb};
}

EnergyScales energy_scales_thermal(const PrecomputedSample& pre, double temperature) {
  const auto averages = enumerate_energy_averages(pre, temperature);
  const double nkb = pre.n * constants::k_boltzmann;
  return {std::abs(averages.first) / nkb, std::abs(averages.second) / nkb};
}

}  // namespace tlsglass
