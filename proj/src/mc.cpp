#include "tlsglass/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlsglass/constants.hpp"

namespace tlsglass {

namespace {

// Spin configuration plus cached molecular fields local[j] = sum_k J_jk s_k,
// so a flip proposal costs O(1) and an accepted flip O(N).
class SpinDynamics {
 public:
  SpinDynamics(const PrecomputedSample& pre, std::vector<double> spins)
      : pre_(pre), spins_(std::move(spins)), local_(static_cast<size_t>(pre.n), 0.0) {
    rebuild();
  }

  // Refresh the cache from scratch; called at temperature changes to stop
  // rounding drift from accumulating across millions of flips.
  void rebuild() {
    for (int j = 0; j < pre_.n; ++j) {
      const double* row = pre_.row(j);
      double acc = 0.0;
      for (int k = 0; k < pre_.n; ++k) acc += row[k] * spins_[static_cast<size_t>(k)];
      local_[static_cast<size_t>(j)] = acc;
    }
  }

  double delta(int j) const {
    const double sj = spins_[static_cast<size_t>(j)];
    return 2.0 * sj * pre_.local_fields[j] + 4.0 * sj * local_[static_cast<size_t>(j)];
  }

  void flip(int j) {
    auto& sj = spins_[static_cast<size_t>(j)];
    sj = -sj;
    const double two_s = 2.0 * sj;
    const double* row = pre_.row(j);
    for (int k = 0; k < pre_.n; ++k) local_[static_cast<size_t>(k)] += two_s * row[k];
  }

  int sweep(double beta, Rng& rng, std::vector<int>& perm) {
    rng.permutation(perm, pre_.n);
    int accepted = 0;
    for (int j : perm) {
      const double d = delta(j);
      if (d <= 0.0 || rng.uniform01() < std::exp(-d * beta)) {
        flip(j);
        ++accepted;
      }
    }
    return accepted;
  }

  const std::vector<double>& spins() const { return spins_; }
  void set_spins(std::vector<double> spins) {
    spins_ = std::move(spins);
    rebuild();
  }

 private:
  const PrecomputedSample& pre_;
  std::vector<double> spins_;
  std::vector<double> local_;
};

std::vector<double> random_spins(int n, Rng& rng) {
  std::vector<double> spins(static_cast<size_t>(n));
  for (auto& s : spins) s = rng.below(2) ? 1.0 : -1.0;
  return spins;
}

// Flip any spin whose exact energy change is negative, until 1-flip stable.
// Uses the pure flip_delta so rounding drift in the cache cannot cycle.
void greedy_descent(const PrecomputedSample& pre, SpinState& state) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (int j = 0; j < pre.n; ++j) {
      if (flip_delta(pre, state, j) < 0.0) {
        state.spins[static_cast<size_t>(j)] = -state.spins[static_cast<size_t>(j)];
        improved = true;
      }
    }
  }
}

}  // namespace

std::vector<double> McSchedule::default_anneal_temps() {
  constexpr int stages = 60;
  constexpr double t_hi = 10.0;
  constexpr double t_lo = 0.01;
  std::vector<double> temps(stages);
  const double ratio = std::pow(t_lo / t_hi, 1.0 / (stages - 1));
  double t = t_hi;
  for (int i = 0; i < stages; ++i, t *= ratio) temps[static_cast<size_t>(i)] = t;
  temps.back() = t_lo;
  return temps;
}

void McSchedule::validate() const {
  if (equilibration_sweeps < 1 || measurement_sweeps < 1 || anneal_sweeps < 1 ||
      anneal_restarts < 1)
    throw std::invalid_argument("schedule counts must be >= 1");
  if (anneal_temps.empty()) throw std::invalid_argument("anneal_temps is empty");
  for (size_t i = 0; i < anneal_temps.size(); ++i) {
    if (!(anneal_temps[i] > 0.0)) throw std::invalid_argument("anneal temperatures must be > 0");
    if (i > 0 && !(anneal_temps[i] < anneal_temps[i - 1]))
      throw std::invalid_argument("anneal_temps must be strictly descending");
  }
}

double acceptance_probability(double delta_e, double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("acceptance_probability: T must be > 0");
  if (delta_e <= 0.0) return 1.0;
  return std::exp(-delta_e / (constants::k_boltzmann * temperature));
}

int metropolis_sweep(const PrecomputedSample& pre, SpinState& state, double temperature,
                     Rng& rng) {
  if (!(temperature > 0.0)) throw std::domain_error("metropolis_sweep: T must be > 0");
  if (state.size() != pre.n) throw std::invalid_argument("metropolis_sweep: dimension mismatch");
  SpinDynamics dyn(pre, state.spins);
  std::vector<int> perm;
  const int accepted = dyn.sweep(1.0 / (constants::k_boltzmann * temperature), rng, perm);
  state.spins = dyn.spins();
  return accepted;
}

std::pair<SpinState, double> anneal_ground_state(const PrecomputedSample& pre,
                                                 const McSchedule& schedule) {
  schedule.validate();
  SpinState best;
  double best_energy = 0.0;
  bool first = true;
  std::vector<int> perm;
  for (int r = 0; r < schedule.anneal_restarts; ++r) {
    Rng rng(mix_seed(schedule.rng_seed, 1 + static_cast<uint64_t>(r)));
    SpinDynamics dyn(pre, random_spins(pre.n, rng));
    for (double t : schedule.anneal_temps) {
      const double beta = 1.0 / (constants::k_boltzmann * t);
      for (int s = 0; s < schedule.anneal_sweeps; ++s) dyn.sweep(beta, rng, perm);
    }
    SpinState state{dyn.spins()};
    greedy_descent(pre, state);
    const double energy = total_energy(pre, state);
    if (first || energy < best_energy || (energy == best_energy && state.lex_less(best))) {
      best = std::move(state);
      best_energy = energy;
      first = false;
    }
  }
  return {best, best_energy};
}

FieldCurve mc_curve(const PrecomputedSample& pre, const TemperatureGrid& grid,
                    const McSchedule& schedule, const SpinState* ground) {
  schedule.validate();
  grid.validate();

  SpinState gs;
  if (ground) {
    gs = *ground;
    if (gs.size() != pre.n) throw std::invalid_argument("mc_curve: ground state size mismatch");
  } else {
    gs = anneal_ground_state(pre, schedule).first;
  }

  FieldCurve curve;
  curve.grid = grid;
  curve.method = CurveMethod::MonteCarlo;
  curve.f0_ref = qubit_field(pre, gs.spins);
  const int m_count = grid.size();
  curve.field.resize(static_cast<size_t>(m_count));
  curve.field_err.resize(static_cast<size_t>(m_count));
  curve.spin_avg.resize(static_cast<size_t>(m_count));

  Rng rng(mix_seed(schedule.rng_seed, 0));
  SpinDynamics dyn(pre, gs.spins);
  std::vector<int> perm;

  const int n = pre.n;
  const int batches = std::min(20, schedule.measurement_sweeps);
  std::vector<std::vector<double>> batch_sum(static_cast<size_t>(batches),
                                             std::vector<double>(static_cast<size_t>(n)));
  std::vector<int> batch_count(static_cast<size_t>(batches));
  std::vector<double> s_avg(static_cast<size_t>(n));
  std::vector<double> s_batch(static_cast<size_t>(n));

  for (int m = m_count - 1; m >= 0; --m) {
    const double beta = 1.0 / (constants::k_boltzmann * grid.temps[static_cast<size_t>(m)]);
    if (schedule.independent_chains)
      dyn.set_spins(random_spins(n, rng));
    else
      dyn.rebuild();

    for (int s = 0; s < schedule.equilibration_sweeps; ++s) dyn.sweep(beta, rng, perm);

    const int base = schedule.measurement_sweeps / batches;
    const int extra = schedule.measurement_sweeps % batches;
    for (auto& b : batch_sum) std::fill(b.begin(), b.end(), 0.0);
    for (int b = 0; b < batches; ++b) {
      const int count = base + (b < extra ? 1 : 0);
      batch_count[static_cast<size_t>(b)] = count;
      auto& sums = batch_sum[static_cast<size_t>(b)];
      for (int s = 0; s < count; ++s) {
        dyn.sweep(beta, rng, perm);
        const auto& spins = dyn.spins();
        for (int j = 0; j < n; ++j) sums[static_cast<size_t>(j)] += spins[static_cast<size_t>(j)];
      }
    }

    std::fill(s_avg.begin(), s_avg.end(), 0.0);
    for (const auto& sums : batch_sum)
      for (int j = 0; j < n; ++j) s_avg[static_cast<size_t>(j)] += sums[static_cast<size_t>(j)];
    for (int j = 0; j < n; ++j) s_avg[static_cast<size_t>(j)] /= schedule.measurement_sweeps;
    curve.field[static_cast<size_t>(m)] = qubit_field(pre, s_avg);
    curve.spin_avg[static_cast<size_t>(m)] = s_avg;

    Vec3 err;
    if (batches > 1) {
      std::vector<Vec3> batch_field(static_cast<size_t>(batches));
      Vec3 mean;
      for (int b = 0; b < batches; ++b) {
        for (int j = 0; j < n; ++j)
          s_batch[static_cast<size_t>(j)] =
              batch_sum[static_cast<size_t>(b)][static_cast<size_t>(j)] /
              batch_count[static_cast<size_t>(b)];
        batch_field[static_cast<size_t>(b)] = qubit_field(pre, s_batch);
        mean += batch_field[static_cast<size_t>(b)];
      }
      mean *= 1.0 / batches;
      Vec3 var;
      for (const Vec3& f : batch_field) {
        const Vec3 d = f - mean;
        var += Vec3{d.x * d.x, d.y * d.y, d.z * d.z};
      }
      const double scale = 1.0 / (static_cast<double>(batches) * (batches - 1));
      err = {std::sqrt(var.x * scale), std::sqrt(var.y * scale), std::sqrt(var.z * scale)};
    }
    curve.field_err[static_cast<size_t>(m)] = err;
  }
  return curve;
}

}  // namespace tlsglass
