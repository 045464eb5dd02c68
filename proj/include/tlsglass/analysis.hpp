#pragma once

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "tlsglass/curve.hpp"
#include "tlsglass/physics.hpp"

namespace tlsglass {

// Centered moving average; near the ends the window shrinks symmetrically to
// the largest centered window that fits. Throws for even windows.
std::vector<double> smooth_series(std::span<const double> series, int window);

// Same smoothing applied per component; result carries field_smoothed.
FieldCurve smooth_curve(const FieldCurve& curve, int window = 11);

struct ClassifierParams {
  double ratio_threshold = 0.1;
  double slope_threshold = 5.0;      // in the caller's series units per step
  double slope_filter_factor = 0.5;  // keep |diff| > factor * avg slope
  // Measure |F_pos|, |F_neg| as retained-set cardinalities instead of summed
  // magnitudes (sensitivity mode).
  bool count_mode = false;

  void validate() const;
};

struct ClassifierVerdict {
  bool non_monotonic = false;
  double avg_slope = 0.0;  // mean |F_{m+1} - F_m|
  double sum_pos = 0.0;    // retained positive slopes, summed (or counted)
  double sum_neg = 0.0;    // |retained negative slopes|, summed (or counted)
  double ratio = 0.0;      // min(sum_pos, sum_neg) / (sum_pos + sum_neg)
};

// Slope-partition test: differences -> mean |slope| s -> keep |diff| > s/2 ->
// split by sign -> non-monotonic iff ratio > ratio_threshold and
// s > slope_threshold. Needs at least two points.
ClassifierVerdict classify(std::span<const double> series, const ClassifierParams& params);

nlohmann::json verdict_to_json(const ClassifierVerdict& verdict, const ClassifierParams& params);

// Field-to-frequency conversion constants for a gradient-micromagnet dot.
struct ConversionParams {
  double g_factor = 2.0;
  double bohr_magneton = 9.2740100783e-24;  // J/T
  double planck_h = 6.62607015e-34;         // J s
  double charge_q = 1.602176634e-19;        // C
  double m_t = 1.73e-31;                    // kg
  double omega_orb = 3.0385980091231103e12; // rad/s (2 meV / hbar)
  double grad_by_dx = -0.05e6;              // T/m (-0.05 mT/nm)
  double grad_by_dy = 0.18e6;               // T/m (0.18 mT/nm)
  double grad_avg = 0.1e6;                  // T/m, scalar |grad B| for estimates

  void validate() const;
};

// c_q = (g muB / h)(q / m_t omega^2)(dBy/dx, dBy/dy, 0), in Hz per (V/m).
Vec3 conversion_vector(const ConversionParams& conv);

// delta f_m = c_q . (field[m] - f0_ref), Hz.
std::vector<double> frequency_shift(const FieldCurve& curve, const ConversionParams& conv);

struct MagnitudeEstimate {
  double field = 0.0;         // V/m
  double displacement = 0.0;  // m
  double frequency = 0.0;     // Hz
};

// Order-of-magnitude anchors for N defects at distance d: the random-walk
// field sqrt(2N/3) p0 / (4 pi eps0 eps_r d^3), the qubit displacement it
// causes, and the frequency shift through the scalar average gradient.
MagnitudeEstimate magnitude_estimate(const PhysicalParams& params, const ConversionParams& conv,
                                     double d);

struct AlignmentGroups {
  std::vector<int> s_plus;   // aligned with the T = 0 resultant field
  std::vector<int> s_minus;  // anti-aligned (zero dot products land here)
  std::optional<double> t_plus;   // mean turn-off temperature of s_plus, K
  std::optional<double> t_minus;  // mean turn-off temperature of s_minus, K
};

AlignmentGroups alignment_decomposition(const PrecomputedSample& pre, const SpinState& ground);

// sum_j s_avg[j] p0 p_hat_j, C m.
Vec3 net_moment(const SampleConfig& sample, std::span<const double> s_avg);

}  // namespace tlsglass
