#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tlsglass/vec3.hpp"

namespace tlsglass {

struct TemperatureGrid {
  std::vector<double> temps;  // K, strictly ascending, all > 0

  int size() const { return static_cast<int>(temps.size()); }
  void validate() const;

  // count points linearly spaced over [t_min, t_max] inclusive.
  static TemperatureGrid linear(double t_min, double t_max, int count);

  // The working grid: 100 points from 0.01 K to 1.0 K. The T = 0 reference
  // is never a grid point; it lives in FieldCurve::f0_ref.
  static TemperatureGrid standard() { return linear(0.01, 1.0, 100); }
};

enum class CurveMethod { Exact, MonteCarlo, Enumeration };

// Equilibrium field at the qubit across a temperature grid.
struct FieldCurve {
  TemperatureGrid grid;
  std::vector<Vec3> field;           // one row per grid temperature, V/m
  std::vector<Vec3> field_smoothed;  // optional, same length when present
  std::vector<Vec3> field_err;       // optional, MC standard errors
  CurveMethod method = CurveMethod::Exact;
  Vec3 f0_ref;  // field at T = 0 (ground-state configuration)

  // Per-defect thermal averages, one row per temperature; kept for
  // diagnostics and oracle comparisons, not serialized.
  std::vector<std::vector<double>> spin_avg;

  int size() const { return static_cast<int>(field.size()); }
  const std::vector<Vec3>& preferred_series() const {
    return field_smoothed.empty() ? field : field_smoothed;
  }
};

const char* curve_method_name(CurveMethod m);

// CSV with header T_K,Fx,Fy,Fz[,Fx_s,Fy_s,Fz_s][,Fx_err,Fy_err,Fz_err],
// one row per temperature, full double precision.
void write_curve_csv(std::ostream& out, const FieldCurve& curve);
void write_curve_file(const std::string& path, const FieldCurve& curve);
FieldCurve read_curve_csv(std::istream& in);
FieldCurve read_curve_file(const std::string& path);

// Component series helpers (0 = x, 1 = y, 2 = z).
std::vector<double> component_series(const std::vector<Vec3>& rows, int component);

}  // namespace tlsglass
