#include "tlsglass/curve.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tlsglass {

void TemperatureGrid::validate() const {
  if (temps.empty()) throw std::invalid_argument("temperature grid is empty");
  if (!(temps.front() > 0.0)) throw std::invalid_argument("temperatures must be > 0");
  for (size_t m = 1; m < temps.size(); ++m)
    if (!(temps[m] > temps[m - 1]))
      throw std::invalid_argument("temperature grid must be strictly ascending");
}

TemperatureGrid TemperatureGrid::linear(double t_min, double t_max, int count) {
  if (count < 1) throw std::invalid_argument("grid needs at least one point");
  if (count > 1 && !(t_max > t_min)) throw std::invalid_argument("t_max must exceed t_min");
  TemperatureGrid grid;
  grid.temps.resize(static_cast<size_t>(count));
  if (count == 1) {
    grid.temps[0] = t_min;
  } else {
    const double step = (t_max - t_min) / (count - 1);
    for (int m = 0; m < count; ++m) grid.temps[static_cast<size_t>(m)] = t_min + step * m;
    grid.temps.back() = t_max;
  }
  grid.validate();
  return grid;
}

const char* curve_method_name(CurveMethod m) {
  switch (m) {
    case CurveMethod::Exact:
      return "exact";
    case CurveMethod::MonteCarlo:
      return "monte_carlo";
    case CurveMethod::Enumeration:
      return "enumeration";
  }
  return "?";
}

namespace {

void append_full(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), ",%.17g", v);
  line += buf;
}

}  // namespace

void write_curve_csv(std::ostream& out, const FieldCurve& curve) {
  const bool smoothed = !curve.field_smoothed.empty();
  const bool errs = !curve.field_err.empty();
  std::string header = "T_K,Fx,Fy,Fz";
  if (smoothed) header += ",Fx_s,Fy_s,Fz_s";
  if (errs) header += ",Fx_err,Fy_err,Fz_err";
  out << header << "\n";
  for (int m = 0; m < curve.size(); ++m) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", curve.grid.temps[static_cast<size_t>(m)]);
    std::string line = buf;
    const Vec3& f = curve.field[static_cast<size_t>(m)];
    append_full(line, f.x);
    append_full(line, f.y);
    append_full(line, f.z);
    if (smoothed) {
      const Vec3& s = curve.field_smoothed[static_cast<size_t>(m)];
      append_full(line, s.x);
      append_full(line, s.y);
      append_full(line, s.z);
    }
    if (errs) {
      const Vec3& e = curve.field_err[static_cast<size_t>(m)];
      append_full(line, e.x);
      append_full(line, e.y);
      append_full(line, e.z);
    }
    out << line << "\n";
  }
}

void write_curve_file(const std::string& path, const FieldCurve& curve) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_curve_csv(out, curve);
}

FieldCurve read_curve_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("curve CSV: missing header");
  const bool smoothed = header.find("Fx_s") != std::string::npos;
  const bool errs = header.find("Fx_err") != std::string::npos;
  if (header.rfind("T_K,Fx,Fy,Fz", 0) != 0)
    throw std::runtime_error("curve CSV: unexpected header: " + header);

  FieldCurve curve;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
    const size_t expect = 4 + (smoothed ? 3 : 0) + (errs ? 3 : 0);
    if (vals.size() != expect) throw std::runtime_error("curve CSV: malformed row: " + line);
    size_t c = 0;
    curve.grid.temps.push_back(vals[c++]);
    curve.field.push_back({vals[c], vals[c + 1], vals[c + 2]});
    c += 3;
    if (smoothed) {
      curve.field_smoothed.push_back({vals[c], vals[c + 1], vals[c + 2]});
      c += 3;
    }
    if (errs) curve.field_err.push_back({vals[c], vals[c + 1], vals[c + 2]});
  }
  curve.grid.validate();
  return curve;
}

FieldCurve read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_curve_csv(in);
}

std::vector<double> component_series(const std::vector<Vec3>& rows, int component) {
  std::vector<double> out(rows.size());
  for (size_t m = 0; m < rows.size(); ++m) out[m] = rows[m][component];
  return out;
}

}  // namespace tlsglass
