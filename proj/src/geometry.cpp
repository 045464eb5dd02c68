#include "tlsglass/geometry.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tlsglass/constants.hpp"

namespace tlsglass {

namespace {

constexpr double kLateralHalf = 150e-9;  // m
constexpr double kTrapZ = 50e-9;
constexpr double kDipoleZMin = 30e-9;
constexpr double kDipoleZMax = 50e-9;
constexpr double kShellRMin = 60e-9;
constexpr double kShellRMax = 80e-9;
constexpr double kTwoPi = 6.283185307179586476925286766559;

bool too_close(const std::vector<DefectSite>& placed, size_t count, const Vec3& pos) {
  for (size_t k = 0; k < count; ++k) {
    if (norm2(placed[k].position - pos) < min_defect_separation * min_defect_separation)
      return true;
  }
  return false;
}

template <typename DrawPos, typename DrawOrient>
SampleConfig generate_impl(const PhysicalParams& params, uint64_t seed, Picture picture,
                           DrawPos&& draw_pos, DrawOrient&& draw_orient) {
  params.validate();
  SampleConfig sample;
  sample.params = params;
  sample.picture = picture;
  sample.seed = seed;
  sample.defects.resize(static_cast<size_t>(params.n_defects));
  Rng rng(seed);
  for (size_t j = 0; j < sample.defects.size(); ++j) {
    Vec3 pos = draw_pos(rng);
    while (too_close(sample.defects, j, pos)) pos = draw_pos(rng);
    sample.defects[j].position = pos;
    sample.defects[j].orientation = draw_orient(rng);
    sample.defects[j].random_field = draw_random_field(params, rng);
  }
  return sample;
}

}  // namespace

void PhysicalParams::validate() const {
  if (!(p0 > 0.0)) throw std::invalid_argument("p0 must be > 0");
  if (!(epsilon_r >= 1.0)) throw std::invalid_argument("epsilon_r must be >= 1");
  if (n_defects < 1) throw std::invalid_argument("n_defects must be >= 1");
  if (!(delta_e0 >= 0.0)) throw std::invalid_argument("delta_e0 must be >= 0");
  if (!(interaction_scale >= 0.0)) throw std::invalid_argument("interaction_scale must be >= 0");
}

void SampleConfig::validate() const {
  params.validate();
  if (defects.size() != static_cast<size_t>(params.n_defects))
    throw std::invalid_argument("defect count does not match n_defects");
  for (const auto& d : defects) {
    if (std::abs(norm(d.orientation) - 1.0) > 1e-12)
      throw std::invalid_argument("orientation is not a unit vector");
    if (!(norm2(d.position) > 0.0)) throw std::invalid_argument("defect at the qubit position");
  }
}

Vec3 draw_random_field(const PhysicalParams& params, Rng& rng) {
  if (params.delta_e0 == 0.0) return {0.0, 0.0, 0.0};
  if (params.field_distribution == FieldDistribution::Gaussian) {
    const double x = rng.normal(params.delta_e0);
    const double y = rng.normal(params.delta_e0);
    const double z = rng.normal(params.delta_e0);
    return {x, y, z};
  }
  // Uniform in a ball of radius sqrt(5) * delta_e0, which has per-component
  // standard deviation delta_e0.
  const double radius = std::sqrt(5.0) * params.delta_e0;
  const double r = radius * std::cbrt(rng.uniform01());
  return r * rng.unit_vector();
}

SampleConfig generate_trap_layer(const PhysicalParams& params, uint64_t seed, double z) {
  return generate_impl(
      params, seed, Picture::Trap,
      [z](Rng& rng) {
        const double x = rng.uniform(-kLateralHalf, kLateralHalf);
        const double y = rng.uniform(-kLateralHalf, kLateralHalf);
        return Vec3{x, y, z};
      },
      [](Rng&) { return Vec3{0.0, 0.0, 1.0}; });
}

SampleConfig generate_trap(const PhysicalParams& params, uint64_t seed) {
  return generate_trap_layer(params, seed, kTrapZ);
}

SampleConfig generate_random_dipole(const PhysicalParams& params, uint64_t seed) {
  return generate_impl(
      params, seed, Picture::RandomDipole,
      [](Rng& rng) {
        const double x = rng.uniform(-kLateralHalf, kLateralHalf);
        const double y = rng.uniform(-kLateralHalf, kLateralHalf);
        const double z = rng.uniform(kDipoleZMin, kDipoleZMax);
        return Vec3{x, y, z};
      },
      [](Rng& rng) { return rng.unit_vector(); });
}

SampleConfig generate_spherical_shell(const PhysicalParams& params, uint64_t seed) {
  const bool by_volume = params.shell_sampling == ShellSampling::Volume;
  return generate_impl(
      params, seed, Picture::SphericalShell,
      [by_volume](Rng& rng) {
        if (by_volume) {
          const double r3 = rng.uniform(kShellRMin * kShellRMin * kShellRMin,
                                        kShellRMax * kShellRMax * kShellRMax);
          return std::cbrt(r3) * rng.unit_vector();
        }
        const double r = rng.uniform(kShellRMin, kShellRMax);
        const double theta = rng.uniform(0.0, 3.14159265358979323846);
        const double phi = rng.uniform(0.0, kTwoPi);
        const double s = std::sin(theta);
        return Vec3{r * s * std::cos(phi), r * s * std::sin(phi), r * std::cos(theta)};
      },
      [](Rng& rng) { return rng.unit_vector(); });
}

SampleConfig generate(Picture picture, const PhysicalParams& params, uint64_t seed) {
  switch (picture) {
    case Picture::Trap:
      return generate_trap(params, seed);
    case Picture::RandomDipole:
      return generate_random_dipole(params, seed);
    case Picture::SphericalShell:
      return generate_spherical_shell(params, seed);
  }
  throw std::invalid_argument("unknown picture");
}

const char* picture_name(Picture p) {
  switch (p) {
    case Picture::Trap:
      return "trap";
    case Picture::RandomDipole:
      return "random_dipole";
    case Picture::SphericalShell:
      return "spherical_shell";
  }
  return "?";
}

Picture picture_from_name(const std::string& name) {
  if (name == "trap") return Picture::Trap;
  if (name == "random_dipole") return Picture::RandomDipole;
  if (name == "spherical_shell") return Picture::SphericalShell;
  throw std::invalid_argument("unknown picture: " + name);
}

namespace {

const char* distribution_name(FieldDistribution d) {
  return d == FieldDistribution::Gaussian ? "gaussian" : "uniform_ball";
}

FieldDistribution distribution_from_name(const std::string& name) {
  if (name == "gaussian") return FieldDistribution::Gaussian;
  if (name == "uniform_ball") return FieldDistribution::UniformBall;
  throw std::invalid_argument("unknown field distribution: " + name);
}

const char* shell_sampling_name(ShellSampling s) {
  return s == ShellSampling::Volume ? "volume" : "coordinate";
}

ShellSampling shell_sampling_from_name(const std::string& name) {
  if (name == "volume") return ShellSampling::Volume;
  if (name == "coordinate") return ShellSampling::Coordinate;
  throw std::invalid_argument("unknown shell sampling: " + name);
}

nlohmann::json vec_to_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

nlohmann::json params_to_json(const PhysicalParams& params) {
  return nlohmann::json{{"p0_debye", params.p0 / constants::debye},
                        {"epsilon_r", params.epsilon_r},
                        {"n_defects", params.n_defects},
                        {"delta_e0_V_per_m", params.delta_e0},
                        {"interaction_scale", params.interaction_scale},
                        {"field_distribution", distribution_name(params.field_distribution)},
                        {"shell_sampling", shell_sampling_name(params.shell_sampling)}};
}

PhysicalParams params_from_json(const nlohmann::json& j) {
  PhysicalParams params;
  if (j.contains("p0_debye")) params.p0 = j.at("p0_debye").get<double>() * constants::debye;
  if (j.contains("epsilon_r")) params.epsilon_r = j.at("epsilon_r").get<double>();
  if (j.contains("n_defects")) params.n_defects = j.at("n_defects").get<int>();
  if (j.contains("delta_e0_V_per_m")) params.delta_e0 = j.at("delta_e0_V_per_m").get<double>();
  if (j.contains("interaction_scale"))
    params.interaction_scale = j.at("interaction_scale").get<double>();
  if (j.contains("field_distribution"))
    params.field_distribution = distribution_from_name(j.at("field_distribution").get<std::string>());
  if (j.contains("shell_sampling"))
    params.shell_sampling = shell_sampling_from_name(j.at("shell_sampling").get<std::string>());
  params.validate();
  return params;
}

nlohmann::json sample_to_json(const SampleConfig& sample) {
  nlohmann::json defects = nlohmann::json::array();
  for (const auto& d : sample.defects) {
    defects.push_back({{"position_nm", vec_to_json(d.position / constants::nm)},
                       {"orientation", vec_to_json(d.orientation)},
                       {"random_field_V_per_m", vec_to_json(d.random_field)}});
  }
  return nlohmann::json{{"seed", sample.seed},
                        {"picture", picture_name(sample.picture)},
                        {"params", params_to_json(sample.params)},
                        {"defects", std::move(defects)}};
}

SampleConfig sample_from_json(const nlohmann::json& j) {
  SampleConfig sample;
  sample.seed = j.at("seed").get<uint64_t>();
  sample.picture = picture_from_name(j.at("picture").get<std::string>());
  sample.params = params_from_json(j.at("params"));
  for (const auto& dj : j.at("defects")) {
    DefectSite d;
    d.position = vec_from_json(dj.at("position_nm")) * constants::nm;
    d.orientation = vec_from_json(dj.at("orientation"));
    d.random_field = vec_from_json(dj.at("random_field_V_per_m"));
    sample.defects.push_back(d);
  }
  sample.validate();
  return sample;
}

std::string sample_to_string(const SampleConfig& sample) { return sample_to_json(sample).dump(2); }

void write_sample_file(const std::string& path, const SampleConfig& sample) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << sample_to_string(sample) << "\n";
}

SampleConfig read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j;
  in >> j;
  return sample_from_json(j);
}

}  // namespace tlsglass
