#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tlsglass/rng.hpp"
#include "tlsglass/vec3.hpp"

namespace tlsglass {

enum class Picture { Trap, RandomDipole, SphericalShell };

// Distribution family for the on-site random fields. Both are zero-centered
// with per-component standard deviation delta_e0.
enum class FieldDistribution { Gaussian, UniformBall };

// Measure for shell positions: uniform by volume (density ~ r^2 sin(theta))
// or uniform in the (r, theta, phi) coordinates themselves.
enum class ShellSampling { Volume, Coordinate };

struct PhysicalParams {
  double p0 = 1.602176634e-28;  // dipole magnitude, C m (= 1 |e|-nm = 48 debye)
  double epsilon_r = 11.0;      // relative permittivity
  int n_defects = 30;
  double delta_e0 = 1e4;           // random-field scale, V/m, per-component std
  double interaction_scale = 1.0;  // lambda; 0 disables interactions
  FieldDistribution field_distribution = FieldDistribution::Gaussian;
  ShellSampling shell_sampling = ShellSampling::Volume;

  // Throws std::invalid_argument on violation.
  void validate() const;
};

struct DefectSite {
  Vec3 position;      // m, qubit at the origin
  Vec3 orientation;   // unit vector
  Vec3 random_field;  // V/m
};

struct SampleConfig {
  PhysicalParams params;
  Picture picture = Picture::Trap;
  std::vector<DefectSite> defects;
  uint64_t seed = 0;

  void validate() const;
};

// Defects closer than this to each other are redrawn; keeps the pair
// interaction finite (the dipoles themselves have ~1 nm extent).
inline constexpr double min_defect_separation = 1e-9;  // m

// One zero-centered random field vector, per-component std delta_e0.
Vec3 draw_random_field(const PhysicalParams& params, Rng& rng);

// Charge traps in a plane: x,y ~ U(-150,150) nm, z = 50 nm, orientation +z.
SampleConfig generate_trap(const PhysicalParams& params, uint64_t seed);

// Same trap layout at a caller-chosen layer height.
SampleConfig generate_trap_layer(const PhysicalParams& params, uint64_t seed, double z);

// Oxide point dipoles: x,y ~ U(-150,150) nm, z ~ U(30,50) nm, orientation
// uniform on the sphere.
SampleConfig generate_random_dipole(const PhysicalParams& params, uint64_t seed);

// Shell around the qubit, 60 nm < r < 80 nm, orientation uniform on the
// sphere. Radial measure per params.shell_sampling.
SampleConfig generate_spherical_shell(const PhysicalParams& params, uint64_t seed);

SampleConfig generate(Picture picture, const PhysicalParams& params, uint64_t seed);

const char* picture_name(Picture p);
Picture picture_from_name(const std::string& name);

nlohmann::json params_to_json(const PhysicalParams& params);
PhysicalParams params_from_json(const nlohmann::json& j);

// JSON document with positions in nm, fields in V/m, p0 in debye.
nlohmann::json sample_to_json(const SampleConfig& sample);
SampleConfig sample_from_json(const nlohmann::json& j);

std::string sample_to_string(const SampleConfig& sample);
void write_sample_file(const std::string& path, const SampleConfig& sample);
SampleConfig read_sample_file(const std::string& path);

}  // namespace tlsglass
