#pragma once

// SI constants (CODATA 2018 / exact SI definitions).
namespace tlsglass::constants {

inline constexpr double k_boltzmann = 1.380649e-23;        // J/K
inline constexpr double epsilon0 = 8.8541878128e-12;       // F/m
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck_h = 6.62607015e-34;         // J s
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double bohr_magneton = 9.2740100783e-24;  // J/T
inline constexpr double electron_mass = 9.1093837015e-31;  // kg

inline constexpr double debye = 3.33564e-30;  // C m per debye
inline constexpr double nm = 1e-9;            // m per nanometer

// 1 |e|-nm expressed as a dipole moment, the working dipole magnitude.
inline constexpr double e_nm = elementary_charge * nm;  // C m

inline constexpr double mev = 1.602176634e-22;  // J per milli-electronvolt

}  // namespace tlsglass::constants
