#pragma once

namespace casimir::units {

inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kSpeedOfLight = 299792458.0;  // m / s
inline constexpr double kHbarC = kHbar * kSpeedOfLight;

/// Lengths are measured in multiples of `length_unit` metres. A reduced
/// force (1/length^2) becomes newtons, a reduced energy (1/length) joules.
inline double force_to_si(double reduced, double length_unit) {
    return reduced * kHbarC / (length_unit * length_unit);
}

inline double energy_to_si(double reduced, double length_unit) { return reduced * kHbarC / length_unit; }

inline double length_to_si(double reduced, double length_unit) { return reduced * length_unit; }

}  // namespace casimir::units
