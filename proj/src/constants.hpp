#pragma once

namespace qfc::constants {

// Exact SI defining constants (2019 redefinition).
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double planck_J_s = 6.62607015e-34;
inline constexpr double hc_J_m = planck_J_s * speed_of_light_m_s;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace qfc::constants
