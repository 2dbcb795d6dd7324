#pragma once

#include <optional>
#include <vector>

#include "ntnsim/geometry.hpp"

namespace ntnsim {

/// Hexagonal multi-beam layout in the satellite body frame
/// (x along-track, y completing the right-handed set, z nadir).
/// Boresight 0 is exactly nadir; tier k holds 6k beams.
struct BeamLayout {
    int beam_count = 0;
    std::vector<Vec3> boresights;  // unit vectors, body frame
    std::vector<int> tier_sizes;   // [1, 6, 12, ...]
    double beam_diameter_m = 50000.0;
    double altitude_ref_m = 550000.0;
};

/// Number of rings for a centered hexagonal count (19 -> 2, 127 -> 6),
/// nullopt when `beam_count` is not of the form 1 + sum(6k).
std::optional<int> hex_ring_count(int beam_count);

/// Throws ConfigError when beam_count is not centered hexagonal.
BeamLayout generate_beam_layout(int beam_count, double beam_diameter_m,
                                double altitude_m);

/// Circular-aperture transmit pattern. The gain floor is relative to the
/// peak and caps how deep the pattern nulls can go.
struct AntennaPattern {
    double max_gain_dbi = 30.5;
    double aperture_radius_m = 0.1;
    double carrier_frequency_ghz = 20.0;
    double gain_floor_db = -30.0;

    double wave_number_rad_m() const {
        return 2.0 * kPi * carrier_frequency_ghz * 1e9 / kSpeedOfLight;
    }
};

struct BodyFrame {
    Vec3 along_track;  // x
    Vec3 cross_track;  // y
    Vec3 nadir;        // z
};

/// Nadir-pointing body frame with the along-track direction as the azimuth
/// reference for the beam tiers.
BodyFrame body_frame(const SatelliteState& sat);

/// Angle in [0, pi] between the beam boresight (rotated to ECEF) and the
/// satellite->UE direction.
double off_boresight_angle_rad(const SatelliteState& sat, int beam_index,
                               const BeamLayout& layout, const Vec3& ue);

/// Airy pattern gain without the floor clamp; -inf dB at the exact nulls.
double tx_gain_unclamped_dbi(double alpha_rad, const AntennaPattern& pattern);

/// Transmit gain in dBi, clamped below at max_gain + gain_floor.
double tx_gain_dbi(double alpha_rad, const AntennaPattern& pattern);

}  // namespace ntnsim
