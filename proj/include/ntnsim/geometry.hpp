#pragma once

#include <cmath>
#include <vector>

namespace ntnsim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Cartesian 3-vector in meters. Used for ECEF positions, velocities and
/// unit directions; all public interfaces take angles in degrees, the
/// implementation works in radians.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

using EcefVector = Vec3;

/// Geodetic position on the spherical Earth model. Longitude is normalized
/// to (-180, 180].
struct GeodeticPosition {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double altitude_m = 0.0;
};

/// Wraps longitude into (-180, 180]. Latitude and altitude are validated at
/// configuration time, not here.
GeodeticPosition normalize_position(GeodeticPosition p);

/// Walker-delta shell on a spherical Earth with circular two-body orbits.
struct ConstellationSpec {
    int plane_count = 72;
    int sats_per_plane = 22;
    double altitude_m = 550000.0;
    double inclination_deg = 53.0;
    int phasing_factor = 0;  // Walker F, in [0, plane_count)
    double raan0_deg = 0.0;
    double epoch_offset_s = 0.0;
    double earth_radius_m = 6371000.0;
    double earth_rotation_rate_rad_s = 7.2921159e-5;  // sidereal
    double gravitational_parameter_m3_s2 = 3.986004418e14;

    int satellite_count() const { return plane_count * sats_per_plane; }
    double orbit_radius_m() const { return earth_radius_m + altitude_m; }
    double mean_motion_rad_s() const {
        const double a = orbit_radius_m();
        return std::sqrt(gravitational_parameter_m3_s2 / (a * a * a));
    }
    double orbital_period_s() const { return 2.0 * kPi / mean_motion_rad_s(); }
};

/// One satellite at one slot. Velocity is the ECEF velocity (it defines the
/// along-track azimuth reference of the beam layout).
struct SatelliteState {
    int sat_id = 0;  // plane_index * sats_per_plane + slot_index
    Vec3 position;
    Vec3 velocity;
    int plane_index = 0;
    int slot_index = 0;
};

Vec3 geodetic_to_ecef(const GeodeticPosition& p, double earth_radius_m);

/// State of satellite `sat_id` at fractional slot index `slot` (simulation
/// time slot * dt + epoch_offset).
SatelliteState propagate_satellite(const ConstellationSpec& spec, int sat_id,
                                   double slot, double dt_s);

/// All satellite_count() states, ordered by sat_id.
std::vector<SatelliteState> propagate_constellation(const ConstellationSpec& spec,
                                                    double slot, double dt_s);

/// Elevation of `sat` above the local horizontal plane at `ground`, degrees
/// in [-90, 90].
double elevation_angle_deg(const Vec3& ground, const Vec3& sat);

double slant_range_m(const Vec3& a, const Vec3& b);

/// Great-circle distance on the sphere of radius earth_radius_m (altitudes
/// are ignored).
double ground_distance_m(const GeodeticPosition& a, const GeodeticPosition& b,
                         double earth_radius_m);

}  // namespace ntnsim
