#include "ntnsim/geometry.hpp"

namespace ntnsim {

GeodeticPosition normalize_position(GeodeticPosition p) {
    double lon = std::fmod(p.longitude_deg, 360.0);
    if (lon > 180.0) lon -= 360.0;
    if (lon <= -180.0) lon += 360.0;
    p.longitude_deg = lon;
    return p;
}

Vec3 geodetic_to_ecef(const GeodeticPosition& p, double earth_radius_m) {
    const double lat = deg2rad(p.latitude_deg);
    const double lon = deg2rad(p.longitude_deg);
    const double r = earth_radius_m + p.altitude_m;
    return {r * std::cos(lat) * std::cos(lon),
            r * std::cos(lat) * std::sin(lon),
            r * std::sin(lat)};
}

SatelliteState propagate_satellite(const ConstellationSpec& spec, int sat_id,
                                   double slot, double dt_s) {
    const int plane = sat_id / spec.sats_per_plane;
    const int in_plane = sat_id % spec.sats_per_plane;
    const double t = slot * dt_s + spec.epoch_offset_s;

    const double raan = deg2rad(spec.raan0_deg + plane * 360.0 / spec.plane_count);
    const double inc = deg2rad(spec.inclination_deg);
    // Walker phasing: in-plane slots plus the inter-plane phase offset F.
    const double u0 = deg2rad(in_plane * 360.0 / spec.sats_per_plane +
                              plane * spec.phasing_factor * 360.0 /
                                  spec.satellite_count());
    const double n = spec.mean_motion_rad_s();
    const double u = u0 + n * t;

    const double r = spec.orbit_radius_m();
    const double cu = std::cos(u), su = std::sin(u);
    const double co = std::cos(raan), so = std::sin(raan);
    const double ci = std::cos(inc), si = std::sin(inc);

    // Circular inclined orbit in the inertial frame.
    const Vec3 pos_eci{r * (cu * co - su * ci * so),
                       r * (cu * so + su * ci * co),
                       r * su * si};
    const Vec3 vel_eci{r * n * (-su * co - cu * ci * so),
                       r * n * (-su * so + cu * ci * co),
                       r * n * cu * si};

    // Rotate into ECEF by the accumulated Earth rotation angle.
    const double theta = spec.earth_rotation_rate_rad_s * t;
    const double ct = std::cos(theta), st = std::sin(theta);
    const Vec3 pos{ct * pos_eci.x + st * pos_eci.y,
                   -st * pos_eci.x + ct * pos_eci.y, pos_eci.z};
    const Vec3 vel_rot{ct * vel_eci.x + st * vel_eci.y,
                       -st * vel_eci.x + ct * vel_eci.y, vel_eci.z};
    const Vec3 omega{0.0, 0.0, spec.earth_rotation_rate_rad_s};
    const Vec3 vel = vel_rot - omega.cross(pos);

    return {sat_id, pos, vel, plane, in_plane};
}

std::vector<SatelliteState> propagate_constellation(const ConstellationSpec& spec,
                                                    double slot, double dt_s) {
    std::vector<SatelliteState> states;
    states.reserve(static_cast<std::size_t>(spec.satellite_count()));
    for (int s = 0; s < spec.satellite_count(); ++s) {
        states.push_back(propagate_satellite(spec, s, slot, dt_s));
    }
    return states;
}

double elevation_angle_deg(const Vec3& ground, const Vec3& sat) {
    const Vec3 up = ground.normalized();
    const Vec3 los = sat - ground;
    double s = los.dot(up) / los.norm();
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    return rad2deg(std::asin(s));
}

double slant_range_m(const Vec3& a, const Vec3& b) { return (b - a).norm(); }

double ground_distance_m(const GeodeticPosition& a, const GeodeticPosition& b,
                         double earth_radius_m) {
    const double lat1 = deg2rad(a.latitude_deg), lon1 = deg2rad(a.longitude_deg);
    const double lat2 = deg2rad(b.latitude_deg), lon2 = deg2rad(b.longitude_deg);
    const double sdlat = std::sin((lat2 - lat1) / 2.0);
    const double sdlon = std::sin((lon2 - lon1) / 2.0);
    const double h = sdlat * sdlat + std::cos(lat1) * std::cos(lat2) * sdlon * sdlon;
    return 2.0 * earth_radius_m * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace ntnsim
