#pragma once

#include <cmath>

#include "africa3/errors.hpp"

namespace africa3 {

inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
    double lat = 0.0;  // decimal degrees, [-90, 90]
    double lon = 0.0;  // decimal degrees, [-180, 180]

    bool valid() const {
        return std::isfinite(lat) && std::isfinite(lon) &&
               lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
    }
};

inline double deg2rad(double deg) { return deg * (M_PI / 180.0); }

// Great-circle distance in kilometres on a sphere of radius kEarthRadiusKm.
inline double haversine(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = deg2rad(a.lat), lat2 = deg2rad(b.lat);
    const double dlat = lat2 - lat1;
    const double dlon = deg2rad(b.lon) - deg2rad(a.lon);
    const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
    const double c = 2.0 * std::atan2(std::sqrt(s), std::sqrt(1.0 - s));
    return kEarthRadiusKm * c;
}

// Plain Euclidean distance on raw degree coordinates.
inline double euclidean_deg(const GeoPoint& a, const GeoPoint& b) {
    const double dlat = a.lat - b.lat;
    const double dlon = a.lon - b.lon;
    return std::sqrt(dlat * dlat + dlon * dlon);
}

}  // namespace africa3
