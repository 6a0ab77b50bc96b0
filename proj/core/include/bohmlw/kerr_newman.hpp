/// \file kerr_newman.hpp
/// Static complex Coulomb field of a point charge displaced into complex
/// 3-space (the flat-space face of the Kerr-Newman electromagnetic field).
#pragma once

#include "bohmlw/faraday.hpp"

namespace bohmlw {

/// W(x) = -grad q / sqrt((x - z0)^2) evaluated at a real field point.
/// The square root is the principal branch, which is the continuation from
/// the far-field region with Re sqrt > 0; its discontinuity is the standard
/// branch disk spanning the singular ring. `sheet` = -1 selects the second
/// sheet, where the source appears with charge -q.
///
/// Throws OnSingularRing when |(x - z0)^2| falls under the ring-proximity
/// tolerance.
RSVector kn_static_field(const Vec3& x, const CVec3& z0, double q, int sheet = +1);

/// Complex squared displacement (x - z0).(x - z0); exposed so callers can
/// test ring proximity themselves.
Complex kn_ring_distance2(const Vec3& x, const CVec3& z0);

}  // namespace bohmlw
