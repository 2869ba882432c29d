#ifndef MILNOR_POLYGON_HPP
#define MILNOR_POLYGON_HPP

#include "milnor/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace milnor {

using LatticePoint = std::array<std::int64_t, 2>;

/// One compact edge of a 2-variable Newton boundary.
struct PolygonEdge {
    std::int64_t p = 0, q = 0;            // primitive inner normal (p, q), both > 0
    std::int64_t d = 0;                   // weighted degree: min <P, nu> over the support
    LatticePoint from{}, to{};            // endpoints, from = larger x-exponent
    std::int64_t lattice_length = 0;      // number of primitive steps along the edge
    std::vector<LatticePoint> lattice_points; // all lattice points from -> to
};

/// Compact boundary of conv(support) + R_{>=0}^2.
///
/// Vertices run from the y-axis side (max y, min x) to the x-axis side.
/// Edges are reported sorted by increasing normal slope p/q.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;   // ordered by increasing x
    std::vector<PolygonEdge> edges;       // sorted by p/q ascending
};

/// Build the compact Newton boundary of a 2-d support set (nonempty).
LatticePolygon newton_polygon(std::vector<LatticePoint> support);

/// 2 * Area of the region bounded by the axes and the boundary
/// (only meaningful when the polygon touches both axes).
Integer polygon_double_area(const LatticePolygon& poly);

} // namespace milnor

#endif
