#include "milnor/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

} // namespace

LatticePolygon newton_polygon(std::vector<LatticePoint> support)
{
    if (support.empty()) throw precondition_error("newton_polygon: empty support");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    // drop points dominated by another (u >= v componentwise)
    std::vector<LatticePoint> pts;
    for (const auto& u : support) {
        bool dominated = false;
        for (const auto& v : support)
            if (v != u && v[0] <= u[0] && v[1] <= u[1]) { dominated = true; break; }
        if (!dominated) pts.push_back(u);
    }

    // sorted by x ascending; y is then strictly decreasing among survivors
    std::sort(pts.begin(), pts.end());

    // lower convex chain (Andrew), x-ascending; collinear middles dropped
    std::vector<LatticePoint> chain;
    for (const auto& pt : pts) {
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), pt) <= 0)
            chain.pop_back();
        chain.push_back(pt);
    }

    LatticePolygon poly;
    poly.vertices = chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const LatticePoint a = chain[i], b = chain[i + 1]; // a left-high, b right-low
        PolygonEdge e;
        e.p = a[1] - b[1];
        e.q = b[0] - a[0];
        const std::int64_t g = gcd64(e.p, e.q);
        e.p /= g;
        e.q /= g;
        e.d = e.p * a[0] + e.q * a[1];
        e.from = b; // larger x-exponent endpoint
        e.to = a;
        e.lattice_length = g;
        for (std::int64_t j = 0; j <= g; ++j)
            e.lattice_points.push_back({b[0] - j * e.q, b[1] + j * e.p});
        poly.edges.push_back(std::move(e));
    }
    // increasing normal slope p/q (p1/q1 < p2/q2 <=> p1 q2 < p2 q1)
    std::sort(poly.edges.begin(), poly.edges.end(), [](const PolygonEdge& a, const PolygonEdge& b) {
        return a.p * b.q < b.p * a.q;
    });
    return poly;
}

Integer polygon_double_area(const LatticePolygon& poly)
{
    // shoelace over (0,0) -> (0, a_y) -> vertices (x ascending) -> (a_x, 0) -> (0,0);
    // the first and last boundary vertices are the axis intercepts themselves
    std::vector<LatticePoint> ring;
    ring.push_back({0, 0});
    for (const auto& v : poly.vertices) ring.push_back(v);
    Integer two_a = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % n];
        two_a += Integer(a[0]) * b[1] - Integer(b[0]) * a[1];
    }
    if (two_a < 0) two_a = -two_a;
    return two_a;
}

} // namespace milnor
