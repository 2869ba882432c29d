#ifndef MILNOR_POLYTOPE_ND_HPP
#define MILNOR_POLYTOPE_ND_HPP

#include "milnor/rational.hpp"

#include <cstdint>
#include <vector>

namespace milnor {

using QVec = std::vector<Rational>;
using IVec = std::vector<std::int64_t>;

/// Extreme rays of the polyhedral cone {y : <row, y> >= 0 for all rows},
/// by the double description method with exact arithmetic. The cone must
/// be pointed (throws otherwise). Rays come back as primitive integer
/// vectors in a deterministic order.
std::vector<IVec> dd_extreme_rays(const std::vector<QVec>& rows);

/// One compact face of a Newton polyhedron conv(S) + R_{>=0}^n.
struct NdFace {
    IVec normal;                  // primitive, strictly positive representative
    std::int64_t d = 0;           // min <P, nu> over S, attained exactly on points
    std::vector<IVec> points;     // support points on the face
    int dim = 0;                  // affine dimension
};

/// All compact faces (all dimensions) of conv(S) + R_{>=0}^n, exact.
/// S must be nonempty with <= 64 points, 2 <= n <= 8.
std::vector<NdFace> newton_faces_nd(const std::vector<IVec>& support);

/// Affine rank of an integer point set.
int affine_dim(const std::vector<IVec>& pts);

} // namespace milnor

#endif
