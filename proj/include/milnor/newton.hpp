#ifndef MILNOR_NEWTON_HPP
#define MILNOR_NEWTON_HPP

#include "milnor/poly.hpp"
#include "milnor/polygon.hpp"
#include "milnor/polytope_nd.hpp"
#include "milnor/upoly.hpp"

#include <optional>
#include <vector>

namespace milnor {

/// Strictly positive primitive integer weight vector P.
struct WeightVector {
    std::vector<std::int64_t> w;

    WeightVector() = default;
    explicit WeightVector(std::vector<std::int64_t> v);
    std::size_t size() const { return w.size(); }
    std::int64_t operator[](std::size_t i) const { return w[i]; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w == b.w; }
};

/// One compact face of a Newton boundary, any dimension.
struct NewtonFace {
    WeightVector normal;              // representative strictly positive normal
    std::int64_t d = 0;               // weighted degree along the face
    std::vector<IVec> lattice_points; // support points on the face
    int dim = 0;
};

/// Newton boundary Gamma(f) of a germ.
struct NewtonData {
    std::size_t n = 0;
    std::vector<IVec> support;
    std::vector<IVec> boundary_vertices;
    std::vector<NewtonFace> faces;  // n = 2: edges by increasing slope p/q;
                                    // n >= 3: faces of all dimensions
    std::vector<std::optional<std::int64_t>> intercepts; // per axis; nullopt = infinite
    bool convenient = false;

    LatticePolygon polygon; // populated for n = 2
};

/// Face function f_P together with its edge polynomial (n = 2).
struct FaceFunction {
    WeightVector normal;
    std::int64_t d = 0;
    Polynomial f_P;
    std::int64_t offset_x = 0, offset_y = 0; // monomial x^a y^b split off (n = 2)
    UPoly edge_polynomial;                   // E(s); constant for a vertex face
    std::int64_t distinct_roots = 0;         // distinct roots of E
};

NewtonData newton_boundary(const Polynomial& p);

std::int64_t weighted_degree(const WeightVector& P, const Polynomial& p);

FaceFunction face_function(const Polynomial& p, const WeightVector& P);

/// Verdict of the Newton multiplicity condition for H = f * conj(g).
struct MultiplicityVerdict {
    bool satisfied = false;
    std::optional<WeightVector> witness;     // present when violated: d(P;f) = d(P;g)
    enum class Containment { f_above_g, g_above_f } containment = Containment::f_above_g;
};

/// Decides d(P;f) != d(P;g) for every strictly positive P, exactly.
/// Requires both germs convenient. When violated, the witness is a strictly
/// positive primitive P with equal weighted degrees.
MultiplicityVerdict multiplicity_condition(const Polynomial& f, const Polynomial& g);

/// Kouchnirenko Newton number 2*Area - a_x - a_y + 1 (n = 2, convenient).
std::int64_t newton_number_2d(const Polynomial& p);

struct NondegeneracyResult {
    bool nondegenerate = true;
    std::optional<WeightVector> failing_face;
};

/// Every edge polynomial squarefree (n = 2).
NondegeneracyResult nondegeneracy_2d(const Polynomial& f);

/// Face functions on shared edge normals have no common nonmonomial factor.
bool pair_nondegeneracy_2d(const Polynomial& f, const Polynomial& g);

// helpers shared with other modules
std::vector<IVec> support_of(const Polynomial& p);
std::vector<LatticePoint> support_2d(const Polynomial& p);

} // namespace milnor

#endif
