#ifndef DOTPAIRS_CONSTRUCTIONS_HPP
#define DOTPAIRS_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dotpairs/counting.hpp"
#include "dotpairs/geometry.hpp"

namespace dotpairs {

struct ConstraintCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ConstructionReport {
    std::string construction;
    std::vector<std::pair<std::string, std::string>> parameters;
    Scalar alpha;
    Scalar beta;
    long long claimed_lower_bound = 0;
    long long measured_pi = 0;
    std::vector<ConstraintCheck> constraints;

    bool all_pass() const;
};

// Identifies which generator produced a point set, for re-validation.
struct ConstructionParams {
    std::string name; // line-fan | separated-grid | pencil | highdim-cubic
    long long n = 0, s = 0, m = 0, k = 0, a_count = 0;
    std::optional<Scalar> beta;
};

// n points in the plane, no s collinear, with at least n(s-1)^2/s triples at
// dot-product value (1,1): n/s base points on the parabola (i, i^2), plus
// s-1 points on each base point's dual line i*x + i^2*y = 1.  Requires s >= 2
// and s | n.  Fails loudly if the deterministic placement (including its
// jitter schedule) cannot satisfy the exact no-s-collinear validation.
PointSet gen_line_fan(long long n, long long s);

// The eps-separated set in [0,1]^2 with eps = 1/(3m): n/m fan lines through
// (0,1), m points on each, plus the n/m pivot points (3*eps*j/2, 1/2), every
// pivot at dot product 1/2 with its whole line.  Requires m | n and n < m^2;
// yields n + n/m points with pairwise distance >= eps and at least n*m
// triples at (1/2, 1/2).
PointSet gen_separated_grid(long long n, long long m);

// (1,1) together with k points on the line x + y = 1; every pair from the
// line gives a triple at (1,1), so the count is at least k^2.
PointSet gen_pencil(long long k);

// 3D set {(a,0,beta), (0,a,1) : a in 1..a_count} with at least (n/2)^3
// triples at (beta, beta).  Requires beta != 0.
PointSet gen_highdim_cubic(long long a_count, const Scalar& beta);

// Re-checks every stated constraint of a construction exactly: collinearity
// caps via flat_stats, separation via rational squared distances, and the
// counted lower bound (brute force for n <= 60, fast counter above).
ConstructionReport validate_construction(const PointSet& points,
                                         const ConstructionParams& params);

} // namespace dotpairs

#endif
