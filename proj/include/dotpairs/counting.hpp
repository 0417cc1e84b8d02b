#ifndef DOTPAIRS_COUNTING_HPP
#define DOTPAIRS_COUNTING_HPP

#include <cstddef>
#include <vector>

#include "dotpairs/geometry.hpp"

namespace dotpairs {

enum class CountMethod { brute, fast };

// |{(p,q,r) in P^3 : p.q = alpha, p.r = beta}|; the triples are ordered and
// coordinates may repeat.
struct PiCount {
    long long total = 0;
    Scalar alpha;
    Scalar beta;
    CountMethod method = CountMethod::brute;
};

// Per-point weights wt_a(p) = |{q : p.q = alpha}| and wt_b(p); each point
// contributes exactly wt_a(p) * wt_b(p) triples.
struct PiDecomposition {
    struct PerPoint {
        long long wt_alpha = 0;
        long long wt_beta = 0;
        long long product() const { return wt_alpha * wt_beta; }
    };
    std::vector<PerPoint> per_point; // parallel to the point set's order
    long long total = 0;
    Scalar alpha;
    Scalar beta;
};

// Cubic reference count: enumerates all n^3 ordered triples and tests the two
// dot products directly.  Serves as the independent oracle for count_pi_fast.
PiCount count_pi_bruteforce(const PointSet& points, const Scalar& alpha, const Scalar& beta);

// Quadratic count via the weight-product decomposition; one pass over P per
// point computes both weights.
PiDecomposition count_pi_fast(const PointSet& points, const Scalar& alpha, const Scalar& beta);

struct TripleIndex {
    std::size_t p, q, r;
    bool operator==(const TripleIndex&) const = default;
};

// Explicit witness list (as indices into the point set); refuses to run when
// n^3 exceeds the limit.
std::vector<TripleIndex> enumerate_pi_triples(const PointSet& points, const Scalar& alpha,
                                              const Scalar& beta, long long limit);

} // namespace dotpairs

#endif
