#include "dotpairs/counting.hpp"

namespace dotpairs {

namespace {

void check_inputs(const PointSet& points, const Scalar& alpha, const Scalar& beta) {
    if (alpha.is_zero() || beta.is_zero()) {
        throw DomainError("alpha and beta must be nonzero");
    }
    if (alpha.field() != beta.field()) {
        throw FieldMismatchError("alpha and beta live in different fields");
    }
    if (points.size() > 0 && alpha.field() != points.field()) {
        throw FieldMismatchError("alpha/beta field != point set field");
    }
}

// All pairwise dot products, row p, column q.
std::vector<std::vector<Scalar>> dot_table(const PointSet& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<Scalar>> dots(n);
    for (std::size_t i = 0; i < n; ++i) {
        dots[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            dots[i].push_back(dot(points[i], points[j]));
        }
    }
    return dots;
}

} // namespace

PiCount count_pi_bruteforce(const PointSet& points, const Scalar& alpha, const Scalar& beta) {
    check_inputs(points, alpha, beta);
    const std::size_t n = points.size();
    const auto dots = dot_table(points);
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (dots[i][j] != alpha) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (dots[i][k] == beta) ++total;
            }
        }
    }
    return PiCount{total, alpha, beta, CountMethod::brute};
}

PiDecomposition count_pi_fast(const PointSet& points, const Scalar& alpha, const Scalar& beta) {
    check_inputs(points, alpha, beta);
    PiDecomposition out;
    out.alpha = alpha;
    out.beta = beta;
    out.per_point.reserve(points.size());
    for (const Point& p : points) {
        PiDecomposition::PerPoint row;
        for (const Point& q : points) {
            const Scalar v = dot(p, q);
            if (v == alpha) ++row.wt_alpha;
            if (v == beta) ++row.wt_beta;
        }
        out.total += row.product();
        out.per_point.push_back(row);
    }
    return out;
}

std::vector<TripleIndex> enumerate_pi_triples(const PointSet& points, const Scalar& alpha,
                                              const Scalar& beta, long long limit) {
    check_inputs(points, alpha, beta);
    const std::size_t n = points.size();
    const long long cube = static_cast<long long>(n) * n * n;
    if (cube > limit) {
        throw DomainError("triple enumeration over " + std::to_string(cube) +
                          " candidates exceeds limit " + std::to_string(limit));
    }
    const auto dots = dot_table(points);
    std::vector<TripleIndex> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (dots[i][j] != alpha) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (dots[i][k] == beta) out.push_back(TripleIndex{i, j, k});
            }
        }
    }
    return out;
}

} // namespace dotpairs
