#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dotpairs/geometry.hpp"
#include "support/random_instances.hpp"

using namespace dotpairs;
namespace dt = dotpairs::testing;

namespace {

const FieldSpec kRat = FieldSpec::rationals();

Point pt(std::vector<long long> coords) {
    std::vector<Scalar> v;
    v.reserve(coords.size());
    for (long long c : coords) v.push_back(Scalar::rational(c));
    return Point(std::move(v));
}

PointSet make_set(std::vector<Point> points, int dim = 2,
                  FieldSpec field = FieldSpec::rationals()) {
    PointSet out(field, dim);
    for (Point& p : points) out.add(std::move(p));
    return out;
}

// Independent s_star oracle for d = 2: every heaviest line is spanned by a
// pair (unless everything is collinear), and collinearity is a 2x2 minor test.
long long s_star_beacon_2d(const PointSet& points) {
    const std::size_t n = points.size();
    if (n <= 2) return static_cast<long long>(n);
    long long best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            long long count = 0;
            for (const Point& r : points) {
                if (collinear(points[i], points[j], r)) ++count;
            }
            best = std::max(best, count);
        }
    }
    return best;
}

// Same idea in d = 3 with the coplanarity determinant; sets that span no
// plane (all collinear) return n.
long long s_star_beacon_3d(const PointSet& points) {
    const std::size_t n = points.size();
    auto coplanar = [&](const Point& a, const Point& b, const Point& c, const Point& x) {
        Scalar u0 = b[0] - a[0], u1 = b[1] - a[1], u2 = b[2] - a[2];
        Scalar v0 = c[0] - a[0], v1 = c[1] - a[1], v2 = c[2] - a[2];
        Scalar w0 = x[0] - a[0], w1 = x[1] - a[1], w2 = x[2] - a[2];
        Scalar det = u0 * (v1 * w2 - v2 * w1) - u1 * (v0 * w2 - v2 * w0) +
                     u2 * (v0 * w1 - v1 * w0);
        return det.is_zero();
    };
    if (n <= 3) return static_cast<long long>(n);
    long long best = 0;
    bool any_plane = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (collinear(points[i], points[j], points[k])) continue;
                any_plane = true;
                long long count = 0;
                for (const Point& x : points) {
                    if (coplanar(points[i], points[j], points[k], x)) ++count;
                }
                best = std::max(best, count);
            }
        }
    }
    return any_plane ? best : static_cast<long long>(n);
}

} // namespace

TEST_CASE("dot products are exact in both backends") {
    CHECK(dot(pt({1, 2}), pt({3, 4})) == Scalar::rational(11));
    Point half({Scalar::rational(1, 2), Scalar::rational(1, 2)});
    CHECK(dot(half, pt({1, 1})) == Scalar::rational(1));
    const FieldSpec f7 = FieldSpec::prime_field(7);
    Point a({Scalar::residue(3, f7), Scalar::residue(5, f7)});
    Point b({Scalar::residue(2, f7), Scalar::residue(1, f7)});
    CHECK(dot(a, b).residue_value() == 4); // 11 mod 7
    CHECK_THROWS_AS(dot(pt({1, 2}), pt({1, 2, 3})), DomainError);
    CHECK_THROWS_AS(dot(pt({1, 2}), a), FieldMismatchError);
}

TEST_CASE("point sets reject duplicates and mismatches") {
    PointSet set(kRat, 2);
    set.add(pt({1, 2}));
    CHECK_THROWS_AS(set.add(pt({1, 2})), DomainError);
    CHECK_THROWS_AS(set.add(pt({1, 2, 3})), DomainError);
    CHECK(set.contains(pt({1, 2})));
    CHECK_FALSE(set.contains(pt({2, 1})));
    CHECK_THROWS_AS(PointSet(kRat, 1), DomainError);
    // reduced forms collide: 1/2 == 2/4
    PointSet frac(kRat, 2);
    frac.add(Point({Scalar::rational(1, 2), Scalar::rational(0)}));
    CHECK_THROWS_AS(frac.add(Point({Scalar::rational(2, 4), Scalar::rational(0)})),
                    DomainError);
}

TEST_CASE("dual hyperplane definition and guards") {
    Hyperplane h = dual_hyperplane(pt({1, 2}), Scalar::rational(1));
    CHECK(h.contains(pt({1, 0})));
    CHECK(h.contains(Point({Scalar::rational(0), Scalar::rational(1, 2)})));
    CHECK_FALSE(h.contains(pt({1, 1})));
    CHECK_THROWS_AS(dual_hyperplane(pt({1, 2}), Scalar::rational(0)), DomainError);
    CHECK_THROWS_AS(dual_hyperplane(pt({0, 0}), Scalar::rational(1)), DomainError);
    // same solution set under scaling -> same key
    Hyperplane doubled = dual_hyperplane(pt({2, 4}), Scalar::rational(2));
    CHECK(hyperplane_key(h) == hyperplane_key(doubled));
}

TEST_CASE("hyperplane weight counts exact membership") {
    PointSet set = make_set({pt({1, 0}), pt({1, 1}), pt({0, 1})});
    Hyperplane x_is_1({Scalar::rational(1), Scalar::rational(0)}, Scalar::rational(1));
    CHECK(hyperplane_weight(x_is_1, set) == 2);
    PointSet empty(kRat, 2);
    CHECK(hyperplane_weight(x_is_1, empty) == 0);
    Hyperplane dual = dual_hyperplane(pt({1, 0}), Scalar::rational(1));
    CHECK(hyperplane_weight(dual, set) == 2); // (1,0) and (1,1)
}

TEST_CASE("affine hull keys and dimensions") {
    std::vector<Point> collinear_pts{pt({0, 0}), pt({1, 1}), pt({2, 2})};
    AffineHull line = affine_hull_key(collinear_pts);
    CHECK(line.dim == 1);

    std::vector<Point> spanning{pt({0, 0}), pt({1, 0}), pt({0, 1})};
    CHECK(affine_hull_key(spanning).dim == 2);

    std::vector<Point> single{pt({1, 0})};
    CHECK(affine_hull_key(single).dim == 0);

    // key of the spanning pair's hull equals the key of that hyperplane
    std::vector<Point> pair{pt({0, 1}), pt({1, 0})};
    auto h = hull_hyperplane(pair);
    REQUIRE(h.has_value());
    CHECK(hyperplane_key(*h) == affine_hull_key(pair).key);
    CHECK(h->contains(Point({Scalar::rational(1, 2), Scalar::rational(1, 2)})));
}

TEST_CASE("flat keys are sound under respanning") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        const FieldSpec field = iter % 2 ? FieldSpec::prime_field(101) : kRat;
        const int d = 2 + iter % 2;
        Point a = dt::random_point(rng, field, d);
        Point b = dt::random_point(rng, field, d);
        if (a == b) continue;
        std::vector<Point> span1{a, b};
        AffineHull hull1 = affine_hull_key(span1);
        // a + w(b-a) stays on the line through a and b
        auto combine = [&](long long w) {
            std::vector<Scalar> coords;
            const Scalar weight = Scalar::from_integer(w, field);
            for (int i = 0; i < d; ++i) coords.push_back(a[i] + weight * (b[i] - a[i]));
            return Point(std::move(coords));
        };
        std::vector<Point> span2{combine(2), combine(3)};
        CHECK(affine_hull_key(span2).key == hull1.key);
        // shifting one spanning point off the line changes the key (skip the
        // case where the shift direction is parallel to the line itself)
        std::vector<Scalar> coords = combine(2).coords();
        coords[0] = coords[0] + Scalar::one(field);
        std::vector<Point> span3{Point(coords), combine(3)};
        if (span3[0] == span3[1] || collinear(a, b, span3[0])) continue;
        AffineHull hull3 = affine_hull_key(span3);
        if (hull3.dim == hull1.dim) {
            CHECK(hull3.key.encoding() != hull1.key.encoding());
        }
    }
}

TEST_CASE("duality is injective for gamma != 0") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 200; ++iter) {
        const FieldSpec field = iter % 2 ? FieldSpec::prime_field(7) : kRat;
        const int d = 2 + iter % 2;
        Point p = dt::random_point(rng, field, d);
        Point q = dt::random_point(rng, field, d);
        if (p.is_origin() || q.is_origin() || p == q) continue;
        const Scalar gamma = dt::random_scalar(rng, field, true);
        CHECK(hyperplane_key(dual_hyperplane(p, gamma)).encoding() !=
              hyperplane_key(dual_hyperplane(q, gamma)).encoding());
    }
}

TEST_CASE("flat stats on reference configurations") {
    PointSet three_on_line = make_set({pt({0, 0}), pt({1, 1}), pt({2, 2}), pt({3, 5})});
    FlatStats stats = flat_stats(three_on_line);
    CHECK(stats.s_star == 3);
    CHECK(stats.t_star == 1);
    REQUIRE(stats.hyperplane_witness.has_value());
    std::vector<Point> diag{pt({0, 0}), pt({1, 1})};
    CHECK(stats.hyperplane_witness->encoding() == affine_hull_key(diag).key.encoding());

    PointSet triangle = make_set({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    stats = flat_stats(triangle);
    CHECK(stats.s_star == 2);
    CHECK(stats.t_star == 1);

    PointSet empty(kRat, 2);
    stats = flat_stats(empty);
    CHECK(stats.s_star == 0);
    CHECK(stats.t_star == 0);
    CHECK_FALSE(stats.hyperplane_witness.has_value());

    // degenerate: everything on one line reports n with the ambient hull
    PointSet on_line = make_set({pt({0, 0}), pt({1, 1}), pt({2, 2}), pt({3, 3})});
    stats = flat_stats(on_line);
    CHECK(stats.s_star == 4);

    // d = 3 with a 3-rich line
    PointSet spatial = make_set(
        {pt({0, 0, 0}), pt({1, 1, 0}), pt({2, 2, 0}), pt({0, 0, 1}), pt({1, 0, 5})}, 3);
    stats = flat_stats(spatial);
    CHECK(stats.t_star == 3);
    CHECK(stats.s_star == s_star_beacon_3d(spatial));
    CHECK(stats.t_star <= stats.s_star);
}

TEST_CASE("flat stats agree with the determinant oracle on random sets") {
    std::mt19937_64 rng(313);
    int used = 0;
    for (int iter = 0; used < 30 && iter < 200; ++iter) {
        dt::RandomInstance inst = dt::random_instance(rng, iter);
        if (inst.points.size() > 12 || inst.points.size() == 0) continue;
        ++used;
        FlatStats stats = flat_stats(inst.points);
        if (inst.points.dim() == 2) {
            CHECK(stats.s_star == s_star_beacon_2d(inst.points));
            CHECK(stats.t_star == 1);
        } else {
            CHECK(stats.s_star == s_star_beacon_3d(inst.points));
            CHECK(stats.t_star <= stats.s_star);
        }
    }
    CHECK(used == 30);
}

TEST_CASE("dual richness histogram matches the reference examples") {
    PointSet set = make_set({pt({1, 0}), pt({0, 1}), pt({1, 1})});
    RichnessHistogram hist = dual_richness_histogram(set, Scalar::rational(1));
    CHECK(hist.count_exact(2) == 3);
    CHECK(hist.count_exact(1) == 0);
    CHECK(hist.count_at_least(1) == 3);
    CHECK_FALSE(hist.origin_warning());

    PointSet lone = make_set({pt({1, 1})});
    hist = dual_richness_histogram(lone, Scalar::rational(2)); // p.p = 2
    CHECK(hist.count_exact(1) == 1);

    PointSet off = make_set({pt({1, 0})});
    hist = dual_richness_histogram(off, Scalar::rational(5));
    CHECK(hist.count_exact(0) == 1);
    CHECK(hist.count_at_least(1) == 0);

    PointSet with_origin = make_set({pt({0, 0}), pt({1, 1})});
    hist = dual_richness_histogram(with_origin, Scalar::rational(2));
    CHECK(hist.origin_warning());
    CHECK(hist.count_exact(0) == 1); // the origin's empty dual
    CHECK(hist.count_exact(1) == 1); // (1,1).(1,1) = 2

    CHECK_THROWS_AS(dual_richness_histogram(set, Scalar::rational(0)), DomainError);
}

TEST_CASE("histogram conservation and incidence cross-check") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 40; ++iter) {
        dt::RandomInstance inst = dt::random_instance(rng, iter, /*origin_free=*/true);
        const Scalar gamma = inst.alpha;
        RichnessHistogram hist = dual_richness_histogram(inst.points, gamma);
        long long total = hist.count_exact(0);
        for (const auto& [k, c] : hist.counts()) total += c;
        CHECK(total == static_cast<long long>(inst.points.size()));

        std::vector<Hyperplane> duals;
        for (const Point& p : inst.points) duals.push_back(dual_hyperplane(p, gamma));
        CHECK(incidence_count(inst.points, duals) == hist.weighted_sum());
    }
}

TEST_CASE("spanned richness histogram on reference configurations") {
    // four points, no three collinear: C(4,2) = 6 distinct lines
    PointSet quad = make_set({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({2, 3})});
    RichnessHistogram hist = spanned_richness_histogram(quad, 2);
    CHECK(hist.count_at_least(2) == 6);
    CHECK(hist.g(2) == 4); // capped at n
    CHECK(hist.capped());
    CHECK_FALSE(hist.infinite_detected());

    PointSet mixed = make_set({pt({0, 0}), pt({1, 1}), pt({2, 2}), pt({3, 5})});
    hist = spanned_richness_histogram(mixed, 3);
    CHECK(hist.count_at_least(3) == 1);
    CHECK(hist.g(3) == 1);

    // five collinear points in d = 3: no spanned planes, infinite pencil
    PointSet rod = make_set(
        {pt({0, 0, 0}), pt({1, 1, 1}), pt({2, 2, 2}), pt({3, 3, 3}), pt({4, 4, 4})}, 3);
    hist = spanned_richness_histogram(rod, 2);
    CHECK(hist.infinite_detected());
    CHECK(hist.g(2) == 5);
    CHECK(hist.g(5) == 5);
    CHECK(hist.g(6) == 0);

    CHECK_THROWS_AS(spanned_richness_histogram(quad, 1), DomainError);
    PointSet four_d(kRat, 4);
    CHECK_THROWS_AS(spanned_richness_histogram(four_d, 2), DomainError);
}

TEST_CASE("spanned histogram mixes a rich line with genuine planes in d=3") {
    // four points on the x-axis plus two off it: the axis line is 4-rich, and
    // planes through subsets of the points are still enumerated exactly
    PointSet set = make_set({pt({0, 0, 0}), pt({1, 0, 0}), pt({2, 0, 0}), pt({3, 0, 0}),
                             pt({0, 1, 0}), pt({0, 0, 1})},
                            3);
    RichnessHistogram hist = spanned_richness_histogram(set, 2);
    CHECK(hist.infinite_detected()); // the 4-rich axis carries a plane pencil
    CHECK(hist.g(2) == 6);
    CHECK(hist.g(4) == 6);  // still inside the pencil's weight range
    // above the rich line, only spanned planes count: z = 0 and y = 0 each
    // hold 5 points
    CHECK(hist.g(5) == 2);
    CHECK(hist.g(6) == 0);
    CHECK(hist.g_exact(5) == 2);

    // degenerate planar set: every point on z = 0, no plane pencil above
    // the max collinear count
    PointSet planar = make_set({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}),
                                pt({1, 1, 0}), pt({2, 3, 0})},
                               3);
    FlatStats stats = flat_stats(planar);
    CHECK(stats.s_star == 5); // the ambient plane
    CHECK(stats.t_star == 2); // no three collinear here
}

TEST_CASE("dual f_k never exceeds spanned g_k") {
    std::mt19937_64 rng(777);
    int used = 0;
    for (int iter = 0; used < 25 && iter < 100; ++iter) {
        dt::RandomInstance inst = dt::random_instance(rng, iter);
        if (inst.points.dim() != 2 || inst.points.size() < 2) continue;
        ++used;
        RichnessHistogram f = dual_richness_histogram(inst.points, inst.alpha);
        RichnessHistogram g = spanned_richness_histogram(inst.points, 2);
        for (long long k = 2; k <= f.max_weight(); ++k) {
            CHECK(f.count_at_least(k) <= g.g(k));
        }
    }
    CHECK(used == 25);
}

TEST_CASE("k2t freeness over pairwise intersections") {
    // two planes in d = 3 meeting in the z-axis, which holds 2 points of P
    Hyperplane h1({Scalar::rational(1), Scalar::rational(0), Scalar::rational(0)},
                  Scalar::rational(0)); // x = 0
    Hyperplane h2({Scalar::rational(0), Scalar::rational(1), Scalar::rational(0)},
                  Scalar::rational(0)); // y = 0
    PointSet set = make_set({pt({0, 0, 0}), pt({0, 0, 1}), pt({1, 2, 3})}, 3);
    std::vector<Hyperplane> planes{h1, h2};
    CHECK(k2t_free(planes, set, 3));
    CHECK_FALSE(k2t_free(planes, set, 2));
    std::vector<Hyperplane> one{h1};
    CHECK(k2t_free(one, set, 1));
    std::vector<Hyperplane> dup{h1, h1};
    CHECK_THROWS_AS(k2t_free(dup, set, 2), DomainError);
}

TEST_CASE("incidence counts") {
    PointSet set = make_set({pt({1, 0}), pt({0, 1})});
    Hyperplane line({Scalar::rational(1), Scalar::rational(1)}, Scalar::rational(1));
    std::vector<Hyperplane> family{line};
    CHECK(incidence_count(set, family) == 2);
    CHECK(incidence_count(set, std::vector<Hyperplane>{}) == 0);
}
