#ifndef DOTPAIRS_GEOMETRY_HPP
#define DOTPAIRS_GEOMETRY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "dotpairs/scalar.hpp"

namespace dotpairs {

class Point {
public:
    explicit Point(std::vector<Scalar> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const FieldSpec& field() const { return coords_.front().field(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_origin() const;
    bool operator==(const Point& other) const;
    std::string str() const; // "(1, -1/2)"

private:
    std::vector<Scalar> coords_;
};

Scalar dot(const Point& p, const Point& q);

// A duplicate-free, ordered collection of d-dimensional points over one
// field backend.
class PointSet {
public:
    PointSet(FieldSpec field, int dim, std::string label = "");

    void add(Point p); // throws on dim/field mismatch or duplicate
    bool contains(const Point& p) const;

    std::size_t size() const { return points_.size(); }
    int dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const Point& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool operator==(const PointSet& other) const;

private:
    FieldSpec field_;
    int dim_;
    std::string label_;
    std::vector<Point> points_;
    std::unordered_set<std::string> seen_; // canonical coord strings
};

// The solution set {x : normal . x = offset}; normal is never the zero vector.
class Hyperplane {
public:
    Hyperplane(std::vector<Scalar> normal, Scalar offset);

    int dim() const { return static_cast<int>(normal_.size()); }
    const FieldSpec& field() const { return offset_.field(); }
    const std::vector<Scalar>& normal() const { return normal_; }
    const Scalar& offset() const { return offset_; }
    bool contains(const Point& p) const;

private:
    std::vector<Scalar> normal_;
    Scalar offset_;
};

// Dual of a point: {x : p . x = gamma}.  Requires gamma != 0 and p != 0.
Hyperplane dual_hyperplane(const Point& p, const Scalar& gamma);

long long hyperplane_weight(const Hyperplane& h, const PointSet& points);

// Canonical, hashable identity of an affine flat.  Two flats compare equal
// exactly when they are equal as point sets: the key is the reduced
// row-echelon form of the flat's full system of vanishing affine functionals
// (integerized over the rationals, leading entries positive).
class FlatKey {
public:
    FlatKey(std::string encoding, int flat_dim)
        : encoding_(std::move(encoding)), flat_dim_(flat_dim) {}

    int flat_dim() const { return flat_dim_; }
    const std::string& encoding() const { return encoding_; }
    bool operator==(const FlatKey& other) const { return encoding_ == other.encoding_; }
    bool operator<(const FlatKey& other) const { return encoding_ < other.encoding_; }

private:
    std::string encoding_;
    int flat_dim_;
};

struct AffineHull {
    FlatKey key;
    int dim; // dimension of the hull as an affine flat, 0..d
};

// Canonical key of the affine hull of the given points (>= 1, shared
// field/dimension), independent of the order or choice of spanning tuple.
AffineHull affine_hull_key(std::span<const Point> points);

FlatKey hyperplane_key(const Hyperplane& h);

// The hyperplane spanned by the points, when their hull has dimension
// exactly d-1; nullopt otherwise.
std::optional<Hyperplane> hull_hyperplane(std::span<const Point> points);

// Exact 2x2-minor test, any ambient dimension.
bool collinear(const Point& a, const Point& b, const Point& c);

struct FlatStats {
    long long s_star = 0; // max |h cap P| over hyperplanes h
    long long t_star = 0; // max points of P on any (d-2)-plane
    std::optional<FlatKey> hyperplane_witness;
    std::optional<FlatKey> subflat_witness;
};

// Exhaustive exact computation by enumerating hulls of d-subsets (and
// (d-1)-subsets for t_star), with the degenerate all-in-one-flat cases
// returning n and the ambient hull as witness.
FlatStats flat_stats(const PointSet& points);

// Weight histogram of either the dual family {h_gamma(p) : p in P} (dual_f)
// or of all hyperplanes spanned by P, with the g_k = min(g'_k, n) cap and
// infinite-family detection (all_g).
class RichnessHistogram {
public:
    enum class Kind { dual_f, all_g };

    Kind kind() const { return kind_; }
    long long n() const { return n_; }
    long long k_min() const { return k_min_; }

    // counts[k] for k >= 1: number of hyperplanes of weight exactly k.
    const std::map<long long, long long>& counts() const { return counts_; }
    long long count_exact(long long k) const;    // k == 0 -> zero-weight duals
    long long count_at_least(long long k) const; // raw suffix sum (f_k or g'_k)
    long long max_weight() const;

    // all_g accessors, capped at n; k below the infinite-family threshold
    // reports n directly (a pencil of hyperplanes repeats that weight).
    long long g(long long k) const;
    long long g_exact(long long k) const; // g_k - g_{k+1}
    bool capped() const { return capped_; }
    bool infinite_detected() const { return infinite_floor_ >= k_min_ && k_min_ > 0; }

    // dual_f: P contained the origin, whose empty dual has weight 0 and is
    // excluded from distinctness claims.
    bool origin_warning() const { return origin_warning_; }

    long long weighted_sum() const;        // sum k * count_exact(k)  (= incidences)
    long long weighted_square_sum() const; // sum k^2 * count_exact(k)

    RichnessHistogram(Kind kind, long long n, std::map<long long, long long> counts,
                      long long zero_weight, long long k_min, long long infinite_floor,
                      bool origin_warning);

private:
    Kind kind_;
    long long n_;
    std::map<long long, long long> counts_;
    long long zero_weight_;
    long long k_min_;          // all_g: smallest valid query level
    long long infinite_floor_; // all_g: max weight repeated by a hyperplane pencil
    bool origin_warning_;
    bool capped_ = false;
};

// Weights wt(h_gamma(p)) over p in P, gamma != 0.  An origin point in P is
// tolerated: its empty dual contributes weight 0 and raises origin_warning.
RichnessHistogram dual_richness_histogram(const PointSet& points, const Scalar& gamma);

// Distinct hyperplanes spanned by affinely independent d-subsets of P,
// d in {2,3}, k_min >= 2.  In d=3 a line through >= k points of P puts a
// whole pencil of planes at that weight; such levels report g_k = n.
RichnessHistogram spanned_richness_histogram(const PointSet& points, long long k_min);

// True iff every pairwise intersection of the (distinct) hyperplanes holds
// fewer than t points of P.
bool k2t_free(std::span<const Hyperplane> hyperplanes, const PointSet& points, long long t);

long long incidence_count(const PointSet& points, std::span<const Hyperplane> hyperplanes);

} // namespace dotpairs

template <>
struct std::hash<dotpairs::FlatKey> {
    std::size_t operator()(const dotpairs::FlatKey& k) const {
        return std::hash<std::string>{}(k.encoding());
    }
};

#endif
