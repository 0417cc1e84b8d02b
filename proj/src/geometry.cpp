#include "dotpairs/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace dotpairs {

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("point needs at least one coordinate");
    for (const Scalar& c : coords_) {
        if (c.field() != coords_.front().field()) {
            throw FieldMismatchError("point coordinates mix field backends");
        }
    }
}

bool Point::is_origin() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar& c) { return c.is_zero(); });
}

bool Point::operator==(const Point& other) const {
    if (dim() != other.dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        if (coords_[i] != other.coords_[i]) return false;
    }
    return true;
}

std::string Point::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        out += coords_[i].str();
    }
    return out + ")";
}

Scalar dot(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw DomainError("dot product dimension mismatch");
    Scalar sum = Scalar::zero(p.field());
    for (int i = 0; i < p.dim(); ++i) {
        sum = sum + p[i] * q[i];
    }
    return sum;
}

namespace {

std::string coord_key(const Point& p) {
    std::string out;
    for (int i = 0; i < p.dim(); ++i) {
        out += p[i].str();
        out += ',';
    }
    return out;
}

} // namespace

PointSet::PointSet(FieldSpec field, int dim, std::string label)
    : field_(field), dim_(dim), label_(std::move(label)) {
    if (dim_ < 2) throw DomainError("point sets need dimension >= 2");
}

void PointSet::add(Point p) {
    if (p.dim() != dim_) throw DomainError("point dimension != set dimension");
    if (p.field() != field_) throw FieldMismatchError("point field != set field");
    std::string key = coord_key(p);
    if (!seen_.insert(key).second) {
        throw DomainError("duplicate point " + p.str());
    }
    points_.push_back(std::move(p));
}

bool PointSet::contains(const Point& p) const {
    return seen_.count(coord_key(p)) > 0;
}

bool PointSet::operator==(const PointSet& other) const {
    return field_ == other.field_ && dim_ == other.dim_ && label_ == other.label_ &&
           points_ == other.points_;
}

Hyperplane::Hyperplane(std::vector<Scalar> normal, Scalar offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
    if (normal_.empty()) throw DomainError("hyperplane needs a normal vector");
    bool all_zero = true;
    for (const Scalar& c : normal_) {
        if (c.field() != offset_.field()) {
            throw FieldMismatchError("hyperplane mixes field backends");
        }
        if (!c.is_zero()) all_zero = false;
    }
    if (all_zero) throw DomainError("hyperplane normal is the zero vector");
}

bool Hyperplane::contains(const Point& p) const {
    if (p.dim() != dim()) throw DomainError("hyperplane/point dimension mismatch");
    Scalar sum = Scalar::zero(offset_.field());
    for (int i = 0; i < dim(); ++i) {
        sum = sum + normal_[i] * p[i];
    }
    return sum == offset_;
}

Hyperplane dual_hyperplane(const Point& p, const Scalar& gamma) {
    if (gamma.is_zero()) throw DomainError("dual hyperplane needs gamma != 0");
    if (p.is_origin()) throw DomainError("dual of the origin is empty, not a hyperplane");
    return Hyperplane(p.coords(), gamma);
}

long long hyperplane_weight(const Hyperplane& h, const PointSet& points) {
    if (points.size() > 0 && (h.dim() != points.dim() || h.field() != points.field())) {
        throw DomainError("hyperplane does not match the point set");
    }
    long long w = 0;
    for (const Point& p : points) {
        if (h.contains(p)) ++w;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Exact linear algebra for canonical flat keys.
//
// A flat is identified with the space of affine functionals a.x = c vanishing
// on it, written as vectors (a, -c) in F^{d+1}: the flat spanned by points
// p_i is the null space of the matrix with rows (p_i, 1), and the hyperplane
// n.x = c is span{(n, -c)}.  The reduced row-echelon form of a subspace basis
// is unique, so it canonically encodes the flat.
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

// In-place reduced row-echelon form; returns pivot columns and drops zero rows.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        std::swap(m[r], m[pivot_row]);
        const Scalar lead = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] / lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar factor = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r, std::vector<Scalar>());
    return pivots;
}

// Basis of {v : M v = 0} as rows, one per free column.
Matrix null_space_basis(Matrix m, const FieldSpec& field) {
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(cols, Scalar::zero(field));
        v[fc] = Scalar::one(field);
        for (std::size_t r = 0; r < m.size(); ++r) {
            v[pivots[r]] = -m[r][fc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Canonical text form of one RREF row.  Rational rows are scaled to coprime
// integers (positive scaling keeps the leading entry positive); prime rows
// are already canonical residues.
std::string encode_row(const std::vector<Scalar>& row, const FieldSpec& field) {
    std::string out;
    if (field.is_prime()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].str();
        }
        return out;
    }
    mpz_class lcm_den(1);
    for (const Scalar& s : row) {
        mpz_class den = s.rational_value().get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(row.size());
    mpz_class g(0);
    for (const Scalar& s : row) {
        mpq_class scaled = s.rational_value() * mpq_class(lcm_den);
        ints.push_back(scaled.get_num()); // denominator is 1 after scaling
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (g != 0) ints[i] /= g;
        if (i) out += ',';
        out += ints[i].get_str();
    }
    return out;
}

FlatKey encode_flat(const Matrix& canonical_rows, int ambient_dim, const FieldSpec& field) {
    const int flat_dim = ambient_dim - static_cast<int>(canonical_rows.size());
    std::ostringstream os;
    os << field.to_string() << "|d" << ambient_dim << "|f" << flat_dim << '|';
    for (std::size_t r = 0; r < canonical_rows.size(); ++r) {
        if (r) os << ';';
        os << encode_row(canonical_rows[r], field);
    }
    return FlatKey(os.str(), flat_dim);
}

void check_uniform(std::span<const Point> points) {
    if (points.empty()) throw DomainError("need at least one point");
    for (const Point& p : points) {
        if (p.dim() != points.front().dim() || p.field() != points.front().field()) {
            throw DomainError("points mix dimensions or fields");
        }
    }
}

// Canonical RREF rows of the vanishing-functional space of the points' hull.
Matrix hull_vanishing_rows(std::span<const Point> points) {
    const FieldSpec field = points.front().field();
    Matrix m;
    m.reserve(points.size());
    for (const Point& p : points) {
        std::vector<Scalar> row = p.coords();
        row.push_back(Scalar::one(field));
        m.push_back(std::move(row));
    }
    Matrix basis = null_space_basis(std::move(m), field);
    rref(basis);
    return basis;
}

} // namespace

AffineHull affine_hull_key(std::span<const Point> points) {
    check_uniform(points);
    const FieldSpec field = points.front().field();
    const int d = points.front().dim();
    Matrix rows = hull_vanishing_rows(points);
    FlatKey key = encode_flat(rows, d, field);
    return AffineHull{std::move(key), d - static_cast<int>(rows.size())};
}

FlatKey hyperplane_key(const Hyperplane& h) {
    Matrix m(1);
    m[0] = h.normal();
    m[0].push_back(-h.offset());
    rref(m);
    return encode_flat(m, h.dim(), h.field());
}

std::optional<Hyperplane> hull_hyperplane(std::span<const Point> points) {
    check_uniform(points);
    Matrix rows = hull_vanishing_rows(points);
    if (rows.size() != 1) return std::nullopt;
    std::vector<Scalar> normal(rows[0].begin(), rows[0].end() - 1);
    Scalar offset = -rows[0].back();
    return Hyperplane(std::move(normal), std::move(offset));
}

bool collinear(const Point& a, const Point& b, const Point& c) {
    const int d = a.dim();
    std::vector<Scalar> u, v;
    u.reserve(d);
    v.reserve(d);
    for (int i = 0; i < d; ++i) {
        u.push_back(b[i] - a[i]);
        v.push_back(c[i] - a[i]);
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (u[i] * v[j] != u[j] * v[i]) return false;
        }
    }
    return true;
}

namespace {

// Visits every k-subset of [0, n).
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Point> gather(const PointSet& points, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(points[i]);
    return out;
}

// Max points of P on any (d-2)-flat spanned by a (d-1)-subset, plus witness.
// Assumes the non-degenerate case (hull of P has dimension > d-2).
std::pair<long long, std::optional<FlatKey>> max_subflat_points(const PointSet& points) {
    const int d = points.dim();
    const std::size_t n = points.size();
    if (d == 2) {
        // (d-2)-flats are single points, and P is duplicate-free.
        if (n == 0) return {0, std::nullopt};
        auto hull = affine_hull_key(std::span(&points[0], 1));
        return {1, hull.key};
    }
    long long best = 0;
    std::optional<FlatKey> witness;
    std::unordered_set<FlatKey> seen;
    for_each_subset(n, static_cast<std::size_t>(d - 1), [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> subset = gather(points, idx);
        AffineHull hull = affine_hull_key(subset);
        if (hull.dim != d - 2) return;
        if (!seen.insert(hull.key).second) return;
        long long count = 0;
        if (d == 3) {
            // hull is a line through the first two subset points
            for (const Point& p : points) {
                if (collinear(subset[0], subset[1], p)) ++count;
            }
        } else {
            for (const Point& p : points) {
                std::vector<Point> extended = subset;
                extended.push_back(p);
                if (affine_hull_key(extended).dim == d - 2) ++count;
            }
        }
        if (count > best) {
            best = count;
            witness = hull.key;
        }
    });
    return {best, witness};
}

} // namespace

FlatStats flat_stats(const PointSet& points) {
    FlatStats stats;
    const std::size_t n = points.size();
    if (n == 0) return stats;
    const int d = points.dim();

    std::vector<Point> all(points.begin(), points.end());
    AffineHull ambient = affine_hull_key(all);

    if (ambient.dim <= d - 1) {
        // Degenerate: all of P inside one flat, so some hyperplane holds everything.
        stats.s_star = static_cast<long long>(n);
        stats.hyperplane_witness = ambient.key;
    } else {
        std::unordered_set<FlatKey> seen;
        for_each_subset(n, static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& idx) {
            std::vector<Point> subset = gather(points, idx);
            std::optional<Hyperplane> h = hull_hyperplane(subset);
            if (!h) return;
            FlatKey key = hyperplane_key(*h);
            if (!seen.insert(key).second) return;
            long long w = hyperplane_weight(*h, points);
            if (w > stats.s_star) {
                stats.s_star = w;
                stats.hyperplane_witness = key;
            }
        });
    }

    if (ambient.dim <= d - 2) {
        stats.t_star = static_cast<long long>(n);
        stats.subflat_witness = ambient.key;
    } else {
        auto [t, witness] = max_subflat_points(points);
        stats.t_star = t;
        stats.subflat_witness = witness;
    }
    return stats;
}

RichnessHistogram::RichnessHistogram(Kind kind, long long n,
                                     std::map<long long, long long> counts,
                                     long long zero_weight, long long k_min,
                                     long long infinite_floor, bool origin_warning)
    : kind_(kind),
      n_(n),
      counts_(std::move(counts)),
      zero_weight_(zero_weight),
      k_min_(k_min),
      infinite_floor_(infinite_floor),
      origin_warning_(origin_warning) {
    if (kind_ == Kind::all_g && k_min_ > 0) {
        capped_ = infinite_detected() || count_at_least(k_min_) > n_;
    }
}

long long RichnessHistogram::count_exact(long long k) const {
    if (k == 0) return zero_weight_;
    auto it = counts_.find(k);
    return it == counts_.end() ? 0 : it->second;
}

long long RichnessHistogram::count_at_least(long long k) const {
    long long total = 0;
    for (auto it = counts_.lower_bound(k); it != counts_.end(); ++it) {
        total += it->second;
    }
    return total;
}

long long RichnessHistogram::max_weight() const {
    long long from_counts = counts_.empty() ? 0 : counts_.rbegin()->first;
    return std::max(from_counts, infinite_floor_);
}

long long RichnessHistogram::g(long long k) const {
    if (kind_ != Kind::all_g) throw DomainError("g(k) is defined on all_g histograms");
    if (k < k_min_) throw DomainError("g(k) queried below k_min");
    if (k <= infinite_floor_) return n_; // a pencil of hyperplanes repeats this weight
    return std::min(count_at_least(k), n_);
}

long long RichnessHistogram::g_exact(long long k) const { return g(k) - g(k + 1); }

long long RichnessHistogram::weighted_sum() const {
    long long total = 0;
    for (const auto& [k, c] : counts_) total += k * c;
    return total;
}

long long RichnessHistogram::weighted_square_sum() const {
    long long total = 0;
    for (const auto& [k, c] : counts_) total += k * k * c;
    return total;
}

RichnessHistogram dual_richness_histogram(const PointSet& points, const Scalar& gamma) {
    if (gamma.is_zero()) throw DomainError("dual histogram needs gamma != 0");
    if (points.size() > 0 && gamma.field() != points.field()) {
        throw FieldMismatchError("gamma field != point set field");
    }
    std::map<long long, long long> counts;
    long long zero_weight = 0;
    bool origin_warning = false;
    for (const Point& p : points) {
        if (p.is_origin()) {
            // Empty dual: weight 0, excluded from distinctness claims.
            origin_warning = true;
            ++zero_weight;
            continue;
        }
        long long w = 0;
        for (const Point& q : points) {
            if (dot(p, q) == gamma) ++w;
        }
        if (w == 0) {
            ++zero_weight;
        } else {
            ++counts[w];
        }
    }
    return RichnessHistogram(RichnessHistogram::Kind::dual_f,
                             static_cast<long long>(points.size()), std::move(counts),
                             zero_weight, 0, 0, origin_warning);
}

RichnessHistogram spanned_richness_histogram(const PointSet& points, long long k_min) {
    const int d = points.dim();
    if (d > 3) throw DomainError("spanned histogram supports d in {2,3} only");
    if (k_min < 2) throw DomainError("spanned histogram needs k_min >= 2");
    const std::size_t n = points.size();

    std::map<long long, long long> counts;
    std::unordered_set<FlatKey> seen;
    for_each_subset(n, static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> subset = gather(points, idx);
        std::optional<Hyperplane> h = hull_hyperplane(subset);
        if (!h) return;
        FlatKey key = hyperplane_key(*h);
        if (!seen.insert(key).second) return;
        ++counts[hyperplane_weight(*h, points)];
    });

    // Levels at or below the richest (d-2)-flat repeat across an infinite
    // pencil of hyperplanes; g_k is capped at n there.
    long long infinite_floor = 0;
    if (d == 3) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                long long c = 0;
                for (const Point& p : points) {
                    if (collinear(points[i], points[j], p)) ++c;
                }
                infinite_floor = std::max(infinite_floor, c);
            }
        }
    } else if (n >= 1) {
        infinite_floor = 1; // every point lies on infinitely many lines
    }

    return RichnessHistogram(RichnessHistogram::Kind::all_g, static_cast<long long>(n),
                             std::move(counts), 0, k_min, infinite_floor, false);
}

bool k2t_free(std::span<const Hyperplane> hyperplanes, const PointSet& points, long long t) {
    if (t < 1) throw DomainError("k2t_free needs t >= 1");
    std::unordered_set<FlatKey> keys;
    for (const Hyperplane& h : hyperplanes) {
        if (!keys.insert(hyperplane_key(h)).second) {
            throw DomainError("k2t_free needs distinct hyperplanes");
        }
    }
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
            long long shared = 0;
            for (const Point& p : points) {
                if (hyperplanes[i].contains(p) && hyperplanes[j].contains(p)) ++shared;
            }
            if (shared >= t) return false;
        }
    }
    return true;
}

long long incidence_count(const PointSet& points, std::span<const Hyperplane> hyperplanes) {
    long long total = 0;
    for (const Hyperplane& h : hyperplanes) {
        total += hyperplane_weight(h, points);
    }
    return total;
}

} // namespace dotpairs
