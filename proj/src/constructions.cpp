#include "dotpairs/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace dotpairs {

bool ConstructionReport::all_pass() const {
    return std::all_of(constraints.begin(), constraints.end(),
                       [](const ConstraintCheck& c) { return c.pass; });
}

namespace {

const FieldSpec kRationals = FieldSpec::rationals();

Scalar rat(long long num, long long den = 1) { return Scalar::rational(num, den); }

Scalar rat_q(const mpq_class& v) { return Scalar::rational(v); }

// gmpxx only converts from long, not long long
mpq_class qq(long long v) { return mpq_class(static_cast<long>(v)); }

long long measure_pi(const PointSet& points, const Scalar& alpha, const Scalar& beta) {
    // Brute force stays affordable at small n; above that the fast counter is
    // oracle-equivalent (asserted by the test battery).
    if (points.size() <= 60) return count_pi_bruteforce(points, alpha, beta).total;
    return count_pi_fast(points, alpha, beta).total;
}

mpq_class squared_distance(const Point& a, const Point& b) {
    mpq_class total(0);
    for (int i = 0; i < a.dim(); ++i) {
        mpq_class diff = a[i].rational_value() - b[i].rational_value();
        total += diff * diff;
    }
    return total;
}

// Deterministic point placements for the two parameterized constructions.
// Exposed to both the generators and the validator so validation never
// depends on generator state.

struct LineFanLayout {
    std::vector<Point> base;              // (i, i^2)
    std::vector<std::vector<Point>> fans; // s-1 points on each dual line
};

LineFanLayout line_fan_layout(long long n, long long s, int attempt) {
    LineFanLayout layout;
    const long long groups = n / s;
    for (long long i = 1; i <= groups; ++i) {
        layout.base.emplace_back(std::vector<Scalar>{rat(i), rat(i * i)});
        std::vector<Point> fan;
        for (long long j = 1; j <= s - 1; ++j) {
            // On the dual line i*x + i^2*y = 1.  Base x = j + 1/(i+1); each
            // retry shrinks an extra term j/(i+1)^(attempt+1) into the slot.
            mpq_class x = qq(j) + mpq_class(1) / qq(i + 1);
            if (attempt > 0) {
                mpz_class denom;
                mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(i + 1),
                              static_cast<unsigned long>(attempt + 1));
                x += mpq_class(mpz_class(static_cast<long>(j)), denom);
            }
            mpq_class y = (1 - qq(i) * x) / qq(i * i);
            fan.emplace_back(std::vector<Scalar>{rat_q(x), rat_q(y)});
        }
        layout.fans.push_back(std::move(fan));
    }
    return layout;
}

struct SeparatedGridLayout {
    std::vector<Point> pivots;             // r_j = (3*eps*j/2, 1/2)
    std::vector<std::vector<Point>> lines; // Q_j, m points each
};

SeparatedGridLayout separated_grid_layout(long long n, long long m) {
    SeparatedGridLayout layout;
    const long long lines = n / m;
    const mpq_class eps = mpq_class(1) / qq(3 * m);
    for (long long j = 1; j <= lines; ++j) {
        layout.pivots.emplace_back(
            std::vector<Scalar>{rat_q(eps * qq(3 * j) / 2), rat(1, 2)});
        std::vector<Point> q;
        const mpq_class slope = eps * qq(3 * j); // line y = 1 - slope * x
        for (long long k = 0; k < m; ++k) {
            mpq_class x = mpq_class(2, 3) + qq(k) * eps;
            q.emplace_back(std::vector<Scalar>{rat_q(x), rat_q(1 - slope * x)});
        }
        layout.lines.push_back(std::move(q));
    }
    return layout;
}

void check_line_fan_params(long long n, long long s) {
    if (s < 2) throw DomainError("line-fan needs s >= 2");
    if (n < s || n % s != 0) {
        throw DomainError("line-fan needs s | n with n/s >= 1 (got n=" +
                          std::to_string(n) + ", s=" + std::to_string(s) + ")");
    }
}

void check_separated_grid_params(long long n, long long m) {
    if (m < 1 || n < 1) throw DomainError("separated-grid needs n, m >= 1");
    if (n % m != 0) throw DomainError("separated-grid needs m | n");
    if (n >= m * m) {
        throw DomainError("separated-grid needs n < m^2 (eps below the packing limit)");
    }
}

std::string fmt_params(const ConstructionParams& p) {
    std::ostringstream os;
    os << p.name;
    if (p.n) os << " n=" << p.n;
    if (p.s) os << " s=" << p.s;
    if (p.m) os << " m=" << p.m;
    if (p.k) os << " k=" << p.k;
    if (p.a_count) os << " a=" << p.a_count;
    if (p.beta) os << " beta=" << p.beta->str();
    return os.str();
}

} // namespace

ConstructionReport validate_construction(const PointSet& points,
                                         const ConstructionParams& params) {
    ConstructionReport report;
    report.construction = params.name;
    auto add = [&](const std::string& name, bool pass, std::string detail = "") {
        report.constraints.push_back(ConstraintCheck{name, pass, std::move(detail)});
    };
    auto param = [&](const std::string& key, long long v) {
        report.parameters.emplace_back(key, std::to_string(v));
    };

    if (params.name == "line-fan") {
        check_line_fan_params(params.n, params.s);
        param("n", params.n);
        param("s", params.s);
        report.alpha = report.beta = rat(1);
        report.claimed_lower_bound = (params.n / params.s) * (params.s - 1) * (params.s - 1);
        add("point_count", static_cast<long long>(points.size()) == params.n,
            "expected " + std::to_string(params.n) + ", got " + std::to_string(points.size()));
        FlatStats stats = flat_stats(points);
        add("no_s_collinear", stats.s_star < params.s,
            "s_star=" + std::to_string(stats.s_star) +
                (stats.hyperplane_witness ? " witness " + stats.hyperplane_witness->encoding()
                                          : ""));
        report.measured_pi = measure_pi(points, report.alpha, report.beta);
        add("pi_lower_bound", report.measured_pi >= report.claimed_lower_bound,
            "pi=" + std::to_string(report.measured_pi) +
                " >= " + std::to_string(report.claimed_lower_bound));
        return report;
    }

    if (params.name == "separated-grid") {
        check_separated_grid_params(params.n, params.m);
        param("n", params.n);
        param("m", params.m);
        report.alpha = report.beta = rat(1, 2);
        report.claimed_lower_bound = params.n * params.m; // n * eps^{-1} / 3
        const long long expected = params.n + params.n / params.m;
        add("point_count", static_cast<long long>(points.size()) == expected,
            "expected " + std::to_string(expected) + ", got " + std::to_string(points.size()));

        bool in_box = true;
        for (const Point& p : points) {
            for (int i = 0; i < 2; ++i) {
                const mpq_class& v = p[i].rational_value();
                if (v < 0 || v > 1) in_box = false;
            }
        }
        add("inside_unit_square", in_box);

        const mpq_class eps = mpq_class(1) / qq(3 * params.m);
        const mpq_class eps_sq = eps * eps;
        bool separated = true;
        std::string sep_detail;
        for (std::size_t i = 0; i < points.size() && separated; ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                if (squared_distance(points[i], points[j]) < eps_sq) {
                    separated = false;
                    sep_detail = points[i].str() + " vs " + points[j].str();
                    break;
                }
            }
        }
        add("pairwise_separation", separated, sep_detail);

        SeparatedGridLayout layout = separated_grid_layout(params.n, params.m);
        bool pivot_dots = true;
        std::string pivot_detail;
        for (std::size_t j = 0; j < layout.pivots.size() && pivot_dots; ++j) {
            if (!points.contains(layout.pivots[j])) {
                pivot_dots = false;
                pivot_detail = "missing pivot " + layout.pivots[j].str();
                break;
            }
            for (const Point& q : layout.lines[j]) {
                if (!points.contains(q) || dot(layout.pivots[j], q) != report.alpha) {
                    pivot_dots = false;
                    pivot_detail = "pivot " + layout.pivots[j].str() + " vs " + q.str();
                    break;
                }
            }
        }
        add("pivot_dot_products", pivot_dots, pivot_detail);

        report.measured_pi = measure_pi(points, report.alpha, report.beta);
        add("pi_lower_bound", report.measured_pi >= report.claimed_lower_bound,
            "pi=" + std::to_string(report.measured_pi) +
                " >= " + std::to_string(report.claimed_lower_bound));
        return report;
    }

    if (params.name == "pencil") {
        if (params.k < 1) throw DomainError("pencil needs k >= 1");
        param("k", params.k);
        report.alpha = report.beta = rat(1);
        report.claimed_lower_bound = params.k * params.k;
        add("point_count", static_cast<long long>(points.size()) == params.k + 1);
        add("apex_present", points.contains(Point({rat(1), rat(1)})));
        long long on_line = 0;
        for (const Point& p : points) {
            if (p[0] + p[1] == rat(1)) ++on_line;
        }
        add("points_on_line", on_line == params.k,
            std::to_string(on_line) + " on x+y=1, expected " + std::to_string(params.k));
        report.measured_pi = measure_pi(points, report.alpha, report.beta);
        add("pi_lower_bound", report.measured_pi >= report.claimed_lower_bound,
            "pi=" + std::to_string(report.measured_pi) +
                " >= " + std::to_string(report.claimed_lower_bound));
        return report;
    }

    if (params.name == "highdim-cubic") {
        if (params.a_count < 1) throw DomainError("highdim-cubic needs a_count >= 1");
        if (!params.beta) throw DomainError("highdim-cubic needs beta");
        const Scalar& beta = *params.beta;
        param("a_count", params.a_count);
        report.parameters.emplace_back("beta", beta.str());
        report.alpha = report.beta = beta;
        report.claimed_lower_bound = params.a_count * params.a_count * params.a_count;
        add("point_count", static_cast<long long>(points.size()) == 2 * params.a_count);
        bool structure = true;
        std::string missing;
        for (long long a = 1; a <= params.a_count; ++a) {
            Point first({rat(a), rat(0), beta});
            Point second({rat(0), rat(a), rat(1)});
            if (!points.contains(first)) { structure = false; missing = first.str(); break; }
            if (!points.contains(second)) { structure = false; missing = second.str(); break; }
        }
        add("structure", structure, missing);
        report.measured_pi = measure_pi(points, report.alpha, report.beta);
        add("pi_lower_bound", report.measured_pi >= report.claimed_lower_bound,
            "pi=" + std::to_string(report.measured_pi) +
                " >= " + std::to_string(report.claimed_lower_bound));
        return report;
    }

    throw DomainError("unknown construction '" + params.name + "'");
}

PointSet gen_line_fan(long long n, long long s) {
    check_line_fan_params(n, s);
    ConstructionParams params;
    params.name = "line-fan";
    params.n = n;
    params.s = s;
    std::string last_failure;
    for (int attempt = 0; attempt < 16; ++attempt) {
        LineFanLayout layout = line_fan_layout(n, s, attempt);
        PointSet points(kRationals, 2, fmt_params(params));
        bool duplicate = false;
        try {
            for (const Point& p : layout.base) points.add(p);
            for (const auto& fan : layout.fans) {
                for (const Point& p : fan) points.add(p);
            }
        } catch (const DomainError&) {
            duplicate = true;
        }
        if (duplicate) {
            last_failure = "duplicate point in layout";
            continue;
        }
        ConstructionReport report = validate_construction(points, params);
        if (report.all_pass()) return points;
        for (const ConstraintCheck& c : report.constraints) {
            if (!c.pass) last_failure = c.name + " " + c.detail;
        }
    }
    throw ValidationError("line-fan(" + std::to_string(n) + "," + std::to_string(s) +
                          "): jitter schedule exhausted; last failure: " + last_failure);
}

PointSet gen_separated_grid(long long n, long long m) {
    check_separated_grid_params(n, m);
    ConstructionParams params;
    params.name = "separated-grid";
    params.n = n;
    params.m = m;
    SeparatedGridLayout layout = separated_grid_layout(n, m);
    PointSet points(kRationals, 2, fmt_params(params));
    for (std::size_t j = 0; j < layout.lines.size(); ++j) {
        for (const Point& p : layout.lines[j]) points.add(p);
    }
    for (const Point& p : layout.pivots) points.add(p);
    ConstructionReport report = validate_construction(points, params);
    if (!report.all_pass()) {
        std::string why;
        for (const ConstraintCheck& c : report.constraints) {
            if (!c.pass) why += c.name + " ";
        }
        // The layout is fully deterministic, so this means the parameters are
        // outside the valid regime.
        throw ValidationError("separated-grid(" + std::to_string(n) + "," +
                              std::to_string(m) + ") failed validation: " + why);
    }
    return points;
}

PointSet gen_pencil(long long k) {
    if (k < 1) throw DomainError("pencil needs k >= 1");
    ConstructionParams params;
    params.name = "pencil";
    params.k = k;
    PointSet points(kRationals, 2, fmt_params(params));
    points.add(Point({rat(1), rat(1)}));
    for (long long j = 1; j <= k; ++j) {
        points.add(Point({rat(j), rat(1 - j)}));
    }
    ConstructionReport report = validate_construction(points, params);
    if (!report.all_pass()) throw ValidationError("pencil failed validation");
    return points;
}

PointSet gen_highdim_cubic(long long a_count, const Scalar& beta) {
    if (a_count < 1) throw DomainError("highdim-cubic needs a_count >= 1");
    if (!beta.field().is_rational()) {
        throw DomainError("highdim-cubic emits rational points; beta must be rational");
    }
    if (beta.is_zero()) throw DomainError("highdim-cubic needs beta != 0");
    ConstructionParams params;
    params.name = "highdim-cubic";
    params.a_count = a_count;
    params.beta = beta;
    PointSet points(kRationals, 3, fmt_params(params));
    for (long long a = 1; a <= a_count; ++a) {
        points.add(Point({rat(a), rat(0), beta}));
    }
    for (long long a = 1; a <= a_count; ++a) {
        points.add(Point({rat(0), rat(a), rat(1)}));
    }
    ConstructionReport report = validate_construction(points, params);
    if (!report.all_pass()) throw ValidationError("highdim-cubic failed validation");
    return points;
}

} // namespace dotpairs
