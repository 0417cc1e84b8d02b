#include "dotpairs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dotpairs {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::report_only: return "report_only";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

namespace {

BoundReport base_report(const std::string& id, const PointSet& points) {
    BoundReport r;
    r.bound_id = id;
    r.n = static_cast<long long>(points.size());
    r.d = points.dim();
    r.field_label = points.field().to_string();
    return r;
}

void fill_ratio(BoundReport& r) {
    r.ratio = r.rhs > 0 ? static_cast<double>(r.lhs) / r.rhs : 0.0;
}

FlatStats stats_or(const PointSet& points, const FlatStats* precomputed) {
    return precomputed ? *precomputed : flat_stats(points);
}

} // namespace

BoundReport check_incidence_lemma(const PointSet& points, const Scalar& alpha,
                                  const Scalar& beta) {
    const long long pi = count_pi_fast(points, alpha, beta).total;
    BoundReport r = base_report("incidence_lemma", points);
    long long sum_alpha = 0, sum_beta = 0;
    if (points.size() > 0) {
        sum_alpha = dual_richness_histogram(points, alpha).weighted_square_sum();
        sum_beta = alpha == beta ? sum_alpha
                                 : dual_richness_histogram(points, beta).weighted_square_sum();
    }
    const bool alpha_heavier = sum_alpha >= sum_beta;
    const long long rhs = 2 * std::max(sum_alpha, sum_beta);
    r.lhs = pi;
    r.rhs = static_cast<double>(rhs);
    r.rhs_exact = true;
    fill_ratio(r);
    r.note = std::string("gamma=") + (alpha_heavier ? "alpha" : "beta");
    // pi < rhs whenever pi > 0; both sides 0 is the degenerate non-strict case.
    const bool ok = pi == 0 ? pi <= rhs : pi < rhs;
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    return r;
}

BoundReport check_s2n(const PointSet& points, const Scalar& alpha, const Scalar& beta,
                      const FlatStats* precomputed) {
    BoundReport r = base_report("s2n", points);
    if (points.size() == 0) {
        r.verdict = Verdict::report_only;
        r.note = "empty set";
        return r;
    }
    const FlatStats stats = stats_or(points, precomputed);
    r.s = stats.s_star + 1;
    r.t = stats.t_star + 1;
    r.lhs = count_pi_fast(points, alpha, beta).total;
    const long long rhs = 2 * r.s * r.s * r.n;
    r.rhs = static_cast<double>(rhs);
    r.rhs_exact = true;
    fill_ratio(r);
    r.verdict = r.lhs < rhs ? Verdict::pass : Verdict::fail;
    return r;
}

BoundReport check_general_plane(const PointSet& points, const Scalar& alpha,
                                const Scalar& beta, const FlatStats* precomputed) {
    if (points.dim() != 2) throw DomainError("general-plane bound needs d = 2");
    BoundReport r = base_report("general_plane", points);
    if (points.size() == 0) {
        r.verdict = Verdict::pass;
        r.note = "empty set (vacuous)";
        return r;
    }
    const FlatStats stats = stats_or(points, precomputed);
    r.s = stats.s_star + 1;
    r.t = stats.t_star + 1;
    r.lhs = count_pi_fast(points, alpha, beta).total;
    const long long rhs = std::min(2 * r.s * r.s * r.n, 4 * r.n * r.n);
    r.rhs = static_cast<double>(rhs);
    r.rhs_exact = true;
    fill_ratio(r);
    r.verdict = r.lhs < rhs ? Verdict::pass : Verdict::fail;
    return r;
}

std::vector<BoundReport> check_general_highdim(const PointSet& points, const Scalar& alpha,
                                               const Scalar& beta,
                                               const FlatStats* precomputed) {
    std::vector<BoundReport> out;
    BoundReport hard = base_report("general_highdim_s2n", points);
    BoundReport soft = base_report("general_highdim_tn2", points);
    if (points.size() == 0) {
        hard.verdict = Verdict::pass;
        hard.note = "empty set (vacuous)";
        soft.verdict = Verdict::report_only;
        soft.note = "empty set";
        out.push_back(hard);
        out.push_back(soft);
        return out;
    }
    const FlatStats stats = stats_or(points, precomputed);
    const long long pi = count_pi_fast(points, alpha, beta).total;
    for (BoundReport* r : {&hard, &soft}) {
        r->s = stats.s_star + 1;
        r->t = stats.t_star + 1;
        r->lhs = pi;
    }
    const long long hard_rhs = 2 * hard.s * hard.s * hard.n;
    hard.rhs = static_cast<double>(hard_rhs);
    hard.rhs_exact = true;
    fill_ratio(hard);
    hard.verdict = pi < hard_rhs ? Verdict::pass : Verdict::fail;

    soft.rhs = static_cast<double>(soft.t) * soft.n * soft.n;
    fill_ratio(soft);
    soft.verdict = Verdict::report_only;
    soft.note = "O(t n^2) part; constant unknown";
    out.push_back(hard);
    out.push_back(soft);
    return out;
}

namespace {

long long seq_at(const std::vector<long long>& v, long long k, long long horizon) {
    if (k < 1 || k > horizon) return 0;
    return k <= static_cast<long long>(v.size()) ? v[k - 1] : 0;
}

long long telescoped_square_sum(const std::vector<long long>& v, long long horizon) {
    long long total = 0;
    for (long long k = 1; k <= horizon; ++k) {
        total += k * k * (seq_at(v, k, horizon) - seq_at(v, k + 1, horizon));
    }
    return total;
}

void check_majorant_hypotheses(const MajorantPair& pair) {
    if (pair.horizon < 0) throw DomainError("majorant horizon must be >= 0");
    auto check_seq = [](const std::vector<long long>& v, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw DomainError(std::string(name) + " has a negative entry");
            if (i > 0 && v[i] > v[i - 1]) {
                throw DomainError(std::string(name) + " is not non-increasing");
            }
        }
    };
    check_seq(pair.f, "f");
    check_seq(pair.g, "g");
    const std::size_t len = std::max(pair.f.size(), pair.g.size());
    for (std::size_t i = 0; i < len; ++i) {
        const long long fv = i < pair.f.size() ? pair.f[i] : 0;
        const long long gv = i < pair.g.size() ? pair.g[i] : 0;
        if (fv > gv) throw DomainError("f exceeds g at level " + std::to_string(i + 1));
    }
    for (std::size_t i = pair.horizon; i < pair.f.size(); ++i) {
        if (pair.f[i] != 0) {
            throw DomainError("f has support beyond the horizon at level " +
                              std::to_string(i + 1));
        }
    }
}

} // namespace

BoundReport check_majorant_lemma(const MajorantPair& pair) {
    check_majorant_hypotheses(pair);
    BoundReport r;
    r.bound_id = "majorant";
    r.n = static_cast<long long>(std::max(pair.f.size(), pair.g.size()));
    r.s = pair.horizon;
    r.lhs = telescoped_square_sum(pair.f, pair.horizon);
    const long long rhs = telescoped_square_sum(pair.g, pair.horizon);
    r.rhs = static_cast<double>(rhs);
    r.rhs_exact = true;
    fill_ratio(r);
    r.verdict = r.lhs <= rhs ? Verdict::pass : Verdict::fail;
    return r;
}

std::vector<BoundReport> envelope_ratios(const PointSet& points, const Scalar& alpha,
                                         const Scalar& beta, const EnvelopeOptions& options,
                                         const FlatStats* precomputed) {
    std::vector<BoundReport> out;
    auto skipped = [&](const std::string& id, const std::string& why) {
        BoundReport r = base_report(id, points);
        r.verdict = Verdict::skipped;
        r.note = why;
        out.push_back(std::move(r));
    };
    if (points.size() == 0) {
        for (const char* id : {"envelope_r2", "envelope_fp2", "envelope_f3_rudnev",
                               "envelope_rd", "envelope_density"}) {
            skipped(id, "empty set");
        }
        return out;
    }

    const FlatStats stats = stats_or(points, precomputed);
    const long long pi = count_pi_fast(points, alpha, beta).total;
    const double n = static_cast<double>(points.size());
    const long long s = stats.s_star + 1;
    const long long t = stats.t_star + 1;
    const int d = points.dim();
    const bool rational = points.field().is_rational();

    auto report = [&](const std::string& id, double envelope, std::string note) {
        BoundReport r = base_report(id, points);
        r.s = s;
        r.t = t;
        r.lhs = pi;
        r.rhs = envelope;
        fill_ratio(r);
        r.verdict = Verdict::report_only;
        r.note = std::move(note);
        out.push_back(std::move(r));
    };

    // n^{5/3} + s n  (real/complex plane via the Szemeredi-Trotter regime)
    if (rational && d == 2) {
        report("envelope_r2", std::pow(n, 5.0 / 3.0) + static_cast<double>(s) * n, "");
    } else {
        skipped("envelope_r2", "needs the rational backend in d=2");
    }

    // s n^{3/2 - eps}  (prime plane, n < p; eps exists but is not pinned down)
    if (!points.field().is_prime() || d != 2) {
        skipped("envelope_fp2", "needs a prime field in d=2");
    } else if (static_cast<long long>(points.size()) >= points.field().modulus()) {
        skipped("envelope_fp2", "needs n < p");
    } else {
        const double eps = options.bkt_epsilon;
        report("envelope_fp2", static_cast<double>(s) * std::pow(n, 1.5 - eps),
               "eps=" + std::to_string(eps) + " (non-normative placeholder)");
    }

    // n^2 log(s n^{-1/2}) + s t n  (3-space point-plane bound, char != 2)
    if (d != 3) {
        skipped("envelope_f3_rudnev", "needs d=3");
    } else if (points.field().characteristic_two()) {
        skipped("envelope_f3_rudnev", "p != 2 required");
    } else if (points.field().is_prime() &&
               static_cast<double>(points.size()) >
                   static_cast<double>(points.field().modulus()) *
                       static_cast<double>(points.field().modulus())) {
        skipped("envelope_f3_rudnev", "needs n = O(p^2), recorded as n <= p^2");
    } else {
        double log_term = std::log(static_cast<double>(s) / std::sqrt(n));
        std::string note = points.field().is_prime() ? "assumes n = O(p^2) holds as n <= p^2" : "";
        if (log_term < 0) {
            log_term = 0;
            note += std::string(note.empty() ? "" : "; ") + "log term clamped (s <= sqrt(n))";
        }
        report("envelope_f3_rudnev",
               n * n * log_term + static_cast<double>(s) * static_cast<double>(t) * n,
               note);
    }

    // n t^2 + n^{(4d-3)/(2d-1)+eps} t^{(2d-2)/(2d-1)+eps} + s n  (real d-space)
    if (rational && d >= 2) {
        const double eps = options.rd_epsilon;
        const double dd = d;
        const double env = n * static_cast<double>(t) * t +
                           std::pow(n, (4 * dd - 3) / (2 * dd - 1) + eps) *
                               std::pow(static_cast<double>(t), (2 * dd - 2) / (2 * dd - 1) + eps) +
                           static_cast<double>(s) * n;
        report("envelope_rd", env, "eps=" + std::to_string(eps) + " (non-normative placeholder)");
    } else {
        skipped("envelope_rd", "needs the rational backend");
    }

    // n^{5/3} + n / eps  (eps-separated planar sets)
    if (!options.separation_inv) {
        skipped("envelope_density", "no separation parameter supplied");
    } else if (!rational || d != 2) {
        skipped("envelope_density", "needs the rational backend in d=2");
    } else {
        report("envelope_density", std::pow(n, 5.0 / 3.0) + n * *options.separation_inv,
               "separation_inv=" + std::to_string(*options.separation_inv));
    }
    return out;
}

BoundReport st_richness_ratio(const PointSet& points) {
    if (points.dim() != 2) throw DomainError("st ratio needs d = 2");
    if (!points.field().is_rational()) {
        throw DomainError("st ratio excludes finite fields (the line bound fails there)");
    }
    BoundReport r = base_report("st_ratio", points);
    r.verdict = Verdict::report_only;
    if (points.size() < 2) {
        r.note = "fewer than two points; no spanned lines";
        return r;
    }
    const RichnessHistogram hist = spanned_richness_histogram(points, 2);
    const double n = static_cast<double>(points.size());
    double best = 0.0;
    long long best_k = 0;
    for (long long k = 2; k <= hist.max_weight(); ++k) {
        const long long gk = hist.g(k);
        if (gk == 0) continue;
        const double envelope = n * n / (static_cast<double>(k) * k * k) +
                                n / static_cast<double>(k);
        const double ratio = static_cast<double>(gk) / envelope;
        if (ratio > best) {
            best = ratio;
            best_k = k;
        }
    }
    if (best_k > 0) {
        r.lhs = hist.g(best_k);
        r.rhs = static_cast<double>(r.lhs) / best;
        r.ratio = best;
        r.note = "max over k at k=" + std::to_string(best_k);
    } else {
        r.note = "no k-rich lines for k >= 2";
    }
    return r;
}

namespace {

// Portable unbiased bounded draw (rejection sampling).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound == 0 ? 0 : std::uint64_t(-1) - (std::uint64_t(-1) % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

PointSet random_grid_subset(std::int64_t q, long long n, std::uint64_t seed, long long trial) {
    std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(trial),
                      static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(q)};
    std::mt19937_64 rng(seq);
    const std::uint64_t grid = static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q);
    std::vector<std::uint64_t> idx(grid);
    for (std::uint64_t i = 0; i < grid; ++i) idx[i] = i;
    const FieldSpec field = FieldSpec::prime_field(q);
    PointSet points(field, 2, "random subset of F_" + std::to_string(q) + "^2");
    for (long long i = 0; i < n; ++i) {
        const std::uint64_t j = i + uniform_below(rng, grid - i);
        std::swap(idx[i], idx[j]);
        points.add(Point({Scalar::residue(static_cast<std::int64_t>(idx[i] / q), field),
                          Scalar::residue(static_cast<std::int64_t>(idx[i] % q), field)}));
    }
    return points;
}

} // namespace

std::vector<BoundReport> covert_senger_sweep(std::int64_t q, std::span<const long long> n_list,
                                             int trials, std::uint64_t seed) {
    const FieldSpec field = FieldSpec::prime_field(q);
    if (trials < 1) throw DomainError("sweep needs trials >= 1");
    const Scalar one = Scalar::one(field);
    std::vector<BoundReport> out;
    for (long long n : n_list) {
        if (n < 1 || n > q * q) {
            throw DomainError("sweep needs 1 <= n <= q^2 (got n=" + std::to_string(n) + ")");
        }
        double ratio_sum = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            PointSet points = random_grid_subset(q, n, seed, trial);
            const long long pi = count_pi_fast(points, one, one).total;
            BoundReport r;
            r.bound_id = "covert_senger";
            r.n = n;
            r.d = 2;
            r.field_label = field.to_string();
            r.lhs = pi;
            r.rhs = static_cast<double>(n) * n * n / (static_cast<double>(q) * q);
            fill_ratio(r);
            r.verdict = Verdict::report_only;
            r.seed = seed;
            r.trial = trial;
            r.note = "pi * q^2 / n^3";
            ratio_sum += r.ratio;
            out.push_back(std::move(r));
        }
        BoundReport mean;
        mean.bound_id = "covert_senger";
        mean.n = n;
        mean.d = 2;
        mean.field_label = field.to_string();
        mean.ratio = ratio_sum / trials;
        mean.verdict = Verdict::report_only;
        mean.seed = seed;
        mean.trial = -1;
        mean.note = "mean of " + std::to_string(trials) + " trials; soft band [0.8, 1.2]";
        out.push_back(std::move(mean));
    }
    return out;
}

} // namespace dotpairs
