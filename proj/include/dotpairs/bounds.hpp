#ifndef DOTPAIRS_BOUNDS_HPP
#define DOTPAIRS_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dotpairs/counting.hpp"
#include "dotpairs/geometry.hpp"

namespace dotpairs {

// Explicit-constant inequalities get pass/fail; O(.)-envelope bounds carry no
// constant in their source and are always report_only.
enum class Verdict { pass, fail, report_only, skipped };
std::string to_string(Verdict v);

struct BoundReport {
    std::string bound_id;
    long long lhs = 0;   // measured count or weighted sum
    double rhs = 0.0;    // bound or envelope value
    bool rhs_exact = false;
    double ratio = 0.0;  // lhs / rhs when rhs > 0
    Verdict verdict = Verdict::report_only;
    long long n = 0;
    int d = 0;
    std::string field_label;
    long long s = 0; // tightest admissible: s_star + 1
    long long t = 0; // tightest admissible: t_star + 1
    std::uint64_t seed = 0;
    long long trial = -1;
    std::string note;
};

// Abstract input of the majorant comparison: two non-increasing sequences
// with g >= f pointwise, evaluated up to the horizon (values beyond it are 0;
// f must not have support there).
struct MajorantPair {
    std::vector<long long> f; // f[i] is the value at level k = i + 1
    std::vector<long long> g;
    long long horizon = 0;
};

// pi <= 2 * sum_k k^2 f_{=k} over the heavier of the two dual families,
// strict whenever pi > 0.
BoundReport check_incidence_lemma(const PointSet& points, const Scalar& alpha,
                                  const Scalar& beta);

// pi < 2 s^2 n with s = s_star + 1.
BoundReport check_s2n(const PointSet& points, const Scalar& alpha, const Scalar& beta,
                      const FlatStats* precomputed = nullptr);

// d = 2: pi < min(2 s^2 n, 4 n^2).
BoundReport check_general_plane(const PointSet& points, const Scalar& alpha,
                                const Scalar& beta, const FlatStats* precomputed = nullptr);

// Two rows: the hard 2 s^2 n part, and the report-only ratio against t n^2.
std::vector<BoundReport> check_general_highdim(const PointSet& points, const Scalar& alpha,
                                               const Scalar& beta,
                                               const FlatStats* precomputed = nullptr);

// sum k^2 (f_k - f_{k+1}) <= sum k^2 (g_k - g_{k+1}) over k <= horizon.
// Hypothesis violations throw DomainError; they are not failed bounds.
BoundReport check_majorant_lemma(const MajorantPair& pair);

struct EnvelopeOptions {
    // Placeholder exponents for the bounds whose sources assert only that
    // some epsilon > 0 exists; non-normative, surfaced in the report notes.
    double bkt_epsilon = 0.05;
    double rd_epsilon = 0.05;
    // Inverse minimum separation, enables the density envelope n^{5/3} + n/eps.
    std::optional<double> separation_inv;
};

// Ratio reports against every O(.) envelope, with per-theorem applicability
// recorded (inapplicable ones are marked skipped, never silently dropped).
std::vector<BoundReport> envelope_ratios(const PointSet& points, const Scalar& alpha,
                                         const Scalar& beta,
                                         const EnvelopeOptions& options = {},
                                         const FlatStats* precomputed = nullptr);

// max_k g_k / (n^2/k^3 + n/k) over spanned lines, d = 2 rationals only.
BoundReport st_richness_ratio(const PointSet& points);

// Uniform random n-subsets of the full F_q^2 grid; reports pi * q^2 / n^3 per
// trial plus a mean row (trial = -1).  Deterministic in (seed, trial, n).
std::vector<BoundReport> covert_senger_sweep(std::int64_t q, std::span<const long long> n_list,
                                             int trials, std::uint64_t seed);

} // namespace dotpairs

#endif
