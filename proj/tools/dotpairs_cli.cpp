// Command-line front end: construction generation, counting, statistics,
// bound verification, and experiment sweeps.
//
// Exit codes: 0 success; 1 parameter/parse errors; 2 validation or hard-bound
// failure; 3 counter disagreement (internal bug signal).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dotpairs/bounds.hpp"
#include "dotpairs/constructions.hpp"
#include "dotpairs/counting.hpp"
#include "dotpairs/io.hpp"

using namespace dotpairs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParams = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

void print_report(const ConstructionReport& report) {
    std::cout << report.construction;
    for (const auto& [k, v] : report.parameters) std::cout << ' ' << k << '=' << v;
    std::cout << "\n  claimed lower bound: " << report.claimed_lower_bound
              << "\n  measured pi(" << report.alpha.str() << ", " << report.beta.str()
              << "): " << report.measured_pi << '\n';
    for (const ConstraintCheck& c : report.constraints) {
        std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
}

std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw DomainError("empty n list");
    return out;
}

// "2/3" or "0.5" as a double exponent.
double parse_exponent(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
}

long long nearest_divisor(long long n, double target) {
    long long best = 1;
    double best_gap = std::abs(static_cast<double>(1) - target);
    for (long long cand = 2; cand <= n; ++cand) {
        if (n % cand != 0) continue;
        const double gap = std::abs(static_cast<double>(cand) - target);
        if (gap < best_gap) {
            best = cand;
            best_gap = gap;
        }
    }
    return best;
}

void write_csv(const std::string& path, const std::vector<BoundReport>& reports) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << report_csv_header() << '\n';
    for (const BoundReport& r : reports) out << report_csv_row(r) << '\n';
}

struct VerifyArgs {
    std::string in_path, alpha_text = "1", beta_text = "1";
    std::string json_path, csv_path;
    double bkt_epsilon = 0.05;
    double rd_epsilon = 0.05;
    double separation_inv = 0.0;
    long long fault_inject = 0;
};

int run_verify(const VerifyArgs& args) {
    PointSet points = load_point_set(args.in_path);
    const Scalar alpha = parse_scalar(args.alpha_text, points.field());
    const Scalar beta = parse_scalar(args.beta_text, points.field());
    const FlatStats stats = flat_stats(points);

    std::vector<BoundReport> reports;
    reports.push_back(check_incidence_lemma(points, alpha, beta));
    reports.push_back(check_s2n(points, alpha, beta, &stats));
    if (points.dim() == 2) {
        reports.push_back(check_general_plane(points, alpha, beta, &stats));
    }
    for (BoundReport& r : check_general_highdim(points, alpha, beta, &stats)) {
        reports.push_back(std::move(r));
    }
    EnvelopeOptions options;
    options.bkt_epsilon = args.bkt_epsilon;
    options.rd_epsilon = args.rd_epsilon;
    if (args.separation_inv > 0) options.separation_inv = args.separation_inv;
    for (BoundReport& r : envelope_ratios(points, alpha, beta, options, &stats)) {
        reports.push_back(std::move(r));
    }
    if (points.dim() == 2 && points.field().is_rational()) {
        reports.push_back(st_richness_ratio(points));
    }

    if (args.fault_inject != 0) {
        // Test hook: skew the measured counts to prove the exit-code contract.
        for (BoundReport& r : reports) {
            if (r.verdict == Verdict::pass || r.verdict == Verdict::fail) {
                r.lhs += args.fault_inject;
                r.verdict = static_cast<double>(r.lhs) < r.rhs ? Verdict::pass : Verdict::fail;
            }
        }
    }

    bool all_hard_pass = true;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const BoundReport& r : reports) {
        out.push_back(report_to_json(r));
        std::cout << to_string(r.verdict) << "  " << r.bound_id;
        if (r.verdict == Verdict::pass || r.verdict == Verdict::fail) {
            std::cout << "  lhs=" << r.lhs << " rhs=" << r.rhs;
        } else if (r.verdict == Verdict::report_only) {
            std::cout << "  ratio=" << r.ratio;
        }
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << '\n';
        if (r.verdict == Verdict::fail) all_hard_pass = false;
    }
    if (!args.json_path.empty()) {
        std::ofstream jf(args.json_path);
        if (!jf) throw Error("cannot write " + args.json_path);
        jf << out.dump(2) << '\n';
    }
    if (!args.csv_path.empty()) write_csv(args.csv_path, reports);
    return all_hard_pass ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pairs-of-dot-products counting, constructions, and bound checks"};
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a construction and write it to a file");
    std::string gen_name;
    gen->add_option("construction", gen_name,
                    "one of: line-fan, separated-grid, pencil, highdim-cubic")
        ->required();
    long long gen_n = 0, gen_s = 0, gen_m = 0, gen_k = 0, gen_a = 0;
    std::string gen_beta = "1", gen_out;
    gen->add_option("--n", gen_n, "total point budget (line-fan, separated-grid)");
    gen->add_option("--s", gen_s, "collinearity cap (line-fan)");
    gen->add_option("--m", gen_m, "points per line, eps = 1/(3m) (separated-grid)");
    gen->add_option("--k", gen_k, "points on the base line (pencil)");
    gen->add_option("--a-count", gen_a, "size of the coordinate set A (highdim-cubic)");
    gen->add_option("--beta", gen_beta, "dot-product value (highdim-cubic)");
    gen->add_option("--out", gen_out, "output point-set file");

    // --- count ---------------------------------------------------------------
    auto* count = app.add_subcommand("count", "count pairs-of-dot-products triples");
    std::string count_in, count_alpha, count_beta, count_method = "fast";
    bool count_verbose = false;
    long long count_fault = 0;
    count->add_option("--in", count_in)->required();
    count->add_option("--alpha", count_alpha)->required();
    count->add_option("--beta", count_beta)->required();
    count->add_option("--method", count_method, "fast | brute | both");
    count->add_flag("--verbose", count_verbose, "print the per-point decomposition");
    count->add_option("--fault-inject-pi", count_fault)->group(""); // test hook

    // --- stats ---------------------------------------------------------------
    auto* stats_cmd = app.add_subcommand("stats", "point-set statistics and histograms");
    std::string stats_in, stats_gamma;
    bool stats_spanned = false;
    long long stats_kmin = 2;
    stats_cmd->add_option("--in", stats_in)->required();
    stats_cmd->add_option("--gamma", stats_gamma, "dual-family weight histogram for this value");
    stats_cmd->add_flag("--spanned", stats_spanned, "spanned-hyperplane histogram (d <= 3)");
    stats_cmd->add_option("--k-min", stats_kmin, "lowest level of the spanned histogram");

    // --- verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run every applicable bound check");
    VerifyArgs vargs;
    verify->add_option("--in", vargs.in_path)->required();
    verify->add_option("--alpha", vargs.alpha_text)->required();
    verify->add_option("--beta", vargs.beta_text)->required();
    verify->add_option("--bkt-epsilon", vargs.bkt_epsilon, "exponent for the prime-plane envelope");
    verify->add_option("--rd-epsilon", vargs.rd_epsilon, "exponent for the d-space envelope");
    verify->add_option("--separation-inv", vargs.separation_inv,
                       "inverse min distance, enables the density envelope");
    verify->add_option("--json", vargs.json_path, "write the reports as a JSON array");
    verify->add_option("--csv", vargs.csv_path, "write the reports as CSV");
    verify->add_option("--fault-inject-pi", vargs.fault_inject)->group(""); // test hook

    // --- sweep ---------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "experiment sweeps with CSV output");
    std::string sweep_kind, sweep_n = "", sweep_csv, sweep_in, sweep_construction = "line-fan";
    std::string sweep_exponent = "2/3";
    long long sweep_q = 0, sweep_grid = 0;
    int sweep_trials = 1;
    std::uint64_t sweep_seed = 0;
    sweep->add_option("kind", sweep_kind, "covert-senger | st-ratio | envelope-trend")
        ->required();
    sweep->add_option("--q", sweep_q, "prime grid order (covert-senger)");
    sweep->add_option("--n", sweep_n, "comma-separated point counts");
    sweep->add_option("--trials", sweep_trials);
    sweep->add_option("--seed", sweep_seed);
    sweep->add_option("--csv", sweep_csv, "output CSV path");
    sweep->add_option("--in", sweep_in, "point-set file (st-ratio)");
    sweep->add_option("--grid", sweep_grid, "use a g x g integer grid (st-ratio)");
    sweep->add_option("--construction", sweep_construction, "family to trend (envelope-trend)");
    sweep->add_option("--s-exponent", sweep_exponent, "s ~ n^e, e.g. 2/3 (envelope-trend)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            PointSet points = [&] {
                if (gen_name == "line-fan") return gen_line_fan(gen_n, gen_s);
                if (gen_name == "separated-grid") return gen_separated_grid(gen_n, gen_m);
                if (gen_name == "pencil") return gen_pencil(gen_k);
                if (gen_name == "highdim-cubic") {
                    return gen_highdim_cubic(gen_a, parse_scalar(gen_beta, FieldSpec::rationals()));
                }
                throw DomainError("unknown construction '" + gen_name + "'");
            }();
            ConstructionParams params;
            params.name = gen_name;
            params.n = gen_n;
            params.s = gen_s;
            params.m = gen_m;
            params.k = gen_k;
            params.a_count = gen_a;
            if (gen_name == "highdim-cubic") {
                params.beta = parse_scalar(gen_beta, FieldSpec::rationals());
            }
            print_report(validate_construction(points, params));
            std::cout << "points: " << points.size() << '\n';
            if (!gen_out.empty()) {
                save_point_set(points, gen_out);
                std::cout << "wrote " << gen_out << '\n';
            }
            return kExitOk;
        }

        if (*count) {
            if (count_method != "fast" && count_method != "brute" && count_method != "both") {
                throw DomainError("--method must be fast, brute, or both");
            }
            PointSet points = load_point_set(count_in);
            const Scalar alpha = parse_scalar(count_alpha, points.field());
            const Scalar beta = parse_scalar(count_beta, points.field());
            std::optional<long long> fast_total, brute_total;
            if (count_method == "fast" || count_method == "both") {
                PiDecomposition dec = count_pi_fast(points, alpha, beta);
                dec.total += count_fault;
                fast_total = dec.total;
                if (count_verbose) {
                    for (std::size_t i = 0; i < dec.per_point.size(); ++i) {
                        std::cout << "  " << points[i].str() << "  wt_alpha="
                                  << dec.per_point[i].wt_alpha
                                  << " wt_beta=" << dec.per_point[i].wt_beta
                                  << " pairs=" << dec.per_point[i].product() << '\n';
                    }
                }
            }
            if (count_method == "brute" || count_method == "both") {
                brute_total = count_pi_bruteforce(points, alpha, beta).total;
            }
            if (count_method == "both" && *fast_total != *brute_total) {
                std::cerr << "counter disagreement: fast=" << *fast_total
                          << " brute=" << *brute_total << '\n';
                return kExitMismatch;
            }
            std::cout << "pi = " << (fast_total ? *fast_total : *brute_total) << '\n';
            return kExitOk;
        }

        if (*stats_cmd) {
            PointSet points = load_point_set(stats_in);
            std::cout << "n = " << points.size() << "\nd = " << points.dim()
                      << "\nfield = " << points.field().to_string() << '\n';
            FlatStats stats = flat_stats(points);
            std::cout << "s_star = " << stats.s_star;
            if (stats.hyperplane_witness) {
                std::cout << "  (witness " << stats.hyperplane_witness->encoding() << ")";
            }
            std::cout << '\n';
            if (points.dim() >= 3) {
                std::cout << "t_star = " << stats.t_star << '\n';
            }
            if (!stats_gamma.empty()) {
                const Scalar gamma = parse_scalar(stats_gamma, points.field());
                RichnessHistogram hist = dual_richness_histogram(points, gamma);
                if (hist.origin_warning()) {
                    std::cout << "warning: origin in P; its empty dual has weight 0\n";
                }
                std::cout << "dual weights for gamma=" << gamma.str() << ":\n";
                std::cout << "  f_=0: " << hist.count_exact(0) << '\n';
                for (const auto& [k, c] : hist.counts()) {
                    std::cout << "  f_=" << k << ": " << c << '\n';
                }
            }
            if (stats_spanned) {
                RichnessHistogram hist = spanned_richness_histogram(points, stats_kmin);
                std::cout << "spanned hyperplanes (k_min=" << stats_kmin << "):\n";
                for (const auto& [k, c] : hist.counts()) {
                    std::cout << "  weight " << k << ": " << c << '\n';
                }
                std::cout << "  infinite_detected = "
                          << (hist.infinite_detected() ? "true" : "false") << '\n';
                for (long long k = stats_kmin; k <= hist.max_weight(); ++k) {
                    std::cout << "  g_" << k << " = " << hist.g(k) << '\n';
                }
            }
            return kExitOk;
        }

        if (*verify) return run_verify(vargs);

        if (*sweep) {
            std::vector<BoundReport> reports;
            if (sweep_kind == "covert-senger") {
                if (sweep_q < 2 || sweep_n.empty()) {
                    throw DomainError("covert-senger needs --q and --n");
                }
                std::vector<long long> n_list = parse_n_list(sweep_n);
                reports = covert_senger_sweep(sweep_q, n_list, sweep_trials, sweep_seed);
                for (const BoundReport& r : reports) {
                    if (r.trial < 0) {
                        std::cout << "n=" << r.n << " mean ratio = " << r.ratio << '\n';
                    }
                }
            } else if (sweep_kind == "st-ratio") {
                PointSet points = [&] {
                    if (!sweep_in.empty()) return load_point_set(sweep_in);
                    if (sweep_grid < 1) throw DomainError("st-ratio needs --in or --grid");
                    PointSet grid(FieldSpec::rationals(), 2,
                                  "integer grid " + std::to_string(sweep_grid) + "^2");
                    for (long long x = 0; x < sweep_grid; ++x) {
                        for (long long y = 0; y < sweep_grid; ++y) {
                            grid.add(Point({Scalar::rational(x), Scalar::rational(y)}));
                        }
                    }
                    return grid;
                }();
                reports.push_back(st_richness_ratio(points));
                std::cout << "max ratio = " << reports.back().ratio << "  ("
                          << reports.back().note << ")\n";
            } else if (sweep_kind == "envelope-trend") {
                if (sweep_construction != "line-fan") {
                    throw DomainError("envelope-trend supports --construction line-fan");
                }
                if (sweep_n.empty()) throw DomainError("envelope-trend needs --n");
                const double exponent = parse_exponent(sweep_exponent);
                double min_ratio = 0.0, max_ratio = 0.0;
                for (long long n : parse_n_list(sweep_n)) {
                    const long long s = nearest_divisor(n, std::pow(n, exponent));
                    PointSet points = gen_line_fan(n, s);
                    const Scalar one = Scalar::rational(1);
                    BoundReport r;
                    r.bound_id = "envelope_trend";
                    r.n = n;
                    r.d = 2;
                    r.field_label = "rational";
                    r.s = s;
                    r.lhs = count_pi_fast(points, one, one).total;
                    r.rhs = std::pow(static_cast<double>(n), 5.0 / 3.0) +
                            static_cast<double>(s) * n;
                    r.ratio = static_cast<double>(r.lhs) / r.rhs;
                    r.verdict = Verdict::report_only;
                    r.seed = sweep_seed;
                    r.note = "pi / (n^{5/3} + s n), s nearest divisor to n^" + sweep_exponent;
                    std::cout << "n=" << n << " s=" << s << " pi=" << r.lhs
                              << " ratio=" << r.ratio << '\n';
                    if (min_ratio == 0 || r.ratio < min_ratio) min_ratio = r.ratio;
                    max_ratio = std::max(max_ratio, r.ratio);
                    reports.push_back(std::move(r));
                }
                if (min_ratio > 0) {
                    std::cout << "ratio spread max/min = " << max_ratio / min_ratio << '\n';
                }
            } else {
                throw DomainError("unknown sweep kind '" + sweep_kind + "'");
            }
            if (!sweep_csv.empty()) write_csv(sweep_csv, reports);
            return kExitOk;
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParams;
    }
    return kExitOk;
}
