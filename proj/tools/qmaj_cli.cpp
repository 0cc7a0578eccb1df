// Command-line front end: emits machine-readable scan data and reports
// for the simultaneous-measurement uncertainty analysis.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmaj/bloch.hpp"
#include "qmaj/duality.hpp"
#include "qmaj/entropy.hpp"
#include "qmaj/hilbert.hpp"
#include "qmaj/majorization.hpp"
#include "qmaj/prob_vec.hpp"
#include "qmaj/statistics.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qmaj;

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "csv";
    int precision = 12;
    bool degrees = false;

    double in_angle(double v) const { return degrees ? v * kPi / 180.0 : v; }
    double out_angle(double v) const { return degrees ? v * 180.0 / kPi : v; }
};

std::string format_real(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

double round_sig(double v, int digits) {
    return std::strtod(format_real(v, digits).c_str(), nullptr);
}

void emit(const std::vector<ordered_json>& rows, const Options& opt) {
    if (rows.empty()) {
        return;
    }
    if (opt.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r = row;
            for (auto& [key, value] : r.items()) {
                if (value.is_number_float()) {
                    value = round_sig(value.get<double>(), opt.precision);
                }
            }
            arr.push_back(std::move(r));
        }
        std::cout << arr.dump(2) << '\n';
        return;
    }
    std::string header;
    for (const auto& [key, value] : rows.front().items()) {
        if (!header.empty()) {
            header += ',';
        }
        header += key;
    }
    std::cout << header << '\n';
    for (const auto& row : rows) {
        std::string line;
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            if (!first) {
                line += ',';
            }
            first = false;
            if (value.is_null()) {
                // empty cell
            } else if (value.is_string()) {
                line += value.get<std::string>();
            } else if (value.is_number_float()) {
                line += format_real(value.get<double>(), opt.precision);
            } else {
                line += value.dump();
            }
        }
        std::cout << line << '\n';
    }
}

StatKind parse_kind(const std::string& s) {
    if (s == "joint") return StatKind::Joint;
    if (s == "marginal-product") return StatKind::MarginalProduct;
    if (s == "intrinsic-product") return StatKind::IntrinsicProduct;
    throw UsageError("unknown kind '" + s +
                     "' (expected joint, marginal-product, intrinsic-product)");
}

const char* kind_name(StatKind k) {
    switch (k) {
    case StatKind::Joint:
        return "joint";
    case StatKind::MarginalProduct:
        return "marginal-product";
    case StatKind::IntrinsicProduct:
        return "intrinsic-product";
    }
    return "?";
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) {
            throw UsageError(std::string("trailing characters in ") + what +
                             " '" + s + "'");
        }
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
    } catch (const std::out_of_range&) {
        throw UsageError(std::string("out-of-range ") + what + " '" + s + "'");
    }
}

std::string alpha_label(double a) {
    if (std::isinf(a)) {
        return "inf";
    }
    return format_real(a, 12);
}

ProbVec sorted_statistics(StatKind kind, const BlochState& s,
                          const MeasurementConfig& cfg) {
    return ProbVec(statistics_of(kind, s, cfg).sorted_desc());
}

// Built-in vectors of the analysis, parameterized by purity and overlap
// angle: the sorted extreme / intermediate statistics per kind and the
// three bound vectors.
ProbVec named_vector(const std::string& name, double smag,
                     const MeasurementConfig& cfg) {
    const BlochState extreme = family_state({FamilyKind::ExtremeZ, +1, +1, smag});
    const BlochState inter =
        family_state({FamilyKind::Intermediate, +1, +1, smag});
    if (name == "lambda-tilde") return sorted_statistics(StatKind::Joint, extreme, cfg);
    if (name == "mu-tilde") return sorted_statistics(StatKind::Joint, inter, cfg);
    if (name == "lambda-tilde-prime")
        return sorted_statistics(StatKind::MarginalProduct, extreme, cfg);
    if (name == "mu-tilde-prime")
        return sorted_statistics(StatKind::MarginalProduct, inter, cfg);
    if (name == "lambda")
        return sorted_statistics(StatKind::IntrinsicProduct, extreme, cfg);
    if (name == "mu")
        return sorted_statistics(StatKind::IntrinsicProduct, inter, cfg);
    if (name == "omega-tilde") return compute_bound_vector(StatKind::Joint, cfg);
    if (name == "omega-tilde-prime")
        return compute_bound_vector(StatKind::MarginalProduct, cfg);
    if (name == "omega")
        return compute_bound_vector(StatKind::IntrinsicProduct, cfg);
    throw UsageError("unknown vector name '" + name + "'");
}

ProbVec parse_vector(const std::string& spec, double smag,
                     const MeasurementConfig& cfg) {
    if (!spec.empty() && (std::isalpha(static_cast<unsigned char>(spec[0])))) {
        return named_vector(spec, smag, cfg);
    }
    std::vector<double> vals;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string tok =
            spec.substr(start, comma == std::string::npos ? comma : comma - start);
        vals.push_back(parse_double(tok, "vector component"));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    try {
        return ProbVec(std::move(vals));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--p/--q: ") + e.what());
    }
}

std::string join_values(const ProbVec& p, int digits) {
    std::string out;
    for (double v : p) {
        if (!out.empty()) {
            out += ' ';
        }
        out += format_real(v, digits);
    }
    return out;
}

int run(int argc, char** argv) {
    Options opt;

    CLI::App app{"Simultaneous-measurement statistics of two complementary "
                 "qubit observables: Renyi entropies, majorization bounds, "
                 "and the distinguishability-visibility duality."};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", opt.precision,
                   "Significant digits for real output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_flag("--degrees", opt.degrees,
                 "Interpret and print angles in degrees instead of radians");

    // scan-theta
    std::string st_kind;
    std::vector<std::string> st_alphas{"1", "2.5"};
    double st_delta = kPi / 4.0;
    double st_smag = 1.0;
    std::size_t st_points = 721;
    auto* scan_theta = app.add_subcommand(
        "scan-theta", "Normalized Renyi entropy of one statistics kind over "
                      "theta in [0, 2*pi].\nCSV columns: theta, then "
                      "norm_renyi_<alpha> per --alpha in the given order.");
    scan_theta->add_option("--kind", st_kind, "joint | marginal-product | intrinsic-product")
        ->required();
    scan_theta->add_option("--alpha", st_alphas, "Entropic indices (inf allowed)")
        ->capture_default_str();
    auto* st_delta_opt =
        scan_theta->add_option("--delta", st_delta, "Apparatus overlap angle [default pi/4]");
    scan_theta->add_option("--smag", st_smag, "Bloch vector modulus")
        ->capture_default_str();
    scan_theta->add_option("--points", st_points, "Number of theta samples")
        ->capture_default_str();

    // delta-r
    std::vector<std::string> dr_range{"0", "5", "0.01"};
    double dr_delta = kPi / 4.0;
    double dr_smag = 1.0;
    auto* dr = app.add_subcommand(
        "delta-r", "Entropy difference extreme - intermediate versus alpha "
                   "for the three statistics kinds.\nCSV columns: alpha, "
                   "delta_r_joint, delta_r_marginal_product, "
                   "delta_r_intrinsic_product.");
    dr->add_option("--alpha-range", dr_range,
                   "LO HI STEP; rows at LO+STEP, LO+2*STEP, ..., HI")
        ->expected(3)
        ->capture_default_str();
    auto* dr_delta_opt = dr->add_option("--delta", dr_delta, "Apparatus overlap angle [default pi/4]");
    dr->add_option("--smag", dr_smag, "Bloch vector modulus")->capture_default_str();

    // critical-alpha
    std::string ca_kind;
    double ca_delta = kPi / 4.0;
    double ca_smag = 1.0;
    double ca_min = 1e-3, ca_max = 10.0;
    auto* ca = app.add_subcommand(
        "critical-alpha", "Sign structure of delta-r over the entropic index: "
                          "roots and interval signs.\nCSV columns: kind, "
                          "interval_index, alpha_lo, alpha_hi, delta_r_sign, "
                          "root_at_lo.");
    ca->add_option("--kind", ca_kind, "joint | marginal-product | intrinsic-product")
        ->required();
    auto* ca_delta_opt = ca->add_option("--delta", ca_delta, "Apparatus overlap angle [default pi/4]");
    ca->add_option("--smag", ca_smag, "Bloch vector modulus")->capture_default_str();
    ca->add_option("--alpha-min", ca_min, "Lower end of the search range")
        ->capture_default_str();
    ca->add_option("--alpha-max", ca_max, "Upper end of the search range")
        ->capture_default_str();

    // bounds
    double bo_delta = kPi / 4.0;
    auto* bounds = app.add_subcommand(
        "bounds", "Majorization bound vectors per statistics kind, their "
                  "closed-form references (balanced measurement), "
                  "attainability gaps and pairwise verdicts.\nCSV columns: "
                  "kind, computed_1..computed_4, reference_1..reference_4, "
                  "max_deviation, attainability_gap, verdict_vs_omega, "
                  "verdict_vs_other_tilde.");
    auto* bo_delta_opt = bounds->add_option("--delta", bo_delta, "Apparatus overlap angle [default pi/4]");

    // compare
    std::string cp_p, cp_q;
    double cp_tol = 1e-10;
    double cp_smag = 1.0;
    double cp_delta = kPi / 4.0;
    auto* cmp = app.add_subcommand(
        "compare", "Majorization comparison of two distributions; built-in "
                   "names: lambda-tilde, mu-tilde, lambda-tilde-prime, "
                   "mu-tilde-prime, lambda, mu, omega-tilde, "
                   "omega-tilde-prime, omega.\nCSV columns: p, q, p_values, "
                   "q_values, verdict, witness_k1, witness_k2.");
    cmp->add_option("--p", cp_p, "Comma-separated components or a built-in name")
        ->required();
    cmp->add_option("--q", cp_q, "Comma-separated components or a built-in name")
        ->required();
    cmp->add_option("--tol", cp_tol, "Prefix-sum tolerance")->capture_default_str();
    cmp->add_option("--smag", cp_smag, "Purity for built-in vectors")
        ->capture_default_str();
    auto* cp_delta_opt = cmp->add_option("--delta", cp_delta,
                                         "Overlap angle for built-in vectors [default pi/4]");

    // duality
    double du_delta = kPi / 4.0;
    std::size_t du_points = 181;
    auto* du = app.add_subcommand(
        "duality", "Distinguishability, visibility, predictability over "
                   "theta in [0, pi] for pure states.\nCSV columns: theta, "
                   "distinguishability, visibility, predictability, sum_sq.");
    auto* du_delta_opt = du->add_option("--delta", du_delta, "Apparatus overlap angle [default pi/4]");
    du->add_option("--points", du_points, "Number of theta samples")
        ->capture_default_str();

    // oracle-check
    std::size_t oc_trials = 1000;
    std::uint64_t oc_seed = 1;
    double oc_tol = 1e-12;
    auto* oc = app.add_subcommand(
        "oracle-check", "Compare the first-principles measurement model "
                        "against the closed-form statistics on random "
                        "states.\nCSV columns: trials, seed, tolerance, "
                        "max_deviation, result. Exit 1 on failure.");
    oc->add_option("--trials", oc_trials, "Number of random (state, delta) draws")
        ->capture_default_str();
    oc->add_option("--seed", oc_seed, "Generator seed")->capture_default_str();
    oc->add_option("--tol", oc_tol, "Maximum allowed deviation")
        ->capture_default_str();

    // threshold
    auto* th = app.add_subcommand(
        "threshold", "Purity threshold below which the joint statistics of "
                     "intermediate states is majorized by the intrinsic "
                     "product.\nCSV columns: threshold, smag_below, "
                     "verdict_below, smag_above, verdict_above.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Angle options arrive in the unit selected by --degrees; convert the
    // user-supplied ones, keep radian defaults as they are.
    const auto angle_in = [&](CLI::Option* o, double& v) {
        if (o->count() > 0) {
            v = opt.in_angle(v);
        }
    };
    angle_in(st_delta_opt, st_delta);
    angle_in(dr_delta_opt, dr_delta);
    angle_in(ca_delta_opt, ca_delta);
    angle_in(bo_delta_opt, bo_delta);
    angle_in(cp_delta_opt, cp_delta);
    angle_in(du_delta_opt, du_delta);

    std::vector<ordered_json> rows;
    int exit_code = 0;

    if (scan_theta->parsed()) {
        const StatKind kind = parse_kind(st_kind);
        const MeasurementConfig cfg(st_delta);
        if (st_points < 2) {
            throw UsageError("--points must be at least 2");
        }
        std::vector<double> alphas;
        std::vector<EntropyIndex> indices;
        for (const auto& tok : st_alphas) {
            const double a = parse_double(tok, "--alpha");
            alphas.push_back(a);
            indices.push_back(EntropyIndex::of(a));
        }
        std::vector<FamilyExtrema> extrema;
        for (const auto& idx : indices) {
            const FamilyExtrema e = renyi_theta_extrema(kind, idx, cfg, st_smag);
            if (e.r_max - e.r_min <= 1e-12) {
                throw DegenerateFamilyError(
                    "scan-theta: family entropy constant in theta (smag = " +
                    std::to_string(st_smag) + ")");
            }
            extrema.push_back(e);
        }
        for (std::size_t i = 0; i < st_points; ++i) {
            const double theta =
                2.0 * kPi * static_cast<double>(i) / static_cast<double>(st_points - 1);
            ordered_json row;
            row["theta"] = opt.out_angle(theta);
            for (std::size_t a = 0; a < indices.size(); ++a) {
                const double r = renyi_of_kind(kind, indices[a], cfg, st_smag, theta);
                row["norm_renyi_" + alpha_label(alphas[a])] =
                    (r - extrema[a].r_min) / (extrema[a].r_max - extrema[a].r_min);
            }
            rows.push_back(std::move(row));
        }
    } else if (dr->parsed()) {
        const double lo = parse_double(dr_range[0], "--alpha-range LO");
        const double hi = parse_double(dr_range[1], "--alpha-range HI");
        const double step = parse_double(dr_range[2], "--alpha-range STEP");
        if (!(lo >= 0.0) || !(lo < hi) || !(step > 0.0)) {
            throw UsageError("--alpha-range needs 0 <= LO < HI and STEP > 0");
        }
        const MeasurementConfig cfg(dr_delta);
        const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
        for (std::size_t i = 1; i <= n; ++i) {
            const double alpha = lo + step * static_cast<double>(i);
            const EntropyIndex idx = EntropyIndex::of(alpha);
            ordered_json row;
            row["alpha"] = alpha;
            row["delta_r_joint"] = delta_r(StatKind::Joint, idx, cfg, dr_smag);
            row["delta_r_marginal_product"] =
                delta_r(StatKind::MarginalProduct, idx, cfg, dr_smag);
            row["delta_r_intrinsic_product"] =
                delta_r(StatKind::IntrinsicProduct, idx, cfg, dr_smag);
            rows.push_back(std::move(row));
        }
    } else if (ca->parsed()) {
        const StatKind kind = parse_kind(ca_kind);
        if (!(ca_min > 0.0 && ca_min < ca_max)) {
            throw UsageError("--alpha-min/--alpha-max need 0 < min < max");
        }
        const CriticalIndexReport report =
            critical_indices(kind, MeasurementConfig(ca_delta), ca_smag, ca_min, ca_max);
        std::vector<double> edges{report.search_lo};
        edges.insert(edges.end(), report.roots.begin(), report.roots.end());
        edges.push_back(report.search_hi);
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            ordered_json row;
            row["kind"] = kind_name(kind);
            row["interval_index"] = i;
            row["alpha_lo"] = edges[i];
            row["alpha_hi"] = edges[i + 1];
            const int s = report.interval_signs[i];
            row["delta_r_sign"] = s > 0 ? "+" : (s < 0 ? "-" : "0");
            if (i == 0) {
                row["root_at_lo"] = nullptr;
            } else {
                row["root_at_lo"] = edges[i];
            }
            rows.push_back(std::move(row));
        }
    } else if (bounds->parsed()) {
        const MeasurementConfig cfg(bo_delta);
        const bool balanced = std::abs(bo_delta - kPi / 4.0) <= 1e-12;
        const std::array<StatKind, 3> kinds{StatKind::Joint,
                                            StatKind::MarginalProduct,
                                            StatKind::IntrinsicProduct};
        std::array<ProbVec, 3> computed{ProbVec{1.0}, ProbVec{1.0}, ProbVec{1.0}};
        for (std::size_t i = 0; i < 3; ++i) {
            computed[i] = compute_bound_vector(kinds[i], cfg);
        }
        for (std::size_t i = 0; i < 3; ++i) {
            const StatKind kind = kinds[i];
            ordered_json row;
            row["kind"] = kind_name(kind);
            for (std::size_t c = 0; c < 4; ++c) {
                row["computed_" + std::to_string(c + 1)] = computed[i][c];
            }
            const bool have_ref = balanced || kind == StatKind::IntrinsicProduct;
            double dev = 0.0;
            if (have_ref) {
                const ProbVec ref = balanced_bound_reference(kind);
                for (std::size_t c = 0; c < 4; ++c) {
                    row["reference_" + std::to_string(c + 1)] = ref[c];
                    dev = std::max(dev, std::abs(ref[c] - computed[i][c]));
                }
                row["max_deviation"] = dev;
                if (dev > 1e-6) {
                    exit_code = 1;
                }
            } else {
                for (std::size_t c = 0; c < 4; ++c) {
                    row["reference_" + std::to_string(c + 1)] = nullptr;
                }
                row["max_deviation"] = nullptr;
            }
            row["attainability_gap"] = attainability_gap(kind, cfg);
            row["verdict_vs_omega"] =
                verdict_name(compare(computed[i], computed[2]).verdict);
            if (kind == StatKind::Joint) {
                row["verdict_vs_other_tilde"] =
                    verdict_name(compare(computed[0], computed[1]).verdict);
            } else if (kind == StatKind::MarginalProduct) {
                row["verdict_vs_other_tilde"] =
                    verdict_name(compare(computed[1], computed[0]).verdict);
            } else {
                row["verdict_vs_other_tilde"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
    } else if (cmp->parsed()) {
        const MeasurementConfig cfg(cp_delta);
        if (!(cp_smag >= 0.0 && cp_smag <= 1.0)) {
            throw UsageError("--smag must lie in [0, 1]");
        }
        const ProbVec p = parse_vector(cp_p, cp_smag, cfg);
        const ProbVec q = parse_vector(cp_q, cp_smag, cfg);
        const MajorizationRelation rel = compare(p, q, cp_tol);
        ordered_json row;
        row["p"] = cp_p;
        row["q"] = cp_q;
        row["p_values"] = join_values(p, opt.precision);
        row["q_values"] = join_values(q, opt.precision);
        row["verdict"] = verdict_name(rel.verdict);
        if (rel.witness) {
            row["witness_k1"] = rel.witness->first;
            row["witness_k2"] = rel.witness->second;
        } else {
            row["witness_k1"] = nullptr;
            row["witness_k2"] = nullptr;
        }
        rows.push_back(std::move(row));
    } else if (du->parsed()) {
        if (du_points < 2) {
            throw UsageError("--points must be at least 2");
        }
        const MeasurementConfig cfg(du_delta);
        for (std::size_t i = 0; i < du_points; ++i) {
            const double theta =
                kPi * static_cast<double>(i) / static_cast<double>(du_points - 1);
            const DualityReport rep = duality_report(theta, cfg);
            ordered_json row;
            row["theta"] = opt.out_angle(theta);
            row["distinguishability"] = rep.distinguishability;
            row["visibility"] = rep.visibility;
            row["predictability"] = rep.predictability;
            row["sum_sq"] = rep.sum_sq;
            rows.push_back(std::move(row));
        }
    } else if (oc->parsed()) {
        if (oc_trials == 0) {
            throw UsageError("--trials must be at least 1");
        }
        const double dev = hilbert::batch_deviation(oc_trials, oc_seed);
        const bool pass = dev <= oc_tol;
        ordered_json row;
        row["trials"] = oc_trials;
        row["seed"] = oc_seed;
        row["tolerance"] = oc_tol;
        row["max_deviation"] = dev;
        row["result"] = pass ? "pass" : "fail";
        rows.push_back(std::move(row));
        if (!pass) {
            exit_code = 1;
        }
    } else if (th->parsed()) {
        const double threshold = purity_threshold_joint_vs_intrinsic();
        const MeasurementConfig cfg = MeasurementConfig::balanced();
        const auto verdict_at = [&](double smag) {
            const BlochState s =
                family_state({FamilyKind::Intermediate, +1, +1, smag});
            return verdict_name(compare(statistics_of(StatKind::Joint, s, cfg),
                                        statistics_of(StatKind::IntrinsicProduct, s, cfg))
                                    .verdict);
        };
        ordered_json row;
        row["threshold"] = threshold;
        row["smag_below"] = threshold - 0.01;
        row["verdict_below"] = verdict_at(threshold - 0.01);
        row["smag_above"] = threshold + 0.01;
        row["verdict_above"] = verdict_at(threshold + 0.01);
        rows.push_back(std::move(row));
    }

    emit(rows, opt);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DegenerateFamilyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const BoundConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
