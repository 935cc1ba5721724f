// Command-line front end for the Reverse continued fraction library.
//
// Every subcommand emits UTF-8 JSON records, one per line, each embedding
// the full run configuration and the library version.  Exit code is zero
// iff all requested checks pass.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcf/rcf.hpp"
#include "rcf/report_json.hpp"

using nlohmann::json;

namespace {

struct Output {
    std::string path;

    void emit(json record, const json& config) {
        record["config"] = config;
        record["version"] = rcf::kVersion;
        std::string line = record.dump();
        if (path.empty()) {
            std::cout << line << "\n";
        } else {
            std::ofstream f(path, std::ios::app);
            if (!f) throw std::runtime_error("cannot open output file " + path);
            f << line << "\n";
        }
    }
};

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open csv file " + path);
    f << header << "\n";
    for (const auto& r : rows) f << r << "\n";
}

rcf::DirectiveSequence make_sequence(const std::string& pattern, std::uint64_t seed,
                                     double inject_rate) {
    if (!pattern.empty()) return rcf::DirectiveSequence::periodic(pattern);
    if (inject_rate > 0) return rcf::DirectiveSequence::random_with_blocks(seed, inject_rate);
    return rcf::DirectiveSequence::random(seed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reverse multidimensional continued fraction toolkit"};
    app.require_subcommand(1);

    std::string out_path, csv_path, norm_name = "induced", pattern, point_arg = "0.4,0.35,0.25";
    int n = 12, depth = 12, cap = 12, threads = 0, steps = 50, samples = 10000;
    std::int64_t iterations = 1000000, burn_in = 1000;
    std::uint64_t seed = rcf::kDefaultSeed;
    double inject_rate = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "append JSON records to this file instead of stdout");
        cmd->add_option("--seed", seed, "random seed (default fixed for reproducibility)");
    };

    auto* cbound = app.add_subcommand("bound", "certified L1(n)+L2(n) bound via cylinder enumeration");
    cbound->add_option("--n", n, "word length (2..14)")->check(CLI::Range(2, 14));
    cbound->add_option("--threads", threads, "worker threads (0 = hardware)");
    cbound->add_option("--norm", norm_name, "matrix norm: induced|column|entrywise");
    cbound->add_option("--csv", csv_path, "write per-depth partial bound table");
    add_common(cbound);

    auto* csorted = app.add_subcommand("bound-sorted", "sorted-variant bound L1'(n)+L2'(n)");
    csorted->add_option("--n", n, "word length (2..13)")->check(CLI::Range(2, 13));
    csorted->add_option("--threads", threads, "worker threads (0 = hardware)");
    csorted->add_option("--norm", norm_name, "matrix norm: induced|column|entrywise");
    csorted->add_option("--csv", csv_path, "write per-depth partial bound table");
    add_common(csorted);

    auto* cmc = app.add_subcommand("mc", "Monte-Carlo Lyapunov spectrum estimate");
    cmc->add_option("--iterations", iterations, "orbit length");
    cmc->add_option("--burn-in", burn_in, "discarded initial steps");
    add_common(cmc);

    auto* corbit = app.add_subcommand("orbit", "iterate the Reverse map from a point");
    corbit->add_option("--point", point_arg, "starting point x0,x1,x2");
    corbit->add_option("--steps", steps, "number of steps");
    add_common(corbit);

    auto* clang = app.add_subcommand("language", "generate an S-adic language sample");
    clang->add_option("--depth", depth, "composition depth");
    clang->add_option("--cap", cap, "factor length cap");
    clang->add_option("--pattern", pattern, "periodic directive pattern, e.g. 123");
    clang->add_option("--inject-rate", inject_rate, "block occurrence density of (s1 s2 s3)^9");
    clang->add_option("--words-out", csv_path, "write the factor list to this file");
    add_common(clang);

    auto* cbal = app.add_subcommand("balance", "balancedness report for a directive sequence");
    cbal->add_option("--depth", depth, "composition depth");
    cbal->add_option("--cap", cap, "factor length cap");
    cbal->add_option("--pattern", pattern, "periodic directive pattern");
    cbal->add_option("--inject-rate", inject_rate, "block occurrence density of (s1 s2 s3)^9");
    add_common(cbal);

    auto* clem = app.add_subcommand("verify-lemmas", "run the finite lemma verifications");
    clem->add_option("--samples", samples, "sample count for randomized checks");
    clem->add_option("--threads", threads, "worker threads (unused placeholder)");
    add_common(clem);

    auto* cmass = app.add_subcommand("mass", "quadrature of the invariant densities");
    add_common(cmass);

    CLI11_PARSE(app, argc, argv);

    Output out{out_path};
    try {
        if (*cbound || *csorted) {
            bool sorted = static_cast<bool>(*csorted);
            rcf::MatrixNorm norm = rcf::norm_from_name(norm_name);
            json cfg{{"command", sorted ? "bound-sorted" : "bound"},
                     {"n", n},
                     {"threads", threads},
                     {"norm", norm_name}};
            rcf::BoundReport r =
                sorted ? rcf::sorted_bound_report(n, norm, threads) : rcf::bound_report(n, norm, threads);
            out.emit(rcf::to_json(r), cfg);
            if (!csv_path.empty()) {
                std::vector<std::string> rows;
                for (int k = 2; k <= n; ++k) {
                    rcf::BoundReport rk = sorted ? rcf::sorted_bound_report(k, norm, threads)
                                                 : rcf::bound_report(k, norm, threads);
                    rows.push_back(std::to_string(k) + "," + std::to_string(rk.l1) + "," +
                                   std::to_string(rk.l2) + "," + std::to_string(rk.total));
                }
                write_csv(csv_path, "n,l1,l2,total", rows);
            }
            return 0;
        }
        if (*cmc) {
            json cfg{{"command", "mc"}, {"iterations", iterations}, {"burn_in", burn_in}, {"seed", seed}};
            rcf::SpectrumEstimate e = rcf::mc_spectrum(iterations, burn_in, 8, seed);
            json rec = rcf::to_json(e);
            rec["eta_star"] = rcf::approx_exponent(e);
            out.emit(rec, cfg);
            return 0;
        }
        if (*corbit) {
            double a, b, c;
            if (std::sscanf(point_arg.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3)
                throw std::invalid_argument("--point expects x0,x1,x2");
            json cfg{{"command", "orbit"}, {"point", point_arg}, {"steps", steps}};
            rcf::SimplexPoint x = rcf::normalize_to_simplex({a, b, c});
            for (int i = 0; i < steps; ++i) {
                try {
                    auto [y, branch] = rcf::step(x);
                    out.emit(json{{"step", i}, {"x", {x.x0, x.x1, x.x2}}, {"branch", branch}}, cfg);
                    x = y;
                } catch (const rcf::OrbitTerminated&) {
                    out.emit(json{{"step", i}, {"x", {x.x0, x.x1, x.x2}}, {"terminated", true}}, cfg);
                    return 0;
                }
            }
            return 0;
        }
        if (*clang) {
            json cfg{{"command", "language"}, {"depth", depth},      {"cap", cap},
                     {"pattern", pattern},    {"seed", seed},        {"inject_rate", inject_rate}};
            rcf::DirectiveSequence d = make_sequence(pattern, seed, inject_rate);
            rcf::LanguageSample s = rcf::generate_language(d, depth, cap);
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                for (const auto& w : s.factors) f << w << "\n";
            }
            out.emit(json{{"depth", s.depth},
                          {"cap", s.cap},
                          {"factor_count", s.factors.size()},
                          {"image_lengths", {s.images[0].size(), s.images[1].size(), s.images[2].size()}}},
                     cfg);
            return 0;
        }
        if (*cbal) {
            json cfg{{"command", "balance"}, {"depth", depth},      {"cap", cap},
                     {"pattern", pattern},   {"seed", seed},        {"inject_rate", inject_rate}};
            rcf::DirectiveSequence d = make_sequence(pattern, seed, inject_rate);
            rcf::BalanceReport r = rcf::theorem3_witness(d, depth, cap);
            json rec = rcf::to_json(r);
            if (inject_rate > 0) rec["observed_block_density"] = d.block_density(10000);
            out.emit(rec, cfg);
            return 0;
        }
        if (*cmass) {
            json cfg{{"command", "mass"}};
            auto m = rcf::measure_mass();
            auto ms = rcf::sorted_measure_mass();
            bool pass = std::fabs(m.value - 1.0) < 1e-6 && std::fabs(ms.value - 1.0) < 1e-6;
            out.emit(json{{"mass", m.value},
                          {"mass_error_estimate", m.error_estimate},
                          {"sorted_mass", ms.value},
                          {"sorted_mass_error_estimate", ms.error_estimate},
                          {"pass", pass}},
                     cfg);
            return pass ? 0 : 1;
        }
        if (*clem) {
            json cfg{{"command", "verify-lemmas"}, {"samples", samples}, {"seed", seed}};
            int failures = 0;
            auto check = [&](const std::string& name, double value, double bound, bool pass) {
                failures += !pass;
                out.emit(json{{"check", name}, {"value", value}, {"bound", bound}, {"pass", pass}}, cfg);
            };
            rcf::SplitMix64 rng(seed);

            bool rn_ok = true;
            double renyi_max = 0;
            for (int i = 0; i < samples && rn_ok; ++i) {
                rcf::Word w = rcf::random_word(rng, 1 + rng.below(25));
                rn_ok = rcf::row_norm_check(w);
                w.push_back(4);
                renyi_max = std::max(renyi_max, rcf::renyi_ratio(w));
            }
            check("row_norm_inequality", rn_ok ? 1 : 0, 1, rn_ok);
            check("renyi_ratio_after_4", renyi_max, 8.0, renyi_max < 8.0);

            auto cons = rcf::constellation_bound();
            check("constellation_11_7", cons.max_norm, 11.0 / 7, cons.max_norm <= 11.0 / 7 + 1e-12);
            double contr = rcf::contraction_check(samples, seed);
            check("contraction_5_7", contr, 5.0 / 7, contr <= 5.0 / 7 + 1e-9);

            double survey_max = 0;
            for (int s = 0; s < 10; ++s) {
                auto d = rcf::DirectiveSequence::random_with_blocks(seed + s, 0.12, 2);
                survey_max = std::max(survey_max, rcf::restricted_norm_survey(d, 100, 40, seed + s));
            }
            check("restricted_norm_10", survey_max, 10.0, survey_max <= 10.0);

            bool growth_ok = true;
            for (int i = 0; i < samples && growth_ok; ++i) {
                std::size_t len = 1 + rng.below(60);
                std::string u;
                for (std::size_t j = 0; j < len; ++j) u.push_back('1' + char(rng.below(3)));
                for (int b = 1; b <= 4 && growth_ok; ++b) growth_ok = rcf::balance_growth_check(u, b);
            }
            check("balance_growth", growth_ok ? 1 : 0, 1, growth_ok);

            double billiard_sup = 0;
            for (int i = 0; i < samples; ++i) {
                std::array<std::int64_t, 3> t{std::int64_t(rng.below(51)), std::int64_t(rng.below(51)),
                                              std::int64_t(rng.below(51))};
                if (t[0] + t[1] + t[2] == 0) t[0] = 1;
                std::string w = rcf::billiard_word(t);
                billiard_sup = std::max(billiard_sup, rcf::billiard_prefix_sup(w, t));
            }
            check("billiard_prefix_bound", billiard_sup, 1.0, billiard_sup <= 1.0 + 1e-9);

            double inv = 0;
            inv = std::max(inv, std::fabs(rcf::invariance_defect_on_box(0.10, 0.30, 0.20, 0.40)));
            inv = std::max(inv, std::fabs(rcf::invariance_defect_on_box(0.05, 0.15, 0.05, 0.15)));
            inv = std::max(inv, std::fabs(rcf::invariance_defect_on_box(0.40, 0.55, 0.10, 0.30)));
            check("measure_invariance", inv, 1e-5, inv < 1e-5);

            auto m = rcf::measure_mass();
            check("measure_mass", m.value, 1.0, std::fabs(m.value - 1.0) < 1e-6);

            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
