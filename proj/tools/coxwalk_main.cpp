// Command-line front end: every library computation behind one binary with
// reproducible seeds and machine-readable output.
//
// Exit codes: 0 success, 1 computation error, 2 bad arguments.

#include "coxwalk/json_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace coxwalk;

constexpr std::uint64_t kDefaultSeed = 1729;  // documented default; see README

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string type = "A2";
    int n = 4;  // core modulus
    int steps = 100;
    std::uint64_t trials = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string weights = "uniform";
    std::string variant = "delayed";
    std::string format = "json";
    std::string out;
    int threads = 1;
};

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw Error("cannot open output file " + cfg.out);
    file << text;
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

AffineWeyl affine_group(const std::string& type) {
    return AffineWeyl(WeylGroup::build(RootSystem::build(type)));
}

double gram_angle_degrees(const RootSystem& rs, const std::vector<double>& a,
                          const std::vector<double>& b) {
    const int r = rs.rank();
    double dot = 0, na = 0, nb = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            RationalVec ei(r, Rational(0)), ej(r, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            double g = to_double(rs.coroot_inner(ei, ej));
            dot += a[i] * g * b[j];
            na += a[i] * g * a[j];
            nb += b[i] * g * b[j];
        }
    double c = dot / std::sqrt(na * nb);
    c = std::min(1.0, std::max(-1.0, c));
    return std::acos(c) * 180.0 / 3.14159265358979323846;
}

void cmd_simulate(const RunConfig& cfg) {
    AffineWeyl aw = affine_group(cfg.type);
    WalkVariant variant = parse_walk_variant(cfg.variant);
    Trajectory traj = simulate(aw, cfg.steps, variant, cfg.seed);
    if (cfg.format == "csv") {
        write_output(cfg, trajectory_csv(aw, traj));
        return;
    }
    if (cfg.format != "json") throw UsageError("simulate supports json or csv output");
    OrderedJson j;
    j["type"] = aw.roots().type().name();
    j["variant"] = walk_variant_name(traj.variant);
    j["steps"] = cfg.steps;
    j["seed"] = traj.seed;
    OrderedJson states = OrderedJson::array();
    for (const AffineElement& x : traj.states) states.push_back(element_json(aw, x));
    j["states"] = std::move(states);
    j["moves"] = traj.moves;
    write_output(cfg, dump(j));
}

void cmd_stationary(const RunConfig& cfg, bool with_probes) {
    if (cfg.format != "json") throw UsageError("stationary supports json output only");
    auto rs = RootSystem::build(cfg.type);
    auto group = WeylGroup::build(rs);
    TransitionMatrix chain = build_chain(group, parse_weight_scheme(cfg.weights));
    Distribution zeta = stationary_distribution(chain);
    DirectionVector dir = psi(*group, zeta);
    Distribution chambers = chamber_probabilities(zeta);
    OrderedJson j = chain_report_json(chain, zeta, dir, chambers);
    if (with_probes) j["probes"] = probes_json(conjecture_probes(rs));
    write_output(cfg, dump(j));
}

void cmd_psi(const RunConfig& cfg) {
    if (cfg.format != "json") throw UsageError("psi supports json output only");
    auto rs = RootSystem::build(cfg.type);
    DirectionVector dir = psi(rs, parse_weight_scheme(cfg.weights));
    RadialSpeed speed = radial_speed(*rs, dir);
    OrderedJson j;
    j["type"] = rs->type().name();
    j["weights"] = cfg.weights;
    OrderedJson psi_j;
    psi_j["coords"] = dir.coords;
    OrderedJson unit = OrderedJson::array();
    for (double v : dir.unit) unit.push_back(round_float(v));
    psi_j["unit"] = std::move(unit);
    j["psi"] = std::move(psi_j);
    OrderedJson speed_j;
    speed_j["squared"] = to_fraction_string(speed.squared);
    speed_j["value"] = round_float(speed.value);
    j["radial_speed"] = std::move(speed_j);
    write_output(cfg, dump(j));
}

void cmd_chambers(const RunConfig& cfg) {
    if (cfg.format != "json") throw UsageError("chambers supports json output only");
    auto rs = RootSystem::build(cfg.type);
    auto group = WeylGroup::build(rs);
    TransitionMatrix chain = build_chain(group, parse_weight_scheme(cfg.weights));
    Distribution zeta = stationary_distribution(chain);
    Distribution chambers = chamber_probabilities(zeta);
    OrderedJson j;
    j["type"] = rs->type().name();
    j["weights"] = cfg.weights;
    OrderedJson exact = OrderedJson::array();
    for (Index w = 0; w < chambers.values.size(); ++w) {
        OrderedJson entry;
        entry["word"] = word_string(*group, w);
        entry["value"] = to_fraction_string(chambers.values[w]);
        exact.push_back(std::move(entry));
    }
    j["exact"] = std::move(exact);
    if (cfg.trials > 0) {
        AffineWeyl aw(group);
        ChamberFrequencies freq =
            empirical_chamber_frequencies(aw, cfg.steps, cfg.trials, cfg.seed, cfg.threads);
        std::vector<double> mean =
            empirical_direction(aw, cfg.steps, cfg.trials, cfg.seed, cfg.threads);
        DirectionVector dir = psi(*group, zeta);
        OrderedJson emp;
        emp["steps"] = cfg.steps;
        emp["trials"] = freq.trials;
        emp["seed"] = cfg.seed;
        OrderedJson fr = OrderedJson::array();
        for (Index w = 0; w < freq.frequency.size(); ++w) {
            OrderedJson entry;
            entry["word"] = word_string(*group, w);
            entry["value"] = round_float(freq.frequency[w]);
            fr.push_back(std::move(entry));
        }
        emp["frequencies"] = std::move(fr);
        emp["undecided"] = freq.undecided;
        OrderedJson dir_j = OrderedJson::array();
        for (double v : mean) dir_j.push_back(round_float(v));
        emp["direction"] = std::move(dir_j);
        emp["angle_to_psi_degrees"] = round_float(gram_angle_degrees(*rs, mean, dir.unit));
        j["empirical"] = std::move(emp);
    }
    write_output(cfg, dump(j));
}

void cmd_shi(const RunConfig& cfg, bool regions, bool absorption) {
    if (cfg.format != "json") throw UsageError("shi supports json output only");
    AffineWeyl aw = affine_group(cfg.type);
    GammaGraph graph = build_gamma(aw);
    if (regions) {
        write_output(cfg, dump(region_probabilities_json(
                              graph, region_hitting_probabilities(graph))));
        return;
    }
    if (absorption) {
        const WeylGroup& wg = *graph.group;
        OrderedJson j;
        j["type"] = wg.roots().type().name();
        OrderedJson entries = OrderedJson::array();
        for (Index w = 0; w < wg.size(); ++w) {
            OrderedJson entry;
            entry["word"] = word_string(wg, w);
            entry["value"] = to_fraction_string(absorption_probability(graph, w));
            entries.push_back(std::move(entry));
        }
        j["absorption"] = std::move(entries);
        write_output(cfg, dump(j));
        return;
    }
    write_output(cfg, dump(gamma_json(graph)));
}

void cmd_cores(const RunConfig& cfg, bool limit, const std::string& first_row) {
    if (limit) {
        LimitCurve curve = limit_curve(cfg.n);
        if (cfg.format == "json") {
            write_output(cfg, dump(limit_curve_json(curve)));
        } else if (cfg.format == "csv") {
            write_output(cfg, profile_csv(curve.profile));
        } else if (cfg.format == "svg") {
            write_output(cfg, profile_svg({curve.profile}));
        } else {
            throw UsageError("unknown format " + cfg.format);
        }
        return;
    }
    if (!first_row.empty()) {
        if (cfg.format != "json") throw UsageError("first-row statistics are json only");
        FirstRowForm form;
        if (first_row == "degree")
            form = FirstRowForm::by_degree;
        else if (first_row == "boxes")
            form = FirstRowForm::by_boxes;
        else
            throw UsageError("--first-row takes 'degree' or 'boxes'");
        FirstRowStatistics stats = first_row_statistics(
            cfg.n, cfg.steps, form, static_cast<int>(cfg.trials), cfg.seed);
        OrderedJson j = first_row_json(stats);
        j["n"] = cfg.n;
        j["amount"] = cfg.steps;
        write_output(cfg, dump(j));
        return;
    }
    CorePartition core = random_core(cfg.n, cfg.steps, cfg.seed);
    if (cfg.format == "json") {
        write_output(cfg, dump(core_json(core)));
    } else if (cfg.format == "csv") {
        write_output(cfg, profile_csv(boundary_profile(core, std::max(cfg.steps, 1))));
    } else if (cfg.format == "svg") {
        // sampled profile overlaid on the limit curve (degree == steps here)
        write_output(cfg, profile_svg({boundary_profile(core, std::max(cfg.steps, 1)),
                                       limit_curve(cfg.n).profile}));
    } else {
        throw UsageError("unknown format " + cfg.format);
    }
}

int cmd_verify() {
    int failures = 0;
    auto check = [&](const std::string& name, auto&& body) {
        try {
            body();
            std::cout << "PASS " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << name << ": " << e.what() << "\n";
        }
    };
    auto expect = [](bool ok, const std::string& message) {
        if (!ok) throw Error(message);
    };

    check("chain-rows-stochastic", [&] {
        auto group = WeylGroup::build(RootSystem::build("B2"));
        TransitionMatrix chain = build_chain(group);
        for (Index u = 0; u < chain.size(); ++u) {
            Rational total = chain.diagonal(u);
            for (const auto& [v, p] : chain.row(u)) total += p;
            expect(total == 1, "row mass must be 1");
        }
    });
    check("stationary-fixed-point", [&] {
        for (const char* type : {"A2", "B2"}) {
            auto group = WeylGroup::build(RootSystem::build(type));
            TransitionMatrix chain = build_chain(group);
            Distribution zeta = stationary_distribution(chain);
            RationalVec image(chain.size(), Rational(0));
            for (Index u = 0; u < chain.size(); ++u) {
                image[u] += zeta.values[u] * chain.diagonal(u);
                for (const auto& [v, p] : chain.row(u)) image[v] += zeta.values[u] * p;
            }
            expect(image == zeta.values, "zeta P != zeta");
        }
    });
    check("direction-dominant", [&] {
        for (const char* type : {"A2", "A3", "B3", "G2"}) {
            auto rs = RootSystem::build(type);
            DirectionVector dir = psi(rs);
            expect(!rs->is_antidominant(dir.coords) || rs->rank() == 0,
                   "direction must be dominant");
        }
    });
    check("absorption-matches-chambers", [&] {
        auto group = WeylGroup::build(RootSystem::build("A2"));
        Distribution chambers =
            chamber_probabilities(stationary_distribution(build_chain(group)));
        GammaGraph graph = build_gamma(AffineWeyl(group));
        for (Index w = 0; w < group->size(); ++w)
            expect(absorption_probability(graph, w) == chambers.values[w],
                   "absorption != chamber probability");
    });
    check("region-count", [&] {
        AffineWeyl aw = affine_group("A2");
        expect(enumerate_regions(aw).size() == 16, "expected 16 regions");
    });
    check("delayed-distribution-symmetric", [&] {
        AffineWeyl aw = affine_group("A2");
        for (int steps = 0; steps <= 5; ++steps) {
            StepDistribution dist = exact_distribution(aw, steps, WalkVariant::delayed);
            for (const auto& [x, p] : dist.probabilities) {
                auto it = dist.probabilities.find(aw.inverse(x));
                expect(it != dist.probabilities.end() && it->second == p,
                       "delayed distribution not symmetric under inversion");
            }
        }
    });
    check("word-counts-symmetric", [&] {
        AffineWeyl aw = affine_group("A2");
        for (int steps = 0; steps <= 5; ++steps) {
            auto counts = reduced_word_counts(aw, steps);
            for (const auto& [x, c] : counts) {
                auto it = counts.find(aw.inverse(x));
                expect(it != counts.end() && it->second == c,
                       "word counts not symmetric under inversion");
            }
        }
    });
    check("core-bijection-roundtrip", [&] {
        AffineWeyl aw = affine_group("A3");
        Trajectory traj = simulate(aw, 40, WalkVariant::grassmannian, kDefaultSeed);
        for (const AffineElement& x : traj.states) {
            CorePartition core = core_from_affine(aw, x);
            expect(affine_from_core(aw, core) == x, "core round trip failed");
            expect(core_degree(core) == aw.length(x), "core degree != length");
        }
    });
    check("limit-curve-area-ratio", [&] {
        for (int n = 2; n <= 6; ++n) {
            LimitCurve curve = limit_curve(n);
            expect(curve.area_scale_constant == 2 * curve.enclosed_area,
                   "scale constant is twice the enclosed area");
        }
    });
    check("translation-length", [&] {
        auto rs = RootSystem::build("B2");
        AffineWeyl aw(WeylGroup::build(rs));
        IntVec lambda = {3, -2};
        long long total = 0;
        for (const IntVec& alpha : rs->positive_roots())
            total += std::llabs(rs->pair(lambda, alpha));
        expect(aw.length(aw.translation(lambda)) == total,
               "translation length formula failed");
    });

    std::cout << (failures == 0 ? "verify: all invariants hold\n"
                                : "verify: " + std::to_string(failures) + " failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced random walks on affine Weyl groups"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool with_probes = false, regions = false, absorption = false, limit = false;
    std::string first_row;

    auto add_common = [&](CLI::App* sub, bool wants_type) {
        if (wants_type) sub->add_option("--type", cfg.type, "Cartan type, e.g. A2, B3");
        sub->add_option("--format", cfg.format, "json|csv|svg")->capture_default_str();
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        return sub;
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed")
            ->envname("COXWALK_SEED")
            ->capture_default_str();
    };

    CLI::App* sim = add_common(app.add_subcommand("simulate", "sample one trajectory"), true);
    sim->add_option("--steps", cfg.steps, "number of steps")->capture_default_str();
    sim->add_option("--variant", cfg.variant, "free|delayed|grassmannian")
        ->capture_default_str();
    add_seed(sim);

    CLI::App* stat = add_common(
        app.add_subcommand("stationary", "exact stationary distribution of the projected chain"),
        true);
    stat->add_option("--weights", cfg.weights, "uniform|marks|comarks")->capture_default_str();
    stat->add_flag("--probes", with_probes, "append the numerical conjecture report");

    CLI::App* psi_cmd = add_common(
        app.add_subcommand("psi", "limiting direction and radial speed"), true);
    psi_cmd->add_option("--weights", cfg.weights, "uniform|marks|comarks")
        ->capture_default_str();

    CLI::App* chambers_cmd = add_common(
        app.add_subcommand("chambers", "chamber probabilities, exact and sampled"), true);
    chambers_cmd->add_option("--weights", cfg.weights, "uniform|marks|comarks")
        ->capture_default_str();
    chambers_cmd->add_option("--trials", cfg.trials, "Monte Carlo trials (0 = exact only)")
        ->capture_default_str();
    chambers_cmd->add_option("--steps", cfg.steps, "walk length per trial")
        ->capture_default_str();
    chambers_cmd->add_option("--threads", cfg.threads, "Monte Carlo fan-out")
        ->capture_default_str();
    add_seed(chambers_cmd);

    CLI::App* shi_cmd = add_common(
        app.add_subcommand("shi", "absorbing chain on the regions of the arrangement"), true);
    shi_cmd->add_flag("--regions", regions, "emit region-hitting probabilities");
    shi_cmd->add_flag("--absorption", absorption, "emit absorption probabilities by chamber");

    CLI::App* cores_cmd = add_common(
        app.add_subcommand("cores", "random cores, boundary profiles, limit curve"), false);
    cores_cmd->add_option("--n", cfg.n, "core modulus")->capture_default_str();
    cores_cmd->add_option("--steps", cfg.steps, "growth steps / statistic amount")
        ->capture_default_str();
    cores_cmd->add_flag("--limit", limit, "emit the limit curve instead of a sample");
    cores_cmd->add_option("--first-row", first_row,
                          "first-row statistics by 'degree' or 'boxes'");
    cores_cmd->add_option("--trials", cfg.trials, "Monte Carlo trials for --first-row")
        ->capture_default_str();
    add_seed(cores_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the cross-module invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) cmd_simulate(cfg);
        else if (stat->parsed()) cmd_stationary(cfg, with_probes);
        else if (psi_cmd->parsed()) cmd_psi(cfg);
        else if (chambers_cmd->parsed()) cmd_chambers(cfg);
        else if (shi_cmd->parsed()) cmd_shi(cfg, regions, absorption);
        else if (cores_cmd->parsed()) cmd_cores(cfg, limit, first_row);
        else if (verify_cmd->parsed()) return cmd_verify();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
