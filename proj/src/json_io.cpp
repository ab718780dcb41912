#include "coxwalk/json_io.hpp"

#include "coxwalk/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace coxwalk {

std::string format_float(double value) {
    if (value == 0) return "0";  // avoid "-0"
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

double round_float(double value) {
    return std::strtod(format_float(value).c_str(), nullptr);
}

std::vector<int> reduced_word(const AffineWeyl& aw, const AffineElement& x) {
    std::vector<int> word;
    AffineElement y = x;
    const int r = aw.rank() + 1;
    while (!(y == aw.identity_element())) {
        int descent = -1;
        for (int i = 0; i < r && descent < 0; ++i)
            if (!aw.is_up_move(i, y)) descent = i;
        if (descent < 0) throw Error("no descent found while peeling");
        word.push_back(descent);
        y = aw.left_mul_gen(descent, y);
    }
    return word;
}

namespace {

template <class Ints>
std::string join_spaces(const Ints& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

std::string word_string(const WeylGroup& group, Index w) {
    if (w == group.identity()) return "e";
    return join_spaces(group.word(w));
}

std::string word_string(const AffineWeyl& aw, const AffineElement& x) {
    if (x == aw.identity_element()) return "e";
    return join_spaces(reduced_word(aw, x));
}

OrderedJson element_json(const AffineWeyl& aw, const AffineElement& x) {
    OrderedJson j;
    j["word"] = reduced_word(aw, x);
    j["type"] = word_string(aw.weyl(), x.w);
    j["lambda"] = x.lambda;
    return j;
}

OrderedJson chain_report_json(const TransitionMatrix& chain, const Distribution& zeta,
                              const DirectionVector& psi_dir, const Distribution& chambers) {
    const WeylGroup& wg = *chain.group();
    OrderedJson j;
    j["type"] = wg.roots().type().name();
    j["weights"] = weight_scheme_name(chain.scheme());
    OrderedJson zs = OrderedJson::array();
    for (Index w = 0; w < zeta.values.size(); ++w) {
        OrderedJson entry;
        entry["word"] = word_string(wg, w);
        entry["value"] = to_fraction_string(zeta.values[w]);
        zs.push_back(std::move(entry));
    }
    j["zeta"] = std::move(zs);
    OrderedJson psi_j;
    psi_j["coords"] = psi_dir.coords;
    OrderedJson unit = OrderedJson::array();
    for (double v : psi_dir.unit) unit.push_back(round_float(v));
    psi_j["unit"] = std::move(unit);
    j["psi"] = std::move(psi_j);
    OrderedJson cs = OrderedJson::array();
    for (Index w = 0; w < chambers.values.size(); ++w) {
        OrderedJson entry;
        entry["word"] = word_string(wg, w);
        entry["value"] = to_fraction_string(chambers.values[w]);
        cs.push_back(std::move(entry));
    }
    j["chambers"] = std::move(cs);
    return j;
}

OrderedJson probes_json(const ConjectureReport& report) {
    OrderedJson j;
    j["type"] = report.type_name;
    OrderedJson ratios = OrderedJson::array();
    for (const Rational& r : report.ratios_over_longest)
        ratios.push_back(to_fraction_string(r));
    j["ratios_over_longest"] = std::move(ratios);
    j["ratios_all_integral"] = report.ratios_all_integral;
    j["argmax_state"] = report.argmax_state;
    j["argmax_is_identity"] = report.argmax_is_identity;
    j["identity_over_longest"] = to_fraction_string(report.identity_over_longest);
    j["binomial_product"] = report.binomial_product.get_str();
    j["identity_ratio_matches_product"] = report.identity_ratio_matches_product;
    j["psi_parallel_rho_covector"] = report.psi_parallel_rho_covector;
    j["uniform_spread"] = to_fraction_string(report.uniform_spread);
    j["uniform_spread_is_96"] = report.uniform_spread_is_96;
    j["pathcount_computed"] = report.pathcount_computed;
    if (report.pathcount_computed) {
        j["pathcount_spread"] = round_float(report.pathcount_spread);
        j["pathcount_spread_near_96"] = report.pathcount_spread_near_96;
    }
    return j;
}

OrderedJson distribution_json(const AffineWeyl& aw, const StepDistribution& dist) {
    OrderedJson j;
    j["steps"] = dist.steps;
    j["variant"] = walk_variant_name(dist.variant);
    OrderedJson entries = OrderedJson::array();
    for (const auto& [x, p] : dist.probabilities) {
        OrderedJson entry = element_json(aw, x);
        entry["value"] = to_fraction_string(p);
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string trajectory_csv(const AffineWeyl& aw, const Trajectory& traj) {
    std::ostringstream out;
    out << "step,word,lambda,length\n";
    std::vector<int> applied;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        if (k > 0 && traj.moves[k - 1] >= 0) applied.push_back(traj.moves[k - 1]);
        out << k << ',' << join_spaces(applied) << ','
            << join_spaces(traj.states[k].lambda) << ','
            << aw.length(traj.states[k]) << '\n';
    }
    return out.str();
}

std::string sign_string(const ShiRegion& region) {
    std::string s;
    for (int8_t v : region.sign) s += v < 0 ? '-' : (v > 0 ? '+' : '0');
    return s;
}

OrderedJson gamma_json(const GammaGraph& graph) {
    const WeylGroup& wg = *graph.group;
    OrderedJson j;
    j["type"] = wg.roots().type().name();
    j["source"] = graph.source;
    OrderedJson verts = OrderedJson::array();
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        OrderedJson entry;
        entry["region"] = sign_string(graph.vertices[v].region);
        entry["state"] = word_string(wg, graph.vertices[v].type);
        entry["absorbing"] =
            std::find(graph.absorbing.begin(), graph.absorbing.end(), v) !=
            graph.absorbing.end();
        OrderedJson edges = OrderedJson::array();
        for (const auto& [target, prob] : graph.edges[v]) {
            OrderedJson edge;
            edge["to"] = target;
            edge["prob"] = to_fraction_string(prob);
            edges.push_back(std::move(edge));
        }
        entry["edges"] = std::move(edges);
        verts.push_back(std::move(entry));
    }
    j["vertices"] = std::move(verts);
    return j;
}

OrderedJson region_probabilities_json(const GammaGraph& graph,
                                      const std::map<ShiRegion, Rational>& hitting) {
    OrderedJson j;
    j["type"] = graph.group->roots().type().name();
    OrderedJson regions = OrderedJson::array();
    for (const auto& [region, prob] : hitting) {
        OrderedJson entry;
        entry["region"] = sign_string(region);
        entry["separation"] = region.separation();
        entry["probability"] = to_fraction_string(prob);
        regions.push_back(std::move(entry));
    }
    j["regions"] = std::move(regions);
    return j;
}

OrderedJson core_json(const CorePartition& core) {
    return OrderedJson(core.rows);
}

std::string profile_csv(const BoundaryProfile& profile) {
    std::ostringstream out;
    out << "x,y\n";
    for (const auto& v : profile.vertices)
        out << format_float(v[0]) << ',' << format_float(v[1]) << '\n';
    return out.str();
}

std::string profile_svg(const std::vector<BoundaryProfile>& profiles) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& p : profiles)
        for (const auto& v : p.vertices) {
            lo_x = std::min(lo_x, v[0]);
            hi_x = std::max(hi_x, v[0]);
            lo_y = std::min(lo_y, -v[1]);  // y flipped: SVG y grows downward
            hi_y = std::max(hi_y, -v[1]);
        }
    double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
    if (margin <= 0) margin = 1;
    static const char* colors[] = {"black", "#c02020", "#2040c0", "#208020"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << format_float(lo_x - margin) << ' ' << format_float(lo_y - margin) << ' '
        << format_float(hi_x - lo_x + 2 * margin) << ' '
        << format_float(hi_y - lo_y + 2 * margin) << "\">\n";
    for (std::size_t k = 0; k < profiles.size(); ++k) {
        out << "  <path fill=\"none\" stroke=\"" << colors[k % 4]
            << "\" stroke-width=\"" << format_float(margin / 10) << "\" d=\"";
        const auto& verts = profiles[k].vertices;
        for (std::size_t i = 0; i < verts.size(); ++i)
            out << (i == 0 ? "M " : " L ") << format_float(verts[i][0]) << ' '
                << format_float(-verts[i][1]);
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

OrderedJson limit_curve_json(const LimitCurve& curve) {
    OrderedJson j;
    j["n"] = curve.n;
    j["alpha"] = to_fraction_string(curve.alpha);
    OrderedJson verts = OrderedJson::array();
    for (const auto& v : curve.profile.vertices) {
        OrderedJson point = OrderedJson::array();
        point.push_back(round_float(v[0]));
        point.push_back(round_float(v[1]));
        verts.push_back(std::move(point));
    }
    j["vertices"] = std::move(verts);
    j["area_scale_constant"] = to_fraction_string(curve.area_scale_constant);
    j["enclosed_area"] = to_fraction_string(curve.enclosed_area);
    j["direction_verified"] = curve.direction_verified;
    return j;
}

OrderedJson first_row_json(const FirstRowStatistics& stats) {
    OrderedJson j;
    j["form"] = stats.form == FirstRowForm::by_degree ? "degree" : "boxes";
    j["asymptotic_constant"] = round_float(stats.asymptotic_constant);
    j["predicted_value"] = round_float(stats.predicted_value);
    j["conditional_on_direction"] = stats.conditional_on_direction;
    if (stats.monte_carlo_estimate != 0)
        j["monte_carlo_estimate"] = round_float(stats.monte_carlo_estimate);
    return j;
}

}  // namespace coxwalk
