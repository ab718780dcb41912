// Python bindings for the core operations: exact chain computations, walk
// simulation, the absorbing region chain, and the core bijection.  Rationals
// cross the boundary as fractions.Fraction, exactness preserved.

#include "coxwalk/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace coxwalk;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_fraction_string(r));
}

py::list fraction_list(const RationalVec& values) {
    py::list out;
    for (const Rational& v : values) out.append(to_fraction(v));
    return out;
}

py::object big_to_int(const BigInt& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

struct PyRoots {
    std::shared_ptr<const RootSystem> rs;
};

struct PyGroup {
    std::shared_ptr<const WeylGroup> wg;
};

}  // namespace

PYBIND11_MODULE(_coxwalk, m) {
    m.doc() = "Reduced random walks on affine Weyl groups";

    py::class_<PyRoots>(m, "RootSystem")
        .def_static("build", [](const std::string& tag) { return PyRoots{RootSystem::build(tag)}; })
        .def_property_readonly("type", [](const PyRoots& r) { return r.rs->type().name(); })
        .def_property_readonly("rank", [](const PyRoots& r) { return r.rs->rank(); })
        .def("cartan", [](const PyRoots& r, int i, int j) { return r.rs->cartan(i, j); })
        .def_property_readonly("positive_roots",
                               [](const PyRoots& r) { return r.rs->positive_roots(); })
        .def_property_readonly("positive_coroots",
                               [](const PyRoots& r) { return r.rs->positive_coroots(); })
        .def_property_readonly("highest_root",
                               [](const PyRoots& r) { return r.rs->highest_root(); })
        .def_property_readonly("marks", [](const PyRoots& r) { return r.rs->marks(); })
        .def_property_readonly("comarks", [](const PyRoots& r) { return r.rs->comarks(); })
        .def_property_readonly("coxeter_number",
                               [](const PyRoots& r) { return r.rs->coxeter_number(); })
        .def_property_readonly("weyl_order", [](const PyRoots& r) { return r.rs->weyl_order(); })
        .def_property_readonly("two_rho_coroot",
                               [](const PyRoots& r) { return r.rs->two_rho_coroot(); })
        .def("__repr__",
             [](const PyRoots& r) { return "RootSystem(" + r.rs->type().name() + ")"; });

    py::class_<PyGroup>(m, "WeylGroup")
        .def_static("build",
                    [](const PyRoots& r) { return PyGroup{WeylGroup::build(r.rs)}; })
        .def_static("build",
                    [](const std::string& tag) {
                        return PyGroup{WeylGroup::build(RootSystem::build(tag))};
                    })
        .def_property_readonly("roots", [](const PyGroup& g) { return PyRoots{g.wg->roots_ptr()}; })
        .def("__len__", [](const PyGroup& g) { return g.wg->size(); })
        .def_property_readonly("identity", [](const PyGroup& g) { return g.wg->identity(); })
        .def_property_readonly("longest_element",
                               [](const PyGroup& g) { return g.wg->longest_element(); })
        .def("length", [](const PyGroup& g, Index w) { return g.wg->length(w); })
        .def("word", [](const PyGroup& g, Index w) { return g.wg->word(w); })
        .def("multiply", [](const PyGroup& g, Index u, Index v) { return g.wg->multiply(u, v); })
        .def("inverse", [](const PyGroup& g, Index w) { return g.wg->inverse(w); })
        .def("left_mul", [](const PyGroup& g, int i, Index w) { return g.wg->left_mul(i, w); })
        .def("is_left_descent",
             [](const PyGroup& g, int i, Index w) { return g.wg->is_left_descent(i, w); })
        .def("theta_ascent", [](const PyGroup& g, Index w) { return g.wg->theta_ascent(w); })
        .def("apply_to_coroot",
             [](const PyGroup& g, Index w, const IntVec& v) { return g.wg->apply_to_coroot(w, v); })
        .def("__repr__", [](const PyGroup& g) {
            return "WeylGroup(" + g.wg->roots().type().name() + ", order " +
                   std::to_string(g.wg->size()) + ")";
        });

    py::class_<AffineElement>(m, "AffineElement")
        .def_readonly("w", &AffineElement::w, "finite part, as a group index")
        .def_property_readonly("lam",
                               [](const AffineElement& x) { return x.lambda; },
                               "translation coweight")
        .def("__eq__", [](const AffineElement& a, const AffineElement& b) { return a == b; })
        .def("__lt__", [](const AffineElement& a, const AffineElement& b) { return a < b; })
        .def("__hash__",
             [](const AffineElement& x) {
                 std::size_t h = std::hash<Index>()(x.w);
                 for (long long v : x.lambda)
                     h = h * 1000003 + std::hash<long long>()(v);
                 return h;
             })
        .def("__repr__", [](const AffineElement& x) {
            std::ostringstream out;
            out << "AffineElement(w=" << x.w << ", lam=[";
            for (std::size_t i = 0; i < x.lambda.size(); ++i)
                out << (i ? "," : "") << x.lambda[i];
            out << "])";
            return out.str();
        });

    py::class_<AffineWeyl>(m, "AffineWeyl")
        .def(py::init([](const PyGroup& g) { return AffineWeyl(g.wg); }))
        .def(py::init([](const std::string& tag) {
            return AffineWeyl(WeylGroup::build(RootSystem::build(tag)));
        }))
        .def_property_readonly("rank", &AffineWeyl::rank)
        .def_property_readonly("group", [](const AffineWeyl& aw) { return PyGroup{aw.weyl_ptr()}; })
        .def_property_readonly("identity", &AffineWeyl::identity_element)
        .def("translation", &AffineWeyl::translation)
        .def("left_mul_gen", &AffineWeyl::left_mul_gen)
        .def("multiply", &AffineWeyl::multiply)
        .def("inverse", &AffineWeyl::inverse)
        .def("from_word", &AffineWeyl::from_word)
        .def("reduced_word",
             [](const AffineWeyl& aw, const AffineElement& x) { return reduced_word(aw, x); })
        .def("length", &AffineWeyl::length)
        .def("is_up_move", &AffineWeyl::is_up_move)
        .def("up_moves", &AffineWeyl::up_moves)
        .def("is_affine_grassmannian", &AffineWeyl::is_affine_grassmannian)
        .def("grassmannian_up_moves", &AffineWeyl::grassmannian_up_moves)
        .def("chamber_of", &AffineWeyl::chamber_of)
        .def("alcove_address", &AffineWeyl::alcove_address)
        .def("centroid",
             [](const AffineWeyl& aw, const AffineElement& x) {
                 return fraction_list(aw.centroid(x));
             })
        .def("__repr__", [](const AffineWeyl& aw) {
            return "AffineWeyl(" + aw.roots().type().name() + ")";
        });

    py::class_<TransitionMatrix>(m, "TransitionMatrix")
        .def_property_readonly("size", &TransitionMatrix::size)
        .def_property_readonly("scheme",
                               [](const TransitionMatrix& c) {
                                   return weight_scheme_name(c.scheme());
                               })
        .def("prob",
             [](const TransitionMatrix& c, Index u, Index v) { return to_fraction(c.prob(u, v)); })
        .def("diagonal",
             [](const TransitionMatrix& c, Index u) { return to_fraction(c.diagonal(u)); });

    m.def(
        "build_chain",
        [](const PyGroup& g, const std::string& scheme) {
            return build_chain(g.wg, parse_weight_scheme(scheme));
        },
        py::arg("group"), py::arg("scheme") = "uniform");
    m.def("stationary_distribution", [](const TransitionMatrix& chain) {
        return fraction_list(stationary_distribution(chain).values);
    });
    m.def("chamber_probabilities", [](const TransitionMatrix& chain) {
        Distribution zeta = stationary_distribution(chain);
        return fraction_list(chamber_probabilities(zeta).values);
    });
    m.def(
        "psi",
        [](const PyRoots& r, const std::string& scheme) {
            DirectionVector dir = psi(r.rs, parse_weight_scheme(scheme));
            return py::make_tuple(dir.coords, dir.unit);
        },
        py::arg("roots"), py::arg("scheme") = "uniform",
        "limiting direction: (primitive integer coords, unit vector)");
    m.def("radial_speed", [](const PyRoots& r, const IntVec& direction) {
        DirectionVector dir;
        dir.coords = direction;
        RadialSpeed speed = radial_speed(*r.rs, dir);
        return py::make_tuple(to_fraction(speed.squared), speed.value);
    });
    m.def("conjecture_probes", [](const PyRoots& r) {
        ConjectureReport rep = conjecture_probes(r.rs);
        py::dict d;
        d["type"] = rep.type_name;
        d["ratios_over_longest"] = fraction_list(rep.ratios_over_longest);
        d["ratios_all_integral"] = rep.ratios_all_integral;
        d["argmax_state"] = rep.argmax_state;
        d["argmax_is_identity"] = rep.argmax_is_identity;
        d["identity_over_longest"] = to_fraction(rep.identity_over_longest);
        d["binomial_product"] = big_to_int(rep.binomial_product);
        d["identity_ratio_matches_product"] = rep.identity_ratio_matches_product;
        d["psi_parallel_rho_covector"] = rep.psi_parallel_rho_covector;
        d["uniform_spread"] = to_fraction(rep.uniform_spread);
        d["uniform_spread_is_96"] = rep.uniform_spread_is_96;
        d["pathcount_computed"] = rep.pathcount_computed;
        d["pathcount_spread"] = rep.pathcount_spread;
        d["pathcount_spread_near_96"] = rep.pathcount_spread_near_96;
        return d;
    });

    m.def(
        "simulate",
        [](const AffineWeyl& aw, int steps, const std::string& variant, std::uint64_t seed) {
            Trajectory traj = simulate(aw, steps, parse_walk_variant(variant), seed);
            return py::make_tuple(traj.states, traj.moves);
        },
        py::arg("aw"), py::arg("steps"), py::arg("variant") = "free", py::arg("seed") = 1729,
        "one seeded trajectory: (states X_0..X_N, moves with -1 for stays)");
    m.def(
        "exact_distribution",
        [](const AffineWeyl& aw, int steps, const std::string& variant) {
            StepDistribution dist = exact_distribution(aw, steps, parse_walk_variant(variant));
            py::list out;
            for (const auto& [x, p] : dist.probabilities)
                out.append(py::make_tuple(x, to_fraction(p)));
            return out;
        },
        py::arg("aw"), py::arg("steps"), py::arg("variant") = "free");
    m.def("reduced_word_counts", [](const AffineWeyl& aw, int steps) {
        py::list out;
        for (const auto& [x, c] : reduced_word_counts(aw, steps))
            out.append(py::make_tuple(x, big_to_int(c)));
        return out;
    });
    m.def(
        "empirical_chamber_frequencies",
        [](const AffineWeyl& aw, int steps, std::uint64_t trials, std::uint64_t seed,
           int threads) {
            ChamberFrequencies freq =
                empirical_chamber_frequencies(aw, steps, trials, seed, threads);
            return py::make_tuple(freq.frequency, freq.undecided);
        },
        py::arg("aw"), py::arg("steps"), py::arg("trials"), py::arg("seed") = 1729,
        py::arg("threads") = 1);
    m.def(
        "empirical_direction",
        [](const AffineWeyl& aw, int steps, std::uint64_t trials, std::uint64_t seed,
           int threads) { return empirical_direction(aw, steps, trials, seed, threads); },
        py::arg("aw"), py::arg("steps"), py::arg("trials"), py::arg("seed") = 1729,
        py::arg("threads") = 1);

    py::class_<ShiRegion>(m, "ShiRegion")
        .def_property_readonly("sign",
                               [](const ShiRegion& r) {
                                   return std::vector<int>(r.sign.begin(), r.sign.end());
                               })
        .def_property_readonly("separation", &ShiRegion::separation)
        .def_property_readonly("is_chamber_translate", &ShiRegion::is_chamber_translate)
        .def("__eq__", [](const ShiRegion& a, const ShiRegion& b) { return a == b; })
        .def("__lt__", [](const ShiRegion& a, const ShiRegion& b) { return a < b; })
        .def("__hash__",
             [](const ShiRegion& r) {
                 std::size_t h = 0;
                 for (int8_t v : r.sign) h = h * 31 + static_cast<std::size_t>(v + 1);
                 return h;
             })
        .def("__repr__", [](const ShiRegion& r) { return "ShiRegion(" + sign_string(r) + ")"; });

    py::class_<GammaGraph>(m, "GammaGraph")
        .def_property_readonly("size",
                               [](const GammaGraph& g) { return g.vertices.size(); })
        .def("absorption_probability",
             [](const GammaGraph& g, Index w) { return to_fraction(absorption_probability(g, w)); })
        .def("region_hitting_probabilities", [](const GammaGraph& g) {
            py::list out;
            for (const auto& [region, p] : region_hitting_probabilities(g))
                out.append(py::make_tuple(region, to_fraction(p)));
            return out;
        });

    m.def("region_of", &region_of);
    m.def("enumerate_regions",
          [](const AffineWeyl& aw) { return enumerate_regions(aw); });
    m.def("build_gamma", &build_gamma);

    py::class_<CorePartition>(m, "CorePartition")
        .def(py::init([](const std::vector<long long>& rows, int modulus) {
                 CorePartition c;
                 c.rows = rows;
                 c.modulus = modulus;
                 return c;
             }),
             py::arg("rows"), py::arg("modulus"))
        .def_readonly("rows", &CorePartition::rows)
        .def_readonly("modulus", &CorePartition::modulus)
        .def("__eq__", [](const CorePartition& a, const CorePartition& b) { return a == b; })
        .def("__repr__", [](const CorePartition& c) {
            std::ostringstream out;
            out << "CorePartition([";
            for (std::size_t i = 0; i < c.rows.size(); ++i)
                out << (i ? "," : "") << c.rows[i];
            out << "], modulus=" << c.modulus << ")";
            return out.str();
        });

    m.def("apply_generator", &apply_generator,
          "add (or else remove) all corners of the residue; returns (core, grew)");
    m.def("core_from_affine", &core_from_affine);
    m.def("affine_from_core", &affine_from_core);
    m.def("core_degree", &core_degree);
    m.def("core_boxes", &core_boxes);
    m.def("standard_to_coroot", &standard_to_coroot);
    m.def("coroot_to_standard", &coroot_to_standard);
    m.def("slope_profile", [](const IntVec& mu_standard, int n) {
        py::list out;
        for (const SlopeSegment& seg : slope_profile(mu_standard, n))
            out.append(py::make_tuple(to_fraction(seg.slope), seg.diag_lo, seg.diag_hi));
        return out;
    });
    m.def(
        "boundary_profile",
        [](const CorePartition& core, long long scale) {
            BoundaryProfile p = scale > 0 ? boundary_profile(core, scale) : boundary_profile(core);
            return p.vertices;
        },
        py::arg("core"), py::arg("scale") = 0);
    m.def("profile_distance", [](const std::vector<std::array<double, 2>>& a,
                                 const std::vector<std::array<double, 2>>& b) {
        BoundaryProfile pa, pb;
        pa.vertices = a;
        pb.vertices = b;
        return profile_distance(pa, pb);
    });
    m.def("limit_curve", [](int n) {
        LimitCurve curve = limit_curve(n);
        py::dict d;
        d["n"] = curve.n;
        d["alpha"] = to_fraction(curve.alpha);
        d["vertices"] = curve.profile.vertices;
        d["area_scale_constant"] = to_fraction(curve.area_scale_constant);
        d["enclosed_area"] = to_fraction(curve.enclosed_area);
        d["direction_verified"] = curve.direction_verified;
        return d;
    });
    m.def(
        "first_row_statistics",
        [](int n, long long amount, const std::string& form, int mc_trials, std::uint64_t seed) {
            FirstRowForm f;
            if (form == "degree")
                f = FirstRowForm::by_degree;
            else if (form == "boxes")
                f = FirstRowForm::by_boxes;
            else
                throw Error("form must be 'degree' or 'boxes'");
            FirstRowStatistics stats = first_row_statistics(n, amount, f, mc_trials, seed);
            py::dict d;
            d["form"] = form;
            d["asymptotic_constant"] = stats.asymptotic_constant;
            d["predicted_value"] = stats.predicted_value;
            d["conditional_on_direction"] = stats.conditional_on_direction;
            d["monte_carlo_estimate"] = stats.monte_carlo_estimate;
            return d;
        },
        py::arg("n"), py::arg("amount"), py::arg("form") = "degree", py::arg("mc_trials") = 0,
        py::arg("seed") = 1729);
    m.def("random_core", &random_core, py::arg("n"), py::arg("steps"), py::arg("seed") = 1729);

    py::register_exception<Error>(m, "CoxwalkError");
}
