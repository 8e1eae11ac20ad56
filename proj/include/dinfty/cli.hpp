#pragma once

// Command-line front end.  Every verb prints deterministic output for a fixed
// set of flags (including --seed), so runs are reproducible byte for byte.
//
// Exit codes: 0 success, 1 verification failure (a FAIL line or a
// formula/solver MISMATCH), 2 usage or parse errors.

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dinfty/suites.hpp"

namespace dinfty {

struct CliConfig {
    int window = 15;
    long long prime = 1009;
    std::string field = "gfp";
    std::uint64_t seed = 20260814;
    std::string format = "tsv";      // tsv | json | dot (dot: heatmap only)
    std::string category = "rep";    // rep | derived | cluster
    std::string method = "formula";  // formula | oracle | both
};

namespace detail {

// Solver-side mirror of the shifted morphism spaces: a shift gap of zero is a
// plain morphism space, a gap of one is an extension space, anything else
// vanishes between stalk complexes.
inline int oracle_hom_derived(AnyOracle& o, const DerivedObject& x, const DerivedObject& y) {
    const int diff = y.shift - x.shift;
    if (diff == 0) return o.hom(x.label, y.label);
    if (diff == 1) return o.ext1(x.label, y.label);
    return 0;
}

// Solver-side mirror of the orbit-category morphism space: sum over the same
// translate range the formula engine uses.
inline int oracle_hom_cluster(AnyOracle& o, const ClusterObject& x, const ClusterObject& y) {
    int total = 0;
    for (int i = -5; i <= 5; ++i)
        total += oracle_hom_derived(o, DerivedObject{x.label, x.shift},
                                    apply_f(DerivedObject{y.label, y.shift}, i));
    return total;
}

inline void dedupe_notes(Report& r) {
    std::vector<std::string> keep;
    std::set<std::string> seen;
    for (auto& n : r.notes)
        if (seen.insert(n).second) keep.push_back(n);
    r.notes = std::move(keep);
}

struct PairDims {
    int formula = 0;
    int oracle = 0;
};

inline PairDims eval_pair(HomEngine& e, bool ext, const CliConfig& cfg,
                          const std::string& xs, const std::string& ys) {
    PairDims d;
    if (cfg.category == "rep") {
        const Label x = parse_label(xs);
        const Label y = parse_label(ys);
        d.formula = ext ? e.ext1_rep(x, y).dim : e.hom_rep(x, y).dim;
        d.oracle = ext ? e.oracle().ext1(x, y) : e.oracle().hom(x, y);
    } else if (cfg.category == "derived") {
        const DerivedObject x = parse_derived(xs);
        DerivedObject y = parse_derived(ys);
        if (ext) ++y.shift;  // extensions are morphisms into the shifted object
        d.formula = e.hom_derived(x, y).dim;
        d.oracle = oracle_hom_derived(e.oracle(), x, y);
    } else {
        const ClusterObject x = parse_cluster(xs);
        ClusterObject y = parse_cluster(ys);
        if (ext) y = tau_cluster(y);
        d.formula = e.hom_cluster(x, y).dim;
        d.oracle = oracle_hom_cluster(e.oracle(), x, y);
    }
    return d;
}

inline int emit_pair(const PairDims& d, const CliConfig& cfg, std::ostream& out) {
    if (cfg.method == "both") {
        const bool match = d.formula == d.oracle;
        if (cfg.format == "json")
            out << nlohmann::json{{"formula", d.formula},
                                  {"oracle", d.oracle},
                                  {"match", match}}
                       .dump()
                << "\n";
        else
            out << d.formula << "\t" << d.oracle << "\t" << (match ? "MATCH" : "MISMATCH")
                << "\n";
        return match ? 0 : 1;
    }
    const int value = cfg.method == "oracle" ? d.oracle : d.formula;
    if (cfg.format == "json")
        out << nlohmann::json{{"value", value}}.dump() << "\n";
    else
        out << value << "\n";
    return 0;
}

inline std::string member_list(const std::vector<ClusterObject>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"morphism spaces, translations, and verification sweeps for zigzag"
                 " quiver representations"};
    app.name("dinfty");
    app.require_subcommand(1);
    app.add_option("--window", cfg.window, "support bound for windowed sweeps")
        ->capture_default_str();
    app.add_option("--prime", cfg.prime, "modulus for the gfp coefficient field")
        ->capture_default_str();
    app.add_option("--field", cfg.field, "coefficient field for the solver")
        ->check(CLI::IsMember({"gfp", "rational"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "rng seed for randomized completions")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "dot"}))
        ->capture_default_str();
    app.add_option("--category", cfg.category, "which category to compute in")
        ->check(CLI::IsMember({"rep", "derived", "cluster"}))
        ->capture_default_str();
    app.add_option("--method", cfg.method,
                   "closed form, matrix solver, or both (both flags disagreements)")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();

    std::string xs, ys, suite, part = "all", order = "random";
    int count = -1;
    std::vector<std::string> with;

    CLI::App* hom = app.add_subcommand("hom", "dimension of the morphism space X -> Y");
    hom->fallthrough();
    hom->add_option("x", xs, "source object")->required();
    hom->add_option("y", ys, "target object")->required();

    CLI::App* ext = app.add_subcommand("ext", "dimension of the extension space of X by Y");
    ext->fallthrough();
    ext->add_option("x", xs, "source object")->required();
    ext->add_option("y", ys, "target object")->required();

    CLI::App* tau = app.add_subcommand("tau", "translate of an object (NONE if undefined)");
    tau->fallthrough();
    tau->add_option("x", xs, "object")->required();

    CLI::App* region = app.add_subcommand(
        "region", "extension region of an object and its path-theoretic parts");
    region->fallthrough();
    region->add_option("x", xs, "object")->required();
    region->add_option("--part", part, "which parts to list")
        ->check(CLI::IsMember({"all", "forbidden", "forward", "backward", "exceptional"}))
        ->capture_default_str();

    CLI::App* heatmap = app.add_subcommand(
        "heatmap", "morphism dimensions from a fixed source to every window object");
    heatmap->fallthrough();
    heatmap->add_option("x", xs, "source object")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"rok", "cdetr", "coincide", "in-t", "force-bo", "formulas",
                               "ar-catalog", "two-cy", "no-two-cycles"}));
    verify->add_option("--count", count, "completions for no-two-cycles (default 10)");

    CLI::App* enum_tilting = app.add_subcommand(
        "enumerate-tilting",
        "seeded window-maximal extension-orthogonal sets with their pairwise checks");
    enum_tilting->fallthrough();
    enum_tilting->add_option("--count", count, "how many completions (default 3)");
    enum_tilting->add_option("--order", order, "candidate order")
        ->check(CLI::IsMember({"random", "sorted"}))
        ->capture_default_str();
    enum_tilting->add_option("--with", with, "object every completion must contain");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const Window w{cfg.window};

        if (app.got_subcommand(hom) || app.got_subcommand(ext)) {
            HomEngine e(make_oracle(cfg.field, cfg.prime, cfg.window));
            if (cfg.format == "dot") throw std::invalid_argument("dot output is heatmap-only");
            const detail::PairDims d =
                detail::eval_pair(e, app.got_subcommand(ext), cfg, xs, ys);
            return detail::emit_pair(d, cfg, out);
        }

        if (app.got_subcommand(tau)) {
            if (cfg.format == "dot") throw std::invalid_argument("dot output is heatmap-only");
            std::string result;
            if (cfg.category == "rep") {
                const auto t = tau_rep(parse_label(xs));
                result = t ? to_string(*t) : "NONE";
            } else if (cfg.category == "derived") {
                result = to_string(tau_derived(parse_derived(xs)));
            } else {
                result = to_string(tau_cluster(parse_cluster(xs)));
            }
            if (cfg.format == "json")
                out << nlohmann::json{{"result", result}}.dump() << "\n";
            else
                out << result << "\n";
            return 0;
        }

        if (app.got_subcommand(region)) {
            if (cfg.format == "dot") throw std::invalid_argument("dot output is heatmap-only");
            const ClusterObject x = parse_cluster(xs);
            HomEngine e(make_oracle(cfg.field, cfg.prime, cfg.window));
            std::map<std::string, std::set<ClusterObject>> parts;
            const bool all = part == "all";
            if (all || part == "forbidden") parts["forbidden"] = forbidden_region(e, x, w);
            if (all || part == "forward") parts["forward"] = forward_forbidden(x, w);
            if (all || part == "backward") parts["backward"] = backward_forbidden(x, w);
            const bool has_exceptional =
                x.shift == 0 &&
                (x.label.kind == LabelKind::A0 || x.label.kind == LabelKind::A1);
            if (part == "exceptional" || (all && has_exceptional))
                parts["exceptional"] = exceptional_set(x, w);
            if (cfg.format == "json") {
                nlohmann::json j;
                j["object"] = to_string(x);
                j["window"] = cfg.window;
                for (const auto& [name, objs] : parts) {
                    j["parts"][name] = nlohmann::json::array();
                    for (const ClusterObject& y : objs) j["parts"][name].push_back(to_string(y));
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& [name, objs] : parts)
                    for (const ClusterObject& y : objs) out << name << "\t" << to_string(y) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(heatmap)) {
            const Label x = parse_label(xs);
            HomEngine e(make_oracle(cfg.field, cfg.prime, cfg.window));
            const std::vector<Label> targets = labels_in_window(cfg.window);
            std::map<Label, int> dim;
            for (const Label& y : targets) dim[y] = e.hom_rep(x, y).dim;
            if (cfg.format == "json") {
                nlohmann::json j;
                j["object"] = to_string(x);
                j["window"] = cfg.window;
                j["values"] = nlohmann::json::array();
                for (const Label& y : targets)
                    j["values"].push_back({{"label", to_string(y)}, {"dim", dim[y]}});
                out << j.dump(2) << "\n";
            } else if (cfg.format == "dot") {
                out << "digraph heatmap {\n  rankdir=LR;\n  node [style=filled];\n";
                auto color = [](int d) {
                    if (d == 0) return "white";
                    if (d == 1) return "lightblue";
                    if (d == 2) return "orange";
                    return "red";
                };
                for (const Label& y : targets)
                    out << "  \"" << to_string(y) << "\" [fillcolor=" << color(dim[y])
                        << "];\n";
                for (const Label& y : targets)
                    for (const Label& z : rep_successors(y))
                        if (max_support(z) <= cfg.window)
                            out << "  \"" << to_string(y) << "\" -> \"" << to_string(z)
                                << "\";\n";
                out << "}\n";
            } else {
                for (const Label& y : targets) out << to_string(y) << "\t" << dim[y] << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(verify)) {
            if (cfg.format == "dot") throw std::invalid_argument("dot output is heatmap-only");
            HomEngine e(make_oracle(cfg.field, cfg.prime, cfg.window));
            Report r;
            if (suite == "formulas") {
                r = check_formulas(e, w);
            } else if (suite == "ar-catalog") {
                r = check_ar_catalog(e.oracle(), cfg.window);
            } else if (suite == "two-cy") {
                r = check_two_cy(e, w);
            } else if (suite == "rok") {
                r = check_rok(e, w);
            } else if (suite == "force-bo") {
                r = check_force_bo(e, w);
            } else if (suite == "cdetr") {
                for (int t = 0; t <= 10; ++t)
                    if (cfg.window >= t + 3) r.merge(check_cdetr(e, t, w));
            } else if (suite == "coincide") {
                for (int t = 0; t <= 8; ++t)
                    if (cfg.window >= 2 * t + 6) r.merge(check_coincide(e, t, w));
            } else if (suite == "in-t") {
                for (int t = 3; t <= 9; t += 2)
                    if (cfg.window >= t + 4) r.merge(check_in_t(e, t, w));
            } else {  // no-two-cycles
                r = rigid_suite(e, w, {}, count < 0 ? 10 : count, cfg.seed);
            }
            if (r.lines.empty())
                throw std::invalid_argument("window " + std::to_string(cfg.window) +
                                            " is too small for any '" + suite +
                                            "' instance");
            detail::dedupe_notes(r);
            if (cfg.format == "json")
                render_json(r, out);
            else
                render_tsv(r, out);
            return r.pass() ? 0 : 1;
        }

        if (app.got_subcommand(enum_tilting)) {
            if (cfg.format == "dot") throw std::invalid_argument("dot output is heatmap-only");
            HomEngine e(make_oracle(cfg.field, cfg.prime, cfg.window));
            RigidSet seed;
            for (const std::string& s : with) seed.members.push_back(parse_cluster(s));
            const int runs = count < 0 ? 3 : count;
            Report r;
            r.notes = standard_notes(cfg.window);
            r.note("completion order: " + order + ", base seed " + std::to_string(cfg.seed));
            for (int i = 0; i < runs; ++i) {
                const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(i);
                const RigidSet t_set = rigid_completion(e, seed, w, s, order == "sorted");
                const Report sub = check_no_two_cycles(e, t_set, w);
                r.add("tilting", "seed=" + std::to_string(s), sub.pass(),
                      "size " + std::to_string(t_set.members.size()) + ": " +
                          detail::member_list(t_set.members));
                if (!sub.pass()) r.merge(sub);
            }
            if (cfg.format == "json")
                render_json(r, out);
            else
                render_tsv(r, out);
            return r.pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace dinfty
