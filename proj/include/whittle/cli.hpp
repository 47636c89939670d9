#pragma once

#include "whittle/collapse.hpp"
#include "whittle/complex.hpp"
#include "whittle/cyclic_cover.hpp"
#include "whittle/errors.hpp"
#include "whittle/io.hpp"
#include "whittle/local_profile.hpp"
#include "whittle/simplicial_map.hpp"
#include "whittle/torsion.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace whittle::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// FNV-1a 64 of the raw file bytes, as fixed-width hex.
inline std::string fnv64_hex(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

struct InputDigest {
    std::string path;
    std::size_t bytes = 0;
    std::string fnv64;

    bool operator==(const InputDigest&) const = default;
};

/// Machine-checkable result of one subcommand run.
struct Report {
    std::string command;
    std::vector<InputDigest> inputs;
    json result;
    std::vector<std::string> warnings;

    bool operator==(const Report&) const = default;
};

inline json render_report(const Report& r)
{
    json inputs = json::array();
    for (const auto& i : r.inputs)
        inputs.push_back({{"path", i.path}, {"bytes", i.bytes}, {"fnv64", i.fnv64}});
    return json{{"schema", kSchemaVersion},
                {"command", r.command},
                {"inputs", inputs},
                {"result", r.result},
                {"warnings", r.warnings}};
}

inline Report parse_report(const json& j)
{
    if (!j.contains("schema") || j.at("schema").get<int>() != kSchemaVersion)
        throw Error("report: unsupported schema version");
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& i : j.at("inputs")) {
        InputDigest d;
        d.path = i.at("path").get<std::string>();
        d.bytes = i.at("bytes").get<std::size_t>();
        d.fnv64 = i.at("fnv64").get<std::string>();
        r.inputs.push_back(std::move(d));
    }
    r.result = j.at("result");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

/// Outcome of a subcommand: exit code 0 (ok), 2 (input error) or
/// 3 (mathematical precondition failure), the structured report, and the
/// human-readable text.
struct CmdResult {
    int exit_code = 0;
    Report report;
    std::string human;
    std::string diagnostic; // for stderr on failure
};

namespace detail {

inline InputDigest digest(const std::string& path, const std::string& bytes)
{
    return InputDigest{path, bytes.size(), fnv64_hex(bytes)};
}

inline json simplex_json(const Simplex& s) { return json(s); }

inline json homology_json(const std::vector<HomologyGroup>& h, int lowest)
{
    json out = json::array();
    for (std::size_t i = 0; i < h.size(); ++i) {
        json torsion = json::array();
        for (const auto& t : h[i].torsion)
            torsion.push_back(t.str());
        out.push_back({{"degree", lowest + static_cast<int>(i)},
                       {"betti", h[i].betti},
                       {"torsion", torsion},
                       {"pretty", h[i].to_string()}});
    }
    return out;
}

inline std::string homology_line(const std::vector<HomologyGroup>& h, int lowest)
{
    std::string s;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!s.empty())
            s += " ";
        s += "H" + std::to_string(lowest + static_cast<int>(i)) + "=" + h[i].to_string();
    }
    return s.empty() ? "(no degrees)" : s;
}

// degrees missing from the shorter list count as trivial
inline bool same_homology(const std::vector<HomologyGroup>& a,
                          const std::vector<HomologyGroup>& b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        HomologyGroup ga = i < a.size() ? a[i] : HomologyGroup{};
        HomologyGroup gb = i < b.size() ? b[i] : HomologyGroup{};
        if (!(ga == gb))
            return false;
    }
    return true;
}

template <typename Fn>
CmdResult guarded(const std::string& command, Fn&& body)
{
    CmdResult r;
    r.report.command = command;
    try {
        body(r);
    } catch (const ParseError& e) {
        r.exit_code = 2;
        r.diagnostic = std::string("input error: ") + e.what();
    } catch (const NotAPiHomologyEquivalence& e) {
        r.exit_code = 3;
        r.diagnostic = std::string("not a pi-homology equivalence: ") + e.what();
        r.report.result = json{{"error", "NotAPiHomologyEquivalence"},
                               {"witness_degree", e.witness_degree},
                               {"message", e.what()}};
    } catch (const Error& e) {
        r.exit_code = 2;
        r.diagnostic = std::string("input error: ") + e.what();
    }
    return r;
}

} // namespace detail

/// homology <complex.scx>: per-degree homology, reduced and unreduced,
/// and the Euler characteristic.
inline CmdResult cmd_homology(const std::string& complex_path)
{
    return detail::guarded("homology", [&](CmdResult& r) {
        std::string bytes = read_file(complex_path);
        r.report.inputs.push_back(detail::digest(complex_path, bytes));
        SimplicialComplex k = parse_scx(bytes);
        auto unreduced = homology(chain_complex(k, false));
        auto reduced = homology(chain_complex(k, true));
        long long chi = euler_characteristic(k);
        r.report.result = json{{"simplices", k.size()},
                               {"dimension", k.dimension()},
                               {"chi", chi},
                               {"unreduced", detail::homology_json(unreduced, 0)},
                               {"reduced", detail::homology_json(reduced, -1)}};
        r.human = "complex: " + std::to_string(k.size()) + " simplices, dim " +
                  std::to_string(k.dimension()) + "\n" +
                  "unreduced: " + detail::homology_line(unreduced, 0) +
                  ", chi=" + std::to_string(chi) + "\n" +
                  "reduced:   " + detail::homology_line(reduced, -1) + "\n";
    });
}

/// fibers <X.scx> <Y.scx> <f.smap>: the local torsion profile of
/// f : Y -> X and the fiber-wise acyclicity verdict.
inline CmdResult cmd_fibers(const std::string& x_path, const std::string& y_path,
                            const std::string& map_path)
{
    return detail::guarded("fibers", [&](CmdResult& r) {
        std::string xb = read_file(x_path), yb = read_file(y_path), mb = read_file(map_path);
        r.report.inputs.push_back(detail::digest(x_path, xb));
        r.report.inputs.push_back(detail::digest(y_path, yb));
        r.report.inputs.push_back(detail::digest(map_path, mb));
        SimplicialComplex x = parse_scx(xb);
        SimplicialComplex y = parse_scx(yb);
        SimplicialMap f = simplicial_map_from_entries(y, x, parse_smap(mb));
        if (auto bad = f.first_violation())
            throw Error("map is not simplicial at " + simplex_to_string(*bad));
        LocalTorsionProfile profile = local_profile(f);
        LocalAcyclicityVerdict verdict = is_locally_acyclic(f);

        json entries = json::array();
        for (const auto& e : profile.entries)
            entries.push_back(
                {{"simplex", detail::simplex_json(e.sigma)},
                 {"fiber_size", e.fiber_size},
                 {"fiber_reduced", detail::homology_json(e.fiber_reduced, -1)},
                 {"cone", detail::homology_json(e.cone_homology, e.cone_lowest)},
                 {"trivial", e.trivial}});
        json v = {{"locally_acyclic", verdict.locally_acyclic}};
        if (verdict.witness) {
            v["witness"] = detail::simplex_json(*verdict.witness);
            v["witness_fiber_homology"] =
                detail::homology_json(verdict.witness_fiber_homology, -1);
        }
        r.report.result = json{{"entries", entries}, {"verdict", v}};
        r.human = profile.to_table() + "verdict: " +
                  (verdict.locally_acyclic
                       ? std::string("LOCALLY-ACYCLIC")
                       : "FAIL at " + simplex_to_string(*verdict.witness)) +
                  "\n";
    });
}

/// torsion <X.scx> <Y.scx> <f.smap> (<labels.slab> | --trivial-pi):
/// Whitehead torsion of f : Y -> X against a cyclic labeling of X.
inline CmdResult cmd_torsion(const std::string& x_path, const std::string& y_path,
                             const std::string& map_path,
                             const std::optional<std::string>& labels_path)
{
    return detail::guarded("torsion", [&](CmdResult& r) {
        std::string xb = read_file(x_path), yb = read_file(y_path), mb = read_file(map_path);
        r.report.inputs.push_back(detail::digest(x_path, xb));
        r.report.inputs.push_back(detail::digest(y_path, yb));
        r.report.inputs.push_back(detail::digest(map_path, mb));
        SimplicialComplex x = parse_scx(xb);
        SimplicialComplex y = parse_scx(yb);
        SimplicialMap f = simplicial_map_from_entries(y, x, parse_smap(mb));
        if (auto bad = f.first_violation())
            throw Error("map is not simplicial at " + simplex_to_string(*bad));
        CyclicCoverLabeling w;
        if (labels_path) {
            std::string lb = read_file(*labels_path);
            r.report.inputs.push_back(detail::digest(*labels_path, lb));
            SlabData slab = parse_slab(lb);
            w = CyclicCoverLabeling(x, slab.n, slab.entries);
        } else {
            w = CyclicCoverLabeling(x, 1, {});
        }
        if (auto bad = w.first_violation())
            throw Error("labeling fails the cocycle identity at " + simplex_to_string(*bad));
        WhiteheadClass cls = whitehead_torsion(f, w);
        const bool trivial = cls.is_trivial();
        r.report.result = json{{"modulus", cls.modulus()},
                               {"class", cls.to_string()},
                               {"trivial", trivial}};
        r.human = "class = " + cls.to_string() + " (" +
                  (trivial ? "TRIVIAL" : "NONTRIVIAL") + ")\n";
    });
}

/// collapse <complex.scx> [--budget N]: greedy collapsing, plus the full
/// backtracking search when a budget is given.
inline CmdResult cmd_collapse(const std::string& complex_path,
                              std::optional<long long> budget)
{
    return detail::guarded("collapse", [&](CmdResult& r) {
        std::string bytes = read_file(complex_path);
        r.report.inputs.push_back(detail::digest(complex_path, bytes));
        SimplicialComplex k = parse_scx(bytes);
        auto [rest, seq] = greedy_collapse(k);
        json result = {{"greedy",
                        {{"moves", seq.size()},
                         {"remaining_simplices", rest.size()},
                         {"collapsed_to_point", rest.size() == 1},
                         {"sequence", seq.to_string()}}}};
        std::string human;
        if (seq.size() == 0)
            human = "no free faces\n";
        else if (rest.size() == 1)
            human = "collapsed to point in " + std::to_string(seq.size()) + " moves\n";
        else
            human = "greedy stopped after " + std::to_string(seq.size()) + " moves with " +
                    std::to_string(rest.size()) + " simplices left\n";
        if (budget) {
            auto res = is_collapsible(k, *budget);
            std::string verdict =
                res.verdict == CollapsibilityResult::Verdict::yes               ? "COLLAPSIBLE"
                : res.verdict == CollapsibilityResult::Verdict::budget_exhausted ? "BUDGET-EXHAUSTED"
                                                                                 : "NOT-COLLAPSIBLE";
            result["search"] = {{"budget", *budget},
                                {"verdict", verdict},
                                {"moves", res.certificate.size()},
                                {"certificate", res.certificate.to_string()}};
            if (res.collapsible())
                human += "COLLAPSIBLE, " + std::to_string(res.certificate.size()) + " moves\n";
            else if (res.verdict == CollapsibilityResult::Verdict::no)
                human += "NOT COLLAPSIBLE (exhaustive refutation)\n";
            else
                human += "BUDGET EXHAUSTED, no verdict\n";
        }
        r.report.result = std::move(result);
        r.human = std::move(human);
    });
}

/// cover <complex.scx>: vertex-star cover with acyclicity certificates,
/// the nerve, and the nerve-vs-original homology comparison.
inline CmdResult cmd_cover(const std::string& complex_path)
{
    return detail::guarded("cover", [&](CmdResult& r) {
        std::string bytes = read_file(complex_path);
        r.report.inputs.push_back(detail::digest(complex_path, bytes));
        SimplicialComplex k = parse_scx(bytes);
        if (k.empty())
            throw Error("cover: complex is empty");
        ClosedCover cover = closed_star_cover(k, StarCoverKind::vertices);

        json pieces = json::array();
        std::string human = "vertex-star cover: " + std::to_string(cover.pieces.size()) +
                            " pieces\n";
        for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
            const bool acyclic = is_acyclic(cover.pieces[i]);
            pieces.push_back({{"center", detail::simplex_json(cover.centers[i])},
                              {"simplices", cover.pieces[i].size()},
                              {"acyclic", acyclic}});
            human += "  star" + simplex_to_string(cover.centers[i]) + ": " +
                     std::to_string(cover.pieces[i].size()) + " simplices, " +
                     (acyclic ? "acyclic" : "NOT ACYCLIC") + "\n";
        }
        json pairwise = json::array();
        bool all_pairwise_ok = true;
        for (std::size_t i = 0; i < cover.pieces.size(); ++i)
            for (std::size_t j = i + 1; j < cover.pieces.size(); ++j) {
                SimplicialComplex meet = intersect(cover.pieces[i], cover.pieces[j]);
                const bool empty = meet.empty();
                const bool acyclic = !empty && is_acyclic(meet);
                if (!empty && !acyclic)
                    all_pairwise_ok = false;
                pairwise.push_back({{"i", i}, {"j", j}, {"empty", empty}, {"acyclic", acyclic}});
            }
        human += all_pairwise_ok ? "pairwise intersections: all acyclic or empty\n"
                                 : "pairwise intersections: some are neither acyclic nor "
                                   "empty (closed stars may overlap badly)\n";

        SimplicialComplex closed_nerve = nerve(cover);
        SimplicialComplex open_nerve = star_nerve(k, cover.centers);
        const bool match = detail::same_homology(homology(chain_complex(k)),
                                                 homology(chain_complex(open_nerve)));
        json nerve_json = {{"closed_piece_nerve", write_scx(closed_nerve)},
                           {"open_star_nerve", write_scx(open_nerve)},
                           {"open_star_nerve_homology_matches", match}};
        human += "open-star nerve homology " + std::string(match ? "matches" : "DIFFERS") +
                 "\n";
        r.report.result =
            json{{"pieces", pieces}, {"pairwise", pairwise}, {"nerve", nerve_json}};
        r.human = std::move(human);
    });
}

/// check <X.scx> <Y.scx> <f.smap> --cover <A.scx> <B.scx>
/// check <X.scx> <Y.scx> <f.smap> --compose <g.smap> --z <Z.scx>
inline CmdResult cmd_check_cover(const std::string& x_path, const std::string& y_path,
                                 const std::string& map_path, const std::string& a_path,
                                 const std::string& b_path)
{
    return detail::guarded("check", [&](CmdResult& r) {
        std::string xb = read_file(x_path), yb = read_file(y_path), mb = read_file(map_path);
        std::string ab = read_file(a_path), bb = read_file(b_path);
        for (auto& [p, s] : std::initializer_list<std::pair<std::string, std::string*>>{
                 {x_path, &xb}, {y_path, &yb}, {map_path, &mb}, {a_path, &ab}, {b_path, &bb}})
            r.report.inputs.push_back(detail::digest(p, *s));
        SimplicialComplex x = parse_scx(xb);
        SimplicialComplex y = parse_scx(yb);
        SimplicialMap f = simplicial_map_from_entries(y, x, parse_smap(mb));
        if (auto bad = f.first_violation())
            throw Error("map is not simplicial at " + simplex_to_string(*bad));
        SumFormulaReport rep = check_sum_formula(f, parse_scx(ab), parse_scx(bb));
        json degrees = json::array();
        std::string human = "sum formula (two-piece closed cover):\n";
        for (const auto& d : rep.degrees) {
            degrees.push_back({{"degree", d.degree}, {"exact", d.exact}});
            human += "  degree " + std::to_string(d.degree) + ": " +
                     (d.exact ? "exact" : "NOT EXACT") + "\n";
        }
        human += std::string("euler identity: ") + (rep.euler_identity ? "holds" : "FAILS") +
                 " (chi " + std::to_string(rep.chi_cone) + " = " +
                 std::to_string(rep.chi_cone0) + " + " + std::to_string(rep.chi_cone1) +
                 " - " + std::to_string(rep.chi_cone01) + ")\n";
        r.report.result = json{{"mode", "cover"},
                               {"degrees", degrees},
                               {"all_exact", rep.all_exact},
                               {"euler_identity", rep.euler_identity},
                               {"chi",
                                {{"cone", rep.chi_cone},
                                 {"cone0", rep.chi_cone0},
                                 {"cone1", rep.chi_cone1},
                                 {"cone01", rep.chi_cone01}}}};
        r.human = std::move(human);
    });
}

inline CmdResult cmd_check_compose(const std::string& x_path, const std::string& y_path,
                                   const std::string& map_path, const std::string& g_path,
                                   const std::string& z_path)
{
    return detail::guarded("check", [&](CmdResult& r) {
        std::string xb = read_file(x_path), yb = read_file(y_path), mb = read_file(map_path);
        std::string gb = read_file(g_path), zb = read_file(z_path);
        for (auto& [p, s] : std::initializer_list<std::pair<std::string, std::string*>>{
                 {x_path, &xb}, {y_path, &yb}, {map_path, &mb}, {g_path, &gb}, {z_path, &zb}})
            r.report.inputs.push_back(detail::digest(p, *s));
        SimplicialComplex x = parse_scx(xb);
        SimplicialComplex y = parse_scx(yb);
        SimplicialComplex z = parse_scx(zb);
        SimplicialMap f = simplicial_map_from_entries(y, x, parse_smap(mb));
        SimplicialMap g = simplicial_map_from_entries(z, y, parse_smap(gb));
        for (const auto* m : {&f, &g})
            if (auto bad = m->first_violation())
                throw Error("map is not simplicial at " + simplex_to_string(*bad));
        CompositionReport rep = check_composition_formula(g, f);
        json degrees = json::array();
        std::string human = "composition formula (fiber sequence):\n";
        for (const auto& d : rep.degrees) {
            degrees.push_back({{"degree", d.degree}, {"exact", d.exact}});
            human += "  degree " + std::to_string(d.degree) + ": " +
                     (d.exact ? "exact" : "NOT EXACT") + "\n";
        }
        human += std::string("cofiber has the homology of cone(f): ") +
                 (rep.homology_matches ? "yes" : "NO") + "\n";
        human += std::string("euler identity: ") + (rep.euler_identity ? "holds" : "FAILS") +
                 " (chi " + std::to_string(rep.chi_fg) + " = " + std::to_string(rep.chi_f) +
                 " + " + std::to_string(rep.chi_g) + ")\n";
        r.report.result = json{{"mode", "compose"},
                               {"degrees", degrees},
                               {"all_exact", rep.all_exact},
                               {"homology_matches", rep.homology_matches},
                               {"euler_identity", rep.euler_identity},
                               {"chi", {{"fg", rep.chi_fg}, {"f", rep.chi_f}, {"g", rep.chi_g}}}};
        r.human = std::move(human);
    });
}

} // namespace whittle::cli
