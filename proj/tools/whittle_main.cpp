// whittle: simple-homotopy invariants of finite simplicial complexes.
//
// Subcommands read the SCX / SMAP / SLAB text formats and print either a
// human-readable report (default) or the structured JSON form (--json).
// Exit codes: 0 ok, 2 input error, 3 mathematical precondition failure.

#include "whittle/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

int finish(const whittle::cli::CmdResult& r, bool as_json)
{
    if (r.exit_code == 0) {
        if (as_json)
            std::cout << whittle::cli::render_report(r.report).dump(2) << "\n";
        else
            std::cout << r.human;
    } else {
        std::cerr << r.diagnostic << "\n";
        if (as_json && !r.report.result.is_null())
            std::cout << whittle::cli::render_report(r.report).dump(2) << "\n";
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"simple-homotopy invariants of finite simplicial complexes"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the structured report (schema 1)");

    std::string complex_path, x_path, y_path, map_path;
    std::optional<std::string> labels_path;
    bool trivial_pi = false;
    std::optional<long long> budget;
    std::string cover_a, cover_b, g_path, z_path;

    auto* homology_cmd = app.add_subcommand("homology", "homology and Euler characteristic");
    homology_cmd->add_option("complex", complex_path, "SCX file")->required();

    auto* fibers_cmd =
        app.add_subcommand("fibers", "local torsion profile and fiber-wise acyclicity");
    fibers_cmd->add_option("X", x_path, "target complex (SCX)")->required();
    fibers_cmd->add_option("Y", y_path, "source complex (SCX)")->required();
    fibers_cmd->add_option("map", map_path, "map Y -> X (SMAP)")->required();

    auto* torsion_cmd = app.add_subcommand("torsion", "Whitehead torsion over Z[Z/n]");
    torsion_cmd->add_option("X", x_path, "target complex (SCX)")->required();
    torsion_cmd->add_option("Y", y_path, "source complex (SCX)")->required();
    torsion_cmd->add_option("map", map_path, "map Y -> X (SMAP)")->required();
    auto* labels_opt = torsion_cmd->add_option("labels", labels_path, "labeling of X (SLAB)");
    torsion_cmd->add_flag("--trivial-pi", trivial_pi, "use the trivial group (n = 1)");

    auto* collapse_cmd = app.add_subcommand("collapse", "greedy collapsing and search");
    collapse_cmd->add_option("complex", complex_path, "SCX file")->required();
    auto* budget_opt = collapse_cmd->add_option("--budget", "node budget for the exhaustive search");

    auto* cover_cmd = app.add_subcommand("cover", "vertex-star cover, certificates, nerve");
    cover_cmd->add_option("complex", complex_path, "SCX file")->required();

    auto* check_cmd = app.add_subcommand("check", "sum / composition formula verification");
    check_cmd->add_option("X", x_path, "target complex (SCX)")->required();
    check_cmd->add_option("Y", y_path, "source complex (SCX)")->required();
    check_cmd->add_option("map", map_path, "map Y -> X (SMAP)")->required();
    std::vector<std::string> cover_paths;
    auto* cover_opt =
        check_cmd->add_option("--cover", cover_paths, "two SCX pieces covering X")
            ->expected(2);
    auto* compose_opt = check_cmd->add_option("--compose", g_path, "inner map g: Z -> Y (SMAP)");
    auto* z_opt = check_cmd->add_option("--z", z_path, "source complex Z of g (SCX)");
    compose_opt->needs(z_opt);
    z_opt->needs(compose_opt);
    compose_opt->excludes(cover_opt);

    CLI11_PARSE(app, argc, argv);

    if (homology_cmd->parsed())
        return finish(whittle::cli::cmd_homology(complex_path), as_json);
    if (fibers_cmd->parsed())
        return finish(whittle::cli::cmd_fibers(x_path, y_path, map_path), as_json);
    if (torsion_cmd->parsed()) {
        if (static_cast<bool>(trivial_pi) == static_cast<bool>(labels_opt->count())) {
            std::cerr << "torsion: give exactly one of <labels.slab> or --trivial-pi\n";
            return 2;
        }
        return finish(whittle::cli::cmd_torsion(x_path, y_path, map_path, labels_path),
                      as_json);
    }
    if (collapse_cmd->parsed()) {
        if (budget_opt->count())
            budget = budget_opt->as<long long>();
        return finish(whittle::cli::cmd_collapse(complex_path, budget), as_json);
    }
    if (cover_cmd->parsed())
        return finish(whittle::cli::cmd_cover(complex_path), as_json);
    if (check_cmd->parsed()) {
        if (cover_opt->count())
            return finish(whittle::cli::cmd_check_cover(x_path, y_path, map_path,
                                                        cover_paths[0], cover_paths[1]),
                          as_json);
        if (compose_opt->count())
            return finish(
                whittle::cli::cmd_check_compose(x_path, y_path, map_path, g_path, z_path),
                as_json);
        std::cerr << "check: give --cover A B or --compose g.smap --z Z.scx\n";
        return 2;
    }
    return 2;
}
