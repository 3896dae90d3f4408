// Copyright 2026 The qpose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qpose/builders.hpp"
#include "qpose/encoding.hpp"
#include "qpose/oracle.hpp"
#include "qpose/rasterize.hpp"
#include "qpose/simulate.hpp"
#include "qpose/verify.hpp"

namespace {

using namespace qpose;

// Per-axis flag values are ordered z,y,x to match the register naming.
struct LayoutFlags {
    std::vector<int> t_bits;
    bool all_swaps = false;
    bool all_rots = false;
    bool shared = false;
    std::vector<std::string> swap_pairs;
    std::vector<std::string> rot_axes;
};

void add_layout_flags(CLI::App* cmd, LayoutFlags& flags) {
    cmd->add_option("--t-bits", flags.t_bits,
                    "translation register widths mz,my,mx (ordered z,y,x; default 0,0,0)")
        ->delimiter(',')
        ->expected(3);
    cmd->add_flag("--swaps", flags.all_swaps, "enable all three coordinate-swap stages");
    cmd->add_flag("--rots", flags.all_rots, "enable all three rotation stages");
    cmd->add_option("--swap-pairs", flags.swap_pairs,
                    "enable specific swap stages (subset of xy,yz,zx)")
        ->delimiter(',');
    cmd->add_option("--rot-axes", flags.rot_axes,
                    "enable specific rotation stages (subset of z,y,x)")
        ->delimiter(',');
    cmd->add_flag("--shared", flags.shared,
                  "one control qubit per axis drives both the swap and the rotation");
}

StageOptions stage_options(const LayoutFlags& flags) {
    StageOptions opt;
    if (flags.all_swaps) opt.swap_pairs = {true, true, true};
    if (flags.all_rots) opt.rot_axes = {true, true, true};
    for (const std::string& p : flags.swap_pairs) {
        if (p == "xy") opt.swap_pairs[0] = true;
        else if (p == "yz") opt.swap_pairs[1] = true;
        else if (p == "zx") opt.swap_pairs[2] = true;
        else throw std::invalid_argument("unknown swap pair '" + p + "' (use xy, yz or zx)");
    }
    for (const std::string& a : flags.rot_axes) {
        if (a == "z") opt.rot_axes[0] = true;
        else if (a == "y") opt.rot_axes[1] = true;
        else if (a == "x") opt.rot_axes[2] = true;
        else throw std::invalid_argument("unknown rotation axis '" + a + "' (use z, y or x)");
    }
    opt.shared_controls = flags.shared;
    return opt;
}

RegisterLayout layout_for(const GridSpec& spec, const LayoutFlags& flags) {
    std::array<int, 3> t{0, 0, 0};
    if (!flags.t_bits.empty()) t = {flags.t_bits[0], flags.t_bits[1], flags.t_bits[2]};
    return make_layout(spec, t, stage_options(flags));
}

/// Writes through `fn` to the file at `path`, or to stdout when empty.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    fn(out);
}

GridSpec spec_from_bits(const std::vector<int>& bits, double cell_length) {
    GridSpec spec;
    spec.bits_z = bits[0];
    spec.bits_y = bits[1];
    spec.bits_x = bits[2];
    spec.cell_length = cell_length;
    spec.validate();
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit construction and exact simulation for exhaustive pose enumeration "
                 "of grid-encoded ligands"};
    app.require_subcommand(1);

    // rasterize
    auto* cmd_raster = app.add_subcommand("rasterize", "bin an atom list onto a voxel grid");
    std::string raster_atoms, raster_out;
    std::vector<int> raster_bits;
    double raster_cell = 1.0;
    cmd_raster->add_option("--atoms", raster_atoms, "atom list file (element x y z [weight])")
        ->required();
    cmd_raster->add_option("--bits", raster_bits, "register widths bits_z,bits_y,bits_x")
        ->delimiter(',')
        ->expected(3)
        ->required();
    cmd_raster->add_option("--cell-length", raster_cell, "lattice spacing in distance units")
        ->required();
    cmd_raster->add_option("-o,--output", raster_out, "grid file (default stdout)");

    // build
    auto* cmd_build = app.add_subcommand("build", "construct the pose-enumeration circuit");
    LayoutFlags build_flags;
    std::string build_grid, build_out;
    std::vector<int> build_bits;
    bool build_qasm = false;
    cmd_build->add_option("--grid", build_grid, "grid file fixing the lattice dimensions");
    cmd_build->add_option("--bits", build_bits, "register widths bits_z,bits_y,bits_x (no grid)")
        ->delimiter(',')
        ->expected(3);
    add_layout_flags(cmd_build, build_flags);
    cmd_build->add_flag("--qasm", build_qasm, "emit OpenQASM 2.0 instead of the native format");
    cmd_build->add_option("-o,--output", build_out, "circuit file (default stdout)");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "encode a grid and run the circuit exactly");
    LayoutFlags sim_flags;
    std::string sim_grid, sim_circuit, sim_out;
    cmd_sim->add_option("--grid", sim_grid, "grid file")->required();
    cmd_sim->add_option("--circuit", sim_circuit,
                        "gate list to run (default: the unified circuit for the flags)");
    add_layout_flags(cmd_sim, sim_flags);
    cmd_sim->add_option("-o,--output", sim_out, "state dump file (default stdout)");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "classically enumerate all poses");
    LayoutFlags enum_flags;
    std::string enum_grid, enum_out;
    cmd_enum->add_option("--grid", enum_grid, "grid file")->required();
    add_layout_flags(cmd_enum, enum_flags);
    cmd_enum->add_option("-o,--output", enum_out, "pose dump file (default stdout)");

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "check the simulated superposition against the classical enumeration");
    LayoutFlags verify_flags;
    std::string verify_grid;
    bool verify_detail = false;
    cmd_verify->add_option("--grid", verify_grid, "grid file")->required();
    add_layout_flags(cmd_verify, verify_flags);
    cmd_verify->add_flag("--report", verify_detail, "also print one line per mismatched branch");

    // count
    auto* cmd_count = app.add_subcommand("count", "multiply per-degree-of-freedom value counts");
    std::vector<std::uint64_t> count_dof;
    cmd_count->add_option("--dof", count_dof, "comma-separated value counts, one per DOF")
        ->delimiter(',')
        ->required();

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "resource counts of a circuit file");
    std::string stats_circuit;
    cmd_stats->add_option("--circuit", stats_circuit, "circuit file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_raster->parsed()) {
            auto atoms = load_atoms_file(raster_atoms);
            OccupancyGrid grid = rasterize(atoms, spec_from_bits(raster_bits, raster_cell));
            emit(raster_out, [&](std::ostream& out) { write_grid(out, grid); });
        } else if (cmd_build->parsed()) {
            GridSpec spec;
            if (!build_grid.empty())
                spec = load_grid_file(build_grid).spec();
            else if (!build_bits.empty())
                spec = spec_from_bits(build_bits, 1.0);
            else
                throw std::invalid_argument("build needs either --grid or --bits");
            Circuit circuit = build_unified(layout_for(spec, build_flags));
            emit(build_out, [&](std::ostream& out) {
                build_qasm ? write_qasm(out, circuit) : write_circuit(out, circuit);
            });
        } else if (cmd_sim->parsed()) {
            OccupancyGrid grid = load_grid_file(sim_grid);
            RegisterLayout layout = layout_for(grid.spec(), sim_flags);
            Circuit circuit =
                sim_circuit.empty() ? build_unified(layout) : load_circuit_file(sim_circuit);
            SparseState state = run(circuit, encode_state(grid, layout));
            emit(sim_out, [&](std::ostream& out) { write_state(out, state); });
        } else if (cmd_enum->parsed()) {
            OccupancyGrid grid = load_grid_file(enum_grid);
            PoseSet poses = enumerate_poses(grid, layout_for(grid.spec(), enum_flags));
            std::string summary = "poses settings=" + std::to_string(poses.size()) +
                                  " distinct=" + std::to_string(poses.distinct_pose_count());
            if (enum_out.empty()) {
                write_poses(std::cout, poses);
                std::cout << "# " << summary << '\n';
            } else {
                emit(enum_out, [&](std::ostream& out) { write_poses(out, poses); });
                std::cout << summary << '\n';
            }
        } else if (cmd_verify->parsed()) {
            OccupancyGrid grid = load_grid_file(verify_grid);
            VerificationReport report = verify(grid, layout_for(grid.spec(), verify_flags));
            std::cout << (verify_detail ? report.to_text() : report.summary_line() + "\n");
            if (!report.passed) return 2;
        } else if (cmd_count->parsed()) {
            std::cout << count_configurations(count_dof).str() << '\n';
        } else if (cmd_stats->parsed()) {
            std::cout << format_resource_counts(resource_counts(load_circuit_file(stats_circuit)));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
