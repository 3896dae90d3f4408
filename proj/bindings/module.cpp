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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qpose/builders.hpp"
#include "qpose/encoding.hpp"
#include "qpose/oracle.hpp"
#include "qpose/rasterize.hpp"
#include "qpose/simulate.hpp"
#include "qpose/verify.hpp"

namespace py = pybind11;
using namespace qpose;

namespace {

py::dict cells_dict(const OccupancyGrid& grid) {
    py::dict d;
    for (const auto& [cell, w] : grid.cells())
        d[py::make_tuple(cell.z, cell.y, cell.x)] = w;
    return d;
}

template <typename T, typename WriteFn>
std::string to_text(const T& value, WriteFn fn) {
    std::ostringstream out;
    fn(out, value);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quantum circuits and exact simulation for exhaustive pose enumeration of "
              "grid-encoded ligands";

    py::enum_<Axis>(m, "Axis")
        .value("Z", Axis::Z)
        .value("Y", Axis::Y)
        .value("X", Axis::X);

    py::enum_<AxisPair>(m, "AxisPair")
        .value("XY", AxisPair::XY)
        .value("YZ", AxisPair::YZ)
        .value("ZX", AxisPair::ZX);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int bits_z, int bits_y, int bits_x, double cell_length) {
                 GridSpec spec;
                 spec.bits_z = bits_z;
                 spec.bits_y = bits_y;
                 spec.bits_x = bits_x;
                 spec.cell_length = cell_length;
                 spec.validate();
                 return spec;
             }),
             py::arg("bits_z"), py::arg("bits_y"), py::arg("bits_x"),
             py::arg("cell_length") = 1.0)
        .def_readonly("bits_z", &GridSpec::bits_z)
        .def_readonly("bits_y", &GridSpec::bits_y)
        .def_readonly("bits_x", &GridSpec::bits_x)
        .def_readonly("cell_length", &GridSpec::cell_length)
        .def("__eq__", [](const GridSpec& a, const GridSpec& b) { return a == b; })
        .def("__repr__", [](const GridSpec& s) {
            return "GridSpec(bits_z=" + std::to_string(s.bits_z) + ", bits_y=" +
                   std::to_string(s.bits_y) + ", bits_x=" + std::to_string(s.bits_x) + ")";
        });

    py::class_<OccupancyGrid>(m, "OccupancyGrid")
        .def(py::init<GridSpec>(), py::arg("spec"))
        .def_property_readonly("spec", &OccupancyGrid::spec)
        .def("set", [](OccupancyGrid& g, std::uint32_t z, std::uint32_t y, std::uint32_t x,
                       double w) { g.set(Cell{z, y, x}, w); },
             py::arg("z"), py::arg("y"), py::arg("x"), py::arg("weight"))
        .def("add", [](OccupancyGrid& g, std::uint32_t z, std::uint32_t y, std::uint32_t x,
                       double w) { g.add(Cell{z, y, x}, w); },
             py::arg("z"), py::arg("y"), py::arg("x"), py::arg("weight"))
        .def("weight", [](const OccupancyGrid& g, std::uint32_t z, std::uint32_t y,
                          std::uint32_t x) { return g.weight(Cell{z, y, x}); },
             py::arg("z"), py::arg("y"), py::arg("x"))
        .def("cells", &cells_dict, "dict mapping (z, y, x) tuples to weights")
        .def("nonzero_count", &OccupancyGrid::nonzero_count)
        .def("max_abs_weight", &OccupancyGrid::max_abs_weight)
        .def("l2_norm", &OccupancyGrid::l2_norm)
        .def("__eq__", [](const OccupancyGrid& a, const OccupancyGrid& b) { return a == b; })
        .def("to_text", [](const OccupancyGrid& g) { return to_text(g, write_grid); })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return read_grid(in);
        });

    m.def("load_grid_file", &load_grid_file, py::arg("path"));
    m.def("save_grid_file", &save_grid_file, py::arg("path"), py::arg("grid"));

    py::class_<StageOptions>(m, "StageOptions")
        .def(py::init([](std::array<bool, 3> swap_pairs, std::array<bool, 3> rot_axes,
                         bool shared_controls) {
                 StageOptions o;
                 o.swap_pairs = swap_pairs;
                 o.rot_axes = rot_axes;
                 o.shared_controls = shared_controls;
                 return o;
             }),
             py::arg("swap_pairs") = std::array<bool, 3>{false, false, false},
             py::arg("rot_axes") = std::array<bool, 3>{false, false, false},
             py::arg("shared_controls") = false)
        .def_readonly("swap_pairs", &StageOptions::swap_pairs)
        .def_readonly("rot_axes", &StageOptions::rot_axes)
        .def_readonly("shared_controls", &StageOptions::shared_controls)
        .def_static("all_swaps", &StageOptions::all_swaps)
        .def_static("all_rotations", &StageOptions::all_rotations)
        .def_static("all", &StageOptions::all);

    py::class_<ControlSetting>(m, "ControlSetting")
        .def(py::init<>())
        .def_readonly("dz", &ControlSetting::dz)
        .def_readonly("dy", &ControlSetting::dy)
        .def_readonly("dx", &ControlSetting::dx)
        .def_readonly("swaps", &ControlSetting::swaps)
        .def_readonly("rots", &ControlSetting::rots)
        .def("__eq__", [](const ControlSetting& a, const ControlSetting& b) { return a == b; })
        .def("__lt__", [](const ControlSetting& a, const ControlSetting& b) { return a < b; })
        .def("__hash__", [](const ControlSetting& c) {
            std::size_t h = std::hash<std::uint64_t>{}(
                (std::uint64_t(c.dz) << 40) ^ (std::uint64_t(c.dy) << 20) ^ c.dx);
            for (int i = 0; i < 3; ++i) h = h * 31 + c.swaps[i];
            for (int i = 0; i < 3; ++i) h = h * 31 + c.rots[i];
            return h;
        })
        .def("__repr__", [](const ControlSetting& c) {
            return "ControlSetting(" + c.to_string() + ")";
        });

    py::class_<RegisterLayout>(m, "RegisterLayout")
        .def_readonly("spec", &RegisterLayout::spec)
        .def_readonly("options", &RegisterLayout::options)
        .def_readonly("pos_z", &RegisterLayout::pos_z)
        .def_readonly("pos_y", &RegisterLayout::pos_y)
        .def_readonly("pos_x", &RegisterLayout::pos_x)
        .def_readonly("t_z", &RegisterLayout::t_z)
        .def_readonly("t_y", &RegisterLayout::t_y)
        .def_readonly("t_x", &RegisterLayout::t_x)
        .def_readonly("swap_controls", &RegisterLayout::swap_controls)
        .def_readonly("rot_controls", &RegisterLayout::rot_controls)
        .def_readonly("total_qubits", &RegisterLayout::total_qubits)
        .def("ancilla_count", &RegisterLayout::ancilla_count);

    m.def("make_layout", &make_layout, py::arg("spec"), py::arg("t_bits"),
          py::arg("options") = StageOptions{});

    py::enum_<GateKind>(m, "GateKind")
        .value("H", GateKind::H)
        .value("X", GateKind::X)
        .value("CX", GateKind::CX)
        .value("MCX", GateKind::MCX)
        .value("SWAP", GateKind::SWAP)
        .value("CSWAP", GateKind::CSWAP);

    py::class_<Gate>(m, "Gate")
        .def_readonly("kind", &Gate::kind)
        .def_readonly("controls", &Gate::controls)
        .def_readonly("targets", &Gate::targets)
        .def("__repr__", [](const Gate& g) {
            std::string s = std::string("Gate(") + gate_name(g.kind);
            for (int q : g.controls) s += " " + std::to_string(q);
            for (int q : g.targets) s += " " + std::to_string(q);
            return s + ")";
        });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<int>(), py::arg("num_qubits"))
        .def_readonly("num_qubits", &Circuit::num_qubits)
        .def_readonly("gates", &Circuit::gates)
        .def("__len__", [](const Circuit& c) { return c.gates.size(); })
        .def("to_text", [](const Circuit& c) { return to_text(c, write_circuit); })
        .def("to_qasm", [](const Circuit& c) { return to_text(c, write_qasm); })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return read_circuit(in);
        });

    m.def("make_h", &make_h);
    m.def("make_x", &make_x);
    m.def("make_cx", &make_cx);
    m.def("make_mcx", &make_mcx);
    m.def("make_swap", &make_swap);
    m.def("make_cswap", &make_cswap);

    m.def("build_increment",
          [](const std::vector<int>& reg, int power, const std::vector<int>& extra_controls) {
              return build_increment(reg, power, extra_controls);
          },
          py::arg("reg"), py::arg("power"), py::arg("extra_controls") = std::vector<int>{});
    m.def("build_translation_stage", &build_translation_stage, py::arg("layout"), py::arg("axis"));
    m.def("build_coord_swap",
          [](const std::vector<int>& a, const std::vector<int>& b, std::optional<int> control) {
              return build_coord_swap(a, b, control);
          },
          py::arg("reg_a"), py::arg("reg_b"), py::arg("control") = std::nullopt);
    m.def("build_rotation", &build_rotation, py::arg("layout"), py::arg("axis"),
          py::arg("control") = std::nullopt);
    m.def("build_unified", &build_unified, py::arg("layout"));

    py::class_<ResourceCounts>(m, "ResourceCounts")
        .def_readonly("num_qubits", &ResourceCounts::num_qubits)
        .def_readonly("total", &ResourceCounts::total)
        .def_readonly("h", &ResourceCounts::h)
        .def_readonly("x", &ResourceCounts::x)
        .def_readonly("cx", &ResourceCounts::cx)
        .def_readonly("mcx", &ResourceCounts::mcx)
        .def_readonly("swap", &ResourceCounts::swap)
        .def_readonly("cswap", &ResourceCounts::cswap)
        .def_readonly("max_mcx_controls", &ResourceCounts::max_mcx_controls)
        .def("__repr__", [](const ResourceCounts& rc) { return format_resource_counts(rc); });

    m.def("resource_counts", &resource_counts, py::arg("circuit"));

    py::class_<SparseState>(m, "SparseState")
        .def_readonly("num_qubits", &SparseState::num_qubits)
        .def_readonly("terms", &SparseState::terms)
        .def("amplitude", &SparseState::amplitude, py::arg("index"))
        .def("norm", &SparseState::norm)
        .def("__len__", [](const SparseState& s) { return s.terms.size(); })
        .def("to_text", [](const SparseState& s) { return to_text(s, write_state); })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return read_state(in);
        });

    m.def("basis_state", &basis_state, py::arg("num_qubits"), py::arg("index"));
    m.def("apply_gate", &apply_gate, py::arg("state"), py::arg("gate"));
    m.def("run", &run, py::arg("circuit"), py::arg("initial"));
    m.def("dense_check", &dense_check, py::arg("circuit"), py::arg("initial"));
    m.def("max_amplitude_delta", &max_amplitude_delta, py::arg("a"), py::arg("b"));

    m.def("encode_state", &encode_state, py::arg("grid"), py::arg("layout"));
    m.def("decode_state", &decode_state, py::arg("state"), py::arg("layout"),
          py::arg("rescale_to") = 1.0);

    m.def("translate_grid", &translate_grid, py::arg("grid"), py::arg("dz"), py::arg("dy"),
          py::arg("dx"));
    m.def("swap_axes", &swap_axes, py::arg("grid"), py::arg("pair"));
    m.def("rotate90", &rotate90, py::arg("grid"), py::arg("axis"));

    py::class_<PoseSet>(m, "PoseSet")
        .def_readonly("source", &PoseSet::source)
        .def_readonly("poses", &PoseSet::poses)
        .def("__len__", &PoseSet::size)
        .def("distinct_pose_count", &PoseSet::distinct_pose_count)
        .def("to_text", [](const PoseSet& p) { return to_text(p, write_poses); });

    m.def("enumerate_poses", &enumerate_poses, py::arg("grid"), py::arg("layout"));

    m.def("count_configurations", [](const std::vector<std::uint64_t>& resolutions) {
        // exact product as a Python int, via its decimal rendering
        return py::module_::import("builtins").attr("int")(
            count_configurations(resolutions).str());
    }, py::arg("resolutions"));

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("total_branches", &VerificationReport::total_branches)
        .def_readonly("matched", &VerificationReport::matched)
        .def_readonly("max_weight_deviation", &VerificationReport::max_weight_deviation)
        .def_readonly("mismatches", &VerificationReport::mismatches)
        .def_readonly("passed", &VerificationReport::passed)
        .def("summary_line", &VerificationReport::summary_line)
        .def("__repr__", &VerificationReport::to_text);

    m.def("compare_ensembles", &compare_ensembles, py::arg("decoded"), py::arg("expected"),
          py::arg("tolerance") = kVerifyTolerance);
    m.def("verify", &verify, py::arg("grid"), py::arg("layout"));

    py::class_<AtomRecord>(m, "AtomRecord")
        .def(py::init([](std::string element, double x, double y, double z, double weight) {
                 return AtomRecord{std::move(element), x, y, z, weight};
             }),
             py::arg("element"), py::arg("x"), py::arg("y"), py::arg("z"),
             py::arg("weight") = 1.0)
        .def_readonly("element", &AtomRecord::element)
        .def_readonly("x", &AtomRecord::x)
        .def_readonly("y", &AtomRecord::y)
        .def_readonly("z", &AtomRecord::z)
        .def_readonly("weight", &AtomRecord::weight);

    m.def("rasterize",
          [](const std::vector<AtomRecord>& atoms, const GridSpec& spec) {
              return rasterize(atoms, spec);
          },
          py::arg("atoms"), py::arg("spec"));

    m.attr("__version__") = "0.1.0";
}
