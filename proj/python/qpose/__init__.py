# Copyright 2026 The qpose Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum circuits and exact simulation for exhaustive pose enumeration of
grid-encoded ligands."""

from ._core import (  # noqa: F401
    AtomRecord,
    Axis,
    AxisPair,
    Circuit,
    ControlSetting,
    Gate,
    GateKind,
    GridSpec,
    OccupancyGrid,
    PoseSet,
    RegisterLayout,
    ResourceCounts,
    SparseState,
    StageOptions,
    VerificationReport,
    __version__,
    apply_gate,
    basis_state,
    build_coord_swap,
    build_increment,
    build_rotation,
    build_translation_stage,
    build_unified,
    compare_ensembles,
    count_configurations,
    decode_state,
    dense_check,
    encode_state,
    enumerate_poses,
    load_grid_file,
    make_cswap,
    make_cx,
    make_h,
    make_layout,
    make_mcx,
    make_swap,
    make_x,
    max_amplitude_delta,
    rasterize,
    resource_counts,
    rotate90,
    run,
    save_grid_file,
    swap_axes,
    translate_grid,
    verify,
)
