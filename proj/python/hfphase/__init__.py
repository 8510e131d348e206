# Copyright 2026 The hfphase Authors
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


"""Thermal geometric phase and concurrence of the hyperfine two-spin model.

Matrices are 4x4 complex numpy arrays in the product basis
|e+ n+>, |e+ n->, |e- n+>, |e- n->.

    >>> import hfphase
    >>> h = hfphase.hamiltonian(1.0, 1.0)
    >>> hp = hfphase.hamiltonian(1.0, 1.0, epsilon=0.5, quenched=True)
    >>> state = hfphase.gibbs_state(h, 1.0, reference=hp)
    >>> round(hfphase.geometric_phase(state, hp, 1.0).gamma, 6)
    0.003121
"""

from ._core import (
    HfphaseError,
    PhaseResult,
    SweepConfig,
    ThermalState,
    analytic_spectrum,
    concurrence,
    eigh,
    evolve,
    field_to_couplings,
    geometric_phase,
    geometric_phase_integrated,
    gibbs_state,
    h0,
    hamiltonian,
    hi,
    load_scenario,
    parse_config,
    propagator,
    run_sweep,
    scenario_names,
    spin_flip,
    sweep_csv,
    unwrap_phase,
    wrap_phase,
)

__version__ = "0.1.0"

__all__ = [
    "HfphaseError",
    "PhaseResult",
    "SweepConfig",
    "ThermalState",
    "analytic_spectrum",
    "concurrence",
    "eigh",
    "evolve",
    "field_to_couplings",
    "geometric_phase",
    "geometric_phase_integrated",
    "gibbs_state",
    "h0",
    "hamiltonian",
    "hi",
    "load_scenario",
    "parse_config",
    "propagator",
    "run_sweep",
    "scenario_names",
    "spin_flip",
    "sweep_csv",
    "unwrap_phase",
    "wrap_phase",
]
