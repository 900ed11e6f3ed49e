"""Simulator and optimization library for clustered cognitive-radio sensor
networks: scenario loading, deterministic runs, figure sweeps, and the
collision-bounded channel holding time."""

from ._crsn import (
    ScenarioConfig,
    SimulationReport,
    channel_available_duration,
    load_config,
    q_function,
    run_scenario,
    run_sweep,
)

__all__ = [
    "ScenarioConfig",
    "SimulationReport",
    "channel_available_duration",
    "load_config",
    "q_function",
    "run_scenario",
    "run_sweep",
]
