"""Reliability and delay planning for subchained service function chains."""

from sfcplan._core import (
    AnalysisReport,
    AvailabilityEstimate,
    ChainConfig,
    DivergedError,
    InfeasibleError,
    ParseError,
    PlanResult,
    PlanSetting,
    Scenario,
    SfcSpec,
    SimResult,
    UnstableError,
    ValidationError,
    VnfSpec,
    analyze,
    erlang_c,
    estimate_availability,
    load_scenario,
    mm1_response,
    mmm_vnf_response,
    plan,
    reliability,
    reliability_mmm,
    reliability_sc,
    reliability_scb,
    reliability_subchain_mm1,
    sfc_response_mmm,
    sfc_response_sc,
    sfc_response_subchain_mm1,
    simulate,
    table1_scenario_text,
    total_resources,
)

__all__ = [
    "AnalysisReport",
    "AvailabilityEstimate",
    "ChainConfig",
    "DivergedError",
    "InfeasibleError",
    "ParseError",
    "PlanResult",
    "PlanSetting",
    "Scenario",
    "SfcSpec",
    "SimResult",
    "UnstableError",
    "ValidationError",
    "VnfSpec",
    "analyze",
    "erlang_c",
    "estimate_availability",
    "load_scenario",
    "mm1_response",
    "mmm_vnf_response",
    "plan",
    "reliability",
    "reliability_mmm",
    "reliability_sc",
    "reliability_scb",
    "reliability_subchain_mm1",
    "sfc_response_mmm",
    "sfc_response_sc",
    "sfc_response_subchain_mm1",
    "simulate",
    "table1_scenario_text",
    "total_resources",
]
