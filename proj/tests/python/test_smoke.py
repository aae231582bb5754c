"""Smoke tests for the Python extension module."""

import os

import pytest

import sfcplan


@pytest.fixture
def chain():
    vnf = sfcplan.VnfSpec(service_rate=200.0, reliability=0.9, resource_weight=2.0)
    return sfcplan.SfcSpec(vnfs=[vnf] * 4, arrival_rate=100.0, delay_sla=0.125)


def test_closed_forms(chain):
    assert sfcplan.reliability_sc(chain) == pytest.approx(0.6561, rel=1e-12)
    assert sfcplan.reliability_scb(chain, 1) == pytest.approx(0.96059601, rel=1e-12)
    assert sfcplan.reliability_subchain_mm1(chain, 3) == pytest.approx(0.959327906481, rel=1e-12)
    assert sfcplan.reliability_mmm(chain, 6) == pytest.approx(0.999996000006, rel=1e-12)
    assert sfcplan.sfc_response_sc(chain) == pytest.approx(0.04, rel=1e-12)
    assert sfcplan.erlang_c(3, 1.5) == pytest.approx(9.0 / 38.0, rel=1e-12)
    assert sfcplan.sfc_response_mmm(chain, 6) == pytest.approx(0.1239657282741738, rel=1e-12)
    assert sfcplan.total_resources(chain, sfcplan.ChainConfig.scb(1)) == pytest.approx(16.0)


def test_planner(chain):
    mm1 = sfcplan.plan(chain, sfcplan.PlanSetting.mm1)
    assert mm1.subchains == 3
    assert mm1.predicted_response <= chain.delay_sla
    mmm = sfcplan.plan(chain, sfcplan.PlanSetting.mmm)
    assert mmm.subchains == 6
    assert mmm.predicted_reliability == pytest.approx(0.999996000006, rel=1e-12)


def test_planner_errors(chain):
    tight = sfcplan.SfcSpec(vnfs=chain.vnfs, arrival_rate=100.0, delay_sla=0.01)
    with pytest.raises(sfcplan.InfeasibleError):
        sfcplan.plan(tight, sfcplan.PlanSetting.mm1)
    with pytest.raises(sfcplan.ValidationError):
        sfcplan.VnfSpec(service_rate=200.0, reliability=1.2)


def test_simulation_is_deterministic(chain):
    kwargs = dict(seed=7, warmup_departures=1000, measured_departures=5000, replications=3)
    config = sfcplan.ChainConfig.subchain_mm1(2)
    first = sfcplan.simulate(chain, config, **kwargs)
    second = sfcplan.simulate(chain, config, **kwargs, jobs=3)
    assert first.mean_response == second.mean_response
    assert first.per_replication_means == second.per_replication_means
    assert first.mean_response == pytest.approx(0.08, rel=0.05)


def test_availability(chain):
    result = sfcplan.estimate_availability(chain, sfcplan.ChainConfig.sc(), trials=100000, seed=3)
    assert result.estimate == pytest.approx(0.6561, abs=0.005)
    perfect = sfcplan.SfcSpec(
        vnfs=[sfcplan.VnfSpec(100.0, 1.0, 1.0)], arrival_rate=10.0, delay_sla=1.0
    )
    assert sfcplan.estimate_availability(perfect, sfcplan.ChainConfig.sc(), 10000, 1).estimate == 1.0


def test_scenario_loading():
    source_dir = os.environ.get("SFCPLAN_SOURCE_DIR")
    if not source_dir:
        pytest.skip("SFCPLAN_SOURCE_DIR not set")
    scenario = sfcplan.load_scenario(os.path.join(source_dir, "scenarios", "table1.scenario"))
    assert scenario.name == "table1"
    assert [c.label() for c in scenario.configs] == ["sc", "scb:1", "mm1:3", "mmm:6"]
    report = sfcplan.analyze(scenario.sfc, scenario.configs[0])
    assert report.expected_response_time == pytest.approx(0.04, rel=1e-12)
