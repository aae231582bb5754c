#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "sfcplan/errors.hpp"
#include "sfcplan/planner.hpp"
#include "sfcplan/queueing.hpp"
#include "sfcplan/rng.hpp"
#include "sfcplan/scenario.hpp"
#include "sfcplan/sfc.hpp"
#include "sfcplan/sim.hpp"

namespace py = pybind11;
using namespace sfcplan;

namespace {

SimResult simulate_config(const SfcSpec& sfc, const ChainConfig& config, std::uint64_t seed,
                          std::int64_t warmup_departures, std::int64_t measured_departures,
                          int replications, int jobs) {
    SimConfig sim;
    sim.topology = build_topology(sfc, config);
    sim.arrival_rate = sfc.arrival_rate;
    sim.warmup_departures = warmup_departures;
    sim.measured_departures = measured_departures;
    sim.replications = replications;
    sim.seed = seed;
    return run_simulation(sim, jobs);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reliability and delay analysis for subchained service function chains";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    py::register_exception<UnstableError>(m, "UnstableError", PyExc_ValueError);
    py::register_exception<DivergedError>(m, "DivergedError", PyExc_RuntimeError);

    py::class_<VnfSpec>(m, "VnfSpec")
        .def(py::init([](double service_rate, double reliability, double resource_weight) {
                 VnfSpec vnf{service_rate, reliability, resource_weight};
                 validate(vnf);
                 return vnf;
             }),
             py::arg("service_rate"), py::arg("reliability"), py::arg("resource_weight") = 1.0)
        .def_readonly("service_rate", &VnfSpec::service_rate)
        .def_readonly("reliability", &VnfSpec::reliability)
        .def_readonly("resource_weight", &VnfSpec::resource_weight);

    py::class_<SfcSpec>(m, "SfcSpec")
        .def(py::init([](std::vector<VnfSpec> vnfs, double arrival_rate, double delay_sla) {
                 SfcSpec sfc{std::move(vnfs), arrival_rate, delay_sla};
                 validate(sfc);
                 return sfc;
             }),
             py::arg("vnfs"), py::arg("arrival_rate"), py::arg("delay_sla"))
        .def_readonly("vnfs", &SfcSpec::vnfs)
        .def_readonly("arrival_rate", &SfcSpec::arrival_rate)
        .def_readonly("delay_sla", &SfcSpec::delay_sla)
        .def("is_stable", &SfcSpec::is_stable)
        .def("bottleneck_index", &SfcSpec::bottleneck_index)
        .def("total_resource_weight", &SfcSpec::total_resource_weight);

    py::class_<ChainConfig>(m, "ChainConfig")
        .def_static("sc", &ChainConfig::sc)
        .def_static("scb", &ChainConfig::scb, py::arg("backups"))
        .def_static("subchain_mm1", &ChainConfig::subchain_mm1, py::arg("subchains"))
        .def_static("common_scheduler_mmm", &ChainConfig::common_scheduler_mmm, py::arg("splits"))
        .def_static("parse", &ChainConfig::parse, py::arg("label"))
        .def_readonly("count", &ChainConfig::count)
        .def("label", &ChainConfig::label)
        .def("__repr__", [](const ChainConfig& c) { return "ChainConfig(" + c.label() + ")"; });

    py::class_<AnalysisReport>(m, "AnalysisReport")
        .def_readonly("reliability", &AnalysisReport::reliability)
        .def_readonly("expected_response_time", &AnalysisReport::expected_response_time)
        .def_readonly("total_resources", &AnalysisReport::total_resources)
        .def_readonly("config", &AnalysisReport::config);

    m.def("reliability_sc", &reliability_sc, py::arg("sfc"));
    m.def("reliability_scb", &reliability_scb, py::arg("sfc"), py::arg("backups"));
    m.def("reliability_subchain_mm1", &reliability_subchain_mm1, py::arg("sfc"), py::arg("subchains"));
    m.def("reliability_mmm", &reliability_mmm, py::arg("sfc"), py::arg("splits"));
    m.def("reliability", &reliability, py::arg("sfc"), py::arg("config"));
    m.def("total_resources", &total_resources, py::arg("sfc"), py::arg("config"));
    m.def("analyze", &analyze, py::arg("sfc"), py::arg("config"));

    m.def(
        "mm1_response",
        [](double arrival_rate, double service_rate) {
            return mm1_response({arrival_rate, service_rate});
        },
        py::arg("arrival_rate"), py::arg("service_rate"));
    m.def("erlang_c", &erlang_c, py::arg("servers"), py::arg("offered_load"));
    m.def(
        "mmm_vnf_response",
        [](double arrival_rate, double service_rate, int splits) {
            return mmm_vnf_response({arrival_rate, service_rate}, splits);
        },
        py::arg("arrival_rate"), py::arg("service_rate"), py::arg("splits"));
    m.def("sfc_response_sc", &sfc_response_sc, py::arg("sfc"));
    m.def("sfc_response_subchain_mm1", &sfc_response_subchain_mm1, py::arg("sfc"), py::arg("subchains"));
    m.def("sfc_response_mmm", &sfc_response_mmm, py::arg("sfc"), py::arg("splits"));

    py::enum_<PlanSetting>(m, "PlanSetting")
        .value("mm1", PlanSetting::mm1)
        .value("mmm", PlanSetting::mmm);

    py::class_<PlanResult>(m, "PlanResult")
        .def_readonly("subchains", &PlanResult::subchains)
        .def_readonly("predicted_response", &PlanResult::predicted_response)
        .def_readonly("predicted_reliability", &PlanResult::predicted_reliability)
        .def_readonly("setting", &PlanResult::setting)
        .def_readonly("used_scan_fallback", &PlanResult::used_scan_fallback);

    m.def(
        "plan",
        [](const SfcSpec& sfc, PlanSetting setting, int l_max) {
            return plan({sfc, setting, l_max});
        },
        py::arg("sfc"), py::arg("setting"), py::arg("l_max") = 1'000'000);

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("mean_response", &SimResult::mean_response)
        .def_readonly("ci95_halfwidth", &SimResult::ci95_halfwidth)
        .def_readonly("per_replication_means", &SimResult::per_replication_means)
        .def_readonly("departures_counted", &SimResult::departures_counted)
        .def_readonly("seed", &SimResult::seed)
        .def_readonly("mean_in_system", &SimResult::mean_in_system)
        .def_readonly("branch_arrivals", &SimResult::branch_arrivals)
        .def_readonly("total_arrivals", &SimResult::total_arrivals);

    m.def("simulate", &simulate_config, py::arg("sfc"), py::arg("config"), py::arg("seed") = 42,
          py::arg("warmup_departures") = 10'000, py::arg("measured_departures") = 100'000,
          py::arg("replications") = 10, py::arg("jobs") = 1,
          "Discrete-event simulation of one configuration; deterministic per seed.");

    py::class_<AvailabilityEstimate>(m, "AvailabilityEstimate")
        .def_readonly("estimate", &AvailabilityEstimate::estimate)
        .def_readonly("trials", &AvailabilityEstimate::trials)
        .def_readonly("ci95_halfwidth", &AvailabilityEstimate::ci95_halfwidth);

    m.def("estimate_availability", &estimate_availability, py::arg("sfc"), py::arg("config"),
          py::arg("trials") = 1'000'000, py::arg("seed") = 42);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_readonly("sfc", &Scenario::sfc)
        .def_readonly("configs", &Scenario::configs);

    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("table1_scenario_text", &table1_scenario_text);
}
