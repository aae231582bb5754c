#include "sfcplan/sfc.hpp"

#include <cmath>
#include <stdexcept>

#include "sfcplan/errors.hpp"
#include "sfcplan/queueing.hpp"

namespace sfcplan {

bool SfcSpec::is_stable() const { return bottleneck_index() < 0; }

int SfcSpec::bottleneck_index() const {
    for (std::size_t i = 0; i < vnfs.size(); ++i) {
        if (arrival_rate >= vnfs[i].service_rate) return static_cast<int>(i);
    }
    return -1;
}

double SfcSpec::total_resource_weight() const {
    double total = 0.0;
    for (const auto& vnf : vnfs) total += vnf.resource_weight;
    return total;
}

void validate(const VnfSpec& vnf) {
    if (!(vnf.service_rate > 0.0))
        throw ValidationError("vnf service_rate must be > 0, got " + std::to_string(vnf.service_rate));
    if (!(vnf.reliability > 0.0 && vnf.reliability <= 1.0))
        throw ValidationError("vnf reliability must be in (0,1], got " + std::to_string(vnf.reliability));
    if (!(vnf.resource_weight > 0.0))
        throw ValidationError("vnf resource_weight must be > 0, got " + std::to_string(vnf.resource_weight));
}

void validate(const SfcSpec& sfc) {
    if (sfc.vnfs.empty()) throw ValidationError("vnfs must be non-empty");
    for (const auto& vnf : sfc.vnfs) validate(vnf);
    if (!(sfc.arrival_rate > 0.0))
        throw ValidationError("arrival_rate must be > 0, got " + std::to_string(sfc.arrival_rate));
    if (!(sfc.delay_sla > 0.0))
        throw ValidationError("delay_sla must be > 0, got " + std::to_string(sfc.delay_sla));
}

void validate(const ChainConfig& config) {
    switch (config.variant) {
    case ChainVariant::sc:
        return;
    case ChainVariant::scb:
        if (config.count < 1)
            throw ValidationError("scb backup count must be >= 1, got " + std::to_string(config.count));
        return;
    case ChainVariant::subchain_mm1:
    case ChainVariant::common_scheduler_mmm:
        if (config.count < 1)
            throw ValidationError("subchain count must be >= 1, got " + std::to_string(config.count));
        return;
    }
    throw ValidationError("unknown chain variant");
}

ChainConfig ChainConfig::parse(const std::string& label) {
    if (label == "sc") return sc();
    auto colon = label.find(':');
    if (colon != std::string::npos) {
        const std::string kind = label.substr(0, colon);
        const std::string arg = label.substr(colon + 1);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw ParseError("config label '" + label + "': '" + arg + "' is not an integer");
        }
        ChainConfig config;
        if (kind == "scb") config = scb(value);
        else if (kind == "mm1") config = subchain_mm1(value);
        else if (kind == "mmm") config = common_scheduler_mmm(value);
        else throw ParseError("unknown config label '" + label + "' (expected sc, scb:B, mm1:L, mmm:L)");
        validate(config);
        return config;
    }
    throw ParseError("unknown config label '" + label + "' (expected sc, scb:B, mm1:L, mmm:L)");
}

std::string ChainConfig::label() const {
    switch (variant) {
    case ChainVariant::sc: return "sc";
    case ChainVariant::scb: return "scb:" + std::to_string(count);
    case ChainVariant::subchain_mm1: return "mm1:" + std::to_string(count);
    case ChainVariant::common_scheduler_mmm: return "mmm:" + std::to_string(count);
    }
    return "?";
}

double reliability_sc(const SfcSpec& sfc) {
    validate(sfc);
    double product = 1.0;
    for (const auto& vnf : sfc.vnfs) product *= vnf.reliability;
    return product;
}

double reliability_scb(const SfcSpec& sfc, int backups) {
    validate(sfc);
    if (backups < 0)
        throw ValidationError("backup count must be >= 0, got " + std::to_string(backups));
    double product = 1.0;
    for (const auto& vnf : sfc.vnfs)
        product *= 1.0 - std::pow(1.0 - vnf.reliability, backups + 1);
    return product;
}

double reliability_subchain_mm1(const SfcSpec& sfc, int subchains) {
    if (subchains < 1)
        throw ValidationError("subchain count must be >= 1, got " + std::to_string(subchains));
    const double chain = reliability_sc(sfc);
    return 1.0 - std::pow(1.0 - chain, subchains);
}

double reliability_mmm(const SfcSpec& sfc, int splits) {
    validate(sfc);
    if (splits < 1)
        throw ValidationError("split count must be >= 1, got " + std::to_string(splits));
    double product = 1.0;
    for (const auto& vnf : sfc.vnfs)
        product *= 1.0 - std::pow(1.0 - vnf.reliability, splits);
    return product;
}

double reliability(const SfcSpec& sfc, const ChainConfig& config) {
    validate(config);
    switch (config.variant) {
    case ChainVariant::sc: return reliability_sc(sfc);
    case ChainVariant::scb: return reliability_scb(sfc, config.count);
    case ChainVariant::subchain_mm1: return reliability_subchain_mm1(sfc, config.count);
    case ChainVariant::common_scheduler_mmm: return reliability_mmm(sfc, config.count);
    }
    throw ValidationError("unknown chain variant");
}

double total_resources(const SfcSpec& sfc, const ChainConfig& config) {
    validate(sfc);
    validate(config);
    const double base = sfc.total_resource_weight();
    if (config.variant == ChainVariant::scb) return (config.count + 1) * base;
    return base; // subchaining redistributes weights, it does not add any
}

AnalysisReport analyze(const SfcSpec& sfc, const ChainConfig& config) {
    AnalysisReport report;
    report.config = config;
    report.reliability = reliability(sfc, config);
    report.total_resources = total_resources(sfc, config);
    if (sfc.is_stable()) {
        switch (config.variant) {
        case ChainVariant::sc:
        case ChainVariant::scb: // backups are idle, queueing equals sc
            report.expected_response_time = sfc_response_sc(sfc);
            break;
        case ChainVariant::subchain_mm1:
            report.expected_response_time = sfc_response_subchain_mm1(sfc, config.count);
            break;
        case ChainVariant::common_scheduler_mmm:
            report.expected_response_time = sfc_response_mmm(sfc, config.count);
            break;
        }
    }
    return report;
}

} // namespace sfcplan
