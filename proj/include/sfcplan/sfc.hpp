#ifndef SFCPLAN_SFC_HPP
#define SFCPLAN_SFC_HPP

#include <optional>
#include <string>
#include <vector>

namespace sfcplan {

/// One virtual network function: how fast it serves, how likely an instance
/// is up, and how many virtual cores it consumes.
struct VnfSpec {
    double service_rate = 0.0;    // packets/second
    double reliability = 1.0;     // P(instance up), in (0,1]
    double resource_weight = 0.0; // virtual cores

    friend bool operator==(const VnfSpec&, const VnfSpec&) = default;
};

/// One service: the ordered VNF chain plus its offered load and delay SLA.
struct SfcSpec {
    std::vector<VnfSpec> vnfs;
    double arrival_rate = 0.0; // packets/second, Poisson
    double delay_sla = 0.0;    // seconds

    // The queueing operations additionally require arrival_rate < service_rate
    // at every stage. That is a reportable condition, not a construction
    // failure, so it is exposed as a query rather than enforced here.
    bool is_stable() const;
    // Index of the first VNF with service_rate <= arrival_rate, or -1.
    int bottleneck_index() const;

    double total_resource_weight() const;

    friend bool operator==(const SfcSpec&, const SfcSpec&) = default;
};

void validate(const VnfSpec& vnf);
void validate(const SfcSpec& sfc);

enum class ChainVariant {
    sc,                  // one plain chain
    scb,                 // dedicated cold-standby backups per VNF
    subchain_mm1,        // l parallel lower-capacity chains, per-chain schedulers
    common_scheduler_mmm // each VNF split into l instances behind one scheduler
};

/// A concrete deployment shape for one SFC. `count` is b for scb and l for
/// the subchain variants; sc ignores it. sc is definitionally the l=1 case
/// of both subchain variants.
struct ChainConfig {
    ChainVariant variant = ChainVariant::sc;
    int count = 1;

    static ChainConfig sc() { return {ChainVariant::sc, 1}; }
    static ChainConfig scb(int backups) { return {ChainVariant::scb, backups}; }
    static ChainConfig subchain_mm1(int subchains) { return {ChainVariant::subchain_mm1, subchains}; }
    static ChainConfig common_scheduler_mmm(int splits) { return {ChainVariant::common_scheduler_mmm, splits}; }

    // Accepts "sc", "scb:B", "mm1:L", "mmm:L".
    static ChainConfig parse(const std::string& label);
    std::string label() const;

    friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

void validate(const ChainConfig& config);

/// Product of per-VNF up probabilities for a plain chain.
double reliability_sc(const SfcSpec& sfc);

/// Chain reliability when every VNF has `backups` dedicated cold standbys.
/// backups = 0 is accepted and reduces to reliability_sc.
double reliability_scb(const SfcSpec& sfc, int backups);

/// Reliability of `subchains` parallel full copies of the chain; the service
/// is up while at least one copy is fully up. Strictly increasing in the
/// subchain count while the plain-chain reliability is below 1.
double reliability_subchain_mm1(const SfcSpec& sfc, int subchains);

/// Reliability when every VNF is split into `splits` instances and the stage
/// is up while at least one instance is up.
double reliability_mmm(const SfcSpec& sfc, int splits);

double reliability(const SfcSpec& sfc, const ChainConfig& config);

/// Virtual cores consumed by the deployment. Subchaining redistributes the
/// original weights (each smaller instance gets weight/l), so both subchain
/// variants cost the same as sc; scb costs (b+1) times sc.
double total_resources(const SfcSpec& sfc, const ChainConfig& config);

/// Reliability, expected response time, and resource cost for one
/// (SfcSpec, ChainConfig) pair. expected_response_time is absent when the
/// chain is unstable at the given arrival rate.
struct AnalysisReport {
    double reliability = 0.0;
    std::optional<double> expected_response_time; // seconds
    double total_resources = 0.0;
    ChainConfig config;
};

AnalysisReport analyze(const SfcSpec& sfc, const ChainConfig& config);

} // namespace sfcplan

#endif
