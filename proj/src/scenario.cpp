#include "sfcplan/scenario.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sfcplan/errors.hpp"

namespace sfcplan {

std::vector<int> SweepSpec::values() const {
    std::vector<int> out;
    for (int v = first; v <= last; v += step) out.push_back(v);
    return out;
}

const SweepSpec* Scenario::sweep_for(std::string_view variable) const {
    for (const auto& sweep : sweeps)
        if (sweep.variable == variable) return &sweep;
    return nullptr;
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

class ScenarioParser {
public:
    ScenarioParser(std::string_view text, const std::string& origin)
        : text_(text), origin_(origin) {}

    Scenario parse() {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const std::size_t eol = text_.find('\n', pos);
            const std::size_t end = (eol == std::string_view::npos) ? text_.size() : eol;
            std::string line(text_.substr(pos, end - pos));
            ++line_number_;
            handle_line(line);
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
        finish();
        return scenario_;
    }

private:
    [[noreturn]] void fail_parse(const std::string& message) const {
        throw ParseError(origin_ + ":" + std::to_string(line_number_) + ": " + message);
    }

    [[noreturn]] void fail_validation(const std::string& message) const {
        throw ValidationError(origin_ + ":" + std::to_string(line_number_) + ": " + message);
    }

    double parse_real(const std::string& text, const std::string& field) const {
        try {
            std::size_t used = 0;
            const double value = std::stod(text, &used);
            if (used != text.size()) fail_parse(field + ": trailing characters in '" + text + "'");
            return value;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail_parse(field + ": '" + text + "' is not a number");
        }
    }

    long long parse_integer(const std::string& text, const std::string& field) const {
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            fail_parse(field + ": '" + text + "' is not an integer");
        return value;
    }

    // key=value pair; returns false when '=' is missing.
    static bool split_pair(const std::string& token, std::string& key, std::string& value) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) return false;
        key = token.substr(0, eq);
        value = token.substr(eq + 1);
        return true;
    }

    void handle_line(const std::string& raw) {
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) return;
        const std::string& directive = tokens[0];

        if (!saw_version_) {
            if (directive != "schema_version")
                fail_parse("first directive must be schema_version");
            if (tokens.size() != 2) fail_parse("schema_version takes one value");
            const long long version = parse_integer(tokens[1], "schema_version");
            if (version != 1)
                fail_parse("unsupported schema_version " + tokens[1] + " (this tool reads version 1)");
            scenario_.schema_version = 1;
            saw_version_ = true;
            return;
        }

        if (directive == "schema_version") fail_parse("duplicate schema_version");
        else if (directive == "name") handle_name(tokens);
        else if (directive == "arrival_rate") handle_arrival_rate(tokens);
        else if (directive == "delay_sla") handle_delay_sla(tokens);
        else if (directive == "vnf") handle_vnf(tokens);
        else if (directive == "config") handle_config(tokens);
        else if (directive == "sim") handle_sim(tokens);
        else if (directive == "sweep") handle_sweep(tokens);
        else fail_parse("unknown directive '" + directive + "'");
    }

    void handle_name(const std::vector<std::string>& tokens) {
        if (!scenario_.name.empty()) fail_parse("duplicate name");
        if (tokens.size() != 2) fail_parse("name takes one value");
        scenario_.name = tokens[1];
    }

    void handle_arrival_rate(const std::vector<std::string>& tokens) {
        if (saw_arrival_rate_) fail_parse("duplicate arrival_rate");
        if (tokens.size() != 2) fail_parse("arrival_rate takes one value");
        const double value = parse_real(tokens[1], "arrival_rate");
        if (!(value > 0.0)) fail_validation("arrival_rate must be > 0, got " + tokens[1]);
        scenario_.sfc.arrival_rate = value;
        saw_arrival_rate_ = true;
    }

    void handle_delay_sla(const std::vector<std::string>& tokens) {
        if (saw_delay_sla_) fail_parse("duplicate delay_sla");
        if (tokens.size() != 2) fail_parse("delay_sla takes one value");
        const double value = parse_real(tokens[1], "delay_sla");
        if (!(value > 0.0)) fail_validation("delay_sla must be > 0, got " + tokens[1]);
        scenario_.sfc.delay_sla = value;
        saw_delay_sla_ = true;
    }

    void handle_vnf(const std::vector<std::string>& tokens) {
        VnfSpec vnf;
        bool saw_rate = false, saw_reliability = false, saw_weight = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::string key, value;
            if (!split_pair(tokens[i], key, value))
                fail_parse("vnf fields must be key=value, got '" + tokens[i] + "'");
            if (key == "service_rate") {
                vnf.service_rate = parse_real(value, "vnf service_rate");
                saw_rate = true;
            } else if (key == "reliability") {
                vnf.reliability = parse_real(value, "vnf reliability");
                saw_reliability = true;
            } else if (key == "resource_weight") {
                vnf.resource_weight = parse_real(value, "vnf resource_weight");
                saw_weight = true;
            } else {
                fail_parse("unknown vnf field '" + key + "'");
            }
        }
        if (!saw_rate) fail_parse("vnf is missing service_rate");
        if (!saw_reliability) fail_parse("vnf is missing reliability");
        if (!saw_weight) fail_parse("vnf is missing resource_weight");
        if (!(vnf.service_rate > 0.0))
            fail_validation("vnf service_rate must be > 0, got " + format(vnf.service_rate));
        if (!(vnf.reliability > 0.0 && vnf.reliability <= 1.0))
            fail_validation("vnf reliability must be in (0,1], got " + format(vnf.reliability));
        if (!(vnf.resource_weight > 0.0))
            fail_validation("vnf resource_weight must be > 0, got " + format(vnf.resource_weight));
        scenario_.sfc.vnfs.push_back(vnf);
    }

    void handle_config(const std::vector<std::string>& tokens) {
        if (tokens.size() != 2) fail_parse("config takes one label");
        try {
            scenario_.configs.push_back(ChainConfig::parse(tokens[1]));
        } catch (const ParseError& e) {
            fail_parse(e.what());
        } catch (const ValidationError& e) {
            fail_validation(e.what());
        }
    }

    void handle_sim(const std::vector<std::string>& tokens) {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::string key, value;
            if (!split_pair(tokens[i], key, value))
                fail_parse("sim fields must be key=value, got '" + tokens[i] + "'");
            if (key == "seed") {
                scenario_.sim.seed = static_cast<std::uint64_t>(parse_integer(value, "sim seed"));
            } else if (key == "warmup_departures") {
                const long long v = parse_integer(value, "sim warmup_departures");
                if (v < 0) fail_validation("sim warmup_departures must be >= 0, got " + value);
                scenario_.sim.warmup_departures = v;
            } else if (key == "measured_departures") {
                const long long v = parse_integer(value, "sim measured_departures");
                if (v < 1000)
                    fail_validation("sim measured_departures must be >= 1000, got " + value);
                scenario_.sim.measured_departures = v;
            } else if (key == "replications") {
                const long long v = parse_integer(value, "sim replications");
                if (v < 1) fail_validation("sim replications must be >= 1, got " + value);
                scenario_.sim.replications = static_cast<int>(v);
            } else if (key == "trials") {
                const long long v = parse_integer(value, "sim trials");
                if (v < 10'000) fail_validation("sim trials must be >= 10000, got " + value);
                scenario_.sim.trials = v;
            } else if (key == "max_queue_length") {
                const long long v = parse_integer(value, "sim max_queue_length");
                if (v < 1) fail_validation("sim max_queue_length must be >= 1, got " + value);
                scenario_.sim.max_queue_length = v;
            } else {
                fail_parse("unknown sim field '" + key + "'");
            }
        }
    }

    void handle_sweep(const std::vector<std::string>& tokens) {
        if (tokens.size() != 4 && tokens.size() != 5)
            fail_parse("sweep takes: variable first last [step]");
        SweepSpec sweep;
        sweep.variable = tokens[1];
        if (sweep.variable != "l" && sweep.variable != "b" && sweep.variable != "vnf_count")
            fail_parse("sweep variable must be l, b, or vnf_count, got '" + sweep.variable + "'");
        if (scenario_.sweep_for(sweep.variable) != nullptr)
            fail_parse("duplicate sweep for '" + sweep.variable + "'");
        sweep.first = static_cast<int>(parse_integer(tokens[2], "sweep first"));
        sweep.last = static_cast<int>(parse_integer(tokens[3], "sweep last"));
        sweep.step = tokens.size() == 5 ? static_cast<int>(parse_integer(tokens[4], "sweep step")) : 1;
        if (sweep.first < 1 || sweep.last < sweep.first || sweep.step < 1)
            fail_validation("sweep range must be ascending positive integers");
        scenario_.sweeps.push_back(sweep);
    }

    void finish() {
        line_number_ = 0; // end-of-file diagnostics carry no line
        if (!saw_version_) throw ParseError(origin_ + ": empty scenario (missing schema_version)");
        if (scenario_.name.empty()) throw ValidationError(origin_ + ": missing required field name");
        if (!saw_arrival_rate_)
            throw ValidationError(origin_ + ": missing required field arrival_rate");
        if (!saw_delay_sla_) throw ValidationError(origin_ + ": missing required field delay_sla");
        if (scenario_.sfc.vnfs.empty()) throw ValidationError(origin_ + ": vnfs must be non-empty");
    }

    static std::string format(double value) {
        std::ostringstream out;
        out << value;
        return out.str();
    }

    std::string_view text_;
    std::string origin_;
    Scenario scenario_;
    int line_number_ = 0;
    bool saw_version_ = false;
    bool saw_arrival_rate_ = false;
    bool saw_delay_sla_ = false;
};

} // namespace

Scenario parse_scenario(std::string_view text, const std::string& origin) {
    return ScenarioParser(text, origin).parse();
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open scenario file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path);
}

const char* table1_scenario_text() {
    return R"(# Default benchmark scenario: four identical stages at half load.
schema_version 1
name table1

arrival_rate 100
delay_sla 0.125

vnf service_rate=200 reliability=0.9 resource_weight=2
vnf service_rate=200 reliability=0.9 resource_weight=2
vnf service_rate=200 reliability=0.9 resource_weight=2
vnf service_rate=200 reliability=0.9 resource_weight=2

config sc
config scb:1
config mm1:3
config mmm:6
)";
}

} // namespace sfcplan
