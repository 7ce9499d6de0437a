#include "flexopt/harness/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

namespace flexopt::harness {

namespace {

enum class KeyType { integer, real, boolean, string, string_array, int_array };

// The schema: every accepted key and its type.
const std::map<std::string, KeyType>& schema() {
    static const std::map<std::string, KeyType> s = {
        {"circuit.inputs", KeyType::integer},
        {"circuit.gates", KeyType::integer},
        {"circuit.cycle_policy", KeyType::string},
        {"ga.pop_size", KeyType::integer},
        {"ga.mutation_rate", KeyType::real},
        {"ga.crossover_rate", KeyType::real},
        {"ga.elite_count", KeyType::integer},
        {"ga.tournament_size", KeyType::integer},
        {"ga.max_generations", KeyType::integer},
        {"schedule.epoch_len", KeyType::integer},
        {"schedule.pretrain_epochs", KeyType::integer},
        {"schedule.reset_on_switch", KeyType::boolean},
        {"eps.fn_threshold", KeyType::real},
        {"eps.baseline_populations", KeyType::integer},
        {"goals.training", KeyType::string_array},
        {"goals.test", KeyType::string_array},
        {"experiment.seeds", KeyType::integer},
        {"experiment.seed_list", KeyType::int_array},
        {"experiment.master_seed", KeyType::integer},
        {"experiment.failure_mode", KeyType::string},
        {"experiment.threads", KeyType::integer},
        {"experiment.out_dir", KeyType::string},
    };
    return s;
}

void check_against_schema(const TomlDoc& doc) {
    for (const auto& [key, value] : doc) {
        auto it = schema().find(key);
        if (it == schema().end()) throw ConfigError("unknown config key '" + key + "'");
        bool ok = false;
        switch (it->second) {
            case KeyType::integer: ok = value.is_int(); break;
            case KeyType::real: ok = value.is_real(); break;
            case KeyType::boolean: ok = value.is_bool(); break;
            case KeyType::string: ok = value.is_string(); break;
            case KeyType::string_array: ok = value.is_string_array(); break;
            case KeyType::int_array: ok = value.is_int_array(); break;
        }
        if (!ok) throw ConfigError("config key '" + key + "' has the wrong type");
    }
}

int get_int(const TomlDoc& doc, const std::string& key, int fallback) {
    auto it = doc.find(key);
    if (it == doc.end()) return fallback;
    const std::int64_t v = it->second.as_int();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ConfigError("config key '" + key + "' out of range");
    return static_cast<int>(v);
}

double get_real(const TomlDoc& doc, const std::string& key, double fallback) {
    auto it = doc.find(key);
    return it == doc.end() ? fallback : it->second.as_real();
}

bool get_bool(const TomlDoc& doc, const std::string& key, bool fallback) {
    auto it = doc.find(key);
    return it == doc.end() ? fallback : it->second.as_bool();
}

std::string get_string(const TomlDoc& doc, const std::string& key, const std::string& fallback) {
    auto it = doc.find(key);
    return it == doc.end() ? fallback : it->second.as_string();
}

std::vector<circuit::GoalFamily> parse_families(const std::vector<std::string>& specs) {
    std::vector<circuit::GoalFamily> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(circuit::GoalFamily::parse(s));
    return out;
}

// Default goal lists.  Training uses f in {AND, OR} with g,h in {XOR, EQ};
// every test family replaces exactly one of f, g, h with an operator the
// training set never uses, keeping the two-module composition intact.
const std::vector<std::string>& default_training() {
    static const std::vector<std::string> v = {"AND(XOR,XOR)", "OR(XOR,XOR)", "AND(XOR,EQ)"};
    return v;
}

const std::vector<std::string>& default_test() {
    static const std::vector<std::string> v = {
        "NAND(XOR,XOR)", "NAND(XOR,EQ)", "NAND(EQ,XOR)", "NAND(EQ,EQ)",
        "NOR(XOR,XOR)",  "NOR(XOR,EQ)",  "NOR(EQ,XOR)",  "NOR(EQ,EQ)",
        "AND(ANDN,XOR)", "AND(ANDN,EQ)", "OR(ANDN,XOR)", "OR(ANDN,EQ)",
        "AND(ORN,XOR)",  "AND(ORN,EQ)",  "OR(ORN,XOR)",  "OR(ORN,EQ)",
        "AND(XOR,NOR)",  "AND(EQ,NOR)",  "OR(XOR,NOR)",  "OR(EQ,NOR)",
    };
    return v;
}

} // namespace

const char* failure_mode_name(FailureMode mode) {
    return mode == FailureMode::exclude ? "exclude" : "cap";
}

int ExperimentConfig::resolved_threads() const {
    if (threads > 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void ExperimentConfig::validate() const {
    circuit.validate();
    ga.validate();
    if (epoch_len < 1) throw ConfigError("schedule.epoch_len must be >= 1");
    if (pretrain_epochs < 0) throw ConfigError("schedule.pretrain_epochs must be >= 0");
    if (fn_threshold <= 0.0 || fn_threshold >= 1.0)
        throw ConfigError("eps.fn_threshold must lie in (0,1)");
    if (baseline_populations < 1) throw ConfigError("eps.baseline_populations must be >= 1");
    if (seeds.empty()) throw ConfigError("experiment needs at least one seed");
    if (training.size() != 3) throw ConfigError("goals.training must list exactly 3 families");
    if (test.empty()) throw ConfigError("goals.test must not be empty");
    if (threads < 0) throw ConfigError("experiment.threads must be >= 0");
}

ExperimentConfig ExperimentConfig::defaults() {
    TomlDoc empty;
    return from_doc(empty);
}

ExperimentConfig ExperimentConfig::from_doc(const TomlDoc& doc) {
    check_against_schema(doc);
    ExperimentConfig cfg;

    cfg.circuit.inputs = get_int(doc, "circuit.inputs", cfg.circuit.inputs);
    cfg.circuit.gates = get_int(doc, "circuit.gates", cfg.circuit.gates);
    const std::string policy = get_string(doc, "circuit.cycle_policy", "settle");
    if (policy == "settle")
        cfg.cycle_policy = circuit::CyclePolicy::settle;
    else if (policy == "feedforward")
        cfg.cycle_policy = circuit::CyclePolicy::feedforward;
    else
        throw ConfigError("circuit.cycle_policy must be 'settle' or 'feedforward'");

    cfg.ga.pop_size = get_int(doc, "ga.pop_size", cfg.ga.pop_size);
    cfg.mutation_rate_explicit = doc.count("ga.mutation_rate") > 0;
    cfg.ga.mutation_rate = cfg.mutation_rate_explicit
                               ? get_real(doc, "ga.mutation_rate", 0.0)
                               : 1.0 / static_cast<double>(cfg.circuit.genome_bits());
    cfg.ga.crossover_rate = get_real(doc, "ga.crossover_rate", cfg.ga.crossover_rate);
    cfg.ga.elite_count = get_int(doc, "ga.elite_count", cfg.ga.elite_count);
    cfg.ga.tournament_size = get_int(doc, "ga.tournament_size", cfg.ga.tournament_size);
    cfg.ga.max_generations = get_int(doc, "ga.max_generations", cfg.ga.max_generations);

    cfg.epoch_len = get_int(doc, "schedule.epoch_len", cfg.epoch_len);
    cfg.pretrain_epochs = get_int(doc, "schedule.pretrain_epochs", cfg.pretrain_epochs);
    cfg.reset_population_on_switch = get_bool(doc, "schedule.reset_on_switch", false);

    cfg.fn_threshold = get_real(doc, "eps.fn_threshold", cfg.fn_threshold);
    cfg.baseline_populations = get_int(doc, "eps.baseline_populations", cfg.baseline_populations);

    cfg.training = parse_families(doc.count("goals.training")
                                      ? doc.at("goals.training").as_string_array()
                                      : default_training());
    cfg.test = parse_families(doc.count("goals.test") ? doc.at("goals.test").as_string_array()
                                                      : default_test());

    cfg.master_seed = static_cast<std::uint64_t>(get_int(doc, "experiment.master_seed", 42));
    if (doc.count("experiment.seed_list")) {
        if (doc.count("experiment.seeds"))
            throw ConfigError("give either experiment.seeds or experiment.seed_list, not both");
        for (std::int64_t s : doc.at("experiment.seed_list").as_int_array())
            cfg.seeds.push_back(static_cast<std::uint64_t>(s));
    } else {
        const int count = get_int(doc, "experiment.seeds", 20);
        if (count < 1) throw ConfigError("experiment.seeds must be >= 1");
        for (int i = 0; i < count; ++i)
            cfg.seeds.push_back(derive_seed(cfg.master_seed, 0x5eed0000u + static_cast<std::uint64_t>(i)));
    }

    const std::string mode = get_string(doc, "experiment.failure_mode", "exclude");
    if (mode == "exclude")
        cfg.failure_mode = FailureMode::exclude;
    else if (mode == "cap")
        cfg.failure_mode = FailureMode::cap;
    else
        throw ConfigError("experiment.failure_mode must be 'exclude' or 'cap'");

    cfg.threads = get_int(doc, "experiment.threads", 0);
    cfg.out_dir = get_string(doc, "experiment.out_dir", cfg.out_dir);

    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path,
                                             const std::vector<std::string>& overrides) {
    TomlDoc doc = parse_toml_file(path);
    apply_overrides(doc, overrides);
    return from_doc(doc);
}

void apply_overrides(TomlDoc& doc, const std::vector<std::string>& overrides) {
    for (const auto& item : overrides) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override '" + item + "' must look like dotted.key=value");
        const std::string key = item.substr(0, eq);
        if (!schema().count(key)) throw ConfigError("unknown config key '" + key + "'");
        TomlValue value = parse_toml_value(item.substr(eq + 1));
        // Bare words on the command line are strings even without quotes.
        if (schema().at(key) == KeyType::string && !value.is_string())
            value = TomlValue{std::string(item.substr(eq + 1))};
        doc.erase(key);
        doc.emplace(key, std::move(value));
    }
    check_against_schema(doc);
}

std::string ExperimentConfig::canonical() const {
    std::map<std::string, std::string> kv;
    kv["circuit.inputs"] = std::to_string(circuit.inputs);
    kv["circuit.gates"] = std::to_string(circuit.gates);
    kv["circuit.cycle_policy"] =
        cycle_policy == circuit::CyclePolicy::settle ? "settle" : "feedforward";
    kv["ga.pop_size"] = std::to_string(ga.pop_size);
    {
        std::ostringstream os;
        os.precision(17);
        os << ga.mutation_rate << " " << ga.crossover_rate;
        std::string s = os.str();
        const auto sp = s.find(' ');
        kv["ga.mutation_rate"] = s.substr(0, sp);
        kv["ga.crossover_rate"] = s.substr(sp + 1);
    }
    kv["ga.elite_count"] = std::to_string(ga.elite_count);
    kv["ga.tournament_size"] = std::to_string(ga.tournament_size);
    kv["ga.max_generations"] = std::to_string(ga.max_generations);
    kv["schedule.epoch_len"] = std::to_string(epoch_len);
    kv["schedule.pretrain_epochs"] = std::to_string(pretrain_epochs);
    kv["schedule.reset_on_switch"] = reset_population_on_switch ? "true" : "false";
    {
        std::ostringstream os;
        os.precision(17);
        os << fn_threshold;
        kv["eps.fn_threshold"] = os.str();
    }
    kv["eps.baseline_populations"] = std::to_string(baseline_populations);
    {
        std::string t, u;
        for (const auto& fam : training) t += fam.name() + ";";
        for (const auto& fam : test) u += fam.name() + ";";
        kv["goals.training"] = t;
        kv["goals.test"] = u;
    }
    {
        std::string s;
        for (std::uint64_t v : seeds) s += std::to_string(v) + ";";
        kv["experiment.seed_values"] = s;
    }
    kv["experiment.master_seed"] = std::to_string(master_seed);
    kv["experiment.failure_mode"] = failure_mode_name(failure_mode);

    std::string out;
    for (const auto& [k, v] : kv) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

std::string ExperimentConfig::hash() const {
    const std::string text = canonical();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

} // namespace flexopt::harness
