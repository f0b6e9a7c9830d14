#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "jamllr/harness.hpp"
#include "jamllr/version.hpp"

namespace jamllr {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& origin, const std::string& field,
                              const std::string& what) {
    throw ConfigError(origin + ": field '" + field + "': " + what);
}

double get_number(const json& v, const std::string& origin, const std::string& field) {
    if (!v.is_number()) field_error(origin, field, "expected a number");
    return v.get<double>();
}

std::uint64_t get_uint(const json& v, const std::string& origin, const std::string& field) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        field_error(origin, field, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

std::string get_string(const json& v, const std::string& origin, const std::string& field) {
    if (!v.is_string()) field_error(origin, field, "expected a string");
    return v.get<std::string>();
}

std::vector<double> get_number_list(const json& v, const std::string& origin,
                                    const std::string& field) {
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) field_error(origin, field, "expected a number or an array of numbers");
    std::vector<double> out;
    for (const json& e : v) {
        if (!e.is_number()) field_error(origin, field, "expected numeric array entries");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(origin + ": top level must be a JSON object");

    ExperimentConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "code")
                cfg.code = parse_code_kind(get_string(value, origin, key));
            else if (key == "n")
                cfg.n = static_cast<std::size_t>(get_uint(value, origin, key));
            else if (key == "k")
                cfg.k = static_cast<std::size_t>(get_uint(value, origin, key));
            else if (key == "code_seed")
                cfg.code_seed = get_uint(value, origin, key);
            else if (key == "snr_a_db")
                cfg.snr_a_db = get_number(value, origin, key);
            else if (key == "jammer_sinr_db")
                cfg.jammer_sinr_db = get_number_list(value, origin, key);
            else if (key == "sinr_convention")
                cfg.sinr_convention = parse_sinr_convention(get_string(value, origin, key));
            else if (key == "b")
                cfg.b = get_number(value, origin, key);
            else if (key == "g")
                cfg.g = get_number(value, origin, key);
            else if (key == "strategy")
                cfg.strategy = parse_strategy(get_string(value, origin, key));
            else if (key == "anchor_threshold")
                cfg.anchor_threshold = get_number(value, origin, key);
            else if (key == "max_propagation")
                cfg.max_propagation = static_cast<std::size_t>(get_uint(value, origin, key));
            else if (key == "genie_fp_rate")
                cfg.genie.fp_rate = get_number(value, origin, key);
            else if (key == "genie_fn_rate")
                cfg.genie.fn_rate = get_number(value, origin, key);
            else if (key == "genie_rates") {
                if (!value.is_array()) field_error(origin, key, "expected an array of [fp,fn] pairs");
                for (const json& pair : value) {
                    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                        !pair[1].is_number())
                        field_error(origin, key, "expected [fp,fn] number pairs");
                    cfg.genie_rates.push_back({pair[0].get<double>(), pair[1].get<double>()});
                }
            } else if (key == "max_queries")
                cfg.max_queries = get_uint(value, origin, key);
            else if (key == "trials")
                cfg.trials = get_uint(value, origin, key);
            else if (key == "target_block_errors")
                cfg.target_block_errors = get_uint(value, origin, key);
            else if (key == "master_seed")
                cfg.master_seed = get_uint(value, origin, key);
            else if (key == "threads")
                cfg.threads = static_cast<int>(get_uint(value, origin, key));
            else if (key == "grid_max")
                cfg.grid_max = get_number(value, origin, key);
            else if (key == "grid_step")
                cfg.grid_step = get_number(value, origin, key);
            else if (key == "curve_frames")
                cfg.curve_frames = get_uint(value, origin, key);
            else if (key == "curve_mode")
                cfg.curve_mode = get_string(value, origin, key);
            else
                throw ConfigError(origin + ": unknown field '" + key + "'");
        } catch (const std::invalid_argument& e) {
            field_error(origin, key, e.what());
        }
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError(path + ": cannot open file");
    std::ostringstream buf;
    buf << is.rdbuf();
    return config_from_json_text(buf.str(), path);
}

namespace {

json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["code"] = code_kind_name(cfg.code);
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["code_seed"] = cfg.code_seed;
    j["snr_a_db"] = cfg.snr_a_db;
    j["jammer_sinr_db"] = cfg.jammer_sinr_db;
    j["sinr_convention"] = sinr_convention_name(cfg.sinr_convention);
    j["b"] = cfg.b;
    j["g"] = cfg.g;
    j["strategy"] = strategy_name(cfg.strategy);
    j["anchor_threshold"] = cfg.anchor_threshold;
    j["max_propagation"] = cfg.max_propagation;
    j["genie_fp_rate"] = cfg.genie.fp_rate;
    j["genie_fn_rate"] = cfg.genie.fn_rate;
    if (!cfg.genie_rates.empty()) {
        json rates = json::array();
        for (const GenieConfig& gc : cfg.genie_rates) rates.push_back({gc.fp_rate, gc.fn_rate});
        j["genie_rates"] = rates;
    }
    j["max_queries"] = cfg.max_queries;
    j["trials"] = cfg.trials;
    j["target_block_errors"] = cfg.target_block_errors;
    j["master_seed"] = cfg.master_seed;
    j["threads"] = cfg.threads;
    j["grid_max"] = cfg.grid_max;
    j["grid_step"] = cfg.grid_step;
    j["curve_frames"] = cfg.curve_frames;
    j["curve_mode"] = cfg.curve_mode;
    return j;
}

json nan_safe(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

}  // namespace

std::string config_to_json_text(const ExperimentConfig& cfg) {
    return config_to_json(cfg).dump(2);
}

void write_rows_json(std::ostream& os, const ExperimentConfig& cfg,
                     const std::vector<SweepRow>& rows) {
    json j;
    j["version"] = std::string(kVersion);
    j["config"] = config_to_json(cfg);
    json arr = json::array();
    for (const SweepRow& r : rows) {
        json row;
        row["strategy"] = r.strategy;
        row["code_label"] = r.code_label;
        row["n"] = r.n;
        row["k"] = r.k;
        row["snr_a_db"] = r.snr_a_db;
        row["jammer_sinr_db"] = r.jammer_sinr_db;
        row["b"] = r.b;
        row["g"] = r.g;
        row["anchor_threshold"] = r.anchor_threshold;
        row["max_queries"] = r.max_queries;
        row["trials"] = r.trials;
        row["block_errors"] = r.block_errors;
        row["bler"] = nan_safe(r.bler);
        row["bler_ci95"] = nan_safe(r.bler_ci95);
        row["mean_queries"] = nan_safe(r.mean_queries);
        row["abandonment_rate"] = nan_safe(r.abandonment_rate);
        row["est_fn_rate"] = nan_safe(r.est_fn_rate);
        row["est_fp_rate"] = nan_safe(r.est_fp_rate);
        row["master_seed"] = r.master_seed;
        row["wall_seconds"] = r.wall_seconds;
        arr.push_back(row);
    }
    j["rows"] = arr;
    os << j.dump(2) << '\n';
}

}  // namespace jamllr
