#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperg/errors.hpp"

namespace hyperg {

using json = nlohmann::ordered_json;

// One batch job. The field set is closed: anything outside the whitelist is
// rejected so a typo in a job file fails loudly instead of silently running
// with a default.
struct JobSpec {
    std::string command;  // eval | transform | verify | prove | closed-form
    std::optional<std::vector<double>> params;
    std::optional<double> x;
    std::optional<std::string> identity;
    std::optional<std::int64_t> n;
    std::optional<std::string> a, b, c;  // exact rationals, e.g. "1/2"
    std::optional<std::int64_t> random;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol_rel, tol_abs, quad_error;
    std::optional<std::int64_t> max_terms;
    std::optional<bool> auto_transform;
    std::optional<bool> tail_correction;
};

// One result line. inputs echoes the fully resolved request (defaults filled
// in); diagnostics carries per-command numeric evidence. Serialized records
// are deterministic for identical requests except for wall_ms.
struct ResultRecord {
    std::string command;
    json inputs = json::object();
    std::optional<double> value;
    std::optional<std::string> exact;
    json diagnostics = json::object();
    std::optional<bool> pass;
    std::optional<std::string> error;
    double wall_ms = 0.0;
};

namespace detail {

inline const char* const job_fields[] = {"command",   "identity", "params",    "x",
                                         "n",         "a",        "b",         "c",
                                         "random",    "seed",     "tol_rel",   "tol_abs",
                                         "max_terms", "quad_error", "auto_transform",
                                         "tail_correction"};

inline std::string rational_field(const json& v, const std::string& name) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw DomainError("field \"" + name +
                      "\" must be a string rational (e.g. \"1/2\") or an integer");
}

}  // namespace detail

inline JobSpec job_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("job must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* f : detail::job_fields) known = known || key == f;
        if (!known) throw DomainError("unknown field \"" + key + "\" in job");
        (void)value;
    }
    JobSpec spec;
    if (!j.contains("command") || !j.at("command").is_string())
        throw DomainError("job requires a string \"command\" field");
    spec.command = j.at("command").get<std::string>();

    const auto num = [&](const char* f) -> std::optional<double> {
        if (!j.contains(f)) return std::nullopt;
        if (!j.at(f).is_number()) throw DomainError(std::string("field \"") + f + "\" must be a number");
        return j.at(f).get<double>();
    };
    const auto integer = [&](const char* f) -> std::optional<std::int64_t> {
        if (!j.contains(f)) return std::nullopt;
        if (!j.at(f).is_number_integer())
            throw DomainError(std::string("field \"") + f + "\" must be an integer");
        return j.at(f).get<std::int64_t>();
    };
    const auto boolean = [&](const char* f) -> std::optional<bool> {
        if (!j.contains(f)) return std::nullopt;
        if (!j.at(f).is_boolean())
            throw DomainError(std::string("field \"") + f + "\" must be a boolean");
        return j.at(f).get<bool>();
    };

    if (j.contains("params")) {
        if (!j.at("params").is_array()) throw DomainError("field \"params\" must be an array");
        std::vector<double> ps;
        for (const auto& v : j.at("params")) {
            if (!v.is_number()) throw DomainError("entries of \"params\" must be numbers");
            ps.push_back(v.get<double>());
        }
        spec.params = std::move(ps);
    }
    spec.x = num("x");
    if (j.contains("identity")) {
        if (!j.at("identity").is_string()) throw DomainError("field \"identity\" must be a string");
        spec.identity = j.at("identity").get<std::string>();
    }
    spec.n = integer("n");
    for (auto [name, slot] : {std::pair{"a", &spec.a}, {"b", &spec.b}, {"c", &spec.c}})
        if (j.contains(name)) *slot = detail::rational_field(j.at(name), name);
    spec.random = integer("random");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer() || j.at("seed").get<std::int64_t>() < 0)
            throw DomainError("field \"seed\" must be a nonnegative integer");
        spec.seed = j.at("seed").get<std::uint64_t>();
    }
    spec.tol_rel = num("tol_rel");
    spec.tol_abs = num("tol_abs");
    spec.quad_error = num("quad_error");
    spec.max_terms = integer("max_terms");
    spec.auto_transform = boolean("auto_transform");
    spec.tail_correction = boolean("tail_correction");
    return spec;
}

inline json to_json(const JobSpec& s) {
    json j = json::object();
    j["command"] = s.command;
    if (s.identity) j["identity"] = *s.identity;
    if (s.params) j["params"] = *s.params;
    if (s.x) j["x"] = *s.x;
    if (s.n) j["n"] = *s.n;
    if (s.a) j["a"] = *s.a;
    if (s.b) j["b"] = *s.b;
    if (s.c) j["c"] = *s.c;
    if (s.random) j["random"] = *s.random;
    if (s.seed) j["seed"] = *s.seed;
    if (s.tol_rel) j["tol_rel"] = *s.tol_rel;
    if (s.tol_abs) j["tol_abs"] = *s.tol_abs;
    if (s.max_terms) j["max_terms"] = *s.max_terms;
    if (s.quad_error) j["quad_error"] = *s.quad_error;
    if (s.auto_transform) j["auto_transform"] = *s.auto_transform;
    if (s.tail_correction) j["tail_correction"] = *s.tail_correction;
    return j;
}

inline json to_json(const ResultRecord& r) {
    json j = json::object();
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    if (r.value) j["value"] = *r.value;
    if (r.exact) j["exact"] = *r.exact;
    j["diagnostics"] = r.diagnostics;
    if (r.pass) j["pass"] = *r.pass;
    if (r.error) j["error"] = *r.error;
    j["wall_ms"] = r.wall_ms;
    return j;
}

inline ResultRecord record_from_json(const json& j) {
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    if (j.contains("value")) r.value = j.at("value").get<double>();
    if (j.contains("exact")) r.exact = j.at("exact").get<std::string>();
    r.diagnostics = j.at("diagnostics");
    if (j.contains("pass")) r.pass = j.at("pass").get<bool>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

}  // namespace hyperg
