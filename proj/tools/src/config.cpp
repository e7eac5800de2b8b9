#include "starkres_cli/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>

namespace stark::cli {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ConfigError("unknown key: " + (section.empty() ? key : section + "." + key));
    }
}

double require_number(const json& obj, const std::string& section, const std::string& key,
                      std::optional<double> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError("missing key: " + section + "." + key);
    }
    if (!obj[key].is_number())
        throw ConfigError("expected number at: " + section + "." + key);
    return obj[key].get<double>();
}

bool get_bool(const json& obj, const std::string& section, const std::string& key,
              bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean())
        throw ConfigError("expected boolean at: " + section + "." + key);
    return obj[key].get<bool>();
}

std::string get_string(const json& obj, const std::string& section, const std::string& key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_string())
        throw ConfigError("expected string at: " + section + "." + key);
    return obj[key].get<std::string>();
}

void parse_problem(const json& p, RunConfig& cfg) {
    reject_unknown_keys(p, "problem",
                        {"potential", "depth", "width", "center", "charge", "reg",
                         "half_width", "include_stark", "operator"});
    const std::string kind = get_string(p, "problem", "potential", "zero");
    if (kind == "zero") {
        cfg.potential = PotentialSpec::zero();
    } else if (kind == "gaussian_well") {
        cfg.potential = PotentialSpec::gaussian_well(
            require_number(p, "problem", "depth"), require_number(p, "problem", "width"),
            require_number(p, "problem", "center", 0.0));
    } else if (kind == "soft_coulomb") {
        cfg.potential = PotentialSpec::soft_coulomb(
            require_number(p, "problem", "charge"), require_number(p, "problem", "reg"),
            require_number(p, "problem", "center", 0.0));
    } else if (kind == "square_well") {
        cfg.potential = PotentialSpec::square_well(
            require_number(p, "problem", "depth"),
            require_number(p, "problem", "half_width"));
    } else {
        throw ConfigError("unknown potential kind at: problem.potential");
    }
    cfg.include_stark = get_bool(p, "problem", "include_stark", true);
    const std::string op = get_string(p, "problem", "operator", "cap");
    if (op == "cap")
        cfg.op = OperatorKind::cap;
    else if (op == "distorted")
        cfg.op = OperatorKind::distorted;
    else if (op == "cap_distorted")
        cfg.op = OperatorKind::cap_distorted;
    else
        throw ConfigError("unknown operator at: problem.operator");
}

void parse_grid(const json& g, RunConfig& cfg) {
    reject_unknown_keys(g, "grid", {"a", "b", "m", "fd_order"});
    const double a = require_number(g, "grid", "a", cfg.grid.a);
    const double b = require_number(g, "grid", "b", cfg.grid.b);
    const double m = require_number(g, "grid", "m", cfg.grid.m);
    if (!(a < b)) throw ConfigError("invalid value at: grid.a (requires a < b)");
    if (m < 3 || m != std::floor(m))
        throw ConfigError("invalid value at: grid.m (integer >= 3 required)");
    cfg.grid = Grid1D(a, b, static_cast<int>(m));
    const double order = require_number(g, "grid", "fd_order", 2.0);
    if (order != 2.0 && order != 4.0)
        throw ConfigError("invalid value at: grid.fd_order (2 or 4)");
    cfg.fd_order = static_cast<int>(order);
}

void parse_method(const json& m, RunConfig& cfg) {
    reject_unknown_keys(m, "method", {"type", "k", "tol"});
    const std::string type = get_string(m, "method", "type", "dense");
    if (type == "dense")
        cfg.use_dense = true;
    else if (type == "arnoldi")
        cfg.use_dense = false;
    else
        throw ConfigError("unknown solver at: method.type");
    const double k = require_number(m, "method", "k", cfg.arnoldi_k);
    if (k < 1 || k != std::floor(k))
        throw ConfigError("invalid value at: method.k (positive integer required)");
    cfg.arnoldi_k = static_cast<int>(k);
    cfg.tol = require_number(m, "method", "tol", cfg.tol);
    if (cfg.tol <= 0.0) throw ConfigError("invalid value at: method.tol (must be > 0)");
}

Window parse_window(const json& w) {
    reject_unknown_keys(w, "cap.window", {"re_min", "re_max", "im_min", "im_max"});
    Window window{require_number(w, "cap.window", "re_min"),
                  require_number(w, "cap.window", "re_max"),
                  require_number(w, "cap.window", "im_min"),
                  require_number(w, "cap.window", "im_max")};
    try {
        window.validate();
    } catch (const std::invalid_argument&) {
        throw ConfigError("invalid value at: cap.window (requires re_min < re_max, im_min < im_max)");
    }
    return window;
}

void parse_cap(const json& c, RunConfig& cfg) {
    reject_unknown_keys(c, "cap",
                        {"eps", "schedule", "window", "speed_threshold", "accept_boundary"});
    cfg.eps = require_number(c, "cap", "eps", cfg.eps);
    if (cfg.eps < 0.0) throw ConfigError("invalid value at: cap.eps (must be >= 0)");
    if (c.contains("schedule")) {
        const json& s = c["schedule"];
        reject_unknown_keys(s, "cap.schedule", {"eps0", "ratio", "count"});
        cfg.schedule.eps0 = require_number(s, "cap.schedule", "eps0", cfg.schedule.eps0);
        cfg.schedule.ratio = require_number(s, "cap.schedule", "ratio", cfg.schedule.ratio);
        const double count = require_number(s, "cap.schedule", "count", cfg.schedule.count);
        if (count != std::floor(count))
            throw ConfigError("invalid value at: cap.schedule.count (integer required)");
        cfg.schedule.count = static_cast<int>(count);
        if (cfg.schedule.eps0 <= 0.0)
            throw ConfigError("invalid value at: cap.schedule.eps0 (must be > 0)");
        if (cfg.schedule.ratio <= 0.0 || cfg.schedule.ratio >= 1.0)
            throw ConfigError("invalid value at: cap.schedule.ratio (must be in (0,1))");
        if (cfg.schedule.count < 3)
            throw ConfigError("invalid value at: cap.schedule.count (must be >= 3)");
    }
    if (c.contains("window")) cfg.window = parse_window(c["window"]);
    cfg.speed_threshold = require_number(c, "cap", "speed_threshold", cfg.speed_threshold);
    if (cfg.speed_threshold <= 0.0)
        throw ConfigError("invalid value at: cap.speed_threshold (must be > 0)");
    cfg.accept_boundary = get_bool(c, "cap", "accept_boundary", cfg.accept_boundary);
}

void parse_distortion(const json& d, RunConfig& cfg) {
    reject_unknown_keys(d, "distortion", {"K", "rho", "mollifier_radius", "delta"});
    cfg.cone.K = require_number(d, "distortion", "K", cfg.cone.K);
    cfg.cone.rho = require_number(d, "distortion", "rho", cfg.cone.rho);
    cfg.cone.mollifier_radius =
        require_number(d, "distortion", "mollifier_radius", cfg.cone.mollifier_radius);
    try {
        cfg.cone.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid value at: distortion (") + e.what() + ")");
    }
    cfg.delta = require_number(d, "distortion", "delta", cfg.delta);
    if (cfg.delta <= 0.0)
        throw ConfigError("invalid value at: distortion.delta (must be > 0)");
}

void parse_output(const json& o, RunConfig& cfg) {
    reject_unknown_keys(o, "output", {"prefix"});
    cfg.prefix = get_string(o, "output", "prefix", cfg.prefix);
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig parse_config_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config root must be an object");
    reject_unknown_keys(doc, "", {"problem", "grid", "method", "cap", "distortion", "output"});
    RunConfig cfg;
    if (doc.contains("problem")) parse_problem(doc["problem"], cfg);
    if (doc.contains("grid")) parse_grid(doc["grid"], cfg);
    if (doc.contains("method")) parse_method(doc["method"], cfg);
    if (doc.contains("cap")) parse_cap(doc["cap"], cfg);
    if (doc.contains("distortion")) parse_distortion(doc["distortion"], cfg);
    if (doc.contains("output")) parse_output(doc["output"], cfg);
    cfg.raw = doc;
    cfg.hash = fnv1a_hex(doc.dump());
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config_json(doc);
}

}  // namespace stark::cli
