#include "tvat/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace tvat {

namespace {

using nlohmann::json;

json config_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    if (!cfg.suite.empty()) j["suite"] = cfg.suite;
    if (!cfg.model.empty()) j["model"] = cfg.model;
    if (cfg.n >= 0) j["n"] = cfg.n;
    if (cfg.has_k) j["k"] = cfg.k;
    if (cfg.n_max >= 0) j["n_max"] = cfg.n_max;
    if (cfg.strict_conjecture) j["strict_conjecture"] = true;
    return j;
}

std::string round_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string csv_value(const std::string& s) {
    std::string out = s;
    std::replace(out.begin(), out.end(), ',', ';');
    return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

}  // namespace

std::string checks_to_json(const RunConfig& cfg,
                           const std::vector<CheckResult>& results) {
    json j;
    j["version"] = kVersion;
    j["config"] = config_json(cfg);
    j["records"] = json::array();
    long pass = 0, fail = 0, skip = 0;
    for (const auto& r : results) {
        json rec;
        rec["check"] = r.check;
        rec["params"] = params_string(r);
        rec["status"] = status_name(r.status);
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["ms"] = std::stod(round_ms(r.ms));
        if (r.conjecture) rec["label"] = "conjecture-consistency";
        j["records"].push_back(std::move(rec));
        if (r.status == CheckStatus::pass) ++pass;
        else if (r.status == CheckStatus::fail) ++fail;
        else ++skip;
    }
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
    return j.dump(2) + "\n";
}

std::string checks_to_csv(const std::vector<CheckResult>& results) {
    std::string out = "model,n,k,value,status\n";
    for (const auto& r : results) {
        out += csv_value(r.model.empty() ? r.check : r.model);
        out += ',';
        if (r.n >= 0) out += std::to_string(r.n);
        out += ',';
        if (r.k >= 0) out += std::to_string(r.k);
        out += ',';
        out += csv_value(r.lhs);
        out += ',';
        out += status_name(r.status);
        out += '\n';
    }
    return out;
}

std::string checks_to_text(const std::vector<CheckResult>& results) {
    std::size_t cw = 0, pw = 0;
    std::vector<std::string> params(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        params[i] = params_string(results[i]);
        cw = std::max(cw, results[i].check.size());
        pw = std::max(pw, params[i].size());
    }
    std::ostringstream os;
    long pass = 0, fail = 0, skip = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        std::string line = status_name(r.status);
        line.resize(5, ' ');
        line += " " + r.check + std::string(cw - r.check.size(), ' ');
        line += "  " + params[i] + std::string(pw - params[i].size(), ' ');
        os << line << "  " << r.lhs;
        if (!r.rhs.empty() && r.rhs != r.lhs) os << " | " << r.rhs;
        os << "  (" << round_ms(r.ms) << " ms)";
        if (r.conjecture) os << " [conjecture-consistency]";
        os << "\n";
        if (r.status == CheckStatus::pass) ++pass;
        else if (r.status == CheckStatus::fail) ++fail;
        else ++skip;
    }
    os << "summary: pass=" << pass << " fail=" << fail << " skip=" << skip << "\n";
    return os.str();
}

std::string values_to_json(const RunConfig& cfg,
                           const std::vector<ValueRecord>& records) {
    json j;
    j["version"] = kVersion;
    j["config"] = config_json(cfg);
    j["records"] = json::array();
    for (const auto& r : records) {
        json rec;
        rec["kind"] = r.kind;
        if (!r.model.empty()) rec["model"] = r.model;
        if (r.n >= 0) rec["n"] = r.n;
        if (r.k >= 0) rec["k"] = r.k;
        rec["values"] = r.values;
        if (!r.extra.empty()) rec["extra"] = r.extra;
        rec["ms"] = std::stod(round_ms(r.ms));
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

std::string values_to_csv(const std::vector<ValueRecord>& records) {
    std::string out = "model,n,k,value\n";
    for (const auto& r : records) {
        out += csv_value(r.model.empty() ? r.kind : r.model);
        out += ',';
        if (r.n >= 0) out += std::to_string(r.n);
        out += ',';
        if (r.k >= 0) out += std::to_string(r.k);
        out += ',';
        out += csv_value(join(r.values, ";"));
        out += '\n';
    }
    return out;
}

std::string values_to_text(const std::vector<ValueRecord>& records) {
    std::ostringstream os;
    for (const auto& r : records) {
        os << r.kind;
        if (!r.model.empty()) os << " " << r.model;
        if (r.n >= 0) os << " n=" << r.n;
        if (r.k >= 0) os << " k=" << r.k;
        if (!r.extra.empty()) os << " " << r.extra;
        os << ": " << join(r.values, " ") << "\n";
    }
    return os.str();
}

std::string boundary_to_json(const BoundarySpec& spec) {
    json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["stubs"] = json::array();
    for (const auto& s : spec.stubs) {
        j["stubs"].push_back({{"side", s.side},
                              {"index", s.index},
                              {"x", s.x},
                              {"y", s.y},
                              {"occupied", s.occupied}});
    }
    return j.dump(2) + "\n";
}

BoundarySpec boundary_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("boundary JSON: ") + e.what());
    }
    BoundarySpec spec;
    try {
        spec.n = j.at("n").get<long>();
        spec.k = j.at("k").get<long>();
        for (const auto& js : j.at("stubs")) {
            BoundaryStub s;
            s.side = js.at("side").get<std::string>();
            s.index = js.at("index").get<long>();
            s.x = js.at("x").get<long>();
            s.y = js.at("y").get<long>();
            s.occupied = js.at("occupied").get<bool>();
            spec.stubs.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw config_error(std::string("boundary JSON shape: ") + e.what());
    }
    return spec;
}

}  // namespace tvat
