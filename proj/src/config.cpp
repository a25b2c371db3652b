#include "nichols/config.hpp"

#include <fstream>
#include <sstream>

namespace nichols {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw engine_error(origin + ":" + std::to_string(line) + ": " + msg);
}

// "rep: a; chi: a = -1, a^2 = 1"
RunConfig::OrbitSpec parse_orbit(const std::string& origin, int lineno, const std::string& value) {
    RunConfig::OrbitSpec spec;
    for (const auto& clause : split(value, ';')) {
        auto colon = clause.find(':');
        if (colon == std::string::npos)
            fail(origin, lineno, "orbit clause needs 'rep:' or 'chi:'");
        std::string key = trim(clause.substr(0, colon));
        std::string rest = trim(clause.substr(colon + 1));
        if (key == "rep") {
            spec.rep = rest;
        } else if (key == "chi") {
            for (const auto& pair : split(rest, ',')) {
                auto eq = pair.find('=');
                if (eq == std::string::npos)
                    fail(origin, lineno, "chi clause needs 'element = value'");
                spec.chi.push_back({trim(pair.substr(0, eq)), trim(pair.substr(eq + 1))});
            }
        } else {
            fail(origin, lineno, "unknown orbit clause '" + key + "'");
        }
    }
    if (spec.rep.empty())
        fail(origin, lineno, "orbit without rep");
    if (spec.chi.empty())
        fail(origin, lineno, "orbit without chi values");
    return spec;
}

// "name: perm: (1 2); scalars: 1, -1"
RunConfig::OperatorSpec parse_operator(const std::string& origin, int lineno,
                                       const std::string& value) {
    RunConfig::OperatorSpec spec;
    auto first = value.find(':');
    if (first == std::string::npos)
        fail(origin, lineno, "operator needs 'name: perm: ...'");
    spec.name = trim(value.substr(0, first));
    for (const auto& clause : split(value.substr(first + 1), ';')) {
        auto colon = clause.find(':');
        if (colon == std::string::npos)
            fail(origin, lineno, "operator clause needs 'perm:' or 'scalars:'");
        std::string key = trim(clause.substr(0, colon));
        std::string rest = trim(clause.substr(colon + 1));
        if (key == "perm")
            spec.perm = rest;
        else if (key == "scalars")
            for (const auto& s : split(rest, ','))
                spec.scalars.push_back(trim(s));
        else
            fail(origin, lineno, "unknown operator clause '" + key + "'");
    }
    if (spec.perm.empty())
        fail(origin, lineno, "operator without perm");
    return spec;
}

}  // namespace

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream is(path);
    check(is.good(), "cannot open config " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    return parse_text(buf.str(), path);
}

RunConfig RunConfig::parse_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    bool saw_field = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(origin, lineno, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section == "field") {
            saw_field = true;
            if (key == "characteristic")
                cfg.field.characteristic = (unsigned)std::stoul(value);
            else if (key == "cyclotomic_order")
                cfg.field.cyclotomic_order = (unsigned)std::stoul(value);
            else
                fail(origin, lineno, "unknown field key '" + key + "'");
        } else if (section == "group") {
            if (key == "catalog")
                cfg.group_catalog = value;
            else
                fail(origin, lineno, "unknown group key '" + key + "'");
        } else if (section == "orbits") {
            if (key == "orbit")
                cfg.orbits.push_back(parse_orbit(origin, lineno, value));
            else
                fail(origin, lineno, "unknown orbits key '" + key + "'");
        } else if (section == "diagonal") {
            if (key == "matrix") {
                for (const auto& row : split(value, ';')) {
                    std::vector<std::string> entries;
                    for (const auto& s : split(row, ','))
                        entries.push_back(trim(s));
                    cfg.diagonal_matrix.push_back(std::move(entries));
                }
            } else {
                fail(origin, lineno, "unknown diagonal key '" + key + "'");
            }
        } else if (section == "operators") {
            if (key == "operator")
                cfg.operators.push_back(parse_operator(origin, lineno, value));
            else
                fail(origin, lineno, "unknown operators key '" + key + "'");
        } else if (section == "subnichols") {
            if (key == "generators")
                for (const auto& s : split(value, ','))
                    cfg.subgroup_generators.push_back(trim(s));
            else if (key == "xi_element")
                cfg.xi_element = value;
            else
                fail(origin, lineno, "unknown subnichols key '" + key + "'");
        } else if (section == "run") {
            if (key == "max_degree")
                cfg.max_degree = std::stoi(value);
            else if (key == "traces")
                cfg.traces = value;
            else if (key == "factor_max_n")
                cfg.factor_max_count = (unsigned)std::stoul(value);
            else if (key == "factor_max_k")
                cfg.factor_max_power = (unsigned)std::stoul(value);
            else if (key == "duality_shortcut")
                cfg.duality_shortcut = value == "on" || value == "true" || value == "1";
            else if (key == "top_degree")
                cfg.top_degree = std::stoi(value);
            else if (key == "verify_level")
                cfg.verify_level = value;
            else if (key == "golden")
                cfg.golden = value;
            else
                fail(origin, lineno, "unknown run key '" + key + "'");
        } else if (section.empty()) {
            fail(origin, lineno, "key outside any section");
        } else {
            fail(origin, lineno, "unknown section '" + section + "'");
        }
    }
    if (!saw_field)
        fail(origin, 0, "missing [field] section");
    bool have_group = !cfg.group_catalog.empty() && !cfg.orbits.empty();
    bool have_diag = !cfg.diagonal_matrix.empty();
    if (have_group == have_diag)
        fail(origin, 0, "config needs either [group]+[orbits] or [diagonal], not both");
    if (cfg.duality_shortcut && cfg.top_degree < 0)
        fail(origin, 0, "duality_shortcut requires top_degree");
    if (cfg.verify_level != "fast" && cfg.verify_level != "full")
        fail(origin, 0, "verify_level must be fast or full");
    if (cfg.traces != "classes" && cfg.traces != "identity" && cfg.traces != "none")
        fail(origin, 0, "traces must be classes, identity or none");
    return cfg;
}

}  // namespace nichols
