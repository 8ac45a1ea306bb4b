#include "dumont/config.hpp"

#include <fstream>
#include <stdexcept>

namespace dumont {

void RunConfig::validate() const {
    if (tol <= 0) throw std::invalid_argument("tolerance must be > 0");
    if (rk_steps < 64) throw std::invalid_argument("rk_steps must be >= 64");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (format != "json" && format != "csv" && format != "pretty")
        throw std::invalid_argument("format must be json, csv or pretty");
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto as_int = [&]() { return std::stoi(value); };
    if (key == "sn_max") cfg.sn_max = as_int();
    else if (key == "bn_max") cfg.bn_max = as_int();
    else if (key == "matching_max") cfg.matching_max = as_int();
    else if (key == "triangle_nmax") cfg.triangle_nmax = as_int();
    else if (key == "egf_order") cfg.egf_order = as_int();
    else if (key == "samples") cfg.samples = as_int();
    else if (key == "tol") cfg.tol = std::stod(value);
    else if (key == "rk_steps") cfg.rk_steps = as_int();
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "case_timeout_seconds") cfg.case_timeout_seconds = std::stod(value);
    else if (key == "format") cfg.format = value;
    else throw std::invalid_argument("unknown config key: " + key);
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r\n"));
            s.erase(s.find_last_not_of(" \t\r\n") + 1);
            return s;
        };
        apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

}  // namespace dumont
