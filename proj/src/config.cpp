#include "bicyclic/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace bicyclic {

namespace {

std::string trim(const std::string & s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string & key, const std::string & value)
{
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError(key, "invalid integer for " + key + ": '" + value + "'");
    return out;
}

}  // namespace

std::string to_string(AlphaMode m)
{
    return m == AlphaMode::All ? "all" : "theorem";
}

SweepConfig parse_config(std::istream & in)
{
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "n_min")
            cfg.n_min = parse_int(key, value);
        else if (key == "n_max")
            cfg.n_max = parse_int(key, value);
        else if (key == "threads")
            cfg.threads = parse_int(key, value);
        else if (key == "out_dir")
            cfg.out_dir = value;
        else if (key == "alpha_mode") {
            if (value == "all")
                cfg.alpha_mode = AlphaMode::All;
            else if (value == "theorem")
                cfg.alpha_mode = AlphaMode::Theorem;
            else
                throw ConfigError(key, "alpha_mode must be 'all' or 'theorem', got '" + value + "'");
        }
        else
            throw ConfigError(key, "unknown config key: " + key);
    }
    return cfg;
}

SweepConfig load_config(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path);
    return parse_config(in);
}

void validate(const SweepConfig & cfg, bool allow_large)
{
    if (cfg.n_min < 4)
        throw ConfigError("n_min", "n_min must be at least 4");
    if (cfg.n_max < cfg.n_min)
        throw ConfigError("n_max", "n_max must not be below n_min");
    if (cfg.n_max > kMaxSweepOrder)
        throw ConfigError("n_max", "n_max must be at most " + std::to_string(kMaxSweepOrder));
    if (cfg.n_max > kDefaultMaxSweepOrder && !allow_large)
        throw ConfigError("n_max", "n_max above " + std::to_string(kDefaultMaxSweepOrder)
                                       + " needs the --large flag");
    if (cfg.threads < 1)
        throw ConfigError("threads", "threads must be positive");
    if (cfg.out_dir.empty())
        throw ConfigError("out_dir", "out_dir must not be empty");
}

}  // namespace bicyclic
