#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bicyclic {

class ConfigError : public std::invalid_argument {
public:
    ConfigError(const std::string & key, const std::string & message)
        : std::invalid_argument(message), key_(key)
    {
    }
    const std::string & key() const noexcept { return key_; }

private:
    std::string key_;
};

enum class AlphaMode {
    All,      // every nonempty (n, alpha) cell
    Theorem,  // only cells covered by the extremal claims
};

struct SweepConfig {
    int n_min = 10;
    int n_max = 12;
    AlphaMode alpha_mode = AlphaMode::All;
    int threads = 1;
    std::string out_dir = "sweep-out";
};

/// Largest n run without an explicit opt-in; 14 alone enumerates ~300k graphs.
inline constexpr int kDefaultMaxSweepOrder = 12;
inline constexpr int kMaxSweepOrder = 14;

/// Plain key=value lines; '#' starts a comment. Unknown keys and malformed
/// values throw ConfigError carrying the key.
SweepConfig parse_config(std::istream & in);
SweepConfig load_config(const std::string & path);
void validate(const SweepConfig & cfg, bool allow_large);

std::string to_string(AlphaMode m);

}  // namespace bicyclic
