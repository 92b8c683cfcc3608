#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "alder/count.hpp"
#include "alder/function.hpp"

namespace alder
{

/// Content-addressed store of count tables on disk.
///
/// Each table lives in `<sha256(descriptor)>.counts` as one decimal count per
/// line for n = 0..n_max. `manifest.json` maps descriptors to their files.
class DiskCountCache
{
  public:
    static constexpr const char *format_version = "1";
    static constexpr const char *env_var = "PARTCHECK_CACHE_DIR";
    static constexpr const char *default_dir = ".partition-cache";

    explicit DiskCountCache(std::filesystem::path dir);

    /// Flag value if given, then the environment override, then the default.
    static std::filesystem::path resolve_dir(const std::string &flag_value);

    /// Lower-case hex SHA-256 of the descriptor.
    static std::string key(const std::string &descriptor);

    const std::filesystem::path &dir() const { return dir_; }

    /// Counts 0..n_max if a stored table covers them.
    std::optional<std::vector<Count>> load(const CountingFunction &fn, Part n_max) const;

    /// Stores the table unless an equal or longer one is already present.
    void store(const CountingFunction &fn, const std::vector<Count> &table);

    /// Cached counts, computing and storing on a miss.
    std::vector<Count> get(const CountingFunction &fn, Part n_max, bool *hit = nullptr);

  private:
    std::filesystem::path dir_;
};

} // namespace alder
