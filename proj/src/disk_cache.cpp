#include "alder/disk_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

namespace alder
{

namespace
{

using nlohmann::ordered_json;

ordered_json read_manifest(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        return ordered_json{{"version", DiskCountCache::format_version}, {"entries", ordered_json::object()}};
    ordered_json m;
    try {
        in >> m;
    } catch (const ordered_json::exception &e) {
        throw InvariantViolation("cache manifest " + path.string() + " is corrupt: " + e.what() +
                                 "; delete the cache directory to rebuild it");
    }
    if (m.value("version", "") != DiskCountCache::format_version)
        throw InvariantViolation("cache manifest " + path.string() + " has format version " +
                                 m.value("version", "?") + ", expected " + DiskCountCache::format_version +
                                 "; delete the cache directory to rebuild it");
    return m;
}

void write_atomically(const std::filesystem::path &path, const std::string &content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

DiskCountCache::DiskCountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DiskCountCache::resolve_dir(const std::string &flag_value)
{
    if (!flag_value.empty())
        return flag_value;
    if (const char *env = std::getenv(env_var); env && *env)
        return env;
    return default_dir;
}

std::string DiskCountCache::key(const std::string &descriptor)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(descriptor.data(), descriptor.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

std::optional<std::vector<Count>> DiskCountCache::load(const CountingFunction &fn, Part n_max) const
{
    const auto manifest = read_manifest(dir_ / "manifest.json");
    const auto &entries = manifest["entries"];
    const std::string desc = fn.descriptor();
    if (!entries.contains(desc) || entries[desc]["n_max"].get<Part>() < n_max)
        return std::nullopt;
    std::ifstream in(dir_ / entries[desc]["file"].get<std::string>());
    if (!in)
        return std::nullopt;
    std::vector<Count> out;
    std::string line;
    while (static_cast<Part>(out.size()) <= n_max && std::getline(in, line))
        out.push_back(from_decimal(line));
    if (static_cast<Part>(out.size()) <= n_max)
        throw InvariantViolation("cache file for " + desc + " is truncated; delete " + dir_.string() +
                                 " to rebuild it");
    return out;
}

void DiskCountCache::store(const CountingFunction &fn, const std::vector<Count> &table)
{
    if (table.empty())
        return;
    std::filesystem::create_directories(dir_);
    const auto manifest_path = dir_ / "manifest.json";
    auto manifest = read_manifest(manifest_path);
    const std::string desc = fn.descriptor();
    const Part n_max = static_cast<Part>(table.size()) - 1;
    auto &entries = manifest["entries"];
    if (entries.contains(desc) && entries[desc]["n_max"].get<Part>() >= n_max)
        return;

    const std::string file = key(desc) + ".counts";
    std::ostringstream body;
    for (const auto &c : table)
        body << to_decimal(c) << '\n';
    write_atomically(dir_ / file, body.str());

    entries[desc] = ordered_json{{"file", file}, {"n_max", n_max}};
    // sorted keys keep the manifest byte-stable regardless of insertion order
    nlohmann::json sorted = manifest;
    write_atomically(manifest_path, sorted.dump(2) + "\n");
}

std::vector<Count> DiskCountCache::get(const CountingFunction &fn, Part n_max, bool *hit)
{
    if (auto cached = load(fn, n_max)) {
        if (hit)
            *hit = true;
        return *cached;
    }
    if (hit)
        *hit = false;
    auto table = counts(fn, n_max);
    store(fn, table);
    return table;
}

} // namespace alder
