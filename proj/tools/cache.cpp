#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "json.hpp"

namespace gtvtool {

namespace {

std::filesystem::path entry_path(const CacheConfig& config, const std::string& request) {
    std::ostringstream name;
    name << std::hex << fnv1a64(request);
    return config.dir / (name.str() + ".json");
}

}  // namespace

std::filesystem::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "gtv";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "gtv";
    }
    return std::filesystem::temp_directory_path() / "gtv-cache";
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::optional<std::string> cache_lookup(const CacheConfig& config, const std::string& request) {
    if (!config.enabled) return std::nullopt;
    std::ifstream in(entry_path(config, request));
    if (!in) return std::nullopt;
    try {
        const auto doc = nlohmann::json::parse(in);
        if (doc.at("request").get<std::string>() != request) return std::nullopt;
        return doc.at("output").get<std::string>();
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // damaged entry: treat as a miss, it gets rewritten
    }
}

void cache_store(const CacheConfig& config, const std::string& request,
                 const std::string& output) {
    if (!config.enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(config.dir, ec);
    if (ec) return;

    const auto path = entry_path(config, request);
    auto tmp = path;
    tmp += ".tmp." + std::to_string(static_cast<unsigned long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << nlohmann::json{{"request", request}, {"output", output}}.dump(2) << '\n';
        if (!out.good()) {
            out.close();
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace gtvtool
