#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace gtvtool {

// Content-addressed result cache for single-spec commands. Files are named by
// the FNV-1a hash of a canonical request string; the stored document embeds
// the request so a hash collision can never replay the wrong result. Writes
// go through a temp file + rename, so concurrent runs only ever see complete
// entries.
struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = true;
};

// ${XDG_CACHE_HOME:-$HOME/.cache}/gtv, or the system temp dir as last resort.
std::filesystem::path default_cache_dir();

std::uint64_t fnv1a64(std::string_view text);

// Returns the stored output for this exact request, if present and valid.
std::optional<std::string> cache_lookup(const CacheConfig& config, const std::string& request);

// Best-effort store; I/O failures are swallowed (the cache is an optimization,
// never a correctness dependency).
void cache_store(const CacheConfig& config, const std::string& request,
                 const std::string& output);

}  // namespace gtvtool
