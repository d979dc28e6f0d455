#pragma once

// On-disk cache of root system documents (see json_io.hpp for the format).
// The directory comes from --cache-dir, else $LOOPBLOCKS_CACHE_DIR, else
// $XDG_CACHE_HOME/loopblocks, else $HOME/.cache/loopblocks. The cache is
// advisory: unreadable, stale or missing entries trigger recomputation, and
// write failures are ignored.

#include <filesystem>
#include <optional>

#include "loopblocks/root_system.hpp"

namespace loopblocks {

inline constexpr const char* kCacheDirEnv = "LOOPBLOCKS_CACHE_DIR";

struct CacheOptions {
    bool enabled = true;
    std::optional<std::filesystem::path> directory; // overrides the environment
};

std::optional<std::filesystem::path> resolve_cache_dir(const CacheOptions& options);

std::filesystem::path cache_file(const std::filesystem::path& dir, const SimpleType& type);

/// Loads from the cache when a valid entry exists, otherwise builds and stores.
RootSystem load_root_system(const SimpleType& type, const CacheOptions& options = {});

} // namespace loopblocks
