#include "loopblocks/root_system_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

#include "loopblocks/json_io.hpp"

namespace loopblocks {

namespace fs = std::filesystem;

std::optional<fs::path> resolve_cache_dir(const CacheOptions& options) {
    if (!options.enabled) return std::nullopt;
    if (options.directory) return options.directory;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "loopblocks";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "loopblocks";
    return std::nullopt;
}

fs::path cache_file(const fs::path& dir, const SimpleType& type) {
    return dir / ("root_system_" + to_string(type) + ".v" + std::to_string(kRootSystemFormatVersion) + ".json");
}

namespace {

std::optional<RootSystem> try_load(const fs::path& file, const SimpleType& type) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        Json doc = Json::parse(in);
        RootSystem rs = root_system_from_json(doc);
        if (rs.type != type) return std::nullopt;
        return rs;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void try_store(const fs::path& dir, const fs::path& file, const RootSystem& rs) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << to_json(rs).dump(1) << '\n';
        if (!out) return;
    }
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
}

} // namespace

RootSystem load_root_system(const SimpleType& type, const CacheOptions& options) {
    auto dir = resolve_cache_dir(options);
    if (!dir) return build_root_system(type);
    fs::path file = cache_file(*dir, type);
    if (auto cached = try_load(file, type)) return std::move(*cached);
    RootSystem rs = build_root_system(type);
    try_store(*dir, file, rs);
    return rs;
}

} // namespace loopblocks
