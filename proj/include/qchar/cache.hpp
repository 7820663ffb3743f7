#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace qchar {

/// Content-addressed store of JSON payloads. The key of a request is the
/// SHA-256 of its canonical JSON dump.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// $QCHAR_CACHE, else $XDG_CACHE_HOME/qchar-lab, else ~/.cache/qchar-lab.
    static std::filesystem::path default_dir();
    static std::string key(const nlohmann::json& request);

    const std::filesystem::path& dir() const { return dir_; }

    /// Missing, unreadable or version-mismatched entries are misses.
    std::optional<nlohmann::json> get(const nlohmann::json& request) const;
    /// Writes to a temporary file in the cache directory, then renames it.
    void put(const nlohmann::json& request, const nlohmann::json& payload) const;

private:
    std::filesystem::path dir_;
};

}  // namespace qchar
