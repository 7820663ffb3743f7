#include "qchar/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

#include "qchar/io.hpp"

namespace qchar {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::default_dir() {
    if (const char* p = std::getenv("QCHAR_CACHE"); p && *p) return p;
    if (const char* p = std::getenv("XDG_CACHE_HOME"); p && *p) return fs::path(p) / "qchar-lab";
    if (const char* p = std::getenv("HOME"); p && *p) return fs::path(p) / ".cache" / "qchar-lab";
    return fs::temp_directory_path() / "qchar-lab";
}

std::string ResultCache::key(const nlohmann::json& request) {
    const std::string text = request.dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 0xf];
    }
    return out;
}

std::optional<nlohmann::json> ResultCache::get(const nlohmann::json& request) const {
    std::ifstream in(dir_ / (key(request) + ".json"));
    if (!in) return std::nullopt;
    try {
        nlohmann::json entry = nlohmann::json::parse(in);
        if (entry.value("schema_version", 0) != io::kSchemaVersion) return std::nullopt;
        if (entry.at("request") != request) return std::nullopt;
        return entry.at("payload");
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void ResultCache::put(const nlohmann::json& request, const nlohmann::json& payload) const {
    fs::create_directories(dir_);
    const std::string k = key(request);
    std::random_device rd;
    const fs::path tmp = dir_ / (k + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        nlohmann::json entry = {{"schema_version", io::kSchemaVersion}, {"request", request}, {"payload", payload}};
        out << entry.dump();
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, dir_ / (k + ".json"));
}

}  // namespace qchar
