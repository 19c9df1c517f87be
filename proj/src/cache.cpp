#include "mockmod/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <unistd.h>

namespace mockmod {

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                        c == '.' || c == '=';
        out.push_back(ok ? c : '_');
    }
    return out;
}

} // namespace

std::string cache_file_name(const CacheKey& key,
                            const std::string& ring_desc) {
    return sanitize(key.form_id) + "__" + sanitize(key.params) + "__" +
           sanitize(ring_desc) + ".qs";
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace detail {

std::string read_cache_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open cache file " + path);
    std::ostringstream body;
    body << in.rdbuf();
    if (in.bad()) throw CacheError("cannot read cache file " + path);
    return body.str();
}

void write_cache_text(const std::string& dir, const std::string& file_name,
                      const std::string& body) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw CacheError("cannot create cache directory " + dir + ": " +
                         ec.message());
    const std::string final_path = dir + "/" + file_name;
    const std::string tmp_path =
        dir + "/.tmp." + file_name + "." + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot open cache file for writing: " +
                                   tmp_path);
        out << body;
        out.flush();
        if (!out) {
            std::remove(tmp_path.c_str());
            throw CacheError("failed writing cache file " + tmp_path);
        }
    }
    if (std::rename(tmp_path.c_str(), final_path.c_str()) != 0) {
        std::remove(tmp_path.c_str());
        throw CacheError("failed to move cache file into place at " +
                         final_path);
    }
}

bool cache_file_exists(const std::string& dir, const std::string& file_name) {
    std::error_code ec;
    return std::filesystem::exists(dir + "/" + file_name, ec);
}

} // namespace detail

} // namespace mockmod
