#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mockmod/series.hpp"

namespace mockmod {

// Plain-text series cache.  File layout:
//
//   MOCKMODQ v1
//   form=<id> params=<canonical> ring=<descriptor> minexp=<lo> prec=<hi>
//   <exponent> <encoded coefficient>     (one line per exponent, in order)
//   checksum=<16 hex digits>             (FNV-1a 64 of everything above)
//
// Writes go through a temp file + rename so a crash never leaves a torn
// cache entry.  Reads validate header, window, line count and checksum;
// any mismatch raises CacheError (callers treat that as a miss and
// recompute).

struct CacheKey {
    std::string form_id; // e.g. "r-p"
    std::string params;  // canonical "p=3;terms=8721" (sorted, ';'-joined)
};

std::string cache_file_name(const CacheKey& key, const std::string& ring_desc);
std::uint64_t fnv1a64(const std::string& text);

namespace detail {
std::string read_cache_text(const std::string& path);
void write_cache_text(const std::string& dir, const std::string& file_name,
                      const std::string& body);
bool cache_file_exists(const std::string& dir, const std::string& file_name);
} // namespace detail

template <class Ring>
void cache_store(const std::string& dir, const CacheKey& key,
                 const Series<Ring>& s) {
    std::ostringstream body;
    body << "MOCKMODQ v1\n";
    body << "form=" << key.form_id << " params=" << key.params
         << " ring=" << s.ring().descriptor() << " minexp=" << s.min_exp()
         << " prec=" << s.prec_bound() << "\n";
    for (long n = s.min_exp(); n < s.prec_bound(); ++n)
        body << n << " " << s.ring().encode(s.at(n)) << "\n";
    std::string text = body.str();
    std::ostringstream line;
    line << "checksum=" << std::hex << std::setw(16) << std::setfill('0')
         << fnv1a64(text) << "\n";
    text += line.str();
    detail::write_cache_text(dir, cache_file_name(key, s.ring().descriptor()),
                             text);
}

// Loads the cached window for this key/ring, if present and intact.
// Returns nullopt for "no entry"; throws CacheError for a damaged entry.
template <class Ring>
std::optional<Series<Ring>> cache_load(const std::string& dir,
                                       const CacheKey& key, const Ring& ring) {
    const std::string name = cache_file_name(key, ring.descriptor());
    if (!detail::cache_file_exists(dir, name)) return std::nullopt;
    const std::string text = detail::read_cache_text(dir + "/" + name);

    const auto checksum_pos = text.rfind("checksum=");
    if (checksum_pos == std::string::npos || checksum_pos == 0)
        throw CacheError("cache entry " + name + " has no checksum line");
    const std::string payload = text.substr(0, checksum_pos);
    std::uint64_t stated = 0;
    {
        std::istringstream cs(text.substr(checksum_pos + 9));
        cs >> std::hex >> stated;
        if (!cs) throw CacheError("cache entry " + name +
                                  " has an unreadable checksum");
    }
    if (stated != fnv1a64(payload))
        throw CacheError("cache entry " + name + " fails its checksum");

    std::istringstream in(payload);
    std::string header;
    std::getline(in, header);
    if (header != "MOCKMODQ v1")
        throw CacheError("cache entry " + name +
                         " has unsupported header '" + header + "'");
    std::string meta;
    std::getline(in, meta);
    std::string form, params, ring_desc;
    long lo = 0, hi = 0;
    {
        std::istringstream ms(meta);
        std::string tok;
        bool saw_lo = false, saw_hi = false;
        while (ms >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw CacheError("cache entry " + name +
                                 " has malformed metadata token '" + tok + "'");
            const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
            if (k == "form") form = v;
            else if (k == "params") params = v;
            else if (k == "ring") ring_desc = v;
            else if (k == "minexp") { lo = std::stol(v); saw_lo = true; }
            else if (k == "prec") { hi = std::stol(v); saw_hi = true; }
        }
        if (form != key.form_id || params != key.params ||
            ring_desc != ring.descriptor() || !saw_lo || !saw_hi || hi <= lo)
            throw CacheError("cache entry " + name +
                             " does not describe the requested series");
    }
    std::vector<typename Ring::Value> coeff;
    coeff.reserve(static_cast<std::size_t>(hi - lo));
    std::string line;
    long expect = lo;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long n = 0;
        std::string enc;
        if (!(ls >> n >> enc) || n != expect)
            throw CacheError("cache entry " + name +
                             " has a malformed coefficient line '" + line +
                             "'");
        try {
            coeff.push_back(ring.decode(enc));
        } catch (const Error& e) {
            throw CacheError("cache entry " + name +
                             " holds an undecodable coefficient: " + e.what());
        }
        ++expect;
    }
    if (expect != hi)
        throw CacheError("cache entry " + name + " is truncated: expected " +
                         std::to_string(hi - lo) + " coefficients, found " +
                         std::to_string(expect - lo));
    return Series<Ring>(ring, lo, hi, std::move(coeff));
}

// Compute-through wrapper: serve the cached window when it is at least as
// wide as requested, otherwise (or on a damaged/missing entry) recompute
// via `make` and overwrite.  An empty `dir` disables caching entirely.
template <class Ring, class Make>
Series<Ring> cache_through(const std::string& dir, const CacheKey& key,
                           const Ring& ring, long min_exp, long prec_bound,
                           Make&& make) {
    if (dir.empty()) return make();
    try {
        auto hit = cache_load(dir, key, ring);
        if (hit && hit->min_exp() <= min_exp && hit->prec_bound() >= prec_bound)
            return crop(*hit, min_exp, prec_bound);
    } catch (const CacheError& e) {
        std::cerr << "note: ignoring damaged cache entry (" << e.what()
                  << "); recomputing\n";
    }
    Series<Ring> fresh = make();
    cache_store(dir, key, fresh);
    return fresh;
}

} // namespace mockmod
