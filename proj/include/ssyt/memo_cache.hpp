#pragma once

#include <cstdint>
#include <istream>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "ssyt/count.hpp"
#include "ssyt/errors.hpp"
#include "ssyt/plane_partition.hpp"

namespace ssyt {

/// Shared memo for the corner-removal count. Keys are compact shape
/// encodings; with canonicalization on (the default) all six reorientations
/// of a shape share one entry, which is sound because the count is constant
/// on each orientation orbit.
///
/// Concurrency contract: concurrent readers, insert-if-absent writers,
/// idempotent values — a racing recomputation stores the same number.
class MemoCache {
public:
    explicit MemoCache(bool canonicalize = true) : canonical_(canonicalize) {}

    bool canonicalize() const { return canonical_; }

    bool lookup(const PlanePartition& shape, Count& out) const {
        return lookup_key(key_for(shape), out);
    }

    void store(const PlanePartition& shape, const Count& value) {
        std::unique_lock lock(mu_);
        map_.emplace(key_for(shape), value);
    }

    bool lookup_key(const std::string& key, Count& out) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }

    std::string key_for(const PlanePartition& shape) const {
        return canonical_ ? shape.canonical().encode() : shape.encode();
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mu_);
        map_.clear();
    }

    /// Binary format: magic+version header, canonicalization flag, entry
    /// count, then (key length, key bytes, value length, value magnitude
    /// bytes big-endian) per entry.
    void save(std::ostream& os) const {
        std::shared_lock lock(mu_);
        os.write(kMagic, 8);
        write_u64(os, kVersion);
        os.put(canonical_ ? 1 : 0);
        write_u64(os, map_.size());
        std::string buf;
        for (const auto& [key, value] : map_) {
            write_u64(os, key.size());
            os.write(key.data(), static_cast<std::streamsize>(key.size()));
            std::size_t nbytes = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
            if (value == 0) nbytes = 0;
            buf.resize(nbytes);
            if (nbytes > 0) {
                mpz_export(buf.data(), nullptr, 1, 1, 1, 0, value.get_mpz_t());
            }
            write_u64(os, nbytes);
            os.write(buf.data(), static_cast<std::streamsize>(nbytes));
        }
    }

    /// Replaces the cache contents. Rejects anything but an exact match of
    /// magic, version, and canonicalization flag.
    void load(std::istream& is) {
        char magic[8];
        is.read(magic, 8);
        if (!is || std::string(magic, 8) != std::string(kMagic, 8)) {
            throw CacheFormatError("not a memo cache file");
        }
        std::uint64_t version = read_u64(is);
        if (version != kVersion) {
            throw CacheFormatError("cache version " + std::to_string(version) +
                                   " does not match expected " + std::to_string(kVersion));
        }
        int flag = is.get();
        if (flag != (canonical_ ? 1 : 0)) {
            throw CacheFormatError("cache canonicalization flag mismatch");
        }
        std::uint64_t count = read_u64(is);
        std::unique_lock lock(mu_);
        map_.clear();
        map_.reserve(count);
        std::string key, buf;
        for (std::uint64_t e = 0; e < count; ++e) {
            key.resize(read_u64(is));
            is.read(key.data(), static_cast<std::streamsize>(key.size()));
            buf.resize(read_u64(is));
            is.read(buf.data(), static_cast<std::streamsize>(buf.size()));
            if (!is) throw CacheFormatError("truncated cache file");
            Count v = 0;
            if (!buf.empty()) {
                mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
            }
            map_.emplace(std::move(key), std::move(v));
            key.clear();
        }
    }

private:
    static constexpr const char* kMagic = "SSYTMEMO";
    static constexpr std::uint64_t kVersion = 1;

    static void write_u64(std::ostream& os, std::uint64_t v) {
        char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        os.write(b, 8);
    }

    static std::uint64_t read_u64(std::istream& is) {
        char b[8];
        is.read(b, 8);
        if (!is) throw CacheFormatError("truncated cache file");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(b[i])) << (8 * i);
        }
        return v;
    }

    bool canonical_;
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Count> map_;
};

} // namespace ssyt
