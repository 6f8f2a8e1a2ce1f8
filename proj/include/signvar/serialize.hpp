#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "signvar/complex.hpp"

namespace signvar {

inline constexpr std::uint32_t kCacheMagic = 0x53565043;  // "SVPC"
inline constexpr std::uint32_t kCacheVersion = 1;

namespace detail {

inline void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

class Reader {
public:
    explicit Reader(const std::string& data) : data_(data) {}
    bool u32(std::uint32_t& out) {
        if (pos_ + 4 > data_.size()) return false;
        out = 0;
        for (int i = 0; i < 4; ++i) out |= std::uint32_t(std::uint8_t(data_[pos_ + i])) << (8 * i);
        pos_ += 4;
        return true;
    }
    bool u64(std::uint64_t& out) {
        if (pos_ + 8 > data_.size()) return false;
        out = 0;
        for (int i = 0; i < 8; ++i) out |= std::uint64_t(std::uint8_t(data_[pos_ + i])) << (8 * i);
        pos_ += 8;
        return true;
    }
    std::size_t pos() const { return pos_; }

private:
    const std::string& data_;
    std::size_t pos_ = 0;
};

inline std::uint64_t fnv1a(const char* data, std::size_t size) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= std::uint8_t(data[i]);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

/// Cache file for one complex, keyed by (n, m, format version).
inline std::filesystem::path cache_path(const std::filesystem::path& dir, int n, int m) {
    return dir / ("svp_n" + std::to_string(n) + "_m" + std::to_string(m) + "_v" +
                  std::to_string(kCacheVersion) + ".bin");
}

/// Writes element masks and all face buckets, followed by an FNV-1a checksum
/// of the payload.
inline void save_complex(const OrderComplex& k, const std::filesystem::path& path) {
    std::string buf;
    detail::put_u32(buf, kCacheMagic);
    detail::put_u32(buf, kCacheVersion);
    detail::put_u32(buf, std::uint32_t(k.n()));
    detail::put_u32(buf, std::uint32_t(k.m()));
    const auto& poset = k.poset();
    detail::put_u64(buf, std::uint64_t(poset.size()));
    for (int id = 0; id < poset.size(); ++id) {
        detail::put_u32(buf, poset.element(id).support());
        detail::put_u32(buf, poset.element(id).neg_mask());
    }
    detail::put_u32(buf, std::uint32_t(k.n() + 1));  // bucket count
    for (int card = 0; card <= k.n(); ++card) {
        const auto& raw = k.raw_faces(card);
        detail::put_u64(buf, std::uint64_t(raw.size()));
        for (const std::int32_t id : raw) detail::put_u32(buf, std::uint32_t(id));
    }
    detail::put_u64(buf, detail::fnv1a(buf.data(), buf.size()));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot open " + path.string() + " for writing");
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw std::runtime_error("cache: write failed for " + path.string());
}

struct CacheLoad {
    std::optional<OrderComplex> complex;
    std::string error;  // set when the file is absent, stale or corrupt
};

/// Loads and fully validates a cached complex. Any mismatch (magic, version,
/// parameters, checksum, element table or chain structure) is reported in
/// `error` and the cache is not used.
inline CacheLoad load_complex(const std::filesystem::path& path, int n, int m) {
    CacheLoad result;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        result.error = "cache miss";
        return result;
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    const auto reject = [&](const std::string& why) {
        result.complex.reset();
        result.error = "cache rejected (" + why + "): " + path.string();
        return result;
    };

    if (data.size() < 8 + 8) return reject("truncated");
    const std::uint64_t computed_sum = detail::fnv1a(data.data(), data.size() - 8);
    std::uint64_t claimed_sum = 0;
    for (int i = 0; i < 8; ++i) {
        claimed_sum |= std::uint64_t(std::uint8_t(data[data.size() - 8 + i])) << (8 * i);
    }
    if (claimed_sum != computed_sum) return reject("checksum mismatch");

    detail::Reader r(data);
    std::uint32_t magic = 0, version = 0, file_n = 0, file_m = 0;
    if (!r.u32(magic) || magic != kCacheMagic) return reject("bad magic");
    if (!r.u32(version) || version != kCacheVersion) return reject("version mismatch");
    if (!r.u32(file_n) || !r.u32(file_m)) return reject("truncated header");
    if (int(file_n) != n || int(file_m) != m) return reject("parameter mismatch");

    RankedPoset poset = RankedPoset::build_pnm(n, m);
    std::uint64_t element_count = 0;
    if (!r.u64(element_count) || element_count != std::uint64_t(poset.size()))
        return reject("element count mismatch");
    for (int id = 0; id < poset.size(); ++id) {
        std::uint32_t support = 0, neg = 0;
        if (!r.u32(support) || !r.u32(neg)) return reject("truncated element table");
        if (support != poset.element(id).support() || neg != poset.element(id).neg_mask())
            return reject("element table mismatch");
    }

    std::uint32_t buckets = 0;
    if (!r.u32(buckets) || buckets != std::uint32_t(n + 1)) return reject("bucket count mismatch");
    std::vector<std::vector<std::int32_t>> faces(n + 1);
    for (int card = 0; card <= n; ++card) {
        std::uint64_t size = 0;
        if (!r.u64(size)) return reject("truncated bucket header");
        if (card > 0 && size % std::uint64_t(card) != 0) return reject("bucket size misaligned");
        faces[card].reserve(size);
        for (std::uint64_t i = 0; i < size; ++i) {
            std::uint32_t id = 0;
            if (!r.u32(id)) return reject("truncated face data");
            faces[card].push_back(std::int32_t(id));
        }
    }
    if (r.pos() != data.size() - 8) return reject("trailing bytes");

    try {
        result.complex = OrderComplex::from_parts(std::move(poset), std::move(faces), true);
    } catch (const std::exception& e) {
        return reject(std::string("invalid face data: ") + e.what());
    }
    return result;
}

}  // namespace signvar
