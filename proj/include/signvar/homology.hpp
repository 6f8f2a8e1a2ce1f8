#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "signvar/complex.hpp"

namespace signvar {

enum class RankMode { exact, mod_p };

/// Fixed large prime for the fallback field. The complexes handled here have
/// only 2-torsion in integral homology, so any odd prime preserves rational
/// ranks; the Euler-Poincaree identity is cross-checked in tests regardless.
inline constexpr std::uint64_t kHomologyPrime = 2147483647ull;  // 2^31 - 1

namespace detail {

/// Fraction-free (Bareiss) elimination over the integers. Returns the exact
/// rank, or nullopt if an intermediate value leaves the safe int64 range or a
/// division fails to be exact (either aborts the exact route; the caller
/// falls back to the prime field).
inline std::optional<long long> bareiss_rank(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    constexpr long long kLimit = (1ll << 62);

    long long prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const long long pv = a[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            const long long ai = a[i][col];
            for (int j = col + 1; j < cols; ++j) {
                const __int128 num =
                    static_cast<__int128>(a[i][j]) * pv - static_cast<__int128>(ai) * a[rank][j];
                if (num % prev != 0) return std::nullopt;
                const __int128 q = num / prev;
                if (q >= kLimit || q <= -kLimit) return std::nullopt;
                a[i][j] = static_cast<long long>(q);
            }
            a[i][col] = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

inline std::uint64_t modp_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    base %= kHomologyPrime;
    while (exp) {
        if (exp & 1) out = out * base % kHomologyPrime;
        base = base * base % kHomologyPrime;
        exp >>= 1;
    }
    return out;
}

inline std::uint64_t modp_inv(std::uint64_t x) { return modp_pow(x, kHomologyPrime - 2); }

using SparseCol = std::vector<std::pair<std::int32_t, std::uint32_t>>;  // (row, value), rows ascending

/// Rank over GF(p) by sparse column reduction: each column is reduced against
/// the stored pivot columns (keyed by their largest row) until it either
/// empties or claims a fresh pivot row.
inline long long modp_rank(std::vector<SparseCol> cols, long long rows) {
    std::vector<std::int64_t> pivot_of_row(rows, -1);
    std::vector<SparseCol> pivots;
    pivots.reserve(cols.size());
    long long rank = 0;
    SparseCol merged;
    for (SparseCol& col : cols) {
        while (!col.empty()) {
            const std::int32_t r = col.back().first;
            const std::uint64_t v = col.back().second;
            if (pivot_of_row[r] < 0) {
                // normalize so the pivot entry is 1
                const std::uint64_t inv = modp_inv(v);
                for (auto& e : col)
                    e.second = static_cast<std::uint32_t>(e.second * inv % kHomologyPrime);
                pivot_of_row[r] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(col));
                ++rank;
                break;
            }
            const SparseCol& pc = pivots[pivot_of_row[r]];
            const std::uint64_t lambda = kHomologyPrime - v;  // col += lambda * pc kills row r
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < pc.size()) {
                if (j == pc.size() || (i < col.size() && col[i].first < pc[j].first)) {
                    merged.push_back(col[i++]);
                } else if (i == col.size() || pc[j].first < col[i].first) {
                    const std::uint64_t val = lambda * pc[j].second % kHomologyPrime;
                    if (val) merged.emplace_back(pc[j].first, static_cast<std::uint32_t>(val));
                    ++j;
                } else {
                    const std::uint64_t val =
                        (col[i].second + lambda * pc[j].second) % kHomologyPrime;
                    if (val) merged.emplace_back(col[i].first, static_cast<std::uint32_t>(val));
                    ++i;
                    ++j;
                }
            }
            col.swap(merged);
        }
    }
    return rank;
}

}  // namespace detail

struct HomologyResult {
    std::vector<long long> betti;       // reduced Betti numbers, degrees 0..dim
    std::vector<RankMode> matrix_mode;  // mode used for each boundary map 1..dim
    bool all_exact = true;

    std::string mode_string() const {
        return all_exact ? "exact" : "mod-p(" + std::to_string(kHomologyPrime) + ")";
    }
};

/// Reduced rational Betti numbers from boundary-map ranks, with the sign
/// convention induced by chain order (vertices of a face sorted by weight).
/// Matrices up to exact_limit rows/cols go through integer elimination first;
/// larger ones (or overflowing ones) use the prime field.
inline HomologyResult homology_ranks(const OrderComplex& k,
                                     long long entry_cap = 20'000'000,
                                     int exact_limit = 400) {
    const int dim = k.dim();
    HomologyResult res;
    res.betti.assign(dim + 1, 0);

    // rank of each boundary map; boundary_rank[j] is rank of d_j for
    // j = 0..dim+1, with d_0 the augmentation and d_{dim+1} = 0
    std::vector<long long> boundary_rank(dim + 2, 0);
    boundary_rank[0] = k.face_count(1) > 0 ? 1 : 0;

    std::unordered_map<std::string, std::int32_t> row_index;
    for (int deg = 1; deg <= dim; ++deg) {
        const int card = deg + 1;  // columns: deg-dimensional faces
        const long long cols_n = k.face_count(card);
        const long long rows_n = k.face_count(card - 1);
        if (cols_n * card > entry_cap)
            throw CapExceeded("homology_ranks: boundary matrix cap exceeded", cols_n);

        row_index.clear();
        row_index.reserve(static_cast<std::size_t>(rows_n) * 2);
        std::string key;
        for (long long i = 0; i < rows_n; ++i) {
            const auto f = k.face(card - 1, i);
            key.assign(reinterpret_cast<const char*>(f.data()), f.size_bytes());
            row_index.emplace(key, static_cast<std::int32_t>(i));
        }

        std::vector<detail::SparseCol> cols(static_cast<std::size_t>(cols_n));
        std::vector<std::int32_t> sub(card - 1);
        for (long long i = 0; i < cols_n; ++i) {
            const auto f = k.face(card, i);
            auto& col = cols[i];
            col.reserve(card);
            for (int drop = 0; drop < card; ++drop) {
                int pos = 0;
                for (int j = 0; j < card; ++j) {
                    if (j != drop) sub[pos++] = f[j];
                }
                key.assign(reinterpret_cast<const char*>(sub.data()),
                           sub.size() * sizeof(std::int32_t));
                const std::int32_t row = row_index.at(key);
                const std::uint32_t val =
                    (drop % 2 == 0) ? 1u : static_cast<std::uint32_t>(kHomologyPrime - 1);
                col.emplace_back(row, val);
            }
            std::sort(col.begin(), col.end());
        }

        std::optional<long long> exact;
        if (rows_n <= exact_limit && cols_n <= exact_limit) {
            std::vector<std::vector<long long>> dense(
                static_cast<std::size_t>(rows_n),
                std::vector<long long>(static_cast<std::size_t>(cols_n), 0));
            for (long long c = 0; c < cols_n; ++c) {
                for (const auto& [row, val] : cols[c]) {
                    dense[row][c] = (val == 1u) ? 1 : -1;
                }
            }
            exact = detail::bareiss_rank(std::move(dense));
        }
        if (exact) {
            boundary_rank[deg] = *exact;
            res.matrix_mode.push_back(RankMode::exact);
        } else {
            boundary_rank[deg] = detail::modp_rank(std::move(cols), rows_n);
            res.matrix_mode.push_back(RankMode::mod_p);
            res.all_exact = false;
        }
    }

    for (int deg = 0; deg <= dim; ++deg) {
        res.betti[deg] = k.face_count(deg + 1) - boundary_rank[deg] - boundary_rank[deg + 1];
    }
    return res;
}

}  // namespace signvar
