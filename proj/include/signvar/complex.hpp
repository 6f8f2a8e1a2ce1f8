#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signvar/parallel.hpp"
#include "signvar/poset.hpp"

namespace signvar {

inline constexpr long long kDefaultFaceCap = 5'000'000;

/// Thrown when an enumeration or matrix exceeds its configured cap; carries
/// the count reached so far.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, long long partial)
        : std::runtime_error(what + " (partial count " + std::to_string(partial) + ")"),
          partial_(partial) {}
    long long partial_count() const { return partial_; }

private:
    long long partial_;
};

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

/// The order complex of a ranked poset: every chain is a face, including the
/// empty chain. Faces are grouped by cardinality and stored flat, each as a
/// strictly increasing ID list (IDs ascend with rank, so this is chain order).
class OrderComplex {
public:
    /// Enumerates all chains, one DFS per top element (each nonempty chain
    /// has a unique maximum). The face set and its order are independent of
    /// the thread count.
    static OrderComplex build(RankedPoset poset, long long face_cap = kDefaultFaceCap,
                              int threads = 1) {
        OrderComplex k;
        k.poset_ = std::move(poset);
        const int count = k.poset_.size();
        const int n = k.poset_.n();
        k.faces_.assign(n + 1, {});

        std::vector<std::vector<std::int32_t>> below(count);
        for (int id = 0; id < count; ++id) {
            for (const int lo : k.poset_.elements_below(id))
                below[id].push_back(static_cast<std::int32_t>(lo));
        }

        // faces per top element, bucketed by cardinality
        std::vector<std::vector<std::vector<std::int32_t>>> per_top(count);
        std::atomic<long long> produced{1};  // the empty face
        std::atomic<bool> over{false};

        parallel_for(0, count, threads, [&](long long lo, long long hi) {
            std::vector<std::int32_t> stack;  // descending chain, top first
            for (long long top = lo; top < hi; ++top) {
                if (over.load(std::memory_order_relaxed)) return;
                auto& buckets = per_top[top];
                buckets.assign(n + 1, {});
                stack.clear();
                long long local = 0;
                const auto record = [&] {
                    auto& flat = buckets[stack.size()];
                    flat.insert(flat.end(), stack.rbegin(), stack.rend());
                    ++local;
                };
                const auto dfs = [&](auto&& self, std::int32_t bottom) -> void {
                    stack.push_back(bottom);
                    record();
                    for (const std::int32_t next : below[bottom]) self(self, next);
                    stack.pop_back();
                };
                dfs(dfs, static_cast<std::int32_t>(top));
                if (produced.fetch_add(local) + local > face_cap)
                    over.store(true, std::memory_order_relaxed);
            }
        });
        if (over.load())
            throw CapExceeded("build_complex: face cap exceeded", produced.load());

        for (int top = 0; top < count; ++top) {
            for (int card = 1; card <= n; ++card) {
                auto& src = per_top[top][card];
                k.faces_[card].insert(k.faces_[card].end(), src.begin(), src.end());
                src.clear();
                src.shrink_to_fit();
            }
        }
        return k;
    }

    static OrderComplex build_pnm(int n, int m, long long face_cap = kDefaultFaceCap,
                                  int threads = 1) {
        return build(RankedPoset::build_pnm(n, m), face_cap, threads);
    }

    /// Reassembles a complex from raw face storage (used by the cache
    /// loader). Validates chain structure when asked.
    static OrderComplex from_parts(RankedPoset poset,
                                   std::vector<std::vector<std::int32_t>> raw_faces,
                                   bool validate) {
        OrderComplex k;
        k.poset_ = std::move(poset);
        k.faces_ = std::move(raw_faces);
        if (validate && !k.validate_faces())
            throw std::invalid_argument("order_complex: invalid face data");
        return k;
    }

    const RankedPoset& poset() const { return poset_; }
    int n() const { return poset_.n(); }
    int m() const { return poset_.m(); }

    /// Largest face cardinality present (n whenever the poset is nonempty).
    int max_card() const {
        for (int c = static_cast<int>(faces_.size()) - 1; c >= 1; --c) {
            if (!faces_[c].empty()) return c;
        }
        return 0;
    }

    int dim() const { return max_card() - 1; }

    long long face_count(int card) const {
        if (card == 0) return 1;
        if (card < 0 || card >= static_cast<int>(faces_.size())) return 0;
        return static_cast<long long>(faces_[card].size()) / card;
    }

    long long total_faces() const {
        long long t = 1;
        for (int c = 1; c < static_cast<int>(faces_.size()); ++c) t += face_count(c);
        return t;
    }

    std::span<const std::int32_t> face(int card, long long idx) const {
        return {faces_[card].data() + idx * card, static_cast<std::size_t>(card)};
    }

    const std::vector<std::int32_t>& raw_faces(int card) const { return faces_[card]; }

    /// (f_{-1}, f_0, ..., f_d) with f_{-1} = 1.
    std::vector<long long> f_vector() const {
        const int top = max_card();
        std::vector<long long> f(top + 1);
        for (int c = 0; c <= top; ++c) f[c] = face_count(c);
        return f;
    }

    bool validate_faces() const {
        if (faces_.empty() || !faces_[0].empty()) return false;
        for (int card = 1; card < static_cast<int>(faces_.size()); ++card) {
            if (faces_[card].size() % card != 0) return false;
            for (long long i = 0; i < face_count(card); ++i) {
                const auto f = face(card, i);
                for (int j = 0; j < card; ++j) {
                    if (f[j] < 0 || f[j] >= poset_.size()) return false;
                    if (j > 0 && !(f[j - 1] < f[j] && poset_.less_eq(f[j - 1], f[j])))
                        return false;
                }
            }
        }
        return true;
    }

private:
    RankedPoset poset_;
    std::vector<std::vector<std::int32_t>> faces_;  // [card] -> flat id lists
};

/// Stanley's transform: h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}, where d
/// is the number of vertices in a facet (dim + 1). Takes f = (f_{-1}, ...,
/// f_{d-1}) of length d+1 and returns (h_0, ..., h_d).
inline std::vector<long long> h_vector(const std::vector<long long>& f, int d) {
    if (static_cast<int>(f.size()) != d + 1)
        throw std::invalid_argument("h_vector: f must have d+1 entries");
    if (f.empty() || f[0] != 1)
        throw std::invalid_argument("h_vector: f must begin with f_{-1} = 1");
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        for (int i = 0; i <= k; ++i) {
            const long long term = binom(d - i, k - i) * f[i];
            h[k] += ((k - i) % 2 == 0) ? term : -term;
        }
    }
    return h;
}

/// Reduced Euler characteristic from an f-vector including f_{-1}.
inline long long reduced_euler_from_f(const std::vector<long long>& f) {
    long long chi = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        chi += (k % 2 == 0) ? -f[k] : f[k];
    }
    return chi;
}

inline long long reduced_euler(const OrderComplex& k) {
    return reduced_euler_from_f(k.f_vector());
}

/// Rank-selected face counts: flag_f[S] is the number of chains whose rank
/// set is exactly S (a bitmask over ranks 0..n-1), and flag_h is its
/// inclusion-exclusion transform over subsets. Marginals by |S| recover the
/// f- and h-vectors.
struct FlagVectors {
    int n = 0;
    std::vector<long long> flag_f;  // indexed by rank-set mask
    std::vector<long long> flag_h;
};

inline FlagVectors flag_vectors(const OrderComplex& k) {
    const int n = k.n();
    if (n > 20) throw std::invalid_argument("flag_vectors: rank-set table too large");
    FlagVectors fv;
    fv.n = n;
    fv.flag_f.assign(1u << n, 0);
    fv.flag_f[0] = 1;
    for (int card = 1; card <= k.max_card(); ++card) {
        for (long long i = 0, cnt = k.face_count(card); i < cnt; ++i) {
            std::uint32_t mask = 0;
            for (const std::int32_t id : k.face(card, i)) mask |= 1u << k.poset().rank(id);
            ++fv.flag_f[mask];
        }
    }
    // Moebius transform over the subset lattice gives
    // flag_h[S] = sum_{T subset S} (-1)^{|S \ T|} flag_f[T].
    fv.flag_h = fv.flag_f;
    for (int b = 0; b < n; ++b) {
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            if (s & (1u << b)) fv.flag_h[s] -= fv.flag_h[s ^ (1u << b)];
        }
    }
    return fv;
}

}  // namespace signvar
