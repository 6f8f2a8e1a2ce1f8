#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "signvar/sign_vector.hpp"

namespace signvar {

/// An interval [bottom, top] in a finite poset, with all members resolved.
struct Interval {
    int bottom = -1;
    int top = -1;
    std::vector<int> members;
};

/// The poset P_{n,m}: canonical sign vectors of length n with var <= m,
/// ordered by zero-replacement. Elements are indexed in text order; ranks are
/// wt - 1; cover relations raise the rank by exactly one.
class RankedPoset {
public:
    static RankedPoset build_pnm(int n, int m) {
        RankedPoset p;
        p.n_ = n;
        p.m_ = m;
        p.elements_ = enumerate_pv(n, m);
        // IDs are assigned by (weight, text): ascending IDs then agree with
        // chain order inside every face, so faces are plain sorted int lists.
        std::stable_sort(p.elements_.begin(), p.elements_.end(),
                         [](const SignVector& a, const SignVector& b) {
                             if (wt(a) != wt(b)) return wt(a) < wt(b);
                             return text_less(a, b);
                         });
        const int count = static_cast<int>(p.elements_.size());
        p.covers_above_.resize(count);
        p.covers_below_.resize(count);
        p.index_.reserve(count);
        for (int id = 0; id < count; ++id) {
            p.index_.emplace(key_of(p.elements_[id]), id);
        }

        // Zeroing one entry of any element stays in P_{n,m}, so covers are
        // exactly the order relations between consecutive weights.
        std::vector<std::vector<int>> by_weight(n + 1);
        for (int id = 0; id < count; ++id) by_weight[wt(p.elements_[id])].push_back(id);
        for (int w = 1; w < n; ++w) {
            for (const int lo : by_weight[w]) {
                for (const int hi : by_weight[w + 1]) {
                    if (leq(p.elements_[lo], p.elements_[hi])) {
                        p.covers_above_[lo].push_back(hi);
                        p.covers_below_[hi].push_back(lo);
                    }
                }
            }
        }
        return p;
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const SignVector& element(int id) const { return elements_[id]; }
    const std::vector<SignVector>& elements() const { return elements_; }
    int rank(int id) const { return wt(elements_[id]) - 1; }
    const std::vector<int>& covers_above(int id) const { return covers_above_[id]; }
    const std::vector<int>& covers_below(int id) const { return covers_below_[id]; }

    /// Index of a vector, or -1 when it is not an element (e.g. var too big).
    int index_of(const SignVector& v) const {
        const auto it = index_.find(key_of(v));
        return it == index_.end() ? -1 : it->second;
    }

    bool less_eq(int a, int b) const { return leq(elements_[a], elements_[b]); }

    /// Strict down-set of id, in increasing id order.
    std::vector<int> elements_below(int id) const {
        std::vector<int> out;
        for (int other = 0; other < size(); ++other) {
            if (other != id && less_eq(other, id)) out.push_back(other);
        }
        return out;
    }

    Interval interval(int bottom, int top) const {
        if (!less_eq(bottom, top))
            throw std::invalid_argument("interval: bottom not below top");
        Interval iv;
        iv.bottom = bottom;
        iv.top = top;
        for (int id = 0; id < size(); ++id) {
            if (less_eq(bottom, id) && less_eq(id, top)) iv.members.push_back(id);
        }
        return iv;
    }

    /// Number of maximal chains, counting cover-paths from minimal to maximal
    /// elements. For P_{n,n-1} this equals 2^{n-1} n!.
    long long count_maximal_chains() const {
        std::vector<long long> paths(size(), 0);
        std::vector<int> ids(size());
        for (int id = 0; id < size(); ++id) ids[id] = id;
        std::sort(ids.begin(), ids.end(),
                  [&](int a, int b) { return rank(a) < rank(b); });
        long long total = 0;
        for (const int id : ids) {
            if (covers_below_[id].empty()) {
                paths[id] = 1;
            } else {
                for (const int lo : covers_below_[id]) paths[id] += paths[lo];
            }
            if (covers_above_[id].empty()) total += paths[id];
        }
        return total;
    }

    /// Hasse diagram in DOT format, ranks drawn bottom-up.
    std::string to_dot() const {
        std::string out = "digraph pnm {\n  rankdir=BT;\n  node [shape=plaintext];\n";
        for (int id = 0; id < size(); ++id) {
            out += "  v" + std::to_string(id) + " [label=\"" + elements_[id].to_string() + "\"];\n";
        }
        for (int id = 0; id < size(); ++id) {
            for (const int hi : covers_above_[id]) {
                out += "  v" + std::to_string(id) + " -> v" + std::to_string(hi) + ";\n";
            }
        }
        out += "}\n";
        return out;
    }

private:
    static std::uint64_t key_of(const SignVector& v) {
        return (std::uint64_t(v.support()) << 32) | v.neg_mask();
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<SignVector> elements_;
    std::vector<std::vector<int>> covers_above_;
    std::vector<std::vector<int>> covers_below_;
    std::unordered_map<std::uint64_t, int> index_;
};

/// Face type shared with the order complex: element IDs in increasing numeric
/// order. A face's chain order (by rank) is recovered where needed, since the
/// ranks in a chain are distinct.
using Face = std::vector<std::int32_t>;

inline bool face_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// True iff members are exactly the sets G with bottom <= G <= top under
/// inclusion, i.e. the interval is a full Boolean poset of 2^{|top|-|bottom|}
/// elements. Members must be distinct.
inline bool is_boolean(const Face& bottom, const Face& top, const std::vector<Face>& members) {
    if (!face_subset(bottom, top)) return false;
    const std::size_t width = top.size() - bottom.size();
    if (width >= 63 || members.size() != (std::size_t(1) << width)) return false;
    std::vector<Face> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (const Face& f : sorted) {
        if (!face_subset(bottom, f) || !face_subset(f, top)) return false;
    }
    return true;
}

}  // namespace signvar
