#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signvar/chain.hpp"
#include "signvar/sign_vector.hpp"

namespace signvar {

/// A signed permutation in window notation: [pi(1), ..., pi(n)] with nonzero
/// entries whose absolute values form a permutation of [n]. The pair view
/// (pi, X) is the absolute-value word together with the set of numbers that
/// carry a negative sign.
class SignedPerm {
public:
    SignedPerm() = default;

    explicit SignedPerm(std::vector<std::int8_t> window) : window_(std::move(window)) {
        const int n = static_cast<int>(window_.size());
        if (n < 1 || n > kMaxLen)
            throw std::invalid_argument("signed_perm: length out of range");
        std::uint32_t seen = 0;
        for (const int entry : window_) {
            const int a = std::abs(entry);
            if (a < 1 || a > n)
                throw std::invalid_argument("signed_perm: entry out of range");
            if (seen & (1u << (a - 1)))
                throw std::invalid_argument("signed_perm: repeated absolute value");
            seen |= 1u << (a - 1);
        }
    }

    static SignedPerm identity(int n) {
        std::vector<std::int8_t> w(n);
        std::iota(w.begin(), w.end(), std::int8_t{1});
        return SignedPerm(std::move(w));
    }

    /// Parses "a1,a2,...,an" with negatives written as a leading '-'.
    static SignedPerm parse_window(std::string_view text) {
        std::vector<std::int8_t> w;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view part = text.substr(start, end - start);
            if (part.empty())
                throw std::invalid_argument("signed_perm: empty entry");
            bool neg = false;
            if (part[0] == '-') {
                neg = true;
                part.remove_prefix(1);
            }
            if (part.empty())
                throw std::invalid_argument("signed_perm: bare sign");
            int value = 0;
            for (const char ch : part) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("signed_perm: illegal character");
                value = value * 10 + (ch - '0');
            }
            if (value == 0)
                throw std::invalid_argument("signed_perm: zero entry");
            if (value > kMaxLen)
                throw std::invalid_argument("signed_perm: entry out of range");
            w.push_back(static_cast<std::int8_t>(neg ? -value : value));
            if (end == text.size()) break;
            start = end + 1;
        }
        return SignedPerm(std::move(w));
    }

    int size() const { return static_cast<int>(window_.size()); }

    /// Window entry at position i, 1-indexed.
    int at(int i) const { return window_[i - 1]; }

    const std::vector<std::int8_t>& window() const { return window_; }

    /// Pair view: the absolute-value word.
    std::vector<int> abs_word() const {
        std::vector<int> w(window_.size());
        for (std::size_t i = 0; i < window_.size(); ++i) w[i] = std::abs(int(window_[i]));
        return w;
    }

    /// Pair view: numbers carried with a negative sign, bit v-1 per value v.
    std::uint32_t neg_set() const {
        std::uint32_t x = 0;
        for (const int entry : window_) {
            if (entry < 0) x |= 1u << (-entry - 1);
        }
        return x;
    }

    std::string to_window_string() const {
        std::string s;
        for (std::size_t i = 0; i < window_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(int(window_[i]));
        }
        return s;
    }

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
        return a.window_ < b.window_;
    }

private:
    std::vector<std::int8_t> window_;
};

/// True iff the window has an even number of negative entries (type D).
inline bool is_even_signed(const SignedPerm& p) {
    return (std::popcount(p.neg_set()) & 1) == 0;
}

/// Descent positions of w(pi) = (0, pi(1), ..., pi(n)): bit i set iff
/// w_i > w_{i+1}, for i in {0, ..., n-1}. In particular 0 is a descent iff
/// pi(1) < 0.
struct DescentData {
    std::uint32_t descent_mask = 0;
    int des = 0;

    bool contains(int i) const { return (descent_mask >> i) & 1u; }
    std::vector<int> to_list() const {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const DescentData&, const DescentData&) = default;
};

inline DescentData descent_data(const SignedPerm& p) {
    DescentData d;
    int prev = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (prev > p.at(i)) d.descent_mask |= 1u << (i - 1);
        prev = p.at(i);
    }
    d.des = std::popcount(d.descent_mask);
    return d;
}

/// Visits every even signed permutation of [n] with at most max_negatives
/// negative window entries, in lexicographic order on (absolute word,
/// negative set as a bitmask). max_negatives = n visits all of S^D_n.
template <class Fn>
void for_each_sdn(int n, int max_negatives, Fn&& fn) {
    if (n < 1 || n > kMaxLen)
        throw std::invalid_argument("for_each_sdn: n out of range");
    if (max_negatives < 0 || max_negatives > n)
        throw std::invalid_argument("for_each_sdn: require 0 <= m <= n");
    std::vector<std::int8_t> word(n);
    std::iota(word.begin(), word.end(), std::int8_t{1});
    std::vector<std::int8_t> window(n);
    do {
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            const int negs = std::popcount(x);
            if ((negs & 1) || negs > max_negatives) continue;
            for (int i = 0; i < n; ++i) {
                const std::int8_t v = word[i];
                window[i] = (x >> (v - 1)) & 1u ? std::int8_t(-v) : v;
            }
            fn(window);
        }
    } while (std::next_permutation(word.begin(), word.end()));
}

/// Materialized S^D_{n,m}; use the visitor for large n.
inline std::vector<SignedPerm> enumerate_sdn(int n, int max_negatives) {
    std::vector<SignedPerm> out;
    for_each_sdn(n, max_negatives, [&](const std::vector<std::int8_t>& w) {
        out.push_back(SignedPerm(w));
    });
    return out;
}

inline std::vector<SignedPerm> enumerate_sdn(int n) { return enumerate_sdn(n, n); }

/// D(n,k): even signed permutations of [n] with exactly k descents, by
/// exhaustive enumeration. Entries sum to 2^{n-1} n!.
inline std::vector<long long> eulerian_d(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("eulerian_d: n out of enumeration range");
    std::vector<long long> counts(n + 1, 0);
    std::vector<std::int8_t> word(n);
    std::iota(word.begin(), word.end(), std::int8_t{1});
    do {
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            if (std::popcount(x) & 1) continue;
            int des = 0, prev = 0;
            for (int i = 0; i < n; ++i) {
                const int v = (x >> (word[i] - 1)) & 1u ? -word[i] : word[i];
                if (prev > v) ++des;
                prev = v;
            }
            ++counts[des];
        }
    } while (std::next_permutation(word.begin(), word.end()));
    return counts;
}

/// The saturated chain C^pi associated to an even signed permutation: the
/// support of the i-th element is the set of absolute values of the last i
/// window letters, and the top is the unique zero-free canonical vector whose
/// cyclic sign flips are exactly the negated numbers.
inline Chain chain_of_perm(const SignedPerm& p) {
    if (!is_even_signed(p))
        throw std::invalid_argument("chain_of_perm: permutation is not even-signed");
    const int n = p.size();
    const std::uint32_t flips = p.neg_set();

    // Zero-free signs: entry 1 is '+', and each position in the flip set
    // changes sign relative to its predecessor. An even flip count makes the
    // assignment consistent around the cycle.
    std::uint32_t neg = 0;
    int sign = +1;
    for (int pos = 2; pos <= n; ++pos) {
        if ((flips >> (pos - 1)) & 1u) sign = -sign;
        if (sign < 0) neg |= 1u << (pos - 1);
    }

    Chain c(n);
    std::uint32_t support = 0;
    for (int i = 1; i <= n; ++i) {
        const int value = std::abs(p.at(n - i + 1));
        support |= 1u << (value - 1);
        c[i - 1] = SignVector::from_masks(n, support, neg & support);
    }
    return c;
}

/// The rank-selected bottom C_pi: the subchain of C^pi keeping exactly the
/// elements of weight n - i for each descent i. Has des(pi) elements.
inline Chain bottom_chain(const SignedPerm& p) {
    const Chain full = chain_of_perm(p);
    const DescentData dd = descent_data(p);
    const int n = p.size();
    Chain c;
    for (int weight = 1; weight <= n; ++weight) {
        if (dd.contains(n - weight)) c.push_back(full[weight - 1]);
    }
    return c;
}

}  // namespace signvar
