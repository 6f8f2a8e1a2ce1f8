#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signvar {

// Vectors are packed into a pair of 32-bit masks, so lengths are capped at a
// compile-time constant. 3^n enumeration is the practical limit long before
// the mask width is.
inline constexpr int kMaxLen = 24;

/// A nonzero sign vector of length n over {-,0,+}, stored as the canonical
/// representative of its projective class: the first nonzero entry is '+'.
///
/// Encoding: bit i-1 of support() is set iff entry i is nonzero; bit i-1 of
/// neg_mask() is set iff entry i is '-'. neg_mask() is always a subset of
/// support(), and the lowest support bit is never negative (canonical form).
class SignVector {
public:
    SignVector() = default;

    /// Builds from raw masks, negating to canonical form if needed.
    static SignVector from_masks(int n, std::uint32_t support, std::uint32_t neg) {
        if (n < 1 || n > kMaxLen)
            throw std::invalid_argument("sign_vector: length out of range");
        if (support == 0 || (support >> n) != 0)
            throw std::invalid_argument("sign_vector: bad support mask");
        neg &= support;
        const std::uint32_t lowest = support & (~support + 1);
        if (neg & lowest) neg ^= support;  // canonical: first nonzero is '+'
        SignVector v;
        v.n_ = static_cast<std::uint8_t>(n);
        v.support_ = support;
        v.neg_ = neg;
        return v;
    }

    /// Parses one character per entry: '+', '-' or '0'. Rejects empty input,
    /// illegal characters and the all-zero vector.
    static SignVector parse(std::string_view text) {
        if (text.empty())
            throw std::invalid_argument("sign_vector: empty input");
        if (static_cast<int>(text.size()) > kMaxLen)
            throw std::invalid_argument("sign_vector: input longer than kMaxLen");
        std::uint32_t support = 0, neg = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case '+': support |= 1u << i; break;
                case '-': support |= 1u << i; neg |= 1u << i; break;
                case '0': break;
                default:
                    throw std::invalid_argument("sign_vector: illegal character");
            }
        }
        if (support == 0)
            throw std::invalid_argument("sign_vector: all-zero input");
        return from_masks(static_cast<int>(text.size()), support, neg);
    }

    int length() const { return n_; }
    std::uint32_t support() const { return support_; }
    std::uint32_t neg_mask() const { return neg_; }

    /// Sign of entry pos (1-indexed): -1, 0 or +1.
    int sign_at(int pos) const {
        const std::uint32_t bit = 1u << (pos - 1);
        if (!(support_ & bit)) return 0;
        return (neg_ & bit) ? -1 : +1;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i) {
            if (support_ & (1u << i)) s[i] = (neg_ & (1u << i)) ? '-' : '+';
        }
        return s;
    }

    friend bool operator==(const SignVector& a, const SignVector& b) = default;

private:
    std::uint8_t n_ = 0;
    std::uint32_t support_ = 0;
    std::uint32_t neg_ = 0;
};

/// Orders vectors of equal length by their text form ('+' < '-' < '0', i.e.
/// ASCII). Used to assign reproducible element IDs.
inline bool text_less(const SignVector& a, const SignVector& b) {
    for (int i = 1, n = a.length(); i <= n; ++i) {
        const int sa = a.sign_at(i), sb = b.sign_at(i);
        const int ra = (sa == 1) ? 0 : (sa == -1) ? 1 : 2;
        const int rb = (sb == 1) ? 0 : (sb == -1) ? 1 : 2;
        if (ra != rb) return ra < rb;
    }
    return false;
}

/// Number of nonzero entries, 1 <= wt <= n.
inline int wt(const SignVector& v) { return std::popcount(v.support()); }

/// Number of sign changes with zeros ignored, e.g. var((+,-,0,-,+)) = 2.
inline int var(const SignVector& v) {
    int changes = 0, prev = 0;
    std::uint32_t s = v.support();
    while (s) {
        const int pos = std::countr_zero(s) + 1;
        const int sig = v.sign_at(pos);
        if (prev != 0 && sig != prev) ++changes;
        prev = sig;
        s &= s - 1;
    }
    return changes;
}

/// A set of positions in [n], bit pos-1 per position. Holds the cyclic sign
/// flips of a vector; always of even cardinality and supported on nonzero
/// entries of the source vector.
struct FlipSet {
    std::uint32_t positions = 0;

    int count() const { return std::popcount(positions); }
    bool contains(int pos) const { return (positions >> (pos - 1)) & 1u; }
    std::vector<int> to_list() const {
        std::vector<int> out;
        std::uint32_t s = positions;
        while (s) {
            out.push_back(std::countr_zero(s) + 1);
            s &= s - 1;
        }
        return out;
    }

    friend bool operator==(const FlipSet&, const FlipSet&) = default;
};

/// Cyclic sign flips: position i is a flip when the nearest preceding nonzero
/// entry, indices read cyclically, has the opposite sign. Invariant under
/// global negation, so well defined on projective classes.
inline FlipSet bar(const SignVector& v) {
    std::uint32_t flips = 0;
    // The predecessor of the first nonzero entry is the last nonzero entry.
    int prev = 0;
    for (int pos = v.length(); pos >= 1; --pos) {
        if (int s = v.sign_at(pos); s != 0) {
            prev = s;
            break;
        }
    }
    std::uint32_t s = v.support();
    while (s) {
        const int pos = std::countr_zero(s) + 1;
        const int sig = v.sign_at(pos);
        if (sig * prev < 0) flips |= 1u << (pos - 1);
        prev = sig;
        s &= s - 1;
    }
    return FlipSet{flips};
}

/// Order relation of the sign-variation posets: a <= b iff a (up to a global
/// sign) is b with some entries replaced by zeros.
inline bool leq(const SignVector& a, const SignVector& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("leq: length mismatch");
    if (a.support() & ~b.support()) return false;
    const std::uint32_t diff = (a.neg_mask() ^ b.neg_mask()) & a.support();
    return diff == 0 || diff == a.support();
}

/// All canonical vectors of length n with var <= m, in text order.
/// For m = n-1 the count is (3^n - 1) / 2.
inline std::vector<SignVector> enumerate_pv(int n, int m) {
    if (n < 1 || n > kMaxLen)
        throw std::invalid_argument("enumerate_pv: n out of range");
    if (m < 0 || m > n - 1)
        throw std::invalid_argument("enumerate_pv: require 0 <= m <= n-1");
    std::vector<SignVector> out;
    for (std::uint32_t support = 1; support < (1u << n); ++support) {
        // Signs on the support with the lowest bit forced '+': enumerate the
        // remaining bits as the negative set.
        const std::uint32_t rest = support & (support - 1);
        std::uint32_t neg = rest;
        while (true) {
            const SignVector v = SignVector::from_masks(n, support, neg);
            if (var(v) <= m) out.push_back(v);
            if (neg == 0) break;
            neg = (neg - 1) & rest;
        }
    }
    std::sort(out.begin(), out.end(), text_less);
    return out;
}

}  // namespace signvar
