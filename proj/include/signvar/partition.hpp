#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "signvar/complex.hpp"
#include "signvar/parallel.hpp"
#include "signvar/signed_perm.hpp"

namespace signvar {

inline constexpr long long kDefaultFiberCap = 10'000'000;

/// Output of the chain-to-permutation map: the window, its building blocks
/// omega'_1, ..., omega'_{r+1} (in that order), and the prefix lengths
/// ell(C,i) = |union_{j>i} I_j| for 0 <= i <= r+1.
struct PhiResult {
    SignedPerm perm;
    std::vector<std::vector<std::int8_t>> blocks;
    std::vector<int> lengths;
};

/// Maps a chain to an even signed permutation. Reading the chain bottom-up,
/// I_s collects the positions that become nonzero at step s (I_{r+1} the
/// positions still zero at the top); each position is negated iff it is a
/// cyclic sign flip of the top vector; each block is written in increasing
/// signed-integer order; the window is the blocks concatenated in reverse.
/// The empty chain maps to the identity.
inline PhiResult phi(const Chain& c, int n) {
    if (n < 1 || n > kMaxLen) throw std::invalid_argument("phi: n out of range");
    if (!is_valid_chain(c)) throw std::invalid_argument("phi: not a chain");
    if (!c.empty() && c[0].length() != n)
        throw std::invalid_argument("phi: chain length mismatch");

    const int r = static_cast<int>(c.size());
    const std::uint32_t top_bar = c.empty() ? 0u : bar(c.back()).positions;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

    PhiResult out;
    out.blocks.resize(r + 1);
    std::uint32_t prev_support = 0;
    for (int s = 1; s <= r + 1; ++s) {
        std::uint32_t newly;
        if (s <= r) {
            newly = c[s - 1].support() & ~prev_support;
            prev_support = c[s - 1].support();
        } else {
            newly = full & ~prev_support;
        }
        auto& block = out.blocks[s - 1];
        // increasing signed order: barred letters by descending position,
        // then unbarred by ascending position
        for (int pos = n; pos >= 1; --pos) {
            const std::uint32_t bit = 1u << (pos - 1);
            if ((newly & bit) && (top_bar & bit)) block.push_back(std::int8_t(-pos));
        }
        for (int pos = 1; pos <= n; ++pos) {
            const std::uint32_t bit = 1u << (pos - 1);
            if ((newly & bit) && !(top_bar & bit)) block.push_back(std::int8_t(pos));
        }
    }

    std::vector<std::int8_t> window;
    window.reserve(n);
    for (int s = r + 1; s >= 1; --s) {
        const auto& block = out.blocks[s - 1];
        window.insert(window.end(), block.begin(), block.end());
    }
    out.perm = SignedPerm(std::move(window));

    out.lengths.assign(r + 2, 0);
    for (int i = r; i >= 0; --i) {
        out.lengths[i] = out.lengths[i + 1] + static_cast<int>(out.blocks[i].size());
    }
    return out;
}

/// Whether removing the i-th chain element (1-indexed) leaves the image of
/// phi unchanged, by direct recomputation.
inline bool check_removal(const Chain& c, int i) {
    if (c.empty()) throw std::invalid_argument("check_removal: empty chain");
    if (i < 1 || i > static_cast<int>(c.size()))
        throw std::out_of_range("check_removal: index out of range");
    const int n = c[0].length();
    Chain sub = c;
    sub.erase(sub.begin() + (i - 1));
    return phi(sub, n).perm == phi(c, n).perm;
}

/// The removal criterion in terms of descents: ell(C,i) is not a descent of
/// phi(C), and when i is the top, the cyclic sign flips of the two highest
/// elements agree (the flip set below a one-element chain being empty).
inline bool removal_criterion(const Chain& c, int i) {
    if (c.empty()) throw std::invalid_argument("removal_criterion: empty chain");
    if (i < 1 || i > static_cast<int>(c.size()))
        throw std::out_of_range("removal_criterion: index out of range");
    const int n = c[0].length();
    const int k = static_cast<int>(c.size());
    const PhiResult pr = phi(c, n);
    const DescentData dd = descent_data(pr.perm);
    if (dd.contains(pr.lengths[i])) return false;
    if (i == k) {
        const std::uint32_t below = (k >= 2) ? bar(c[k - 2]).positions : 0u;
        if (bar(c[k - 1]).positions != below) return false;
    }
    return true;
}

/// Whether removing every chain element indexed by index_set (bit i-1 for
/// element i) preserves phi, by direct recomputation.
inline bool check_subset_removal(const Chain& c, std::uint32_t index_set) {
    if (c.empty()) throw std::invalid_argument("check_subset_removal: empty chain");
    const int n = c[0].length();
    Chain sub;
    for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
        if (!((index_set >> (i - 1)) & 1u)) sub.push_back(c[i - 1]);
    }
    return phi(sub, n).perm == phi(c, n).perm;
}

/// Subset form of the criterion: the ell-images of the removed indices avoid
/// the descent set, and the top vectors of the chain and the subchain have
/// the same cyclic sign flips.
inline bool subset_removal_criterion(const Chain& c, std::uint32_t index_set) {
    if (c.empty()) throw std::invalid_argument("subset_removal_criterion: empty chain");
    const int n = c[0].length();
    const int k = static_cast<int>(c.size());
    const PhiResult pr = phi(c, n);
    const DescentData dd = descent_data(pr.perm);
    for (int i = 1; i <= k; ++i) {
        if (((index_set >> (i - 1)) & 1u) && dd.contains(pr.lengths[i])) return false;
    }
    int new_top = k;
    while (new_top >= 1 && ((index_set >> (new_top - 1)) & 1u)) --new_top;
    const std::uint32_t sub_bar = (new_top >= 1) ? bar(c[new_top - 1]).positions : 0u;
    return sub_bar == bar(c[k - 1]).positions;
}

/// Reference to a face of an order complex: cardinality bucket and index.
struct FaceRef {
    std::int32_t card = 0;
    std::int64_t idx = 0;
    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// One fiber of phi: the faces mapping to perm, together with the interval
/// data [C_pi, C^pi] that the fiber is checked against.
struct Fiber {
    SignedPerm perm;
    std::vector<FaceRef> faces;  // ordered by (card, idx)
    Chain top_chain;             // C^pi
    Chain bottom;                // C_pi
};

struct PartitionCertificate {
    int n = 0;
    int m = 0;
    bool verified = false;
    std::string failure_reason;  // first failing check; empty when verified
    std::string witness;         // offending window or face
    long long total_faces = 0;
    std::vector<long long> h_from_partition;  // fibers counted by |C_pi|
    std::map<std::string, Fiber> fibers;      // keyed by window bytes
};

inline Chain face_to_chain(const OrderComplex& k, int card, long long idx) {
    Chain c;
    c.reserve(card);
    if (card > 0) {
        for (const std::int32_t id : k.face(card, idx)) c.push_back(k.poset().element(id));
    }
    return c;
}

/// Applies phi to every face, groups the fibers, and verifies the Boolean
/// interval partitioning: fibers are disjoint, cover all faces, equal the
/// intervals [C_pi, C^pi], are Boolean of size 2^{n-des}, the image matches
/// the predicted permutation set, and the h-vector equals the |C_pi| counts.
/// For odd m < n-1 the certificate reports whichever check fails first.
inline PartitionCertificate partition(const OrderComplex& k,
                                      long long fiber_cap = kDefaultFiberCap,
                                      int threads = 1) {
    const int n = k.n();
    const int m = k.m();
    PartitionCertificate cert;
    cert.n = n;
    cert.m = m;
    cert.total_faces = k.total_faces();
    cert.h_from_partition.assign(n + 1, 0);
    if (cert.total_faces > fiber_cap)
        throw CapExceeded("partition: fiber cap exceeded", cert.total_faces);

    const auto fail = [&](const std::string& reason, const std::string& witness) {
        if (cert.failure_reason.empty()) {
            cert.failure_reason = reason;
            cert.witness = witness;
        }
    };

    // map every face, in parallel, into per-face window slots
    for (int card = 0; card <= k.max_card(); ++card) {
        const long long count = k.face_count(card);
        std::vector<std::int8_t> windows(static_cast<std::size_t>(count) * n);
        parallel_for(0, count, threads, [&](long long lo, long long hi) {
            for (long long idx = lo; idx < hi; ++idx) {
                const PhiResult pr = phi(face_to_chain(k, card, idx), n);
                std::copy(pr.perm.window().begin(), pr.perm.window().end(),
                          windows.begin() + idx * n);
            }
        });
        for (long long idx = 0; idx < count; ++idx) {
            std::string key(reinterpret_cast<const char*>(windows.data() + idx * n), n);
            cert.fibers[std::move(key)].faces.push_back(FaceRef{card, idx});
        }
    }

    long long covered = 0;
    for (auto& [key, fiber] : cert.fibers) {
        std::vector<std::int8_t> window(key.begin(), key.end());
        fiber.perm = SignedPerm(std::move(window));
        covered += static_cast<long long>(fiber.faces.size());

        if (!is_even_signed(fiber.perm)) {
            fail("image permutation is not even-signed", fiber.perm.to_window_string());
            continue;
        }
        fiber.top_chain = chain_of_perm(fiber.perm);
        fiber.bottom = bottom_chain(fiber.perm);
        cert.h_from_partition[fiber.bottom.size()] += 1;
        if (!cert.failure_reason.empty()) continue;

        // resolve the interval in the complex
        Face top_face, bottom_face;
        bool resolvable = true;
        for (const SignVector& v : fiber.top_chain) {
            const int id = k.poset().index_of(v);
            if (id < 0) {
                resolvable = false;
                break;
            }
            top_face.push_back(static_cast<std::int32_t>(id));
        }
        if (!resolvable) {
            fail("saturated chain C^pi leaves the complex", fiber.perm.to_window_string());
            continue;
        }
        for (const SignVector& v : fiber.bottom)
            bottom_face.push_back(static_cast<std::int32_t>(k.poset().index_of(v)));

        const int free_count = n - static_cast<int>(fiber.bottom.size());
        if (fiber.faces.size() != (std::size_t(1) << free_count)) {
            fail("fiber size differs from 2^(n-des)", fiber.perm.to_window_string());
            continue;
        }

        // fiber must be exactly the interval {C : C_pi <= C <= C^pi}
        std::vector<std::int32_t> free_ids;
        for (const std::int32_t id : top_face) {
            if (std::find(bottom_face.begin(), bottom_face.end(), id) == bottom_face.end())
                free_ids.push_back(id);
        }
        std::vector<Face> expected;
        expected.reserve(std::size_t(1) << free_count);
        for (std::uint32_t mask = 0; mask < (1u << free_count); ++mask) {
            Face f = bottom_face;
            for (int b = 0; b < free_count; ++b) {
                if ((mask >> b) & 1u) f.push_back(free_ids[b]);
            }
            std::sort(f.begin(), f.end());
            expected.push_back(std::move(f));
        }
        std::sort(expected.begin(), expected.end());

        std::vector<Face> got;
        got.reserve(fiber.faces.size());
        for (const FaceRef& ref : fiber.faces) {
            const auto span = k.face(ref.card, ref.idx);
            got.emplace_back(span.begin(), span.end());
        }
        std::sort(got.begin(), got.end());
        if (got != expected) {
            fail("fiber differs from the interval [C_pi, C^pi]",
                 fiber.perm.to_window_string());
            continue;
        }
        if (!is_boolean(bottom_face, top_face, got)) {
            fail("interval is not Boolean", fiber.perm.to_window_string());
            continue;
        }
    }

    if (covered != cert.total_faces)
        fail("fibers do not cover all faces", std::to_string(covered));

    // image must be S^D_{n,m} for m < n-1 and all of S^D_n for m = n-1
    {
        const int max_neg = (m == n - 1) ? n : m;
        std::set<std::string> expected_keys;
        for_each_sdn(n, max_neg, [&](const std::vector<std::int8_t>& w) {
            expected_keys.emplace(reinterpret_cast<const char*>(w.data()), w.size());
        });
        bool same = expected_keys.size() == cert.fibers.size();
        if (same) {
            for (const auto& [key, fiber] : cert.fibers) {
                if (!expected_keys.count(key)) {
                    same = false;
                    fail("image contains an unexpected permutation",
                         fiber.perm.to_window_string());
                    break;
                }
            }
        } else {
            fail("image size differs from the expected permutation set",
                 std::to_string(cert.fibers.size()) + " vs " +
                     std::to_string(expected_keys.size()));
        }
    }

    // h-vector from face counts must match the |C_pi| counts
    {
        const std::vector<long long> h = h_vector(k.f_vector(), n);
        for (int j = 0; j <= n; ++j) {
            if (h[j] != cert.h_from_partition[j]) {
                fail("h-vector differs from partition counts at j=" + std::to_string(j),
                     std::to_string(h[j]) + " vs " + std::to_string(cert.h_from_partition[j]));
                break;
            }
        }
    }

    cert.verified = cert.failure_reason.empty();
    return cert;
}

}  // namespace signvar
