#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "signvar/complex.hpp"
#include "signvar/partition.hpp"
#include "signvar/signed_perm.hpp"

namespace signvar {

/// One instantiated identity: lhs and rhs as computed, pass iff equal.
struct IdentityReport {
    std::string name;
    int n = -1;
    int m = -1;
    int j = -1;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = false;
};

inline IdentityReport make_report(std::string name, int n, int m, int j, long long lhs,
                                  long long rhs) {
    IdentityReport r;
    r.name = std::move(name);
    r.n = n;
    r.m = m;
    r.j = j;
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = (lhs == rhs);
    return r;
}

/// Klee's generalized Dehn-Sommerville relations for a (d-1)-dimensional
/// homology manifold:
///   h_{d-j} - h_j = (-1)^j C(d,j) ((-1)^{d-1} chi~ - 1).
/// The reduced Euler characteristic is taken as computed from the f-vector,
/// never from a closed form.
inline std::vector<IdentityReport> dehn_sommerville(const std::vector<long long>& h, int d,
                                                    long long euler_reduced) {
    if (static_cast<int>(h.size()) != d + 1)
        throw std::invalid_argument("dehn_sommerville: h must have d+1 entries");
    const long long factor = ((d - 1) % 2 == 0 ? euler_reduced : -euler_reduced) - 1;
    std::vector<IdentityReport> out;
    for (int j = 0; j <= d; ++j) {
        const long long lhs = h[d - j] - h[j];
        const long long rhs = (j % 2 == 0 ? 1 : -1) * binom(d, j) * factor;
        out.push_back(make_report("dehn_sommerville", -1, -1, j, lhs, rhs));
    }
    return out;
}

/// The palindromic identities for the type-D Eulerian numbers:
///   D(n,j) = D(n,n-j)                     for n even,
///   D(n,j) = D(n,n-j) + (-1)^j C(n,j)     for n odd.
inline std::vector<IdentityReport> corollary_ds(int n) {
    const std::vector<long long> d = eulerian_d(n);
    std::vector<IdentityReport> out;
    for (int j = 0; j <= n; ++j) {
        long long rhs = d[n - j];
        if (n % 2 == 1) rhs += (j % 2 == 0 ? 1 : -1) * binom(n, j);
        out.push_back(make_report("corollary_ds", n, -1, j, d[j], rhs));
    }
    return out;
}

struct CrossCheckOptions {
    long long face_cap = kDefaultFaceCap;
    long long fiber_cap = kDefaultFiberCap;
    int threads = 1;
};

/// Three-way h-vector comparison for one complex: h from the f-vector against
/// (1) descent counts over the predicted permutation set, (2) |C_pi| counts
/// from the partition certificate, and for m = n-1 also (3) the type-D
/// Eulerian numbers.
inline std::vector<IdentityReport> cross_check(int n, int m,
                                               const CrossCheckOptions& opt = {}) {
    if (!(m == n - 1 || m % 2 == 0))
        throw std::invalid_argument("cross_check: requires m even or m = n-1");
    const OrderComplex k = OrderComplex::build_pnm(n, m, opt.face_cap, opt.threads);
    const std::vector<long long> h = h_vector(k.f_vector(), n);
    const PartitionCertificate cert = partition(k, opt.fiber_cap, opt.threads);

    std::vector<long long> descent_counts(n + 1, 0);
    for_each_sdn(n, m == n - 1 ? n : m, [&](const std::vector<std::int8_t>& w) {
        int des = 0, prev = 0;
        for (const int v : w) {
            if (prev > v) ++des;
            prev = v;
        }
        ++descent_counts[des];
    });

    std::vector<IdentityReport> out;
    for (int j = 0; j <= n; ++j) {
        out.push_back(make_report("h_vs_descent_counts", n, m, j, h[j], descent_counts[j]));
        out.push_back(
            make_report("h_vs_partition", n, m, j, h[j], cert.h_from_partition[j]));
    }
    if (m == n - 1) {
        const std::vector<long long> d = eulerian_d(n);
        for (int j = 0; j <= n; ++j) {
            out.push_back(make_report("h_vs_eulerian_d", n, m, j, h[j], d[j]));
        }
    }
    return out;
}

}  // namespace signvar
