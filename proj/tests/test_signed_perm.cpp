#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "signvar/complex.hpp"
#include "signvar/signed_perm.hpp"

using namespace signvar;

namespace {

// brute force over sign masks on *positions* (the library enumerates masks on
// values); descent counting transcribed from the w(pi) definition
std::vector<long long> eulerian_reference(int n) {
    std::vector<long long> counts(n + 1, 0);
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> w{0};
            for (int i = 0; i < n; ++i)
                w.push_back((mask >> i) & 1u ? -word[i] : word[i]);
            int negs = 0;
            for (const int v : w) negs += v < 0;
            if (negs % 2) continue;
            int des = 0;
            for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) des += w[i] > w[i + 1];
            ++counts[des];
        }
    } while (std::next_permutation(word.begin(), word.end()));
    return counts;
}

std::uint32_t support_of(const SignVector& v) { return v.support(); }

}  // namespace

TEST_CASE("parse_window and the pair view", "[sperm]") {
    const SignedPerm p = SignedPerm::parse_window("-2,3,4,-1");
    CHECK(p.to_window_string() == "-2,3,4,-1");
    CHECK(p.abs_word() == std::vector<int>{2, 3, 4, 1});
    CHECK(p.neg_set() == 0b0011u);  // numbers 1 and 2

    const SignedPerm id3 = SignedPerm::parse_window("1,2,3");
    CHECK(id3 == SignedPerm::identity(3));

    const SignedPerm ex3 = SignedPerm::parse_window("-2,3,1,5,-4");
    CHECK(ex3.abs_word() == std::vector<int>{2, 3, 1, 5, 4});
    CHECK(ex3.neg_set() == 0b01010u);  // numbers 2 and 4

    CHECK_THROWS_AS(SignedPerm::parse_window("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse_window("1,-1"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse_window("1,4"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse_window("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse_window("1,,2"), std::invalid_argument);
}

TEST_CASE("is_even_signed", "[sperm]") {
    CHECK(is_even_signed(SignedPerm::parse_window("-2,3,4,-1")));
    CHECK(is_even_signed(SignedPerm::identity(4)));
    CHECK_FALSE(is_even_signed(SignedPerm::parse_window("-1,2,3")));
}

TEST_CASE("descent sets of w(pi) = (0, pi(1), ..., pi(n))", "[sperm]") {
    const DescentData ex = descent_data(SignedPerm::parse_window("-2,3,1,5,-4"));
    CHECK(ex.to_list() == std::vector<int>{0, 2, 4});
    CHECK(ex.des == 3);

    CHECK(descent_data(SignedPerm::identity(5)).des == 0);

    const DescentData both = descent_data(SignedPerm::parse_window("-1,-2"));
    CHECK(both.to_list() == std::vector<int>{0, 1});
}

TEST_CASE("enumerate_sdn golden sets and counts", "[sperm]") {
    const auto sd2 = enumerate_sdn(2);
    std::set<std::string> windows;
    for (const auto& p : sd2) windows.insert(p.to_window_string());
    CHECK(windows == std::set<std::string>{"1,2", "2,1", "-1,-2", "-2,-1"});

    CHECK(enumerate_sdn(3).size() == 24);

    const auto plain = enumerate_sdn(2, 0);
    REQUIRE(plain.size() == 2);
    CHECK(plain[0].to_window_string() == "1,2");
    CHECK(plain[1].to_window_string() == "2,1");

    CHECK_THROWS_AS(enumerate_sdn(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_sdn(0, 0), std::invalid_argument);

    // |S^D_{n,m}| = n! * sum_{k even, k <= m} C(n,k)
    for (int n = 1; n <= 5; ++n) {
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (int m = 0; m <= n; ++m) {
            long long expected = 0;
            for (int k = 0; k <= m; k += 2) expected += binom(n, k);
            expected *= fact;
            CHECK(std::ssize(enumerate_sdn(n, m)) == expected);
        }
    }
}

TEST_CASE("eulerian_d small tables", "[sperm]") {
    CHECK(eulerian_d(1) == std::vector<long long>{1, 0});
    CHECK(eulerian_d(2) == std::vector<long long>{1, 2, 1});
    CHECK(eulerian_d(3) == std::vector<long long>{1, 10, 13, 0});
}

TEST_CASE("eulerian_d agrees with the position-mask reference, n <= 6", "[sperm]") {
    for (int n = 1; n <= 6; ++n) CHECK(eulerian_d(n) == eulerian_reference(n));
}

TEST_CASE("eulerian_d row sums and descent-free element, n <= 8", "[sperm]") {
    long long order = 1;  // 2^{n-1} n!
    for (int n = 1; n <= 8; ++n) {
        order *= (n == 1) ? 1 : 2 * n;
        const auto d = eulerian_d(n);
        CHECK(std::accumulate(d.begin(), d.end(), 0ll) == order);
        CHECK(d[0] == 1);
        CHECK(descent_data(SignedPerm::identity(n)).des == 0);
    }
}

TEST_CASE("chain_of_perm reproduces the worked example", "[sperm]") {
    const Chain c = chain_of_perm(SignedPerm::parse_window("-2,3,1,5,-4"));
    REQUIRE(c.size() == 5);
    CHECK(c[0].to_string() == "000+0");
    CHECK(c[1].to_string() == "000++");
    CHECK(c[2].to_string() == "+00++");
    CHECK(c[3].to_string() == "+0-++");
    CHECK(c[4].to_string() == "+--++");

    // underlying support chain {4} in {4,5} in {1,4,5} in {1,3,4,5} in [5]
    CHECK(support_of(c[0]) == 0b01000u);
    CHECK(support_of(c[1]) == 0b11000u);
    CHECK(support_of(c[2]) == 0b11001u);
    CHECK(support_of(c[3]) == 0b11101u);
    CHECK(support_of(c[4]) == 0b11111u);

    const Chain id2 = chain_of_perm(SignedPerm::identity(2));
    REQUIRE(id2.size() == 2);
    CHECK(id2[0].to_string() == "0+");
    CHECK(id2[1].to_string() == "++");

    CHECK_THROWS_AS(chain_of_perm(SignedPerm::parse_window("-1,2")), std::invalid_argument);
}

TEST_CASE("chain_of_perm tops realize the requested flip set, n <= 6", "[sperm]") {
    for (int n = 1; n <= 6; ++n) {
        for_each_sdn(n, n, [&](const std::vector<std::int8_t>& w) {
            const SignedPerm p{w};
            const Chain c = chain_of_perm(p);
            REQUIRE(wt(c.back()) == n);
            REQUIRE(bar(c.back()).positions == p.neg_set());
            REQUIRE(is_valid_chain(c));
        });
    }
}

TEST_CASE("bottom_chain selects the descent weights", "[sperm]") {
    const Chain c = bottom_chain(SignedPerm::parse_window("-2,3,1,5,-4"));
    REQUIRE(c.size() == 3);
    CHECK(c[0].to_string() == "000+0");
    CHECK(c[1].to_string() == "+00++");
    CHECK(c[2].to_string() == "+--++");

    CHECK(bottom_chain(SignedPerm::identity(4)).empty());

    // Des(-1,-2) = {0,1} keeps weights {2,1}: the full chain
    const SignedPerm p = SignedPerm::parse_window("-1,-2");
    CHECK(bottom_chain(p) == chain_of_perm(p));
}

TEST_CASE("bottom_chain size and top membership, exhaustive n <= 5", "[sperm]") {
    for (int n = 1; n <= 5; ++n) {
        for_each_sdn(n, n, [&](const std::vector<std::int8_t>& w) {
            const SignedPerm p{w};
            const DescentData dd = descent_data(p);
            const Chain full = chain_of_perm(p);
            const Chain bottom = bottom_chain(p);
            REQUIRE(std::ssize(bottom) == dd.des);
            const bool has_top = !bottom.empty() && bottom.back() == full.back();
            REQUIRE(has_top == dd.contains(0));
        });
    }
}
