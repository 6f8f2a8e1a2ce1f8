#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "signvar/poset.hpp"

using namespace signvar;

namespace {

// order relation reconstructed from covers by upward reachability
std::vector<std::vector<bool>> reachability(const RankedPoset& p) {
    const int count = p.size();
    std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
    std::vector<int> ids(count);
    for (int id = 0; id < count; ++id) ids[id] = id;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return p.rank(a) > p.rank(b); });
    for (const int id : ids) {
        reach[id][id] = true;
        for (const int hi : p.covers_above(id)) {
            for (int other = 0; other < count; ++other) {
                if (reach[hi][other]) reach[id][other] = true;
            }
        }
    }
    return reach;
}

}  // namespace

TEST_CASE("build_pnm small golden posets", "[poset]") {
    const RankedPoset p21 = RankedPoset::build_pnm(2, 1);
    REQUIRE(p21.size() == 4);
    std::map<std::string, int> ids;
    for (int id = 0; id < 4; ++id) ids[p21.element(id).to_string()] = id;
    REQUIRE(ids.count("+0") == 1);
    REQUIRE(ids.count("0+") == 1);
    REQUIRE(ids.count("++") == 1);
    REQUIRE(ids.count("+-") == 1);
    for (const char* lo : {"+0", "0+"}) {
        CHECK(p21.covers_above(ids[lo]).size() == 2);
        CHECK(p21.rank(ids[lo]) == 0);
    }
    for (const char* hi : {"++", "+-"}) {
        CHECK(p21.covers_below(ids[hi]).size() == 2);
        CHECK(p21.rank(ids[hi]) == 1);
    }

    const RankedPoset p10 = RankedPoset::build_pnm(1, 0);
    REQUIRE(p10.size() == 1);
    CHECK(p10.element(0).to_string() == "+");
    CHECK(p10.covers_above(0).empty());
}

TEST_CASE("P_{3,2} has 13 elements in ranks 3/6/4", "[poset]") {
    const RankedPoset p = RankedPoset::build_pnm(3, 2);
    REQUIRE(p.size() == 13);
    std::vector<int> per_rank(3, 0);
    for (int id = 0; id < p.size(); ++id) ++per_rank[p.rank(id)];
    CHECK(per_rank == std::vector<int>{3, 6, 4});
}

TEST_CASE("element IDs ascend with rank and index_of inverts", "[poset]") {
    for (const auto [n, m] : {std::pair{3, 2}, {4, 2}, {5, 4}}) {
        const RankedPoset p = RankedPoset::build_pnm(n, m);
        for (int id = 1; id < p.size(); ++id) CHECK(p.rank(id - 1) <= p.rank(id));
        for (int id = 0; id < p.size(); ++id) CHECK(p.index_of(p.element(id)) == id);
        CHECK(p.index_of(SignVector::parse(std::string(n, '+'))) >= 0);
    }
    // a vector with var > m is absent
    const RankedPoset p31 = RankedPoset::build_pnm(3, 1);
    CHECK(p31.index_of(SignVector::parse("+-+")) == -1);
}

TEST_CASE("covers reconstruct the order relation, n <= 4", "[poset]") {
    for (const auto [n, m] : {std::pair{3, 2}, {4, 3}, {4, 2}, {4, 0}}) {
        const RankedPoset p = RankedPoset::build_pnm(n, m);
        const auto reach = reachability(p);
        long long mismatches = 0;
        for (int a = 0; a < p.size(); ++a) {
            for (int b = 0; b < p.size(); ++b) {
                if (reach[a][b] != p.less_eq(a, b)) ++mismatches;
            }
            for (const int hi : p.covers_above(a)) {
                if (p.rank(hi) != p.rank(a) + 1) ++mismatches;
            }
        }
        INFO("n=" << n << " m=" << m);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("maximal chains of P_{n,n-1}: count and saturation, n <= 5", "[poset]") {
    long long expected = 1;  // 2^{n-1} n!
    for (int n = 1; n <= 5; ++n) {
        expected *= (n == 1) ? 1 : 2 * n;
        const RankedPoset p = RankedPoset::build_pnm(n, n - 1);
        CHECK(p.count_maximal_chains() == expected);
        for (int id = 0; id < p.size(); ++id) {
            if (p.covers_below(id).empty()) CHECK(p.rank(id) == 0);
            if (p.covers_above(id).empty()) CHECK(p.rank(id) == n - 1);
        }
    }
}

TEST_CASE("interval members come from the ambient order", "[poset]") {
    const RankedPoset p = RankedPoset::build_pnm(3, 2);
    const int bottom = p.index_of(SignVector::parse("00+"));
    const int top = p.index_of(SignVector::parse("+++"));
    REQUIRE(bottom >= 0);
    REQUIRE(top >= 0);
    const Interval iv = p.interval(bottom, top);
    for (const int id : iv.members) {
        CHECK(p.less_eq(bottom, id));
        CHECK(p.less_eq(id, top));
    }
    // {00+, 0++, +0+, +++}: two ways to fill one zero, then the top
    CHECK(iv.members.size() == 4);
    CHECK_THROWS_AS(p.interval(top, bottom), std::invalid_argument);
}

TEST_CASE("is_boolean on face-poset intervals", "[poset]") {
    const Face top{2, 5, 9};
    std::vector<Face> all;
    for (int mask = 0; mask < 8; ++mask) {
        Face f;
        for (int b = 0; b < 3; ++b) {
            if ((mask >> b) & 1) f.push_back(top[b]);
        }
        all.push_back(f);
    }
    CHECK(is_boolean(Face{}, top, all));            // full Boolean, 2^3 members
    CHECK(is_boolean(top, top, {top}));             // singleton interval
    CHECK_FALSE(is_boolean(Face{}, top, {Face{}})); // wrong count
    auto missing = all;
    missing[3] = missing[4];  // duplicate one member, drop another
    CHECK_FALSE(is_boolean(Face{}, top, missing));
    CHECK_FALSE(is_boolean(Face{1}, top, all));     // bottom not below top
}

TEST_CASE("DOT emission mentions every element", "[poset]") {
    const RankedPoset p = RankedPoset::build_pnm(2, 1);
    const std::string dot = p.to_dot();
    for (int id = 0; id < p.size(); ++id) {
        CHECK(dot.find(p.element(id).to_string()) != std::string::npos);
    }
}
