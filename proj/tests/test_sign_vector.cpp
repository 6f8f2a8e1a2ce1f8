#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "signvar/sign_vector.hpp"

using namespace signvar;

namespace {

// Reference implementations on plain sign arrays, independent of the packed
// encoding. Entries are -1/0/+1.

std::vector<int> entries_of(const SignVector& v) {
    std::vector<int> e(v.length());
    for (int i = 1; i <= v.length(); ++i) e[i - 1] = v.sign_at(i);
    return e;
}

int var_reference(const std::vector<int>& e) {
    int changes = 0, prev = 0;
    for (const int s : e) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// literal transcription of the cyclic-flip definition: position i is a flip
// when some j >= 1 has e[i-j]*e[i] < 0 with all entries strictly between zero
std::set<int> bar_reference(const std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    std::set<int> out;
    for (int i = 1; i <= n; ++i) {
        if (e[i - 1] == 0) continue;
        for (int j = 1; j <= n; ++j) {
            const int prev = e[((i - j - 1) % n + n) % n];
            if (prev == 0) continue;
            if (prev * e[i - 1] < 0) out.insert(i);
            break;
        }
    }
    return out;
}

bool leq_reference(const std::vector<int>& a, const std::vector<int>& b) {
    for (const int eps : {+1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 0 && eps * a[i] != b[i]) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

std::string negate_text(std::string s) {
    for (char& c : s) {
        if (c == '+') c = '-';
        else if (c == '-') c = '+';
    }
    return s;
}

}  // namespace

TEST_CASE("parse canonicalizes and rejects bad input", "[signvec]") {
    CHECK(SignVector::parse("0+-").to_string() == "0+-");
    CHECK(SignVector::parse("0-+").to_string() == "0+-");  // ~ negation
    CHECK(SignVector::parse("-+-").to_string() == "+-+");
    CHECK_THROWS_AS(SignVector::parse("000"), std::invalid_argument);
    CHECK_THROWS_AS(SignVector::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SignVector::parse("+x-"), std::invalid_argument);
}

TEST_CASE("canonical form is negation invariant", "[signvec]") {
    // exhaustive over all nonzero vectors of length <= 6
    for (int n = 1; n <= 6; ++n) {
        for (int code = 1; code < 1 << (2 * n); ++code) {
            std::string text;
            bool valid = true, nonzero = false;
            for (int i = 0; i < n; ++i) {
                switch ((code >> (2 * i)) & 3) {
                    case 0: text += '0'; break;
                    case 1: text += '+'; nonzero = true; break;
                    case 2: text += '-'; nonzero = true; break;
                    default: valid = false;
                }
            }
            if (!valid || !nonzero) continue;
            CHECK(SignVector::parse(text) == SignVector::parse(negate_text(text)));
        }
    }
}

TEST_CASE("var", "[signvec]") {
    CHECK(var(SignVector::parse("+-0-+")) == 2);
    CHECK(var(SignVector::parse("+++")) == 0);
    CHECK(var(SignVector::parse("+--++")) == 2);
}

TEST_CASE("wt", "[signvec]") {
    CHECK(wt(SignVector::parse("0+0-")) == 2);
    CHECK(wt(SignVector::parse("+--++")) == 5);
    CHECK(wt(SignVector::parse("000+0")) == 1);
}

TEST_CASE("bar golden values", "[signvec]") {
    CHECK(bar(SignVector::parse("0+--0+-")).to_list() == std::vector<int>{2, 3, 6, 7});
    CHECK(bar(SignVector::parse("+++")).to_list().empty());
    CHECK(bar(SignVector::parse("+--++")).to_list() == std::vector<int>{2, 4});
}

TEST_CASE("leq golden values", "[signvec]") {
    CHECK(leq(SignVector::parse("0+0-"), SignVector::parse("+++-")));
    CHECK(leq(SignVector::parse("0+0-"), SignVector::parse("+--+")));
    CHECK_FALSE(leq(SignVector::parse("+0"), SignVector::parse("0+")));
    CHECK_THROWS_AS(leq(SignVector::parse("+0"), SignVector::parse("+00")),
                    std::invalid_argument);
}

TEST_CASE("enumerate_pv golden sets", "[signvec]") {
    const auto pv21 = enumerate_pv(2, 1);
    std::set<std::string> texts;
    for (const auto& v : pv21) texts.insert(v.to_string());
    CHECK(texts == std::set<std::string>{"++", "+-", "+0", "0+"});

    const auto pv10 = enumerate_pv(1, 0);
    REQUIRE(pv10.size() == 1);
    CHECK(pv10[0].to_string() == "+");

    CHECK(enumerate_pv(3, 2).size() == 13);

    CHECK_THROWS_AS(enumerate_pv(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pv(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pv(0, 0), std::invalid_argument);
}

TEST_CASE("enumerate_pv counts (3^n - 1)/2 at m = n-1", "[signvec]") {
    long long power = 3;
    for (int n = 1; n <= 8; ++n) {
        CHECK(std::ssize(enumerate_pv(n, n - 1)) == (power - 1) / 2);
        power *= 3;
    }
}

TEST_CASE("var and wt agree with references, exhaustive n <= 8", "[signvec]") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& v : enumerate_pv(n, n - 1)) {
            const auto e = entries_of(v);
            CHECK(var(v) == var_reference(e));
            int nonzero = 0;
            for (const int s : e) nonzero += s != 0;
            CHECK(wt(v) == nonzero);
        }
    }
}

TEST_CASE("bar properties, exhaustive n <= 8", "[signvec]") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& v : enumerate_pv(n, n - 1)) {
            const auto e = entries_of(v);
            const FlipSet fs = bar(v);

            // matches the literal definition, on both representatives
            std::set<int> expected = bar_reference(e);
            auto negated = e;
            for (int& s : negated) s = -s;
            REQUIRE(bar_reference(negated) == expected);
            std::set<int> got(fs.to_list().begin(), fs.to_list().end());
            REQUIRE(got == expected);

            // even size, supported on nonzero entries
            CHECK(fs.count() % 2 == 0);
            for (const int pos : fs.to_list()) CHECK(v.sign_at(pos) != 0);

            // |bar| is var rounded up to even
            const int k = var(v);
            CHECK(fs.count() == (k % 2 == 0 ? k : k + 1));
        }
    }
}

TEST_CASE("leq is a partial order, exhaustive n <= 5", "[signvec]") {
    for (int n = 1; n <= 5; ++n) {
        const auto pv = enumerate_pv(n, n - 1);
        const int count = static_cast<int>(pv.size());
        std::vector<std::vector<bool>> rel(count, std::vector<bool>(count));
        long long reference_mismatches = 0;
        for (int a = 0; a < count; ++a) {
            for (int b = 0; b < count; ++b) {
                rel[a][b] = leq(pv[a], pv[b]);
                if (rel[a][b] != leq_reference(entries_of(pv[a]), entries_of(pv[b])))
                    ++reference_mismatches;
            }
        }
        long long violations = 0;
        for (int a = 0; a < count; ++a) {
            if (!rel[a][a]) ++violations;
            for (int b = 0; b < count; ++b) {
                if (a != b && rel[a][b] && rel[b][a]) ++violations;
                if (!rel[a][b]) continue;
                for (int c = 0; c < count; ++c) {
                    if (rel[b][c] && !rel[a][c]) ++violations;
                }
            }
        }
        INFO("n = " << n);
        CHECK(reference_mismatches == 0);
        CHECK(violations == 0);
    }
}
