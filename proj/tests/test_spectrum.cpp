#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "designkit/spectrum.hpp"

using namespace designkit;

namespace {

// Exhaustive closure oracle: enumerate every slot combination.
std::set<long> brute_closure(const ClosureSpec& spec) {
    std::vector<std::vector<long>> slots;
    for (const auto& t : spec.terms)
        for (int i = 0; i < t.count; ++i) slots.push_back(t.base);
    std::set<long> out;
    std::vector<size_t> idx(slots.size(), 0);
    while (true) {
        long sum = spec.offset;
        for (size_t i = 0; i < slots.size(); ++i) sum += slots[i][idx[i]];
        out.insert(sum);
        size_t at = 0;
        while (at < slots.size() && ++idx[at] == slots[at].size()) {
            idx[at] = 0;
            ++at;
        }
        if (at == slots.size()) break;
    }
    return out;
}

} // namespace

TEST_CASE("block counts") {
    CHECK(bv(13) == 13);
    CHECK(bv(16) == 20);
    CHECK(bv(25) == 50);
    CHECK(bv(28) == 63);
    CHECK(bv(37) == 111);
    CHECK(bv(40) == 130);
    CHECK(bv(49) == 196);
    CHECK(bv(73) == 438);
    CHECK_THROWS_AS(bv(14), Error);
    CHECK_THROWS_AS(bv(0), Error);
    CHECK_THROWS_AS(bv(24), Error);
}

TEST_CASE("candidate intervals") {
    SpectrumSet s13 = i3(13);
    CHECK(s13.values == std::set<long>{0, 1, 2, 3, 4, 5, 13});
    SpectrumSet s16 = i3(16);
    std::set<long> want16;
    for (long x = 0; x <= 12; ++x) want16.insert(x);
    want16.insert(20);
    CHECK(s16.values == want16);
    SpectrumSet s40 = i3(40);
    CHECK(s40.values.count(122) == 1);
    CHECK(s40.values.count(123) == 0);
    CHECK(s40.values.count(129) == 0);
    CHECK(s40.values.count(130) == 1);
    CHECK(s40.values.size() == 124);
}

TEST_CASE("one-term closure") {
    ClosureSpec spec{{{1, {0, 1}}}, 0};
    auto res = sum_closure(spec);
    CHECK(res.set.values == std::set<long>{0, 1});
}

TEST_CASE("closure equals the exhaustive oracle on random specs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        ClosureSpec spec;
        int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
            ClosureTerm term;
            term.count = 1 + static_cast<int>(rng() % 3);
            size_t base_sz = 1 + rng() % 4;
            std::set<long> base;
            while (base.size() < base_sz)
                base.insert(static_cast<long>(rng() % 17));
            term.base.assign(base.begin(), base.end());
            spec.terms.push_back(term);
        }
        spec.offset = static_cast<long>(rng() % 5);
        auto res = sum_closure(spec);
        CHECK(res.set.values == brute_closure(spec));
        // every witness re-evaluates to its value
        for (const auto& [value, dec] : res.decomposition) {
            long sum = spec.offset;
            for (long x : dec) sum += x;
            CHECK(sum == value);
        }
    }
}

TEST_CASE("witnesses are lexicographically smallest") {
    ClosureSpec spec{{{2, {0, 2, 3}}}, 0};
    auto res = sum_closure(spec);
    CHECK(res.decomposition.at(3) == std::vector<long>{0, 3});
    CHECK(res.decomposition.at(5) == std::vector<long>{2, 3});
    CHECK(res.decomposition.at(2) == std::vector<long>{0, 2});
}

TEST_CASE("closure is monotone in the base sets") {
    ClosureSpec small{{{3, {0, 1, 4}}, {2, {0, 2}}}, 0};
    ClosureSpec big{{{3, {0, 1, 4, 5}}, {2, {0, 2, 7}}}, 0};
    auto a = sum_closure(small);
    auto b = sum_closure(big);
    for (long x : a.set.values) CHECK(b.set.contains(x));
}

TEST_CASE("compare reports missing and extra") {
    SpectrumSet a, b;
    a.values = {0, 1, 2, 5};
    b.values = {0, 1, 3};
    auto d = compare(a, b);
    CHECK(d.missing == std::vector<long>{3});
    CHECK(d.extra == std::vector<long>{2, 5});
    CHECK_FALSE(d.empty());
    CHECK(compare(a, a).empty());
    SpectrumSet e1, e2;
    CHECK(compare(e1, e2).empty());
}

TEST_CASE("ledger round-trip") {
    SpectrumSet s;
    s.label = "J3[13]";
    s.add(0, {"table-row", "tbl.L4.1#0"});
    s.add(5, {"table-row", "tbl.L4.1#5"});
    s.add(13, {"table-row", "tbl.L4.1#13"});
    std::string text = emit_ledger(s);
    std::istringstream in(text);
    auto sets = parse_ledger(in);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].label == "J3[13]");
    CHECK(sets[0].values == s.values);
    CHECK(sets[0].witnesses.at(5).ref == "tbl.L4.1#5");

    std::istringstream bad("J3[13] x table-row r\n");
    CHECK_THROWS_AS(parse_ledger(bad), ParseError);
}

TEST_CASE("closure input validation") {
    CHECK_THROWS_AS(sum_closure({{{1, {}}}, 0}), Error);
    CHECK_THROWS_AS(sum_closure({{{-1, {0}}}, 0}), Error);
    CHECK_THROWS_AS(sum_closure({{{1, {-2}}}, 0}), Error);
}
