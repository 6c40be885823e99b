#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "designkit/catalog.hpp"
#include "designkit/exact_cover.hpp"
#include "designkit/io.hpp"

using namespace designkit;

namespace {

// Brute-force oracle: all 4-subsets of [0,v) covering only uncovered
// pairs, then exhaustive subset enumeration by recursion over the block
// list (no column heuristics).
std::vector<std::vector<Block>> brute_completions(const Design& partial,
                                                  int v) {
    std::set<std::pair<int, int>> covered;
    for (const Block& b : partial.blocks())
        for (int x : b)
            for (int y : b)
                if (x < y) covered.insert({x, y});
    std::set<std::pair<int, int>> uncovered;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (!covered.count({x, y})) uncovered.insert({x, y});
    std::vector<Block> cands;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c)
                for (int d = c + 1; d < v; ++d) {
                    Block blk{a, b, c, d};
                    bool ok = true;
                    for (int x : blk)
                        for (int y : blk)
                            if (x < y) ok &= uncovered.count({x, y}) != 0;
                    if (ok) cands.push_back(blk);
                }
    std::vector<std::vector<Block>> sols;
    std::vector<Block> cur;
    auto rec = [&](auto&& self, size_t from,
                   std::set<std::pair<int, int>> rem) -> void {
        if (rem.empty()) {
            sols.push_back(cur);
            return;
        }
        for (size_t i = from; i < cands.size(); ++i) {
            bool ok = true;
            for (int x : cands[i])
                for (int y : cands[i])
                    if (x < y) ok &= rem.count({x, y}) != 0;
            if (!ok) continue;
            auto next = rem;
            for (int x : cands[i])
                for (int y : cands[i])
                    if (x < y) next.erase({x, y});
            cur.push_back(cands[i]);
            self(self, i + 1, std::move(next));
            cur.pop_back();
        }
    };
    rec(rec, 0, uncovered);
    for (auto& s : sols) std::sort(s.begin(), s.end());
    std::sort(sols.begin(), sols.end());
    return sols;
}

} // namespace

TEST_CASE("a complete design has exactly the empty completion") {
    const Design& d = catalog_get("s2-4-13.L4.1").design();
    auto sols = complete_cover(d, 13);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].empty());
}

TEST_CASE("one removed block is recovered uniquely") {
    const Design& d = catalog_get("s2-4-13.L4.1").design();
    Block removed = d.parse_block({"0", "1", "3", "9"});
    std::vector<Block> rest;
    for (const Block& b : d.blocks())
        if (!(b == removed)) rest.push_back(b);
    Design partial(d.labels(), 4, rest);
    auto sols = complete_cover(partial, 13, 0);
    REQUIRE(sols.size() == 1);
    REQUIRE(sols[0].size() == 1);
    CHECK(sols[0][0] == removed);
}

TEST_CASE("removed blocks reappear among completions (j <= 3)") {
    const Design& d = catalog_get("s2-4-13.L4.1").design();
    for (size_t j : {2u, 3u}) {
        std::vector<Block> removed(d.blocks().begin(),
                                   d.blocks().begin() + j);
        std::vector<Block> rest(d.blocks().begin() + j, d.blocks().end());
        Design partial(d.labels(), 4, rest);
        auto sols = complete_cover(partial, 13, 0);
        auto oracle = brute_completions(partial, 13);
        CHECK(sols == oracle);
        std::vector<Block> want = removed;
        std::sort(want.begin(), want.end());
        CHECK(std::find(sols.begin(), sols.end(), want) != sols.end());
        // every completion really completes
        for (const auto& sol : sols) {
            std::vector<Block> blocks = rest;
            blocks.insert(blocks.end(), sol.begin(), sol.end());
            CHECK(verify_steiner(Design(d.labels(), 4, blocks)).is_steiner);
        }
    }
}

TEST_CASE("doubly covered pairs are a precondition error") {
    Design partial(LabelMap::decimal(8), 4,
                   {Block{0, 1, 2, 3}, Block{0, 1, 4, 5}});
    CHECK_THROWS_AS(complete_cover(partial, 8), Error);
}

TEST_CASE("limit caps enumeration") {
    // v=9, k=3 has many completions from an empty partial; cap them
    Design empty(LabelMap::decimal(9), 3, {});
    auto some = complete_cover(empty, 9, 5);
    CHECK(some.size() == 5);
    for (const auto& sol : some) CHECK(sol.size() == 12);
}

TEST_CASE("the 102-block partial design completes to S(2,4,37)") {
    Design partial = develop(catalog_get("s2-4-37.step3").dev());
    auto sols = complete_cover(partial, 37, 4);
    REQUIRE_FALSE(sols.empty());
    for (const auto& sol : sols) {
        CHECK(sol.size() == 9);
        std::vector<Block> blocks = partial.blocks();
        blocks.insert(blocks.end(), sol.begin(), sol.end());
        Design full(partial.labels(), 4, blocks);
        CHECK(verify_steiner(full).is_steiner);
    }
}

TEST_CASE("all 72 completions of the step-3 partial design") {
    Design partial = develop(catalog_get("s2-4-37.step3").dev());
    auto sols = complete_cover(partial, 37, 0);
    CHECK(sols.size() == 72);
    CHECK(std::is_sorted(sols.begin(), sols.end()));
}
