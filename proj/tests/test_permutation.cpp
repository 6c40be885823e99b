#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "designkit/catalog.hpp"
#include "designkit/intersect.hpp"
#include "designkit/permutation.hpp"

using namespace designkit;

namespace {
const Design& d13() { return catalog_get("s2-4-13.L4.1").design(); }
const Design& d16() { return catalog_get("s2-4-16.L4.2").design(); }

Permutation random_perm(const LabelMap& labels, std::mt19937& rng) {
    std::vector<std::string> toks = labels.labels();
    std::shuffle(toks.begin(), toks.end(), rng);
    // random cycle structure over a random prefix
    size_t used = 2 + rng() % (toks.size() - 2);
    std::string text;
    size_t at = 0;
    while (at + 1 < used) {
        size_t len = 2 + rng() % std::min<size_t>(used - at, 5);
        if (len > used - at) len = used - at;
        if (len < 2) break;
        text += "(";
        for (size_t i = 0; i < len; ++i)
            text += (i ? "," : "") + toks[at + i];
        text += ")";
        at += len;
    }
    return text.empty() ? Permutation() : Permutation::parse(text);
}
} // namespace

TEST_CASE("cycle parsing") {
    Permutation pi = Permutation::parse("(0,1,2)(a,b)");
    CHECK(pi.apply("0") == "1");
    CHECK(pi.apply("2") == "0");
    CHECK(pi.apply("a") == "b");
    CHECK(pi.apply("z") == "z");
    CHECK(Permutation::parse("id").is_identity());
    CHECK(Permutation::parse(" ( 0 , 1 ) ").apply("0") == "1");

    CHECK_THROWS_AS(Permutation::parse("(0,1"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(0)"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(0,1)(1,2)"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("0,1"), ParseError);
}

TEST_CASE("identity maps a design to itself") {
    Design img = apply_permutation(d13(), Permutation::parse("id"));
    CHECK(img == d13());
}

TEST_CASE("applying a permutation with labels outside the design fails") {
    CHECK_THROWS_AS(apply_permutation(d13(), Permutation::parse("(0,z)")),
                    Error);
}

TEST_CASE("the v=13 row with intersection 5 replays") {
    Design i2 = apply_permutation(d13(), Permutation::parse("(a,b)(4,5)"));
    Design i3 = apply_permutation(d13(), Permutation::parse("(a,b)(c,8)"));
    auto common = common_blocks(d13(), i2, i3);
    CHECK(common.size() == 5);
    const Design arr1[] = {d13(), i2};
    const Design arr2[] = {d13(), i3};
    CHECK(common_blocks(std::span<const Design>(arr1, 2)).size() == 5);
    CHECK(common_blocks(std::span<const Design>(arr2, 2)).size() == 5);
}

TEST_CASE("images of Steiner designs stay Steiner") {
    Design img = apply_permutation(d16(), Permutation::parse("(6,7,c)"));
    CHECK(verify_steiner(img).is_steiner);
}

TEST_CASE("apply then apply-inverse is the identity (randomized)") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        Permutation pi = random_perm(d16().labels(), rng);
        Design img = apply_permutation(d16(), pi);
        CHECK(verify_steiner(img).is_steiner);
        CHECK(img.block_count() == d16().block_count());
        Design back = apply_permutation(img, pi.inverse());
        CHECK(back == d16());
    }
}

TEST_CASE("inverse and canonical printing") {
    Permutation pi = Permutation::parse("(5,4,3,2,1,0)");
    Permutation fwd = Permutation::parse("(0,1,2,3,4,5)");
    CHECK(pi.to_string() == fwd.inverse().to_string());
    CHECK(fwd.then(pi).is_identity());
}

TEST_CASE("common_blocks preconditions") {
    const Design& a = d13();
    const Design& b = d16();
    const Design arr[] = {a, b, a};
    CHECK_THROWS_AS(common_blocks(std::span<const Design>(arr, 3)), Error);
    CHECK(common_blocks(a, a, a).size() == a.block_count());
}

TEST_CASE("spectrum_scan flags rows violating same-common-blocks") {
    // replace the identity third column by a permutation sharing extra
    // blocks pairwise: D, D, pi D has pairwise D^D = everything
    std::vector<ScanRow> rows{{"id", "(a,b)(4,5)", -1}};
    auto rep = spectrum_scan(d13(), rows);
    REQUIRE(rep.rows.size() == 1);
    CHECK_FALSE(rep.rows[0].same_common);
    CHECK_FALSE(rep.all_same_common);
}

TEST_CASE("catalog tables replay their printed intersection numbers") {
    struct Want {
        const char* table;
        std::set<int> achieved;
        bool same_common;
    };
    const Want wants[] = {
        {"tbl.L4.1", {0, 1, 2, 3, 4, 5, 13}, true},
        {"tbl.L4.2", {0, 1, 2, 3, 4, 5, 6, 8, 20}, true},
        {"tbl.L4.3", {23, 29, 50}, false}, // row 1 shares a 24th block
        {"tbl.L4.4", {1}, true},
        {"tbl.Ex6.1", {7}, true},
    };
    for (const auto& w : wants) {
        const auto& entry = catalog_get(w.table);
        const auto& t = entry.table();
        auto rep =
            spectrum_scan(catalog_get(t.base_id).design(), t.rows);
        CHECK(rep.achieved == w.achieved);
        CHECK(rep.all_match_claims);
        CHECK(rep.all_same_common == w.same_common);
    }
}

TEST_CASE("gdd tables replay and keep groups invariant") {
    struct Want {
        const char* table;
        std::set<int> achieved;
    };
    const Want wants[] = {
        {"tbl.L4.5", {0, 1, 2, 4, 16}},
        {"tbl.L4.7.del0", {0, 1, 15}},
        {"tbl.L4.7.deld", {3}},
        {"tbl.L4.8.del0", {1, 9}},
        {"tbl.L4.8.del8", {0}},
    };
    for (const auto& w : wants) {
        const auto& t = catalog_get(w.table).table();
        auto rep = spectrum_scan(catalog_get(t.base_id).gdd(), t.rows);
        CHECK(rep.achieved == w.achieved);
        CHECK(rep.all_match_claims);
        CHECK(rep.all_same_common);
    }
    // a permutation moving points across groups is rejected
    const auto& t = catalog_get("tbl.L4.8.del0").table();
    std::vector<ScanRow> bad{{"(1,2)", "id", -1}};
    CHECK_THROWS_AS(spectrum_scan(catalog_get(t.base_id).gdd(), bad), Error);
}
