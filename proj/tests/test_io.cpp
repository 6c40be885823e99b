#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "designkit/catalog.hpp"
#include "designkit/io.hpp"

using namespace designkit;

TEST_CASE("design round-trip is the identity") {
    for (const char* id :
         {"s2-4-13.L4.1", "s2-4-16.L4.2", "s2-4-25.L4.3", "s2-4-25.Ex6.1",
          "s2-4-28.L6.3s1", "s2-4-28.L6.3s2"}) {
        const Design& d = catalog_get(id).design();
        std::string once = to_text(d);
        Design back = parse_des(once);
        CHECK(back == d);
        CHECK(to_text(back) == once);
    }
}

TEST_CASE("design round-trip on random subdesigns") {
    std::mt19937 rng(7);
    const Design& d = catalog_get("s2-4-25.L4.3").design();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Block> blocks = d.blocks();
        std::shuffle(blocks.begin(), blocks.end(), rng);
        blocks.resize(1 + static_cast<size_t>(rng() % 40));
        Design sub(d.labels(), 4, blocks);
        Design back = parse_des(to_text(sub));
        CHECK(back == sub);
        CHECK(to_text(back) == to_text(sub));
    }
}

TEST_CASE("comments and blank lines are ignored") {
    Design d = parse_des("# a file\nv 4 k 4\n\n0 1 2 3  # the block\n");
    CHECK(d.v() == 4);
    CHECK(d.block_count() == 1);
}

TEST_CASE("design parse errors carry line info") {
    CHECK_THROWS_AS(parse_des(""), ParseError);
    CHECK_THROWS_AS(parse_des("v 4\n0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_des("v 4 k 4\n0 1 2 9\n"), ParseError);
    CHECK_THROWS_AS(parse_des("v 4 k 4\nlabels a b\na b\n"), ParseError);
    CHECK_THROWS_AS(parse_des("v four k 4\n"), ParseError);
    CHECK_THROWS_AS(parse_des("v 4 k 4\n0 1 2\n"), Error);
}

TEST_CASE("gdd round-trip") {
    const GDD& g = catalog_get("gdd.L4.7.del0").gdd();
    std::string once;
    {
        std::ostringstream os;
        emit_gdd(os, g);
        once = os.str();
    }
    GDD back = parse_gdd(once);
    CHECK(back.groups == g.groups);
    CHECK(back.blocks == g.blocks);
    CHECK(back.labels == g.labels);
    std::ostringstream os2;
    emit_gdd(os2, back);
    CHECK(os2.str() == once);
}

TEST_CASE("dev round-trip and development equality") {
    for (const char* id : {"s2-4-37.step1", "s2-4-37.step2",
                           "s2-4-37.step3"}) {
        const DevelopmentSpec& spec = catalog_get(id).dev();
        std::string once = to_text(spec);
        DevelopmentSpec back = parse_dev(once);
        CHECK(to_text(back) == once);
        CHECK(develop(back) == develop(spec));
    }
}

TEST_CASE("dev parse errors") {
    CHECK_THROWS_AS(parse_dev("classes a\nbase a0 a1\n"), ParseError);
    CHECK_THROWS_AS(parse_dev("order 9\nbase a0\n"), ParseError);
    CHECK_THROWS_AS(parse_dev("order 9\nclasses a\nbase a0 b1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_dev("order 9\nclasses a\nbase a0 a9\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_dev("order 9\nclasses a\nwhat a0\n"), ParseError);
}

TEST_CASE("trade file round-trip") {
    TradeSystem tr;
    tr.mu = 2;
    tr.k = 4;
    tr.t = 2;
    tr.labels = LabelMap::decimal(6);
    tr.collections = {{Block{0, 1, 2, 3}, Block{0, 1, 4, 5}},
                      {Block{0, 1, 2, 4}, Block{0, 1, 3, 5}}};
    std::string once = to_text(tr);
    TradeSystem back = parse_trd(once);
    CHECK(back.mu == tr.mu);
    CHECK(back.collections == tr.collections);
    CHECK(to_text(back) == once);

    CHECK_THROWS_AS(parse_trd("mu 2 k 4\n"), ParseError);
    CHECK_THROWS_AS(parse_trd("mu 2 k 4 t 2\nlabels a b c d\na b c d\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_trd("mu 2 k 4 t 2\nlabels a b c\ncollection\na b z\n"),
        ParseError);

    // a labels line is optional: points index by first appearance
    TradeSystem bare =
        parse_trd("mu 2 k 3 t 2\ncollection\nx y z\ncollection\nx y w\n");
    CHECK(bare.labels.size() == 4);
    CHECK(bare.labels.label(0) == "x");
    CHECK(bare.labels.label(3) == "w");
}

TEST_CASE("resolution files parse and validate") {
    const auto& [d, r] = catalog_get("kts9").resolution();
    CHECK(d.v() == 9);
    CHECK(r.classes.size() == 4);
    std::ostringstream os;
    emit_res(os, d, r);
    auto [d2, r2] = parse_res(os.str());
    CHECK(d2 == d);
    CHECK(r2.classes == r.classes);

    // swapping one triple between classes breaks the partition
    std::string good = "v 9 k 3\nclass\n0 1 2\n3 4 5\n6 7 8\nclass\n"
                       "0 3 6\n1 4 7\n2 5 8\nclass\n0 4 8\n1 5 6\n2 3 7\n"
                       "class\n0 5 7\n1 3 8\n2 4 6\n";
    CHECK_NOTHROW(parse_res(good));
    std::string bad = good;
    bad.replace(bad.find("0 3 6"), 5, "0 1 2");
    CHECK_THROWS_AS(parse_res(bad), Error);
}
