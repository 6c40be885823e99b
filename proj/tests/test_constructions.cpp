#include <catch2/catch_amalgamated.hpp>

#include "designkit/assemble.hpp"
#include "designkit/catalog.hpp"
#include "designkit/constructions.hpp"
#include "designkit/exact_cover.hpp"
#include "designkit/io.hpp"
#include "designkit/spectrum.hpp"

#include "test_util.hpp"

using namespace designkit;

namespace {
const Design& d16() { return catalog_get("s2-4-16.L4.2").design(); }

// identical triple shorthand
DesignTriple same(const Design& d) { return {d, d, d}; }
GddTriple same(const GDD& g) { return {g, g, g}; }

std::vector<WeightingIngredient> uniform_ingredients(size_t n,
                                                     const GddTriple& t) {
    return std::vector<WeightingIngredient>(n, WeightingIngredient{t});
}
} // namespace

TEST_CASE("verify_gdd verdicts") {
    GDD good = catalog_get("gdd.L4.5").gdd();
    CHECK(verify_gdd(good).valid);
    CHECK(good.blocks.size() == 16);

    // leaving one parallel-class block among the blocks breaks the GDD
    GDD bad = good;
    bad.blocks.push_back(bad.groups.front());
    std::sort(bad.blocks.begin(), bad.blocks.end());
    bad.block_sizes.insert(bad.groups.front().size());
    auto rep = verify_gdd(bad);
    CHECK_FALSE(rep.valid);
}

TEST_CASE("weighting the 3^4 base by 4 with identical 4^4 ingredients") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    REQUIRE(base.blocks.size() == 9);
    GddTriple ing = gdd_triple("tbl.L4.5", 16); // the identical triple
    auto res = weighting(base, std::vector<int>(12, 4),
                         uniform_ingredients(9, ing));
    CHECK(res.out[0].group_type() == "12^4");
    CHECK(res.measured_common == 144); // 9 * 16 cross-pairs re-derived
    CHECK(res.ingredient_sum == 144);
    CHECK(res.same_common);
    for (const GDD& g : res.out) CHECK(verify_gdd(g).valid);
    CHECK(res.out[0].blocks.size() == 9 * 16);
}

TEST_CASE("one ingredient triple at b_A = 0 drops the common count") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    auto ings = uniform_ingredients(9, gdd_triple("tbl.L4.5", 16));
    ings[4] = WeightingIngredient{gdd_triple("tbl.L4.5", 0)};
    auto res = weighting(base, std::vector<int>(12, 4), ings);
    CHECK(res.measured_common == 128); // 8*16 + 0
    CHECK(res.ingredient_sum == 128);
    CHECK(res.same_common);
}

TEST_CASE("weighting rejects mismatched ingredient types") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    // 3^5-type ingredient for a k=4 block: group count mismatch
    auto bad = uniform_ingredients(9, gdd_triple("tbl.L4.7.del0", 15));
    CHECK_THROWS_AS(weighting(base, std::vector<int>(12, 4), bad), Error);
    // weight 3 but 4^4 ingredients: group size mismatch
    auto ings = uniform_ingredients(9, gdd_triple("tbl.L4.5", 16));
    CHECK_THROWS_AS(weighting(base, std::vector<int>(12, 3), ings), Error);
}

TEST_CASE("fill_plus_one on identical 3^4 triples gives S(2,4,13)") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    GddTriple triple = same(base);
    std::vector<DesignTriple> fillers;
    Design b4(LabelMap::decimal(4), 4, {Block{0, 1, 2, 3}});
    for (size_t gi = 0; gi < base.groups.size(); ++gi) {
        auto toks = fill1_tokens(base, gi, "inf");
        fillers.push_back(relabel(same(b4), toks));
    }
    auto res = fill_plus_one(triple, fillers);
    CHECK(res.out[0].v() == 13);
    CHECK(res.measured_common == 13); // 9 + 4
    CHECK(res.gdd_common + res.filler_sum == 13);
    CHECK(verify_steiner(res.out[0]).is_steiner);
    CHECK(res.out[0] == res.out[1]);
}

TEST_CASE("weight-4 pipeline: 3^4 base filled to three S(2,4,49)s") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    struct Pick {
        std::array<int, 9> alphas;
        std::array<int, 4> betas;
    };
    const Pick picks[] = {
        {{16, 16, 16, 16, 16, 16, 16, 16, 16}, {13, 13, 13, 13}},
        {{16, 16, 16, 16, 16, 16, 16, 16, 0}, {13, 13, 13, 13}},
        {{4, 2, 1, 0, 16, 16, 16, 16, 16}, {0, 1, 2, 3}},
        {{0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}},
    };
    for (const auto& pick : picks) {
        std::vector<WeightingIngredient> ings;
        long want = 0;
        for (int a : pick.alphas) {
            ings.push_back({gdd_triple("tbl.L4.5", a)});
            want += a;
        }
        auto w = weighting(base, std::vector<int>(12, 4), ings);
        std::vector<DesignTriple> fillers;
        for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
            int b = pick.betas[gi];
            want += b;
            fillers.push_back(relabel(
                design_triple("tbl.L4.1", b),
                fill1_tokens(w.out[0], gi, "inf")));
        }
        auto res = fill_plus_one(w.out, fillers);
        CHECK(res.out[0].v() == 49);
        CHECK(res.measured_common == want);
        CHECK(res.same_common);
        for (const Design& d : res.out)
            CHECK(verify_steiner(d).is_steiner);
        CHECK(res.out[0].block_count() == 196);
    }
}

TEST_CASE("fill_plus_four: 9^4 triple filled to v=40") {
    // base: weight 3 on the 3^4 GDD with J_f3[13]-style ingredients
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    std::vector<WeightingIngredient> ings;
    long alpha_sum = 0;
    const int alphas[] = {9, 1, 0, 9, 1, 0, 9, 1, 0};
    for (int a : alphas) {
        ings.push_back({a == 0 ? gdd_triple("tbl.L4.8.del8", 0)
                               : gdd_triple("tbl.L4.8.del0", a)});
        alpha_sum += a;
    }
    auto w = weighting(base, std::vector<int>(12, 3), ings);
    CHECK(w.out[0].group_type() == "9^4");
    CHECK(w.measured_common == alpha_sum);

    std::vector<std::string> y_toks{"y1", "y2", "y3", "y4"};
    std::vector<DesignTriple> fillers;
    long beta_sum = 0;
    const int betas[] = {13, 5, 3, 13};
    for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
        DesignTriple f = design_triple("tbl.L4.1", betas[gi]);
        beta_sum += betas[gi];
        std::vector<std::string> group_toks;
        for (int p : w.out[0].groups[gi])
            group_toks.push_back(w.out[0].labels.label(p));
        fillers.push_back(
            fill4_filler(f, first_common_block(f), group_toks, y_toks));
    }
    auto res = fill_plus_four(w.out, fillers, y_toks);
    CHECK(res.out[0].v() == 40);
    CHECK(res.out[0].block_count() == 130);
    // b + sum b_i - (s-1)
    CHECK(res.measured_common == alpha_sum + beta_sum - 3);
    CHECK(res.same_common);
    // identical inputs throughout give b_40 exactly
    std::vector<DesignTriple> same_fillers;
    std::vector<WeightingIngredient> same_ings =
        uniform_ingredients(9, gdd_triple("tbl.L4.8.del0", 9));
    auto w2 = weighting(base, std::vector<int>(12, 3), same_ings);
    for (size_t gi = 0; gi < w2.out[0].groups.size(); ++gi) {
        DesignTriple f = design_triple("tbl.L4.1", 13);
        std::vector<std::string> group_toks;
        for (int p : w2.out[0].groups[gi])
            group_toks.push_back(w2.out[0].labels.label(p));
        same_fillers.push_back(
            fill4_filler(f, first_common_block(f), group_toks, y_toks));
    }
    auto res2 = fill_plus_four(w2.out, same_fillers, y_toks);
    CHECK(res2.measured_common == bv(40));
}

TEST_CASE("fill_plus_one rejects fillers of the wrong order") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    GddTriple triple = same(base);
    std::vector<DesignTriple> fillers;
    for (size_t gi = 0; gi < base.groups.size(); ++gi) {
        if (gi == 2) {
            // a 13-point filler cannot sit on a 3-point group plus inf
            std::vector<std::string> toks = fill1_tokens(base, gi, "inf");
            for (int j = 0; j < 9; ++j)
                toks.push_back("pad" + std::to_string(j));
            fillers.push_back(relabel(design_triple("tbl.L4.1", 13), toks));
        } else {
            Design b4(LabelMap::decimal(4), 4, {Block{0, 1, 2, 3}});
            fillers.push_back(
                relabel(same(b4), fill1_tokens(base, gi, "inf")));
        }
    }
    CHECK_THROWS_AS(fill_plus_one(triple, fillers), Error);
}

TEST_CASE("fill_plus_four rejects fillers missing y") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    auto w = weighting(base, std::vector<int>(12, 3),
                       uniform_ingredients(9, gdd_triple("tbl.L4.8.del0", 9)));
    std::vector<std::string> y_toks{"y1", "y2", "y3", "y4"};
    std::vector<DesignTriple> fillers;
    for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
        DesignTriple f = design_triple("tbl.L4.1", 0); // no common block
        std::vector<std::string> toks;
        for (int p : w.out[0].groups[gi])
            toks.push_back(w.out[0].labels.label(p));
        toks.insert(toks.end(), y_toks.begin(), y_toks.end());
        // relabel directly: y lands wherever, fillers need not share it
        fillers.push_back(relabel(f, toks));
    }
    CHECK_THROWS_AS(fill_plus_four(w.out, fillers, y_toks), Error);
}

TEST_CASE("4v+4 assembly: weight 4 on the 3^4 GDD, fill four to v=52") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    std::vector<WeightingIngredient> ings;
    long want = 0;
    const int alphas[] = {16, 16, 4, 2, 1, 0, 16, 16, 16};
    for (int a : alphas) {
        ings.push_back({gdd_triple("tbl.L4.5", a)});
        want += a;
    }
    auto w = weighting(base, std::vector<int>(12, 4), ings);
    CHECK(w.out[0].group_type() == "12^4");

    std::vector<std::string> y_toks{"y1", "y2", "y3", "y4"};
    std::vector<DesignTriple> fillers;
    const int betas[] = {20, 8, 6, 5}; // v=16 rows sharing a block
    for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
        DesignTriple f = design_triple("tbl.L4.2", betas[gi]);
        want += betas[gi];
        std::vector<std::string> group_toks;
        for (int p : w.out[0].groups[gi])
            group_toks.push_back(w.out[0].labels.label(p));
        fillers.push_back(
            fill4_filler(f, first_common_block(f), group_toks, y_toks));
    }
    auto res = fill_plus_four(w.out, fillers, y_toks);
    want -= 3;
    CHECK(res.out[0].v() == 52);
    CHECK(res.out[0].block_count() == 221);
    CHECK(res.measured_common == want);
    CHECK(res.same_common);
    for (const Design& d : res.out) CHECK(verify_steiner(d).is_steiner);
}

TEST_CASE("weight-3 assembly: 4^4 base filled to v=49") {
    const GDD& base = catalog_get("gdd.L4.5").gdd();
    std::vector<WeightingIngredient> ings;
    long want = 0;
    const int alphas[] = {9, 9, 9, 9, 1, 1, 1, 1, 0, 0, 9, 9, 1, 9, 9, 9};
    for (int a : alphas) {
        ings.push_back({a == 0 ? gdd_triple("tbl.L4.8.del8", 0)
                               : gdd_triple("tbl.L4.8.del0", a)});
        want += a;
    }
    auto w = weighting(base, std::vector<int>(16, 3), ings);
    CHECK(w.out[0].group_type() == "12^4");
    std::vector<DesignTriple> fillers;
    const int betas[] = {5, 4, 13, 0};
    for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
        fillers.push_back(relabel(design_triple("tbl.L4.1", betas[gi]),
                                  fill1_tokens(w.out[0], gi, "inf")));
        want += betas[gi];
    }
    auto res = fill_plus_one(w.out, fillers);
    CHECK(res.out[0].v() == 49);
    CHECK(res.measured_common == want);
    for (const Design& d : res.out) CHECK(verify_steiner(d).is_steiner);
}

TEST_CASE("expansion v -> 3v+1 with the KTS(27) data file") {
    auto [sts, res27] = parse_res(read_data_file("kts27.res"));
    REQUIRE(sts.v() == 27);
    REQUIRE(res27.classes.size() == 13);

    const Design& base = catalog_get("s2-4-13.L4.1").design();
    std::vector<int> ident(13);
    for (int i = 0; i < 13; ++i) ident[static_cast<size_t>(i)] = i;

    std::array<std::vector<std::vector<Block>>, 3> attach{
        attach_from_resolution(res27, ident),
        attach_from_resolution(res27, ident),
        attach_from_resolution(res27, ident)};
    auto r = expand_3v1(same(base), sts, attach);
    CHECK(r.out[0].v() == 40);
    CHECK(r.out[0].block_count() == 130);
    CHECK(r.measured_common == 130);

    // rotate three classes among the copies: lose 3 * 9
    std::vector<int> rot = ident, rot2 = ident;
    rot[5] = 6; rot[6] = 7; rot[7] = 5;
    rot2[5] = 7; rot2[6] = 5; rot2[7] = 6;
    std::array<std::vector<std::vector<Block>>, 3> attach2{
        attach_from_resolution(res27, ident),
        attach_from_resolution(res27, rot),
        attach_from_resolution(res27, rot2)};
    auto r2 = expand_3v1(same(base), sts, attach2);
    CHECK(r2.measured_common == 130 - 27);
    CHECK(r2.same_common);

    // swapping two classes only breaks same-common-blocks but still
    // produces designs; measured drops by 2 * 9 without the property
    std::vector<int> swp = ident;
    std::swap(swp[5], swp[6]);
    std::array<std::vector<std::vector<Block>>, 3> attach3{
        attach_from_resolution(res27, ident),
        attach_from_resolution(res27, swp),
        attach_from_resolution(res27, ident)};
    auto r3 = expand_3v1(same(base), sts, attach3);
    CHECK(r3.measured_common == 130 - 18);
    CHECK_FALSE(r3.same_common);
}

TEST_CASE("expansion with in-subsystem class rotation") {
    auto [sts, res27] = parse_res(read_data_file("kts27.res"));
    const Design& base = catalog_get("s2-4-13.L4.1").design();
    std::vector<int> ident(13);
    for (int i = 0; i < 13; ++i) ident[static_cast<size_t>(i)] = i;

    // plane 0 of the AG(3,3) file: points p000..p022 (indices 0..8)
    std::set<int> plane;
    for (int p = 0; p < 9; ++p) plane.insert(p);
    auto a2 = attach_from_resolution(res27, ident);
    auto a3 = attach_from_resolution(res27, ident);
    swap_within_subsystem(a2, plane, {0, 1, 2}, {1, 2, 0});
    swap_within_subsystem(a3, plane, {0, 1, 2}, {2, 0, 1});
    std::array<std::vector<std::vector<Block>>, 3> attach{
        attach_from_resolution(res27, ident), a2, a3};
    auto r = expand_3v1(same(base), sts, attach);
    // three plane-classes of 3 triples rotate: lose 9
    CHECK(r.measured_common == 130 - 9);
    CHECK(r.same_common);
    for (const Design& d : r.out) CHECK(verify_steiner(d).is_steiner);
}

TEST_CASE("subsystem swap on a filled S(2,4,49)") {
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    auto w = weighting(base, std::vector<int>(12, 4),
                       uniform_ingredients(9, gdd_triple("tbl.L4.5", 16)));
    std::vector<DesignTriple> fillers;
    for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi)
        fillers.push_back(relabel(design_triple("tbl.L4.1", 13),
                                  fill1_tokens(w.out[0], gi, "inf")));
    Design host = fill_plus_one(w.out, fillers).out[0];
    REQUIRE(verify_steiner(host).is_steiner);

    // the first group + inf carries an S(2,4,13) subdesign
    std::vector<int> sub_points;
    for (int p : w.out[0].groups[0])
        sub_points.push_back(host.labels().index(w.out[0].labels.label(p)));
    sub_points.push_back(host.labels().index("inf"));
    std::sort(sub_points.begin(), sub_points.end());

    std::vector<std::string> sub_toks;
    for (int p : sub_points) sub_toks.push_back(host.labels().label(p));

    // identical subs: everything stays
    {
        std::vector<Block> inside;
        std::set<int> sp(sub_points.begin(), sub_points.end());
        for (const Block& b : host.blocks()) {
            bool in = true;
            for (int p : b) in &= sp.count(p) != 0;
            if (in) inside.push_back(b);
        }
        REQUIRE(inside.size() == 13);
        std::vector<int> back(static_cast<size_t>(host.v()), -1);
        for (size_t i = 0; i < sub_points.size(); ++i)
            back[static_cast<size_t>(sub_points[i])] = static_cast<int>(i);
        std::vector<Block> sb;
        for (const Block& b : inside) {
            std::vector<int> pts;
            for (int p : b) pts.push_back(back[static_cast<size_t>(p)]);
            sb.emplace_back(std::move(pts));
        }
        Design sub(LabelMap(sub_toks), 4, sb);
        auto r = subsystem_swap(host, sub_points, same(sub));
        CHECK(r.measured_common == static_cast<long>(host.block_count()));
        CHECK(r.out[0] == host);
    }

    // a w=13 triple with common 5 gives b_v - 8
    {
        auto subs = relabel(design_triple("tbl.L4.1", 5), sub_toks);
        auto r = subsystem_swap(host, sub_points, subs);
        CHECK(r.measured_common ==
              static_cast<long>(host.block_count()) - 8);
        CHECK(r.same_common);
        for (const Design& d : r.out) CHECK(verify_steiner(d).is_steiner);
    }
    // common 0 gives b_v - 13
    {
        auto subs = relabel(design_triple("tbl.L4.1", 0), sub_toks);
        auto r = subsystem_swap(host, sub_points, subs);
        CHECK(r.measured_common ==
              static_cast<long>(host.block_count()) - 13);
    }
    // hosts without a subdesign on the points are rejected
    {
        std::vector<int> wrong(sub_points);
        wrong[0] = (wrong[0] + 1) % host.v();
        std::sort(wrong.begin(), wrong.end());
        auto subs = relabel(design_triple("tbl.L4.1", 13), sub_toks);
        CHECK_THROWS_AS(subsystem_swap(host, wrong, subs), Error);
    }
}

TEST_CASE("cover_replace swaps completions of the step-3 partial design") {
    Design partial = develop(catalog_get("s2-4-37.step3").dev());
    auto sols = complete_cover(partial, 37, 0);
    REQUIRE(sols.size() == 72);
    std::vector<Block> blocks = partial.blocks();
    blocks.insert(blocks.end(), sols[0].begin(), sols[0].end());
    Design full(partial.labels(), 4, blocks);
    REQUIRE(verify_steiner(full).is_steiner);

    // identity replacement
    Design again = cover_replace(full, sols[0], sols[0]);
    CHECK(again == full);

    // replace by a different completion
    Design other = cover_replace(full, sols[0], sols[1]);
    CHECK(verify_steiner(other).is_steiner);
    CHECK_FALSE(other == full);

    // a new set missing one pair is rejected with the pair named
    std::vector<Block> broken(sols[1].begin(), sols[1].end() - 1);
    CHECK_THROWS_AS(cover_replace(full, sols[0], broken), Error);
}
