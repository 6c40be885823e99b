#ifndef DESIGNKIT_REPRO_HPP
#define DESIGNKIT_REPRO_HPP

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "designkit/assemble.hpp"
#include "designkit/catalog.hpp"
#include "designkit/constructions.hpp"
#include "designkit/exact_cover.hpp"
#include "designkit/spectrum.hpp"
#include "designkit/trade_search.hpp"

// Replay pipelines: each token re-runs one cataloged computation and
// checks every claimed value. Claims whose witnesses are not printed in
// the source tables are listed as not replayed instead of guessed.
namespace designkit {

struct ReproCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproReport {
    std::string token;
    std::vector<ReproCheck> checks;
    std::vector<std::string> not_replayed;
    std::vector<SpectrumSet> registered;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline std::vector<std::string> repro_tokens() {
    return {"L4.1", "L4.2", "L4.3",  "L4.4",   "L4.5",
            "L4.7", "L4.8", "Ex6.1", "L6.2",   "L6.3",
            "L6.4", "T5.1u4", "T5.3", "T5.4-closure", "L2.1-search"};
}

namespace detail {

inline std::string set_str(const std::set<long>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (long x : s) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << "}";
    return os.str();
}

inline std::set<long> to_long(const std::set<int>& s) {
    return std::set<long>(s.begin(), s.end());
}

inline void check(ReproReport& rep, const std::string& name, bool ok,
                  const std::string& detail = "") {
    rep.checks.push_back({name, ok, detail});
}

// Scan a catalog table and compare the achieved set with `want`.
inline ScanReport run_table(ReproReport& rep, const std::string& table_id,
                            const std::set<long>& want) {
    const PermTable& t = catalog_get(table_id).table();
    ScanReport scan = t.on_gdd
                          ? spectrum_scan(catalog_get(t.base_id).gdd(), t.rows)
                          : spectrum_scan(catalog_get(t.base_id).design(),
                                          t.rows);
    check(rep, table_id + " row claims replay", scan.all_match_claims);
    check(rep, table_id + " achieved set", to_long(scan.achieved) == want,
          "got " + set_str(to_long(scan.achieved)) + ", want " +
              set_str(want));
    return scan;
}

inline SpectrumSet register_scan(const std::string& label,
                                 const std::string& table_id,
                                 const ScanReport& scan) {
    SpectrumSet s;
    s.label = label;
    for (const auto& row : scan.rows) {
        std::string kind =
            row.same_common ? "table-row" : "table-row-flagged";
        s.add(row.measured,
              {kind, table_id + "#" + std::to_string(row.row.claimed)});
    }
    return s;
}

inline std::set<long> agreement_counts(int m) {
    // fixed-slot counts of a discordant permutation triple (id, b, g):
    // the moved set supports derangements b, g with b(i) != g(i), which
    // exist exactly for moved sizes 0 and >= 3
    std::set<long> out{static_cast<long>(m)};
    for (int moved = 3; moved <= m; ++moved) out.insert(m - moved);
    return out;
}

} // namespace detail

inline ReproReport run_reproduction(const std::string& token);

namespace detail {

inline ReproReport repro_l41() {
    ReproReport rep;
    rep.token = "L4.1";
    auto scan = run_table(rep, "tbl.L4.1", {0, 1, 2, 3, 4, 5, 13});
    check(rep, "rows satisfy same-common-blocks", scan.all_same_common);
    SpectrumSet j = register_scan("J3[13]", "tbl.L4.1", scan);
    auto diff = compare(j, i3(13));
    check(rep, "J3[13] = I3[13]", diff.empty());
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_l42() {
    ReproReport rep;
    rep.token = "L4.2";
    auto scan = run_table(rep, "tbl.L4.2", {0, 1, 2, 3, 4, 5, 6, 8, 20});
    check(rep, "rows satisfy same-common-blocks", scan.all_same_common);
    SpectrumSet j = register_scan("J3[16]", "tbl.L4.2", scan);
    auto diff = compare(j, i3(16));
    check(rep, "missing vs I3[16] is {7,9,10,11,12}",
          diff.missing == std::vector<long>{7, 9, 10, 11, 12} &&
              diff.extra.empty(),
          "missing " +
              set_str(std::set<long>(diff.missing.begin(),
                                     diff.missing.end())));
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_l43() {
    ReproReport rep;
    rep.token = "L4.3";
    auto scan = run_table(rep, "tbl.L4.3", {23, 29, 50});
    // the first printed row shares one extra block pairwise; report it
    check(rep, "row flags recorded",
          !scan.rows[0].same_common && scan.rows[1].same_common &&
              scan.rows[2].same_common,
          "row (0,1,2,3)/(2,1,0,3) fails strict same-common-blocks");
    rep.registered.push_back(register_scan("J3[25]", "tbl.L4.3", scan));
    rep.not_replayed.push_back(
        "0 in J3[25] needs three external designs (ingest .des files and "
        "run intersect)");
    return rep;
}

inline ReproReport repro_l44() {
    ReproReport rep;
    rep.token = "L4.4";
    auto scan = run_table(rep, "tbl.L4.4", {1});
    check(rep, "rows satisfy same-common-blocks", scan.all_same_common);
    SpectrumSet j = register_scan("J3[28]", "tbl.L4.4", scan);
    j.add(63, {"identical-triple", "s2-4-28.L6.3s1"});
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_l45() {
    ReproReport rep;
    rep.token = "L4.5";
    auto scan = run_table(rep, "tbl.L4.5", {0, 1, 2, 4, 16});
    check(rep, "rows satisfy same-common-blocks", scan.all_same_common);
    rep.registered.push_back(register_scan("Jp3[16]", "tbl.L4.5", scan));
    return rep;
}

inline ReproReport repro_l47() {
    ReproReport rep;
    rep.token = "L4.7";
    auto s1 = run_table(rep, "tbl.L4.7.del0", {0, 1, 15});
    auto s2 = run_table(rep, "tbl.L4.7.deld", {3});
    check(rep, "rows satisfy same-common-blocks",
          s1.all_same_common && s2.all_same_common);
    SpectrumSet j = register_scan("Jf3[16]", "tbl.L4.7.del0", s1);
    for (const auto& row : s2.rows)
        j.add(row.measured,
              {"table-row", "tbl.L4.7.deld#" + std::to_string(row.row.claimed)});
    check(rep, "Jf3[16] = {0,1,3,15}",
          j.values == std::set<long>{0, 1, 3, 15});
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_l48() {
    ReproReport rep;
    rep.token = "L4.8";
    auto s1 = run_table(rep, "tbl.L4.8.del0", {1, 9});
    auto s2 = run_table(rep, "tbl.L4.8.del8", {0});
    check(rep, "rows satisfy same-common-blocks",
          s1.all_same_common && s2.all_same_common);
    SpectrumSet j = register_scan("Jf3[13]", "tbl.L4.8.del0", s1);
    for (const auto& row : s2.rows)
        j.add(row.measured,
              {"table-row", "tbl.L4.8.del8#" + std::to_string(row.row.claimed)});
    check(rep, "Jf3[13] = {0,1,9}", j.values == std::set<long>{0, 1, 9});
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_ex61() {
    ReproReport rep;
    rep.token = "Ex6.1";
    const auto& entry = catalog_get("s2-4-25.Ex6.1");
    const Design& d = entry.design();
    std::set<int> s;
    for (const auto& tok : entry.marked_subset)
        s.insert(d.labels().index(tok));
    auto part = classify_by_subset(d, s);
    check(rep, "blocks split 7/8/35",
          part.a.size() == 7 && part.b.size() == 8 && part.c.size() == 35);

    const PermTable& t = catalog_get("tbl.Ex6.1").table();
    Permutation pi = Permutation::parse(t.rows[0].p2);
    Design d2 = apply_permutation(d, pi);
    Design d3 = apply_permutation(d, pi.inverse());
    auto common = common_blocks(d, d2, d3);
    check(rep, "mutual intersection is 7", common.size() == 7);
    std::vector<std::vector<Block>> cols{d.blocks(), d2.blocks(),
                                         d3.blocks()};
    check(rep, "triple has same common blocks", same_common_blocks(cols));
    long on_a = 0;
    std::set<Block> aset(part.a.begin(), part.a.end());
    for (const Block& b : common) on_a += aset.count(b) ? 1 : 0;
    check(rep, "decomposes as 1 on A plus 6 elsewhere",
          on_a == 1 && static_cast<long>(common.size()) - on_a == 6);

    SpectrumSet j;
    j.label = "J3[25]";
    j.add(7, {"table-row", "tbl.Ex6.1#7"});
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_l62() {
    ReproReport rep = repro_ex61();
    rep.token = "L6.2";
    SpectrumSet& j = rep.registered.back();
    j.add(50, {"identical-triple", "s2-4-25.Ex6.1"});
    rep.not_replayed.push_back(
        "[0,11] u {13,15,17,20,29} u [22,24] except 7: the permutations "
        "behind these intersection numbers are not printed");
    rep.not_replayed.push_back(
        "42 not in J3[25]: imported 2-way fact, not re-verified");
    return rep;
}

inline ReproReport repro_l63() {
    ReproReport rep;
    rep.token = "L6.3";
    for (const char* id : {"s2-4-28.L6.3s1", "s2-4-28.L6.3s2"}) {
        const auto& entry = catalog_get(id);
        const Design& d = entry.design();
        check(rep, std::string(id) + " verifies",
              verify_steiner(d).is_steiner && d.block_count() == 63);
        std::set<int> s;
        for (const auto& tok : entry.marked_subset)
            s.insert(d.labels().index(tok));
        auto part = classify_by_subset(d, s);
        size_t n = entry.marked_subset.size();
        check(rep, std::string(id) + " induces a sub-STS",
              part.a.size() == n * (n - 1) / 6);
    }
    auto scan = run_table(rep, "tbl.L4.4", {1});
    check(rep, "step-1 permutation row gives 1", scan.all_match_claims);
    rep.not_replayed.push_back(
        "[2,7] u [10,12] u [16,19] u [21,24] u {14,27,28,33,37,39} (step 1) "
        "and [5,17] u [19,21] u {23,24,28,33,39} (step 2): permutations not "
        "printed");
    return rep;
}

inline ReproReport repro_l64() {
    ReproReport rep;
    rep.token = "L6.4";
    for (const char* id : {"s2-4-37.step1", "s2-4-37.step2"}) {
        const auto& entry = catalog_get(id);
        Design d = develop(entry.dev());
        check(rep, std::string(id) + " develops to 111 Steiner blocks",
              d.block_count() == 111 && verify_steiner(d).is_steiner);
        std::set<int> s;
        for (const auto& tok : entry.marked_subset)
            s.insert(d.labels().index(tok));
        size_t n = entry.marked_subset.size();
        check(rep, std::string(id) + " carries its marked sub-STS",
              classify_by_subset(d, s).a.size() == n * (n - 1) / 6);
    }
    Design partial = develop(catalog_get("s2-4-37.step3").dev());
    check(rep, "step3 develops to 102 blocks", partial.block_count() == 102);
    auto sols = complete_cover(partial, 37, 0);
    check(rep, "exact cover finds the 72 nine-block completions",
          sols.size() == 72 && sols[0].size() == 9);

    auto build = [&](const std::vector<Block>& c) {
        std::vector<Block> blocks = partial.blocks();
        blocks.insert(blocks.end(), c.begin(), c.end());
        return Design(partial.labels(), 4, blocks);
    };
    Design first = build(sols[0]);
    check(rep, "a completed design verifies for v=37",
          verify_steiner(first).is_steiner);

    // completion triples with the same-common property realizing 0, 1, 9
    std::map<long, std::array<size_t, 3>> found;
    for (size_t i = 0; i < sols.size() && found.size() < 2; ++i)
        for (size_t j = i + 1; j < sols.size() && found.size() < 2; ++j)
            for (size_t k = j + 1; k < sols.size() && found.size() < 2;
                 ++k) {
                std::vector<std::vector<Block>> cols{sols[i], sols[j],
                                                     sols[k]};
                std::span<const std::vector<Block>> view(cols);
                auto mutual = common_blocks(view);
                if (!same_common_blocks(view)) continue;
                long m = static_cast<long>(mutual.size());
                if ((m == 0 || m == 1) && !found.count(m))
                    found[m] = {i, j, k};
            }
    check(rep, "completion triples realize common 0 and 1",
          found.count(0) == 1 && found.count(1) == 1);

    SpectrumSet j37;
    j37.label = "J3[37]";
    j37.add(111, {"identical-triple", "s2-4-37.step1"});
    for (const auto& [m, idx] : found) {
        // replace C by the two other completions and re-measure
        Design a = build(sols[idx[0]]);
        Design b = cover_replace(a, sols[idx[0]], sols[idx[1]]);
        Design c = cover_replace(a, sols[idx[0]], sols[idx[2]]);
        auto common = common_blocks(a, b, c);
        bool ok = static_cast<long>(common.size()) == 102 + m &&
                  verify_steiner(b).is_steiner &&
                  verify_steiner(c).is_steiner;
        check(rep,
              "cover_replace realizes 102+" + std::to_string(m) +
                  " common blocks",
              ok);
        j37.add(102 + m,
                {"cover-replace", "s2-4-37.step3 completions " +
                                      std::to_string(idx[0]) + "," +
                                      std::to_string(idx[1]) + "," +
                                      std::to_string(idx[2])});
    }
    rep.registered.push_back(std::move(j37));
    rep.not_replayed.push_back(
        "step-1/step-2 intersection claims and the step-3 B-part "
        "permutations: not printed in the source tables, so only the "
        "completion route is replayed");
    return rep;
}

inline ReproReport repro_t51u4() {
    ReproReport rep;
    rep.token = "T5.1u4";
    const GDD& base = catalog_get("gdd.L4.8.del0").gdd();
    const std::vector<std::pair<std::array<int, 9>, std::array<int, 4>>>
        picks = {
            {{16, 16, 16, 16, 16, 16, 16, 16, 16}, {13, 13, 13, 13}},
            {{16, 16, 16, 16, 16, 16, 16, 16, 0}, {13, 13, 13, 13}},
            {{16, 16, 16, 16, 16, 16, 16, 16, 16}, {13, 13, 5, 0}},
            {{4, 2, 1, 0, 16, 16, 16, 16, 16}, {0, 1, 2, 3}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}},
            {{1, 1, 1, 1, 1, 1, 1, 1, 1}, {5, 4, 3, 2}},
        };
    for (const auto& [alphas, betas] : picks) {
        long want = 0;
        std::vector<WeightingIngredient> ings;
        for (int a : alphas) {
            ings.push_back({gdd_triple("tbl.L4.5", a)});
            want += a;
        }
        auto w = weighting(base, std::vector<int>(12, 4), ings);
        std::vector<DesignTriple> fillers;
        for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
            fillers.push_back(
                relabel(design_triple("tbl.L4.1", betas[gi]),
                        fill1_tokens(w.out[0], gi, "inf")));
            want += betas[gi];
        }
        auto res = fill_plus_one(w.out, fillers);
        bool ok = res.out[0].v() == 49 && res.measured_common == want &&
                  res.same_common;
        for (const Design& d : res.out) ok &= verify_steiner(d).is_steiner;
        std::ostringstream name;
        name << "selection sum " << want << " measured "
             << res.measured_common;
        check(rep, name.str(), ok);
    }
    ClosureSpec spec{{{9, {0, 1, 2, 4, 16}}, {4, {0, 1, 2, 3, 4, 5, 13}}},
                    0};
    auto closure = sum_closure(spec);
    auto diff = compare(closure.set, i3(49));
    check(rep, "closure covers I3[49]", diff.missing.empty());
    SpectrumSet j;
    j.label = "J3[49]";
    for (long x : i3(49).values)
        j.add(x, closure.set.witnesses.at(x));
    rep.registered.push_back(std::move(j));
    return rep;
}

inline ReproReport repro_t53() {
    ReproReport rep;
    rep.token = "T5.3";
    ClosureSpec spec{{{24, {0, 1, 3, 15}}, {6, {0, 1, 2, 3, 4, 5, 13}}}, 0};
    auto closure = sum_closure(spec);
    auto diff = compare(closure.set, i3(73));
    check(rep, "closure covers I3[73]", diff.missing.empty(),
          "24 slots from Jf3[16], 6 from J3[13]");
    SpectrumSet j;
    j.label = "J3[73]";
    for (long x : i3(73).values)
        j.add(x, closure.set.witnesses.at(x));
    rep.registered.push_back(std::move(j));
    rep.not_replayed.push_back(
        "the 5-GDD of type 4^6 behind the weighting is cited, not "
        "constructed; the closure argument is what is replayed");
    return rep;
}

inline ReproReport repro_t54() {
    ReproReport rep;
    rep.token = "T5.4-closure";
    // b-part: 9 whole classes permute, 9 quadruples each
    std::set<long> bpart;
    for (long a : agreement_counts(9)) bpart.insert(9 * a);
    check(rep, "b-class set is {0,9,...,54,81}",
          bpart == std::set<long>{0, 9, 18, 27, 36, 45, 54, 81},
          "63 = 9*7 is unreachable: at least three classes must move");
    // a-part: per plane the 4 sub-classes permute, 3 triples each
    std::set<long> apart;
    auto per_plane = agreement_counts(4);
    for (long x : per_plane)
        for (long y : per_plane)
            for (long z : per_plane) apart.insert(3 * (x + y + z));
    check(rep, "a-class set is {0,3,...,18,24,27,36}",
          apart == std::set<long>{0, 3, 6, 9, 12, 15, 18, 24, 27, 36},
          "21 = 3*7 is unreachable per plane-agreement analysis");

    ClosureSpec spec{{{1, std::vector<long>(bpart.begin(), bpart.end())},
                      {1, std::vector<long>(apart.begin(), apart.end())},
                      {1, {0, 1, 2, 3, 4, 5, 13}}},
                     0};
    auto closure = sum_closure(spec);
    auto diff = compare(closure.set, i3(40));
    long b40 = bv(40);
    check(rep, "exception set is {b40-16, b40-15, b40-14}",
          diff.missing ==
                  std::vector<long>{b40 - 16, b40 - 15, b40 - 14} &&
              diff.extra.empty(),
          "missing " + set_str(std::set<long>(diff.missing.begin(),
                                              diff.missing.end())));
    SpectrumSet j;
    j.label = "J3[40]";
    for (long x : closure.set.values)
        if (i3(40).contains(x)) j.add(x, closure.set.witnesses.at(x));
    rep.registered.push_back(std::move(j));
    rep.not_replayed.push_back(
        "b40-16 itself comes from the 9^4 fill_plus_four route (see the "
        "construction suite), not from this closure");
    return rep;
}

inline ReproReport repro_l21(bool extended) {
    ReproReport rep;
    rep.token = "L2.1-search";
    for (long s = 1; s <= (extended ? 4 : 3); ++s) {
        auto res = search_trade(3, 4, 2, s, true);
        check(rep,
              "no 3-way Steiner (v,4,2) trade of volume " +
                  std::to_string(s),
              res.status == SearchStatus::exhausted,
              std::to_string(res.nodes) + " nodes");
    }
    // extraction witness at volume 8 = b_13 - 5
    auto triple = design_triple("tbl.L4.1", 5);
    TradeSystem tr = extract_trade(triple[0], triple[1], triple[2]);
    auto trep = verify_trade(tr, true);
    bool rmin = true;
    for (auto [x, r] : trep.replication) rmin &= r >= 2;
    check(rep, "volume-8 extraction verifies with r_x >= 2",
          tr.volume() == 8 && trep.valid && rmin);
    rep.not_replayed.push_back(
        "volumes 5-7: nonexistence is imported; the engine supports the "
        "search but it is outside the default budget");
    return rep;
}

} // namespace detail

inline ReproReport run_reproduction(const std::string& token) {
    using namespace detail;
    if (token == "L4.1") return repro_l41();
    if (token == "L4.2") return repro_l42();
    if (token == "L4.3") return repro_l43();
    if (token == "L4.4") return repro_l44();
    if (token == "L4.5") return repro_l45();
    if (token == "L4.7") return repro_l47();
    if (token == "L4.8") return repro_l48();
    if (token == "Ex6.1") return repro_ex61();
    if (token == "L6.2") return repro_l62();
    if (token == "L6.3") return repro_l63();
    if (token == "L6.4") return repro_l64();
    if (token == "T5.1u4") return repro_t51u4();
    if (token == "T5.3") return repro_t53();
    if (token == "T5.4-closure") return repro_t54();
    if (token == "L2.1-search") return repro_l21(false);
    if (token == "L2.1-search-extended") return repro_l21(true);
    std::string all;
    for (const auto& t : repro_tokens()) all += " " + t;
    throw Error("unsupported reproduction token '" + token +
                "'; supported:" + all);
}

} // namespace designkit

#endif
