#ifndef DESIGNKIT_INTERSECT_HPP
#define DESIGNKIT_INTERSECT_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

#include "designkit/design.hpp"
#include "designkit/gdd.hpp"
#include "designkit/permutation.hpp"

namespace designkit {

inline std::vector<Block> common_blocks(
    std::span<const std::vector<Block>> collections) {
    if (collections.empty()) return {};
    std::vector<Block> acc = collections.front();
    std::sort(acc.begin(), acc.end());
    for (size_t i = 1; i < collections.size(); ++i) {
        std::vector<Block> next = collections[i];
        std::sort(next.begin(), next.end());
        std::vector<Block> out;
        std::set_intersection(acc.begin(), acc.end(), next.begin(),
                              next.end(), std::back_inserter(out));
        acc = std::move(out);
    }
    return acc;
}

inline std::vector<Block> common_blocks(std::span<const Design> designs) {
    for (size_t i = 1; i < designs.size(); ++i) {
        if (designs[i].v() != designs[0].v())
            throw Error("common_blocks: designs have different v");
        if (designs[i].k() != designs[0].k())
            throw Error("common_blocks: designs have different k");
        if (!(designs[i].labels() == designs[0].labels()))
            throw Error("common_blocks: designs have different label sets");
    }
    std::vector<std::vector<Block>> cols;
    cols.reserve(designs.size());
    for (const Design& d : designs) cols.push_back(d.blocks());
    return common_blocks(std::span<const std::vector<Block>>(cols));
}

inline std::vector<Block> common_blocks(const Design& a, const Design& b,
                                        const Design& c) {
    const Design arr[] = {a, b, c};
    return common_blocks(std::span<const Design>(arr, 3));
}

// "Same common blocks" condition: every block shared by two collections is
// in all of them (all pairwise intersections equal the mutual one).
inline bool same_common_blocks(
    std::span<const std::vector<Block>> collections) {
    auto mutual = common_blocks(collections);
    for (size_t i = 0; i < collections.size(); ++i)
        for (size_t j = i + 1; j < collections.size(); ++j) {
            std::vector<Block> pairwise[2] = {collections[i], collections[j]};
            if (common_blocks(std::span<const std::vector<Block>>(pairwise, 2))
                    .size() != mutual.size())
                return false;
        }
    return true;
}

// One row of a permutation table: pi1 is the identity, pi3 may be the
// literal token "inv" meaning pi2^-1.
struct ScanRow {
    std::string p2;
    std::string p3;
    int claimed = -1; // expected mutual intersection, -1 if unknown
};

struct ScanRowResult {
    ScanRow row;
    int measured = 0;
    bool same_common = true;
    bool matches_claim = true;
};

struct ScanReport {
    std::vector<ScanRowResult> rows;
    std::set<int> achieved;
    bool all_same_common = true;
    bool all_match_claims = true;
};

namespace detail {
inline std::pair<Permutation, Permutation> row_perms(const ScanRow& row) {
    Permutation p2 = Permutation::parse(row.p2);
    Permutation p3 =
        row.p3 == "inv" ? p2.inverse() : Permutation::parse(row.p3);
    return {p2, p3};
}
} // namespace detail

inline ScanReport scan_blocks(const LabelMap& labels,
                              const std::vector<Block>& blocks,
                              const std::vector<ScanRow>& rows) {
    ScanReport rep;
    std::vector<Block> sorted = blocks;
    std::sort(sorted.begin(), sorted.end());
    for (const ScanRow& row : rows) {
        auto [p2, p3] = detail::row_perms(row);
        std::vector<std::vector<Block>> cols{
            sorted, apply_permutation(sorted, p2.resolve(labels)),
            apply_permutation(sorted, p3.resolve(labels))};
        ScanRowResult r;
        r.row = row;
        r.measured = static_cast<int>(
            common_blocks(std::span<const std::vector<Block>>(cols)).size());
        r.same_common =
            same_common_blocks(std::span<const std::vector<Block>>(cols));
        r.matches_claim = row.claimed < 0 || r.measured == row.claimed;
        rep.achieved.insert(r.measured);
        rep.all_same_common &= r.same_common;
        rep.all_match_claims &= r.matches_claim;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

inline ScanReport spectrum_scan(const Design& d,
                                const std::vector<ScanRow>& rows) {
    return scan_blocks(d.labels(), d.blocks(), rows);
}

// GDD scan; additionally requires every row's permutations to keep the
// group partition invariant.
inline ScanReport spectrum_scan(const GDD& g,
                                const std::vector<ScanRow>& rows) {
    std::vector<Block> groups = g.groups;
    std::sort(groups.begin(), groups.end());
    for (const ScanRow& row : rows) {
        auto [p2, p3] = detail::row_perms(row);
        for (const Permutation* pi : {&p2, &p3}) {
            auto img = apply_permutation(groups, pi->resolve(g.labels));
            if (img != groups)
                throw Error("scan row permutation does not preserve groups: " +
                            pi->to_string());
        }
    }
    return scan_blocks(g.labels, g.blocks, rows);
}

} // namespace designkit

#endif
