#ifndef DESIGNKIT_TRADE_HPP
#define DESIGNKIT_TRADE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "designkit/design.hpp"
#include "designkit/intersect.hpp"

namespace designkit {

// mu pairwise-disjoint block collections with identical t-subset coverage.
struct TradeSystem {
    int mu = 2;
    int k = 4;
    int t = 2;
    LabelMap labels; // foundation universe
    std::vector<std::vector<Block>> collections;

    long volume() const {
        return collections.empty()
                   ? 0
                   : static_cast<long>(collections.front().size());
    }
};

enum class TradeViolation {
    none,
    size_mismatch,
    not_disjoint,
    coverage_mismatch,
    not_steiner,
};

struct TradeReport {
    bool valid = false;
    TradeViolation first_violation = TradeViolation::none;
    std::string detail;
    long volume = 0;
    std::vector<int> foundation;    // point indices with r_x >= 1
    std::map<int, int> replication; // r_x per foundation point
};

inline const char* to_string(TradeViolation v) {
    switch (v) {
    case TradeViolation::none: return "none";
    case TradeViolation::size_mismatch: return "size mismatch";
    case TradeViolation::not_disjoint: return "not disjoint";
    case TradeViolation::coverage_mismatch: return "coverage mismatch";
    case TradeViolation::not_steiner: return "not Steiner";
    }
    return "?";
}

namespace detail {
template <typename F>
inline void for_subsets(const Block& b, int t, F&& f) {
    const auto& p = b.points();
    std::vector<int> idx(static_cast<size_t>(t));
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == t) {
            std::vector<int> sub;
            sub.reserve(static_cast<size_t>(t));
            for (int i : idx) sub.push_back(p[static_cast<size_t>(i)]);
            f(sub);
            return;
        }
        for (int i = from; i < static_cast<int>(p.size()); ++i) {
            idx[static_cast<size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}
} // namespace detail

// Checks the TradeSystem invariants in order: equal sizes, pairwise
// disjoint collections, identical t-subset coverage, and (when `steiner`)
// at most one occurrence of each t-subset per collection.
inline TradeReport verify_trade(const TradeSystem& tr, bool steiner) {
    TradeReport rep;
    rep.volume = tr.volume();
    if (tr.collections.size() != static_cast<size_t>(tr.mu)) {
        rep.first_violation = TradeViolation::size_mismatch;
        rep.detail = "expected " + std::to_string(tr.mu) + " collections";
        return rep;
    }
    for (const auto& col : tr.collections)
        if (static_cast<long>(col.size()) != rep.volume) {
            rep.first_violation = TradeViolation::size_mismatch;
            rep.detail = "collections differ in size";
            return rep;
        }

    std::vector<std::set<Block>> sets;
    for (const auto& col : tr.collections)
        sets.emplace_back(col.begin(), col.end());
    for (size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].size() != static_cast<size_t>(rep.volume)) {
            rep.first_violation = TradeViolation::not_steiner;
            rep.detail = "repeated block within a collection";
            return rep;
        }
        for (size_t j = i + 1; j < sets.size(); ++j)
            for (const Block& b : sets[i])
                if (sets[j].count(b)) {
                    rep.first_violation = TradeViolation::not_disjoint;
                    rep.detail = "collections " + std::to_string(i + 1) +
                                 " and " + std::to_string(j + 1) +
                                 " share a block";
                    return rep;
                }
    }

    std::vector<std::map<std::vector<int>, int>> cover(tr.collections.size());
    for (size_t ci = 0; ci < tr.collections.size(); ++ci)
        for (const Block& b : tr.collections[ci])
            detail::for_subsets(b, tr.t, [&](const std::vector<int>& sub) {
                ++cover[ci][sub];
            });
    for (size_t ci = 1; ci < cover.size(); ++ci)
        if (cover[ci] != cover[0]) {
            rep.first_violation = TradeViolation::coverage_mismatch;
            rep.detail = "collection " + std::to_string(ci + 1) +
                         " covers a different t-subset multiset";
            return rep;
        }
    if (steiner)
        for (const auto& cov : cover)
            for (const auto& [sub, c] : cov)
                if (c > 1) {
                    rep.first_violation = TradeViolation::not_steiner;
                    rep.detail = "a t-subset is covered " +
                                 std::to_string(c) + " times";
                    return rep;
                }

    std::map<int, int> repl;
    if (!tr.collections.empty())
        for (const Block& b : tr.collections.front())
            for (int p : b) ++repl[p];
    for (auto [p, r] : repl) rep.foundation.push_back(p);
    rep.replication = std::move(repl);
    rep.valid = true;
    return rep;
}

// Leftover collections of a design triple with the same-common-blocks
// property: T_i = blocks(d_i) minus the mutual common set.
inline TradeSystem extract_trade(const Design& d1, const Design& d2,
                                 const Design& d3) {
    const Design arr[] = {d1, d2, d3};
    auto mutual = common_blocks(std::span<const Design>(arr, 3));
    std::set<Block> common(mutual.begin(), mutual.end());

    std::vector<std::vector<Block>> leftovers(3);
    for (int i = 0; i < 3; ++i)
        for (const Block& b : arr[i].blocks())
            if (!common.count(b)) leftovers[static_cast<size_t>(i)].push_back(b);

    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            for (const Block& b : leftovers[i])
                if (std::binary_search(leftovers[j].begin(),
                                       leftovers[j].end(), b))
                    throw Error(
                        "extract_trade: same-common-blocks violated; block {" +
                        arr[0].block_str(b) +
                        "} is shared by two designs but not all three");

    TradeSystem tr;
    tr.mu = 3;
    tr.k = d1.k();
    tr.t = 2;
    tr.labels = d1.labels();
    tr.collections = std::move(leftovers);
    return tr;
}

} // namespace designkit

#endif
