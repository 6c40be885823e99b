#ifndef DESIGNKIT_EXACT_COVER_HPP
#define DESIGNKIT_EXACT_COVER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "designkit/design.hpp"

namespace designkit {

namespace detail {

// Exact cover of a pair set by candidate blocks, branching on the pair
// with the fewest live candidates. Solutions come out as sorted block
// lists, enumeration capped by `limit` (0 = unlimited).
class PairCover {
public:
    PairCover(int v, std::vector<Block> candidates,
              std::vector<std::pair<int, int>> pairs)
        : v_(v), cands_(std::move(candidates)) {
        for (auto [x, y] : pairs) uncovered_[pair_id(x, y)] = true;
        by_pair_.resize(static_cast<size_t>(v_) * static_cast<size_t>(v_));
        for (size_t ci = 0; ci < cands_.size(); ++ci)
            for_pairs(cands_[ci],
                      [&](int id) { by_pair_[static_cast<size_t>(id)]
                                        .push_back(static_cast<int>(ci)); });
    }

    std::vector<std::vector<Block>> run(std::size_t limit) {
        sols_.clear();
        limit_ = limit;
        chosen_.clear();
        remaining_ = 0;
        for (auto [id, on] : uncovered_) remaining_ += on ? 1 : 0;
        recurse();
        std::sort(sols_.begin(), sols_.end());
        return sols_;
    }

private:
    int pair_id(int x, int y) const { return x * v_ + y; }

    template <typename F> void for_pairs(const Block& b, F&& f) {
        const auto& p = b.points();
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                f(pair_id(p[i], p[j]));
    }

    bool live(int ci) {
        bool ok = true;
        for_pairs(cands_[static_cast<size_t>(ci)], [&](int id) {
            auto it = uncovered_.find(id);
            ok &= it != uncovered_.end() && it->second;
        });
        return ok;
    }

    void recurse() {
        if (limit_ && sols_.size() >= limit_) return;
        if (remaining_ == 0) {
            auto sol = chosen_;
            std::sort(sol.begin(), sol.end());
            sols_.push_back(std::move(sol));
            return;
        }
        int best_pair = -1;
        std::vector<int> best;
        for (auto [id, on] : uncovered_) {
            if (!on) continue;
            std::vector<int> cs;
            for (int ci : by_pair_[static_cast<size_t>(id)])
                if (live(ci)) cs.push_back(ci);
            if (best_pair < 0 || cs.size() < best.size()) {
                best_pair = id;
                best = std::move(cs);
                if (best.empty()) return;
                if (best.size() == 1) break;
            }
        }
        for (int ci : best) {
            const Block& b = cands_[static_cast<size_t>(ci)];
            chosen_.push_back(b);
            for_pairs(b, [&](int id) {
                uncovered_[id] = false;
                --remaining_;
            });
            recurse();
            for_pairs(b, [&](int id) {
                uncovered_[id] = true;
                ++remaining_;
            });
            chosen_.pop_back();
            if (limit_ && sols_.size() >= limit_) return;
        }
    }

    int v_;
    std::vector<Block> cands_;
    std::map<int, bool> uncovered_;
    std::vector<std::vector<int>> by_pair_;
    std::vector<Block> chosen_;
    long remaining_ = 0;
    std::size_t limit_ = 0;
    std::vector<std::vector<Block>> sols_;
};

// k-subsets of [0,v) all of whose pairs lie in `open`, in lex order.
inline std::vector<Block> clique_candidates(
    int v, int k, const std::vector<std::vector<bool>>& open) {
    std::vector<Block> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(Block(cur));
            return;
        }
        for (int p = from; p < v; ++p) {
            bool ok = true;
            for (int q : cur) ok &= open[static_cast<size_t>(q)]
                                       [static_cast<size_t>(p)];
            if (!ok) continue;
            cur.push_back(p);
            self(self, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

// Completions of a partial pair design: minimum sets of k-blocks covering
// every uncovered pair of the v-point set exactly once. The partial design
// must not cover any pair twice. Up to `limit` completions (0 = all),
// returned in lexicographic order.
inline std::vector<std::vector<Block>> complete_cover(const Design& partial,
                                                      int v,
                                                      std::size_t limit = 16) {
    if (v < partial.v())
        throw Error("complete_cover: v smaller than the partial design's");
    std::vector<std::vector<bool>> open(
        static_cast<size_t>(v), std::vector<bool>(static_cast<size_t>(v), true));
    for (const Block& b : partial.blocks()) {
        const auto& p = b.points();
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j) {
                if (!open[static_cast<size_t>(p[i])][static_cast<size_t>(p[j])])
                    throw Error("complete_cover: pair {" +
                                partial.labels().label(p[i]) + "," +
                                partial.labels().label(p[j]) +
                                "} covered twice in the partial design");
                open[static_cast<size_t>(p[i])][static_cast<size_t>(p[j])] =
                    open[static_cast<size_t>(p[j])][static_cast<size_t>(p[i])] =
                        false;
            }
    }
    std::vector<std::pair<int, int>> uncovered;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (open[static_cast<size_t>(x)][static_cast<size_t>(y)])
                uncovered.push_back({x, y});
    if (uncovered.empty()) return {{}}; // the empty completion
    auto cands = detail::clique_candidates(v, partial.k(), open);
    detail::PairCover engine(v, std::move(cands), std::move(uncovered));
    return engine.run(limit);
}

} // namespace designkit

#endif
