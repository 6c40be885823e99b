#ifndef DESIGNKIT_TRADE_SEARCH_HPP
#define DESIGNKIT_TRADE_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "designkit/trade.hpp"

namespace designkit {

struct SearchBudget {
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 0; // 0 = no wall-clock limit
};

struct SearchOptions {
    // Restrict every foundation point to replication >= 2 and the
    // foundation to 2*volume points. Sound for Steiner trades (a point in
    // a single block of one collection cannot have its pairs re-covered by
    // a disjoint block), but certificates produced without it stand on
    // exhaustion alone.
    bool replication_bound = false;
};

enum class SearchStatus { witness_found, exhausted, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<TradeSystem> witness;
    std::uint64_t nodes = 0;
    double seconds = 0;
    int mu = 0, k = 0, t = 0;
    long volume = 0;
    bool steiner = false;
    SearchOptions options;

    bool exhausted() const { return status == SearchStatus::exhausted; }
};

namespace detail {

// Exhaustive search for a mu-way (v,k,2) trade of a given volume over
// canonically labeled block systems: T1's first block is {0..k-1}, blocks
// strictly increase lexicographically, and new points take the next free
// indices (so they appear as a block suffix). Collections 2..mu are exact
// covers of T1's pair coverage, pairwise disjoint from earlier ones and
// kept in increasing lexicographic order.
class TradeSearcher {
public:
    TradeSearcher(int mu, int k, long volume, bool steiner,
                  SearchBudget budget, SearchOptions opt)
        : mu_(mu), k_(k), volume_(volume), steiner_(steiner), budget_(budget),
          opt_(opt) {
        fmax_ = static_cast<int>(k_ * volume_);
        if (steiner_ && opt_.replication_bound)
            fmax_ = std::min(fmax_, static_cast<int>(2 * volume_));
        start_ = std::chrono::steady_clock::now();
    }

    SearchResult run() {
        SearchResult res;
        res.mu = mu_;
        res.k = k_;
        res.t = 2;
        res.volume = volume_;
        res.steiner = steiner_;
        res.options = opt_;
        if (volume_ == 0) {
            res.status = SearchStatus::witness_found;
            res.witness = make_witness(
                std::vector<std::vector<Block>>(static_cast<size_t>(mu_)));
            return res;
        }
        pair_target_.assign(static_cast<size_t>(fmax_) *
                                static_cast<size_t>(fmax_),
                            0);
        Block first = first_block();
        t1_.push_back(first);
        add_pairs(first, +1);
        bool found = false;
        try {
            found = extend_t1(first, k_);
        } catch (const BudgetStop&) {
            res.status = SearchStatus::budget_exceeded;
            res.nodes = nodes_;
            res.seconds = elapsed();
            return res;
        }
        res.nodes = nodes_;
        res.seconds = elapsed();
        if (found) {
            res.status = SearchStatus::witness_found;
            res.witness = make_witness(witness_);
        } else {
            res.status = SearchStatus::exhausted;
        }
        return res;
    }

private:
    struct BudgetStop {};

    Block first_block() const {
        std::vector<int> pts(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) pts[static_cast<size_t>(i)] = i;
        return Block(pts);
    }

    double elapsed() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

    void tick() {
        if (++nodes_ >= budget_.max_nodes) throw BudgetStop{};
        if (budget_.max_seconds > 0 && (nodes_ & 0xfff) == 0 &&
            elapsed() > budget_.max_seconds)
            throw BudgetStop{};
    }

    int pair_id(int x, int y) const { return x * fmax_ + y; }

    template <typename F> void for_pairs(const Block& b, F&& f) const {
        const auto& p = b.points();
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                f(pair_id(p[i], p[j]));
    }

    void add_pairs(const Block& b, int delta) {
        for_pairs(b, [&](int id) {
            pair_target_[static_cast<size_t>(id)] += delta;
        });
    }

    bool pairs_fresh(const Block& b) const {
        bool ok = true;
        for_pairs(b, [&](int id) {
            ok &= pair_target_[static_cast<size_t>(id)] == 0;
        });
        return ok;
    }

    // --- phase 1: canonical T1 -------------------------------------------
    bool extend_t1(const Block& last, int npts) {
        if (static_cast<long>(t1_.size()) == volume_)
            return finish_t1(npts);
        if (opt_.replication_bound && steiner_) {
            long rem = volume_ - static_cast<long>(t1_.size());
            long deficient = 0;
            std::vector<int> r(static_cast<size_t>(npts), 0);
            for (const Block& b : t1_)
                for (int p : b) ++r[static_cast<size_t>(p)];
            for (int p = 0; p < npts; ++p)
                deficient += r[static_cast<size_t>(p)] < 2 ? 1 : 0;
            if (deficient > static_cast<long>(k_) * rem) return false;
        }
        for (int fresh = 0; fresh <= k_ && npts + fresh <= fmax_; ++fresh) {
            std::vector<int> chosen;
            choose_existing(last, npts, fresh, chosen, 0);
            if (found_) return true;
        }
        return false;
    }

    // Pick (k - fresh) existing points (ascending) then append the next
    // `fresh` indices; recurse on every viable block.
    void choose_existing(const Block& last, int npts, int fresh,
                         std::vector<int>& chosen, int from) {
        if (found_) return;
        if (static_cast<int>(chosen.size()) == k_ - fresh) {
            std::vector<int> pts = chosen;
            for (int j = 0; j < fresh; ++j) pts.push_back(npts + j);
            Block b(pts);
            if (!(last < b)) return;
            if (steiner_ && !pairs_fresh(b)) return;
            tick();
            t1_.push_back(b);
            add_pairs(b, +1);
            if (extend_t1(b, npts + fresh)) {
                found_ = true;
                return;
            }
            add_pairs(b, -1);
            t1_.pop_back();
            return;
        }
        for (int p = from; p < npts && !found_; ++p) {
            chosen.push_back(p);
            choose_existing(last, npts, fresh, chosen, p + 1);
            chosen.pop_back();
        }
    }

    bool finish_t1(int npts) {
        if (steiner_ && opt_.replication_bound) {
            std::vector<int> r(static_cast<size_t>(npts), 0);
            for (const Block& b : t1_)
                for (int p : b) ++r[static_cast<size_t>(p)];
            for (int p = 0; p < npts; ++p)
                if (r[static_cast<size_t>(p)] < 2) return false;
        }
        // candidate blocks for the cover phases: k-subsets of T1's points
        // whose pairs all appear in T1's coverage
        candidates_.clear();
        std::vector<int> cur;
        gen_candidates(cur, 0, npts);
        collections_.assign(1, t1_);
        if (cover_next()) {
            witness_ = collections_;
            return true;
        }
        return false;
    }

    void gen_candidates(std::vector<int>& cur, int from, int npts) {
        if (static_cast<int>(cur.size()) == k_) {
            Block b(cur);
            bool ok = true;
            for_pairs(b, [&](int id) {
                ok &= pair_target_[static_cast<size_t>(id)] > 0;
            });
            if (ok) candidates_.push_back(b);
            return;
        }
        for (int p = from; p < npts; ++p) {
            cur.push_back(p);
            gen_candidates(cur, p + 1, npts);
            cur.pop_back();
        }
    }

    // --- phase 2: collections 2..mu as multiset exact covers --------------
    bool cover_next() {
        if (static_cast<int>(collections_.size()) == mu_) return true;
        std::vector<int> remaining = pair_target_;
        std::vector<Block> col;
        return cover_rec(remaining, col);
    }

    bool cover_rec(std::vector<int>& remaining, std::vector<Block>& col) {
        if (static_cast<long>(col.size()) == volume_) {
            bool any = false;
            for (int c : remaining) any |= c != 0;
            if (any) return false;
            std::vector<Block> done = col;
            std::sort(done.begin(), done.end());
            // collections 2..mu are interchangeable; keep them lex-ordered
            if (collections_.size() >= 2 && !(collections_.back() < done))
                return false;
            collections_.push_back(std::move(done));
            if (cover_next()) return true;
            collections_.pop_back();
            return false;
        }
        // Branch on the first still-uncovered pair: any completed
        // collection covers it, so trying every block through it is
        // complete (and duplicate-free when coverage is 0/1).
        int target = -1;
        for (size_t id = 0; id < remaining.size(); ++id)
            if (remaining[id] > 0) {
                target = static_cast<int>(id);
                break;
            }
        if (target < 0) return false; // blocks left to place but no pairs
        for (const Block& b : candidates_) {
            if (!covers(b, target)) continue;
            if (std::find(col.begin(), col.end(), b) != col.end()) continue;
            bool fits = true;
            for_pairs(b, [&](int id) {
                fits &= remaining[static_cast<size_t>(id)] > 0;
            });
            if (!fits || used_elsewhere(b)) continue;
            tick();
            for_pairs(b,
                      [&](int id) { --remaining[static_cast<size_t>(id)]; });
            col.push_back(b);
            if (cover_rec(remaining, col)) return true;
            col.pop_back();
            for_pairs(b,
                      [&](int id) { ++remaining[static_cast<size_t>(id)]; });
        }
        return false;
    }

    bool covers(const Block& b, int id) const {
        bool hit = false;
        for_pairs(b, [&](int q) { hit |= q == id; });
        return hit;
    }

    bool used_elsewhere(const Block& b) const {
        for (const auto& col : collections_)
            if (std::binary_search(col.begin(), col.end(), b)) return true;
        return false;
    }

    TradeSystem make_witness(std::vector<std::vector<Block>> cols) const {
        int maxp = -1;
        for (const auto& col : cols)
            for (const Block& b : col)
                if (b.size() > 0) maxp = std::max(maxp, b.points().back());
        TradeSystem tr;
        tr.mu = mu_;
        tr.k = k_;
        tr.t = 2;
        tr.labels = LabelMap::decimal(maxp + 1);
        tr.collections = std::move(cols);
        return tr;
    }

    int mu_, k_;
    long volume_;
    bool steiner_;
    SearchBudget budget_;
    SearchOptions opt_;
    int fmax_ = 0;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    std::chrono::steady_clock::time_point start_;
    std::vector<int> pair_target_;
    std::vector<Block> t1_;
    std::vector<Block> candidates_;
    std::vector<std::vector<Block>> collections_;
    std::vector<std::vector<Block>> witness_;
};

} // namespace detail

inline SearchResult search_trade(int mu, int k, int t, long volume,
                                 bool steiner, SearchBudget budget = {},
                                 SearchOptions options = {}) {
    if (t != 2) throw Error("search_trade supports t=2 only");
    if (mu < 2) throw Error("search_trade requires mu >= 2");
    if (k < 2) throw Error("search_trade requires k >= 2");
    if (volume < 0) throw Error("volume must be nonnegative");
    return detail::TradeSearcher(mu, k, volume, steiner, budget, options)
        .run();
}

// Human-readable search certificate.
inline std::string certificate_text(const SearchResult& r) {
    std::ostringstream os;
    os << "search: " << r.mu << "-way (v," << r.k << "," << r.t << ") "
       << (r.steiner ? "Steiner " : "") << "trade, volume " << r.volume
       << "\n";
    os << "canonical form: first block {0.." << r.k - 1
       << "}, blocks lex-increasing, points numbered by first appearance, "
          "collections lex-ordered\n";
    if (r.options.replication_bound && r.steiner)
        os << "pruning: per-point replication >= 2 (foundation <= "
           << 2 * r.volume << " points)\n";
    os << "nodes explored: " << r.nodes << "\n";
    switch (r.status) {
    case SearchStatus::witness_found:
        os << "result: witness found\n";
        break;
    case SearchStatus::exhausted:
        os << "result: search space exhausted; no such trade exists\n";
        break;
    case SearchStatus::budget_exceeded:
        os << "result: INCONCLUSIVE, budget exhausted\n";
        break;
    }
    return os.str();
}

} // namespace designkit

#endif
