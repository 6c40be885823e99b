#ifndef DESIGNKIT_DESIGN_HPP
#define DESIGNKIT_DESIGN_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "designkit/error.hpp"

namespace designkit {

// A block: sorted, duplicate-free point indices.
class Block {
public:
    Block() = default;
    explicit Block(std::vector<int> pts) : pts_(std::move(pts)) {
        std::sort(pts_.begin(), pts_.end());
        if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
            throw Error("block has a repeated point");
        if (!pts_.empty() && pts_.front() < 0)
            throw Error("block has a negative point index");
    }
    Block(std::initializer_list<int> pts) : Block(std::vector<int>(pts)) {}

    int size() const { return static_cast<int>(pts_.size()); }
    bool contains(int p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }
    const std::vector<int>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    int operator[](int i) const { return pts_[static_cast<size_t>(i)]; }

    friend auto operator<=>(const Block&, const Block&) = default;

private:
    std::vector<int> pts_;
};

// Bidirectional token <-> index table. Indices are dense, [0, size).
class LabelMap {
public:
    LabelMap() = default;
    explicit LabelMap(std::vector<std::string> labels)
        : labels_(std::move(labels)) {
        for (size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty())
                throw Error("empty point label");
            if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
                throw Error("duplicate point label '" + labels_[i] + "'");
        }
    }

    static LabelMap decimal(int v) {
        std::vector<std::string> l;
        l.reserve(static_cast<size_t>(v));
        for (int i = 0; i < v; ++i) l.push_back(std::to_string(i));
        return LabelMap(std::move(l));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const {
        if (i < 0 || i >= size()) throw Error("point index out of range");
        return labels_[static_cast<size_t>(i)];
    }
    int index(const std::string& tok) const {
        auto it = index_.find(tok);
        if (it == index_.end()) throw Error("unknown point label '" + tok + "'");
        return it->second;
    }
    bool has(const std::string& tok) const { return index_.count(tok) != 0; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_decimal() const {
        for (int i = 0; i < size(); ++i)
            if (labels_[static_cast<size_t>(i)] != std::to_string(i))
                return false;
        return true;
    }
    friend bool operator==(const LabelMap& a, const LabelMap& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

// A block design: v points, uniform block size k, duplicate-free block set
// kept in lexicographic order.
class Design {
public:
    Design() = default;
    Design(LabelMap labels, int k, std::vector<Block> blocks)
        : labels_(std::move(labels)), k_(k), blocks_(std::move(blocks)) {
        if (k_ < 2) throw Error("block size must be at least 2");
        std::sort(blocks_.begin(), blocks_.end());
        if (std::adjacent_find(blocks_.begin(), blocks_.end()) !=
            blocks_.end())
            throw Error("duplicate block in design");
        for (const Block& b : blocks_) {
            if (b.size() != k_)
                throw Error("block size " + std::to_string(b.size()) +
                            " does not match k=" + std::to_string(k_));
            if (b.points().back() >= v())
                throw Error("block point index exceeds v");
        }
    }

    int v() const { return labels_.size(); }
    int k() const { return k_; }
    const LabelMap& labels() const { return labels_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    bool has_block(const Block& b) const {
        return std::binary_search(blocks_.begin(), blocks_.end(), b);
    }

    Block parse_block(const std::vector<std::string>& toks) const {
        std::vector<int> pts;
        pts.reserve(toks.size());
        for (const auto& t : toks) pts.push_back(labels_.index(t));
        return Block(std::move(pts));
    }
    std::string block_str(const Block& b) const {
        std::string s;
        for (int p : b) {
            if (!s.empty()) s += ' ';
            s += labels_.label(p);
        }
        return s;
    }

    friend bool operator==(const Design& a, const Design& b) {
        return a.k_ == b.k_ && a.labels_ == b.labels_ &&
               a.blocks_ == b.blocks_;
    }

private:
    LabelMap labels_;
    int k_ = 4;
    std::vector<Block> blocks_;
};

struct PairViolation {
    std::pair<int, int> pair;
    int count = 0;
};

struct CoverageReport {
    bool is_steiner = false;
    std::map<std::pair<int, int>, int> pair_counts;
    std::vector<PairViolation> violations;
    std::size_t block_count = 0;
    long expected_blocks = 0;
    std::vector<int> replication;
};

// Steiner check for t=2: every pair exactly once and the block count is
// v(v-1)/(k(k-1)).
inline CoverageReport verify_steiner(const Design& d, int t = 2) {
    if (t != 2) throw Error("verify_steiner supports t=2 only");
    CoverageReport rep;
    rep.block_count = d.block_count();
    rep.replication.assign(static_cast<size_t>(d.v()), 0);
    for (const Block& b : d.blocks()) {
        const auto& p = b.points();
        for (size_t i = 0; i < p.size(); ++i) {
            ++rep.replication[static_cast<size_t>(p[i])];
            for (size_t j = i + 1; j < p.size(); ++j)
                ++rep.pair_counts[{p[i], p[j]}];
        }
    }
    const long v = d.v();
    rep.expected_blocks = v * (v - 1) / (static_cast<long>(d.k()) * (d.k() - 1));
    for (int x = 0; x < d.v(); ++x)
        for (int y = x + 1; y < d.v(); ++y) {
            auto it = rep.pair_counts.find({x, y});
            int c = it == rep.pair_counts.end() ? 0 : it->second;
            if (c != 1) rep.violations.push_back({{x, y}, c});
        }
    rep.is_steiner = rep.violations.empty() &&
                     rep.block_count == static_cast<size_t>(rep.expected_blocks);
    return rep;
}

// All blocks through x.
inline std::vector<Block> flower(const Design& d, int x) {
    if (x < 0 || x >= d.v()) throw Error("flower: unknown point");
    std::vector<Block> out;
    for (const Block& b : d.blocks())
        if (b.contains(x)) out.push_back(b);
    return out;
}

inline std::vector<Block> flower(const Design& d, const std::string& tok) {
    return flower(d, d.labels().index(tok));
}

struct SubsetPartition {
    std::vector<Block> a; // |block ∩ S| >= 2
    std::vector<Block> b; // |block ∩ S| == 0
    std::vector<Block> c; // |block ∩ S| == 1
};

inline SubsetPartition classify_by_subset(const Design& d,
                                          const std::set<int>& s) {
    for (int x : s)
        if (x < 0 || x >= d.v())
            throw Error("classify_by_subset: point index out of range");
    SubsetPartition part;
    for (const Block& blk : d.blocks()) {
        int hits = 0;
        for (int p : blk) hits += s.count(p) ? 1 : 0;
        (hits >= 2 ? part.a : hits == 0 ? part.b : part.c).push_back(blk);
    }
    return part;
}

} // namespace designkit

#endif
