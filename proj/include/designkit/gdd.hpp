#ifndef DESIGNKIT_GDD_HPP
#define DESIGNKIT_GDD_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "designkit/design.hpp"

namespace designkit {

// Group divisible design: groups partition the points, a block meets every
// group at most once, cross-group pairs are covered exactly once. Block
// sizes come from K.
struct GDD {
    LabelMap labels;
    std::vector<Block> groups;
    std::vector<Block> blocks;
    std::set<int> block_sizes; // K

    int v() const { return labels.size(); }

    GDD() = default;
    GDD(LabelMap l, std::vector<Block> g, std::vector<Block> b)
        : labels(std::move(l)), groups(std::move(g)), blocks(std::move(b)) {
        std::sort(groups.begin(), groups.end());
        std::sort(blocks.begin(), blocks.end());
        if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
            throw Error("duplicate block in GDD");
        for (const Block& blk : blocks) block_sizes.insert(blk.size());
        for (const Block& blk : blocks)
            if (!blk.points().empty() && blk.points().back() >= v())
                throw Error("GDD block point index exceeds v");
        for (const Block& g2 : groups)
            if (!g2.points().empty() && g2.points().back() >= v())
                throw Error("GDD group point index exceeds v");
    }

    // Group type string, e.g. "3^5" or "12^5 15^1" (sizes ascending).
    std::string group_type() const {
        std::map<int, int> mult;
        for (const Block& g : groups) ++mult[g.size()];
        std::ostringstream os;
        bool first = true;
        for (auto [size, count] : mult) {
            if (!first) os << ' ';
            os << size << '^' << count;
            first = false;
        }
        return os.str();
    }
};

struct GddReport {
    bool valid = false;
    std::string group_type;
    std::vector<std::string> violations;
};

inline GddReport verify_gdd(const GDD& g) {
    GddReport rep;
    rep.group_type = g.group_type();
    std::vector<int> group_of(static_cast<size_t>(g.v()), -1);
    for (size_t gi = 0; gi < g.groups.size(); ++gi)
        for (int p : g.groups[gi]) {
            if (group_of[static_cast<size_t>(p)] != -1) {
                rep.violations.push_back("point " + g.labels.label(p) +
                                         " in two groups");
                return rep;
            }
            group_of[static_cast<size_t>(p)] = static_cast<int>(gi);
        }
    for (int p = 0; p < g.v(); ++p)
        if (group_of[static_cast<size_t>(p)] == -1)
            rep.violations.push_back("point " + g.labels.label(p) +
                                     " in no group");

    std::map<std::pair<int, int>, int> cross;
    for (const Block& b : g.blocks) {
        std::map<int, int> per_group;
        for (int p : b) ++per_group[group_of[static_cast<size_t>(p)]];
        for (auto [gi, c] : per_group)
            if (c > 1)
                rep.violations.push_back("block {" + g.labels.label(b[0]) +
                                         "...} meets group " +
                                         std::to_string(gi) + " in " +
                                         std::to_string(c) + " points");
        const auto& pts = b.points();
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                ++cross[{pts[i], pts[j]}];
    }
    for (int x = 0; x < g.v(); ++x)
        for (int y = x + 1; y < g.v(); ++y) {
            bool same = group_of[static_cast<size_t>(x)] ==
                        group_of[static_cast<size_t>(y)];
            auto it = cross.find({x, y});
            int c = it == cross.end() ? 0 : it->second;
            int want = same ? 0 : 1;
            if (c != want)
                rep.violations.push_back(
                    "pair {" + g.labels.label(x) + "," + g.labels.label(y) +
                    "} covered " + std::to_string(c) + "x, expected " +
                    std::to_string(want));
        }
    rep.valid = rep.violations.empty();
    return rep;
}

// Delete a point from a Steiner design: the flower blocks minus x become
// the groups, the remaining blocks survive.
inline GDD delete_point(const Design& d, int x) {
    if (x < 0 || x >= d.v()) throw Error("delete_point: unknown point");
    if (!verify_steiner(d).is_steiner)
        throw Error("delete_point requires a Steiner design");
    std::vector<std::string> labels;
    std::vector<int> remap(static_cast<size_t>(d.v()), -1);
    for (int p = 0; p < d.v(); ++p)
        if (p != x) {
            remap[static_cast<size_t>(p)] = static_cast<int>(labels.size());
            labels.push_back(d.labels().label(p));
        }
    auto remap_block = [&](const Block& b, bool drop_x) {
        std::vector<int> pts;
        for (int p : b)
            if (p != x)
                pts.push_back(remap[static_cast<size_t>(p)]);
            else if (!drop_x)
                throw Error("internal: unexpected point");
        return Block(std::move(pts));
    };
    std::vector<Block> groups, blocks;
    for (const Block& b : d.blocks())
        (b.contains(x) ? groups : blocks)
            .push_back(remap_block(b, b.contains(x)));
    return GDD(LabelMap(std::move(labels)), std::move(groups),
               std::move(blocks));
}

inline GDD delete_point(const Design& d, const std::string& tok) {
    return delete_point(d, d.labels().index(tok));
}

// Re-attach a deleted point to every group; inverse of delete_point.
inline Design reattach_point(const GDD& g, const std::string& label) {
    std::vector<std::string> labels = g.labels.labels();
    labels.push_back(label);
    int x = static_cast<int>(labels.size()) - 1;
    std::vector<Block> blocks = g.blocks;
    for (const Block& grp : g.groups) {
        std::vector<int> pts = grp.points();
        pts.push_back(x);
        blocks.emplace_back(std::move(pts));
    }
    int k = blocks.empty() ? 2 : blocks.front().size();
    return Design(LabelMap(std::move(labels)), k, std::move(blocks));
}

// View a Steiner design as a GDD by taking a parallel class as the groups
// and removing it from the block set.
inline GDD gdd_from_parallel_class(const Design& d,
                                   const std::vector<Block>& parclass) {
    std::vector<int> seen(static_cast<size_t>(d.v()), 0);
    for (const Block& b : parclass) {
        if (!d.has_block(b))
            throw Error("parallel class block not in design");
        for (int p : b) ++seen[static_cast<size_t>(p)];
    }
    if (std::count(seen.begin(), seen.end(), 1) != d.v())
        throw Error("blocks do not form a parallel class");
    std::vector<Block> rest;
    for (const Block& b : d.blocks())
        if (std::find(parclass.begin(), parclass.end(), b) == parclass.end())
            rest.push_back(b);
    return GDD(d.labels(), parclass, std::move(rest));
}

} // namespace designkit

#endif
