#ifndef DESIGNKIT_CONSTRUCTIONS_HPP
#define DESIGNKIT_CONSTRUCTIONS_HPP

#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "designkit/design.hpp"
#include "designkit/gdd.hpp"
#include "designkit/intersect.hpp"
#include "designkit/resolution.hpp"

namespace designkit {

using DesignTriple = std::array<Design, 3>;
using GddTriple = std::array<GDD, 3>;

struct TripleCommon {
    long mutual = 0;
    bool same_common = true;
};

inline TripleCommon triple_common(const std::vector<Block>& a,
                                  const std::vector<Block>& b,
                                  const std::vector<Block>& c) {
    std::vector<std::vector<Block>> cols{a, b, c};
    std::span<const std::vector<Block>> view(cols);
    return {static_cast<long>(common_blocks(view).size()),
            same_common_blocks(view)};
}

inline TripleCommon triple_common(const DesignTriple& t) {
    return triple_common(t[0].blocks(), t[1].blocks(), t[2].blocks());
}
inline TripleCommon triple_common(const GddTriple& t) {
    return triple_common(t[0].blocks, t[1].blocks, t[2].blocks);
}

// Move a design onto new point tokens: index i takes tokens[i].
inline Design relabel(const Design& d,
                      const std::vector<std::string>& tokens) {
    if (static_cast<int>(tokens.size()) != d.v())
        throw Error("relabel: token count differs from v");
    return Design(LabelMap(tokens), d.k(), d.blocks());
}

inline DesignTriple relabel(const DesignTriple& t,
                            const std::vector<std::string>& tokens) {
    return {relabel(t[0], tokens), relabel(t[1], tokens),
            relabel(t[2], tokens)};
}

namespace detail {

inline void require_shared_shape(const GddTriple& t) {
    for (int i = 1; i < 3; ++i) {
        if (!(t[static_cast<size_t>(i)].labels == t[0].labels))
            throw Error("GDD triple must share one label set");
        if (t[static_cast<size_t>(i)].groups != t[0].groups)
            throw Error("GDD triple must share the group partition");
    }
}

inline std::vector<Block> reindex(const std::vector<Block>& blocks,
                                  const LabelMap& from, const LabelMap& to) {
    std::vector<int> map(static_cast<size_t>(from.size()));
    for (int i = 0; i < from.size(); ++i)
        map[static_cast<size_t>(i)] = to.index(from.label(i));
    std::vector<Block> out;
    out.reserve(blocks.size());
    for (const Block& b : blocks) {
        std::vector<int> pts;
        pts.reserve(static_cast<size_t>(b.size()));
        for (int p : b) pts.push_back(map[static_cast<size_t>(p)]);
        out.emplace_back(std::move(pts));
    }
    return out;
}

} // namespace detail

// ----------------------------------------------------------- weighting
// Wilson-style weighting: every point x of the base GDD blows up into
// w(x) copies, every base block is replaced by an ingredient GDD triple
// whose group sizes match the block's weights.
struct WeightingIngredient {
    GddTriple gdds;
};

struct WeightingResult {
    GddTriple out;
    long measured_common = 0;  // of the three outputs
    long ingredient_sum = 0;   // sum of measured ingredient commons
    bool same_common = true;
    std::vector<long> per_block_common;
};

inline WeightingResult weighting(
    const GDD& base, const std::vector<int>& weights,
    const std::vector<WeightingIngredient>& ingredients) {
    if (static_cast<int>(weights.size()) != base.v())
        throw Error("weighting: one weight per base point required");
    for (int w : weights)
        if (w < 0) throw Error("weighting: weights must be nonnegative");
    if (ingredients.size() != base.blocks.size())
        throw Error("weighting: one ingredient triple per base block");

    // inflated point space: copies of each base point, grouped by the
    // base groups
    std::vector<std::vector<int>> copies(static_cast<size_t>(base.v()));
    std::vector<std::string> labels;
    for (int p = 0; p < base.v(); ++p)
        for (int c = 0; c < weights[static_cast<size_t>(p)]; ++c) {
            copies[static_cast<size_t>(p)].push_back(
                static_cast<int>(labels.size()));
            labels.push_back(base.labels.label(p) + "." + std::to_string(c));
        }
    LabelMap lm(labels);
    std::vector<Block> out_groups;
    for (const Block& g : base.groups) {
        std::vector<int> pts;
        for (int p : g)
            for (int q : copies[static_cast<size_t>(p)]) pts.push_back(q);
        out_groups.emplace_back(std::move(pts));
    }

    std::array<std::vector<Block>, 3> out_blocks;
    WeightingResult res;
    for (size_t bi = 0; bi < base.blocks.size(); ++bi) {
        const Block& A = base.blocks[bi];
        const GddTriple& ing = ingredients[bi].gdds;
        detail::require_shared_shape(ing);
        if (static_cast<int>(ing[0].groups.size()) != A.size())
            throw Error("weighting: ingredient for block {" +
                        base.labels.label(A[0]) +
                        "...} has wrong group count");
        // ingredient group j -> copies of the block's j-th point
        std::vector<int> map(static_cast<size_t>(ing[0].v()), -1);
        for (int j = 0; j < A.size(); ++j) {
            const Block& g = ing[0].groups[static_cast<size_t>(j)];
            const auto& tgt = copies[static_cast<size_t>(A[j])];
            if (g.size() != static_cast<int>(tgt.size()))
                throw Error("weighting: ingredient group size " +
                            std::to_string(g.size()) +
                            " does not match weight of point " +
                            base.labels.label(A[j]) + " in block {" +
                            base.labels.label(A[0]) + "...}");
            for (size_t m = 0; m < tgt.size(); ++m)
                map[static_cast<size_t>(g[static_cast<int>(m)])] = tgt[m];
        }
        auto common = triple_common(ing);
        res.ingredient_sum += common.mutual;
        res.per_block_common.push_back(common.mutual);
        for (int d = 0; d < 3; ++d)
            for (const Block& blk : ing[static_cast<size_t>(d)].blocks) {
                std::vector<int> pts;
                for (int p : blk) {
                    if (map[static_cast<size_t>(p)] < 0)
                        throw Error("weighting: ingredient block uses a "
                                    "point outside its groups");
                    pts.push_back(map[static_cast<size_t>(p)]);
                }
                out_blocks[static_cast<size_t>(d)].emplace_back(
                    std::move(pts));
            }
    }

    for (int d = 0; d < 3; ++d) {
        res.out[static_cast<size_t>(d)] =
            GDD(lm, out_groups, std::move(out_blocks[static_cast<size_t>(d)]));
        auto rep = verify_gdd(res.out[static_cast<size_t>(d)]);
        if (!rep.valid)
            throw Error("weighting: output is not a GDD: " +
                        rep.violations.front());
    }
    auto common = triple_common(res.out);
    res.measured_common = common.mutual;
    res.same_common = common.same_common;
    return res;
}

// ------------------------------------------------- filling construction
struct FillResult {
    DesignTriple out;
    long measured_common = 0;   // of the three outputs
    long gdd_common = 0;        // of the GDD triple going in
    long filler_sum = 0;        // sum of measured filler commons
    bool same_common = true;
};

// Filling (i): one new point joins every group; group i's filler triple is
// an S(2,4,g_i+1) triple on group_i + new_label.
inline FillResult fill_plus_one(const GddTriple& gdds,
                                const std::vector<DesignTriple>& fillers,
                                const std::string& new_label = "inf") {
    detail::require_shared_shape(gdds);
    const GDD& g0 = gdds[0];
    if (fillers.size() != g0.groups.size())
        throw Error("fill_plus_one: one filler triple per group");

    std::vector<std::string> labels = g0.labels.labels();
    labels.push_back(new_label);
    LabelMap lm(labels);

    FillResult res;
    res.gdd_common = triple_common(gdds).mutual;
    std::array<std::vector<Block>, 3> blocks;
    for (int d = 0; d < 3; ++d)
        blocks[static_cast<size_t>(d)] = gdds[static_cast<size_t>(d)].blocks;

    for (size_t gi = 0; gi < g0.groups.size(); ++gi) {
        const Block& grp = g0.groups[gi];
        std::set<std::string> want;
        for (int p : grp) want.insert(g0.labels.label(p));
        want.insert(new_label);
        const DesignTriple& f = fillers[gi];
        for (const Design& fd : f) {
            if (fd.v() != grp.size() + 1)
                throw Error("fill_plus_one: filler for group " +
                            std::to_string(gi) + " has v=" +
                            std::to_string(fd.v()) + ", expected " +
                            std::to_string(grp.size() + 1));
            std::set<std::string> have(fd.labels().labels().begin(),
                                       fd.labels().labels().end());
            if (have != want)
                throw Error("fill_plus_one: filler for group " +
                            std::to_string(gi) +
                            " is not on the group's points plus '" +
                            new_label + "'");
        }
        res.filler_sum += triple_common(f).mutual;
        for (int d = 0; d < 3; ++d) {
            auto moved = detail::reindex(f[static_cast<size_t>(d)].blocks(),
                                         f[static_cast<size_t>(d)].labels(),
                                         lm);
            auto& dst = blocks[static_cast<size_t>(d)];
            dst.insert(dst.end(), moved.begin(), moved.end());
        }
    }
    int k = *g0.block_sizes.begin();
    for (int d = 0; d < 3; ++d) {
        res.out[static_cast<size_t>(d)] =
            Design(lm, k, std::move(blocks[static_cast<size_t>(d)]));
        if (!verify_steiner(res.out[static_cast<size_t>(d)]).is_steiner)
            throw Error("fill_plus_one: output is not Steiner");
    }
    auto common = triple_common(res.out);
    res.measured_common = common.mutual;
    res.same_common = common.same_common;
    return res;
}

// Filling (ii): four new points Y join every group; group i's filler
// triple is an S(2,4,g_i+4) triple on group_i + Y, every filler containing
// the block y = Y. The y block is kept from the last group only.
inline FillResult fill_plus_four(const GddTriple& gdds,
                                 const std::vector<DesignTriple>& fillers,
                                 const std::vector<std::string>& y_labels) {
    detail::require_shared_shape(gdds);
    const GDD& g0 = gdds[0];
    if (fillers.size() != g0.groups.size())
        throw Error("fill_plus_four: one filler triple per group");
    if (y_labels.size() != 4)
        throw Error("fill_plus_four: Y must have exactly 4 points");

    std::vector<std::string> labels = g0.labels.labels();
    for (const auto& t : y_labels) labels.push_back(t);
    LabelMap lm(labels);
    Block y = [&] {
        std::vector<int> pts;
        for (const auto& t : y_labels) pts.push_back(lm.index(t));
        return Block(pts);
    }();

    FillResult res;
    res.gdd_common = triple_common(gdds).mutual;
    std::array<std::vector<Block>, 3> blocks;
    for (int d = 0; d < 3; ++d)
        blocks[static_cast<size_t>(d)] = gdds[static_cast<size_t>(d)].blocks;

    for (size_t gi = 0; gi < g0.groups.size(); ++gi) {
        const Block& grp = g0.groups[gi];
        bool last = gi + 1 == g0.groups.size();
        std::set<std::string> want;
        for (int p : grp) want.insert(g0.labels.label(p));
        for (const auto& t : y_labels) want.insert(t);
        const DesignTriple& f = fillers[gi];
        for (const Design& fd : f) {
            std::set<std::string> have(fd.labels().labels().begin(),
                                       fd.labels().labels().end());
            if (fd.v() != grp.size() + 4 || have != want)
                throw Error("fill_plus_four: filler for group " +
                            std::to_string(gi) +
                            " is not on the group's points plus Y");
        }
        res.filler_sum += triple_common(f).mutual;
        for (int d = 0; d < 3; ++d) {
            auto moved = detail::reindex(f[static_cast<size_t>(d)].blocks(),
                                         f[static_cast<size_t>(d)].labels(),
                                         lm);
            bool saw_y = false;
            for (Block& b : moved) {
                if (b == y) {
                    saw_y = true;
                    if (!last) continue;
                }
                blocks[static_cast<size_t>(d)].push_back(b);
            }
            if (!saw_y)
                throw Error("fill_plus_four: filler for group " +
                            std::to_string(gi) + " does not contain y");
        }
    }
    int k = *g0.block_sizes.begin();
    for (int d = 0; d < 3; ++d) {
        res.out[static_cast<size_t>(d)] =
            Design(lm, k, std::move(blocks[static_cast<size_t>(d)]));
        if (!verify_steiner(res.out[static_cast<size_t>(d)]).is_steiner)
            throw Error("fill_plus_four: output is not Steiner");
    }
    auto common = triple_common(res.out);
    res.measured_common = common.mutual;
    res.same_common = common.same_common;
    return res;
}

// --------------------------------------------------- v -> 3v+1 expansion
// Each copy j attaches to base point i one parallel class worth of triples
// (attach[j][i]); the attachment sets of one copy must partition the STS
// block set class-by-class.
struct ExpansionResult {
    DesignTriple out;
    long measured_common = 0;
    long base_common = 0;
    bool same_common = true;
};

inline ExpansionResult expand_3v1(
    const DesignTriple& bases, const Design& sts,
    const std::array<std::vector<std::vector<Block>>, 3>& attach) {
    const Design& b0 = bases[0];
    for (const Design& b : bases)
        if (!(b.labels() == b0.labels()) || b.k() != 4)
            throw Error("expand_3v1: base triple must share labels, k=4");
    if (sts.k() != 3) throw Error("expand_3v1: second factor must be an STS");
    if (sts.v() != 2 * b0.v() + 1)
        throw Error("expand_3v1: need an STS on 2v+1 points");
    for (const std::string& l : b0.labels().labels())
        if (sts.labels().has(l))
            throw Error("expand_3v1: base and STS labels must be disjoint");

    std::vector<std::string> labels = b0.labels().labels();
    for (const auto& l : sts.labels().labels()) labels.push_back(l);
    LabelMap lm(labels);
    int shift = b0.v();

    ExpansionResult res;
    res.base_common = triple_common(bases).mutual;
    for (int d = 0; d < 3; ++d) {
        const auto& asg = attach[static_cast<size_t>(d)];
        if (static_cast<int>(asg.size()) != b0.v())
            throw Error("expand_3v1: need one class per base point");
        std::multiset<Block> used;
        std::vector<Block> blocks = bases[static_cast<size_t>(d)].blocks();
        for (int i = 0; i < b0.v(); ++i) {
            std::vector<int> seen(static_cast<size_t>(sts.v()), 0);
            for (const Block& tri : asg[static_cast<size_t>(i)]) {
                if (!sts.has_block(tri))
                    throw Error("expand_3v1: attached triple not in the STS");
                used.insert(tri);
                std::vector<int> pts{i};
                for (int p : tri) {
                    ++seen[static_cast<size_t>(p)];
                    pts.push_back(shift + p);
                }
                blocks.emplace_back(std::move(pts));
            }
            for (int c : seen)
                if (c != 1)
                    throw Error("expand_3v1: attachment for point " +
                                b0.labels().label(i) +
                                " is not a parallel class");
        }
        if (used.size() != sts.block_count())
            throw Error("expand_3v1: attachments do not exhaust the STS");
        res.out[static_cast<size_t>(d)] = Design(lm, 4, std::move(blocks));
        if (!verify_steiner(res.out[static_cast<size_t>(d)]).is_steiner)
            throw Error("expand_3v1: output is not Steiner");
    }
    auto common = triple_common(res.out);
    res.measured_common = common.mutual;
    res.same_common = common.same_common;
    return res;
}

// Attachment list from a resolution: slot i gets class perm[i].
inline std::vector<std::vector<Block>> attach_from_resolution(
    const Resolution& res, const std::vector<int>& perm) {
    std::vector<std::vector<Block>> out;
    out.reserve(perm.size());
    for (int c : perm) {
        if (c < 0 || c >= static_cast<int>(res.classes.size()))
            throw Error("attach_from_resolution: class index out of range");
        out.push_back(res.classes[static_cast<size_t>(c)]);
    }
    if (std::set<int>(perm.begin(), perm.end()).size() != perm.size())
        throw Error("attach_from_resolution: class used twice");
    return out;
}

// Redistribute, among the given slots, the triples lying inside a
// sub-point set: slot slots[i] receives the inside-triples previously at
// slot slots[perm[i]]. Models permuting the parallel classes of a
// sub-KTS(9) in place.
inline void swap_within_subsystem(std::vector<std::vector<Block>>& attach,
                                  const std::set<int>& sub_points,
                                  const std::vector<int>& slots,
                                  const std::vector<int>& perm) {
    if (perm.size() != slots.size())
        throw Error("swap_within_subsystem: perm/slots size mismatch");
    auto inside = [&](const Block& b) {
        for (int p : b)
            if (!sub_points.count(p)) return false;
        return true;
    };
    std::vector<std::vector<Block>> pulled(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) {
        auto& cls = attach[static_cast<size_t>(slots[i])];
        auto it = std::stable_partition(cls.begin(), cls.end(),
                                        [&](const Block& b) {
                                            return !inside(b);
                                        });
        pulled[i].assign(it, cls.end());
        cls.erase(it, cls.end());
    }
    for (size_t i = 0; i < slots.size(); ++i) {
        auto& dst = attach[static_cast<size_t>(slots[i])];
        const auto& src = pulled[static_cast<size_t>(perm[i])];
        dst.insert(dst.end(), src.begin(), src.end());
        std::sort(dst.begin(), dst.end());
    }
}

// ----------------------------------------------------- subsystem swap
struct SwapResult {
    DesignTriple out;
    long measured_common = 0;
    long host_rest = 0; // host blocks outside the subdesign
    bool same_common = true;
};

// Replace the host's subdesign on sub_points by the given S(2,4,w) triple.
inline SwapResult subsystem_swap(const Design& host,
                                 const std::vector<int>& sub_points,
                                 const DesignTriple& subs) {
    std::set<int> sub(sub_points.begin(), sub_points.end());
    std::vector<Block> inside, outside;
    for (const Block& b : host.blocks()) {
        bool in = true;
        for (int p : b) in &= sub.count(p) != 0;
        (in ? inside : outside).push_back(b);
    }
    // the induced subdesign, on its own label map
    std::vector<std::string> sub_labels;
    std::vector<int> back(static_cast<size_t>(host.v()), -1);
    for (int p : sub_points) {
        back[static_cast<size_t>(p)] = static_cast<int>(sub_labels.size());
        sub_labels.push_back(host.labels().label(p));
    }
    std::vector<Block> sub_blocks;
    for (const Block& b : inside) {
        std::vector<int> pts;
        for (int p : b) pts.push_back(back[static_cast<size_t>(p)]);
        sub_blocks.emplace_back(std::move(pts));
    }
    Design induced(LabelMap(sub_labels), host.k(), std::move(sub_blocks));
    if (!verify_steiner(induced).is_steiner)
        throw Error("subsystem_swap: host has no subdesign on these points");

    SwapResult res;
    res.host_rest = static_cast<long>(outside.size());
    for (int d = 0; d < 3; ++d) {
        const Design& s = subs[static_cast<size_t>(d)];
        if (s.v() != static_cast<int>(sub_points.size()))
            throw Error("subsystem_swap: replacement v mismatch");
        std::set<std::string> have(s.labels().labels().begin(),
                                   s.labels().labels().end());
        std::set<std::string> want(sub_labels.begin(), sub_labels.end());
        if (have != want)
            throw Error("subsystem_swap: replacement labels differ from the "
                        "subdesign's points");
        std::vector<Block> blocks = outside;
        auto moved = detail::reindex(s.blocks(), s.labels(), host.labels());
        blocks.insert(blocks.end(), moved.begin(), moved.end());
        res.out[static_cast<size_t>(d)] =
            Design(host.labels(), host.k(), std::move(blocks));
        if (!verify_steiner(res.out[static_cast<size_t>(d)]).is_steiner)
            throw Error("subsystem_swap: output is not Steiner");
    }
    auto common = triple_common(res.out);
    res.measured_common = common.mutual;
    res.same_common = common.same_common;
    return res;
}

// ------------------------------------------------------- cover replace
// Swap a block set for another covering exactly the same pairs.
inline Design cover_replace(const Design& d, const std::vector<Block>& oldb,
                            const std::vector<Block>& newb) {
    std::map<std::pair<int, int>, int> delta;
    auto bump = [&](const Block& b, int sign) {
        const auto& p = b.points();
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                delta[{p[i], p[j]}] += sign;
    };
    for (const Block& b : oldb) {
        if (!d.has_block(b))
            throw Error("cover_replace: block {" + d.block_str(b) +
                        "} not in the design");
        bump(b, -1);
    }
    for (const Block& b : newb) bump(b, +1);
    for (const auto& [pr, c] : delta)
        if (c != 0)
            throw Error("cover_replace: pair {" + d.labels().label(pr.first) +
                        "," + d.labels().label(pr.second) + "} covered " +
                        (c > 0 ? "twice" : "zero times") +
                        " after replacement");
    std::set<Block> olds(oldb.begin(), oldb.end());
    std::vector<Block> blocks;
    for (const Block& b : d.blocks())
        if (!olds.count(b)) blocks.push_back(b);
    for (const Block& b : newb) blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return Design(d.labels(), d.k(), std::move(blocks));
}

} // namespace designkit

#endif
