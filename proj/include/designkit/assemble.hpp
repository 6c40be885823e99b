#ifndef DESIGNKIT_ASSEMBLE_HPP
#define DESIGNKIT_ASSEMBLE_HPP

#include <string>
#include <vector>

#include "designkit/catalog.hpp"
#include "designkit/constructions.hpp"
#include "designkit/permutation.hpp"

// Builders that turn catalog permutation-table rows into the design/GDD
// triples consumed by the recursive constructions.
namespace designkit {

namespace detail {
inline const ScanRow& find_row(const PermTable& t, int int_no,
                               const std::string& table_id) {
    for (const ScanRow& row : t.rows)
        if (row.claimed == int_no) return row;
    throw Error("table '" + table_id + "' has no row with intersection " +
                std::to_string(int_no));
}
} // namespace detail

// (D, p2 D, p3 D) for the table row claiming the given intersection.
inline DesignTriple design_triple(const std::string& table_id, int int_no) {
    const auto& entry = catalog_get(table_id);
    const PermTable& t = entry.table();
    if (t.on_gdd)
        throw Error("table '" + table_id + "' is a GDD table");
    const ScanRow& row = detail::find_row(t, int_no, table_id);
    const Design& base = catalog_get(t.base_id).design();
    Permutation p2 = Permutation::parse(row.p2);
    Permutation p3 =
        row.p3 == "inv" ? p2.inverse() : Permutation::parse(row.p3);
    return {base, apply_permutation(base, p2), apply_permutation(base, p3)};
}

inline GddTriple gdd_triple(const std::string& table_id, int int_no) {
    const auto& entry = catalog_get(table_id);
    const PermTable& t = entry.table();
    if (!t.on_gdd)
        throw Error("table '" + table_id + "' is not a GDD table");
    const ScanRow& row = detail::find_row(t, int_no, table_id);
    const GDD& base = catalog_get(t.base_id).gdd();
    Permutation p2 = Permutation::parse(row.p2);
    Permutation p3 =
        row.p3 == "inv" ? p2.inverse() : Permutation::parse(row.p3);
    GddTriple out{base, base, base};
    out[1].blocks = apply_permutation(base.blocks, p2.resolve(base.labels));
    out[2].blocks = apply_permutation(base.blocks, p3.resolve(base.labels));
    return out;
}

// Tokens "group points in group order, then the new point" for a +1 fill.
inline std::vector<std::string> fill1_tokens(const GDD& g, size_t group_idx,
                                             const std::string& new_label) {
    std::vector<std::string> toks;
    for (int p : g.groups[group_idx]) toks.push_back(g.labels.label(p));
    toks.push_back(new_label);
    return toks;
}

// Relabel a +4 filler triple so that a designated common block lands on
// the Y tokens and the rest lands on the group tokens, in order.
inline DesignTriple fill4_filler(const DesignTriple& filler,
                                 const Block& y_src,
                                 const std::vector<std::string>& group_toks,
                                 const std::vector<std::string>& y_toks) {
    if (y_src.size() != 4 || y_toks.size() != 4)
        throw Error("fill4_filler: Y must have 4 points");
    for (const Design& f : filler)
        if (!f.has_block(y_src))
            throw Error("fill4_filler: designated block missing from a "
                        "filler design");
    std::vector<std::string> toks(static_cast<size_t>(filler[0].v()));
    size_t next = 0;
    for (int i = 0; i < filler[0].v(); ++i) {
        if (y_src.contains(i)) {
            auto pos = std::find(y_src.begin(), y_src.end(), i) -
                       y_src.begin();
            toks[static_cast<size_t>(i)] = y_toks[static_cast<size_t>(pos)];
        } else {
            if (next >= group_toks.size())
                throw Error("fill4_filler: group token count mismatch");
            toks[static_cast<size_t>(i)] = group_toks[next++];
        }
    }
    if (next != group_toks.size())
        throw Error("fill4_filler: group token count mismatch");
    return relabel(filler, toks);
}

// First block common to all three designs; errors when the triple shares
// nothing.
inline Block first_common_block(const DesignTriple& t) {
    auto common = common_blocks(t[0], t[1], t[2]);
    if (common.empty())
        throw Error("triple has no common block to designate as y");
    return common.front();
}

} // namespace designkit

#endif
