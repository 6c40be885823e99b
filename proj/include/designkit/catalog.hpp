#ifndef DESIGNKIT_CATALOG_HPP
#define DESIGNKIT_CATALOG_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "designkit/design.hpp"
#include "designkit/develop.hpp"
#include "designkit/gdd.hpp"
#include "designkit/intersect.hpp"
#include "designkit/io.hpp"
#include "designkit/resolution.hpp"

namespace designkit {

// ----------------------------------------------------------------------
// Embedded datasets. Designs are stored in .des text form and parsed at
// load; every entry is re-verified before it is handed out.
// ----------------------------------------------------------------------
namespace data {

inline constexpr const char* kD13 = R"(v 13 k 4
labels 0 1 2 3 4 5 6 7 8 9 a b c
0 1 3 9
0 2 8 c
0 4 5 7
0 6 a b
1 2 4 a
1 5 6 8
1 7 b c
2 3 5 b
2 6 7 9
3 4 6 c
3 7 8 a
4 8 9 b
5 9 a c
)";

inline constexpr const char* kD16 = R"(v 16 k 4
labels 0 1 2 3 4 5 6 7 8 9 a b c d e f
0 1 2 3
0 4 5 6
0 7 8 9
0 a b c
0 d e f
1 4 7 a
1 5 b d
1 6 8 e
1 9 c f
2 4 c e
2 5 7 f
2 6 9 b
2 8 a d
3 4 9 d
3 5 8 c
3 6 a f
3 7 b e
4 8 b f
5 9 a e
6 7 c d
)";

inline constexpr const char* kD25 = R"(v 25 k 4
labels 0 1 2 3 4 5 6 7 8 9 a b c d e f g h i j k l m n o
0 1 2 i
0 3 6 l
0 4 8 o
0 5 9 a
0 7 g h
0 b d n
0 c f j
0 e k m
1 3 a b
1 4 7 m
1 5 6 o
1 8 f h
1 9 e l
1 c k n
1 d g j
2 3 7 o
2 4 9 b
2 5 8 n
2 6 f g
2 a c m
2 d k l
2 e h j
3 4 5 j
3 8 c d
3 9 f k
3 e g n
3 h i m
4 6 d e
4 a g k
4 c h l
4 f i n
5 7 c e
5 b h k
5 d f m
5 g i l
6 7 8 k
6 9 c i
6 a h n
6 b j m
7 9 j n
7 a d i
7 b f l
8 9 g m
8 a j l
8 b e i
9 d h o
a e f o
b c g o
i j k o
l m n o
)";

inline constexpr const char* kD25ex = R"(v 25 k 4
labels 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25
1 2 3 4
1 5 6 7
1 8 9 10
1 11 12 13
1 14 15 16
1 17 18 19
1 20 21 22
1 23 24 25
2 5 8 11
2 6 9 14
2 7 15 17
2 10 12 20
2 13 16 23
2 18 21 24
2 19 22 25
3 5 9 24
3 6 8 22
3 7 13 25
3 10 11 18
3 12 15 19
3 14 21 23
3 16 17 20
4 5 14 19
4 6 12 23
4 7 8 20
4 9 13 18
4 10 16 25
4 11 17 21
4 15 22 24
5 10 17 23
5 12 21 25
5 13 15 20
5 16 18 22
6 10 15 21
6 11 16 19
6 13 17 24
6 18 20 25
7 9 16 21
7 10 19 24
7 11 22 23
7 12 14 18
8 12 16 24
8 13 19 21
8 14 17 25
8 15 18 23
9 11 15 25
9 12 17 22
9 19 20 23
10 13 14 22
11 14 20 24
)";

inline constexpr const char* kD28a = R"(v 28 k 4
0 1 2 3
0 4 8 12
0 5 16 20
0 6 9 24
0 7 17 22
0 10 13 18
0 11 21 26
0 14 19 27
0 15 23 25
1 4 17 21
1 5 9 13
1 6 16 23
1 7 8 25
1 10 20 27
1 11 12 19
1 14 22 24
1 15 18 26
2 4 9 27
2 5 19 21
2 6 8 15
2 7 18 23
2 10 12 17
2 11 22 25
2 13 20 24
2 14 16 26
3 4 18 20
3 5 8 26
3 6 19 22
3 7 9 14
3 10 23 24
3 11 13 16
3 12 21 25
3 15 17 27
4 5 6 7
4 10 16 25
4 11 14 23
4 13 22 26
4 15 19 24
5 10 15 22
5 11 17 24
5 12 23 27
5 14 18 25
6 10 14 21
6 11 18 27
6 12 20 26
6 13 17 25
7 10 19 26
7 11 15 20
7 12 16 24
7 13 21 27
8 9 10 11
8 13 19 23
8 14 17 20
8 16 22 27
8 18 21 24
9 12 18 22
9 15 16 21
9 17 23 26
9 19 20 25
12 13 14 15
16 17 18 19
20 21 22 23
24 25 26 27
)";

inline constexpr const char* kD28b = R"(v 28 k 4
0 1 4 7
0 2 5 8
0 3 6 9
0 10 13 16
0 11 14 17
0 12 15 18
0 19 22 25
0 20 23 26
0 21 24 27
1 2 6 11
1 3 5 10
1 8 9 13
1 12 19 24
1 14 20 21
1 15 16 26
1 17 18 22
1 23 25 27
2 3 4 12
2 7 9 14
2 10 20 22
2 13 17 27
2 15 19 21
2 16 18 23
2 24 25 26
3 7 8 15
3 11 21 23
3 13 19 20
3 14 18 25
3 16 17 24
3 22 26 27
4 5 16 20
4 6 18 19
4 8 17 25
4 9 23 24
4 10 11 26
4 13 21 22
4 14 15 27
5 6 17 21
5 7 22 24
5 9 18 26
5 11 12 27
5 13 15 25
5 14 19 23
6 7 16 27
6 8 22 23
6 10 12 25
6 13 14 26
6 15 20 24
7 10 18 21
7 11 20 25
7 12 13 23
7 17 19 26
8 10 14 24
8 11 16 19
8 12 21 26
8 18 20 27
9 10 19 27
9 11 15 22
9 12 17 20
9 16 21 25
10 15 17 23
11 13 18 24
12 14 16 22
)";

// 111 = 4*3 + 11*9 blocks once developed
inline constexpr const char* kDev37z9 = R"(order 9
classes a b c d
const inf
base inf a0 a3 a6
base inf b0 b3 b6
base inf c0 c3 c6
base inf d0 d3 d6
base a0 a1 b3 c0
base a0 a5 b6 c6
base a0 a7 d0 d1
base a0 b0 b4 c3
base a1 c3 c8 d0
base a2 c6 c7 d0
base a3 b8 d0 d7
base a4 b2 b3 d0
base b0 c1 d0 d5
base b5 b7 c0 d0
base b6 c2 c4 d0
)";

// classes p,q,r stand for the three Z11 coordinate copies
inline constexpr const char* kDev37z11 = R"(order 11
classes p q r
const inf1 inf2 inf3 inf4
base p0 q0 r0 inf1
base p0 q1 r2 inf2
base p0 q2 r5 inf3
base p0 q8 r6 inf4
base p0 p1 p5 q10
base q0 q2 q5 r7
base p8 r0 r1 r5
base p0 p3 q6 q7
base q0 q4 r8 r10
base p2 p4 r0 r3
literal inf1 inf2 inf3 inf4
)";

// partial: 8 full orbits + 2 short ones = 102 blocks; the x-fiber pairs
// with differences 1,2,3,5,6 stay uncovered
inline constexpr const char* kDev37z12 = R"(order 12
classes x y z
const inf
base z0 x0 y0 inf
base x0 x4 y11 z5
base x2 z0 z1 z5
base x7 y0 y1 z9
base x10 y0 y2 z4
base x3 y0 y4 z7
base x2 y0 y5 z10
base x5 y1 z0 z2
base y0 y3 y6 y9
base z0 z3 z6 z9
)";

// AG(2,3): the unique KTS(9)
inline constexpr const char* kKts9 = R"(v 9 k 3
class
0 1 2
3 4 5
6 7 8
class
0 3 6
1 4 7
2 5 8
class
0 4 8
1 5 6
2 3 7
class
0 5 7
1 3 8
2 4 6
)";

} // namespace data

// One row set of a cataloged intersection table.
struct PermTable {
    std::string base_id; // catalog id of the design / GDD scanned
    bool on_gdd = false;
    std::vector<ScanRow> rows;
};

enum class EntryKind { design, dev_spec, gdd, perm_table, resolution };

inline const char* to_string(EntryKind k) {
    switch (k) {
    case EntryKind::design: return "design";
    case EntryKind::dev_spec: return "dev-spec";
    case EntryKind::gdd: return "gdd";
    case EntryKind::perm_table: return "permutation-table";
    case EntryKind::resolution: return "resolution";
    }
    return "?";
}

struct CatalogEntry {
    std::string id;
    EntryKind kind = EntryKind::design;
    std::string source; // where the data comes from
    std::variant<Design, DevelopmentSpec, GDD, PermTable,
                 std::pair<Design, Resolution>>
        payload;
    // marked point subset (induced sub-STS) where one is singled out
    std::vector<std::string> marked_subset;
    long expect_blocks = -1;   // developed/stored block count, if pinned
    bool expect_steiner = true;

    const Design& design() const { return std::get<Design>(payload); }
    const DevelopmentSpec& dev() const {
        return std::get<DevelopmentSpec>(payload);
    }
    const GDD& gdd() const { return std::get<GDD>(payload); }
    const PermTable& table() const { return std::get<PermTable>(payload); }
    const std::pair<Design, Resolution>& resolution() const {
        return std::get<std::pair<Design, Resolution>>(payload);
    }
};

namespace detail {

class CatalogImpl {
public:
    CatalogImpl() {
        add_designs();
        add_dev_specs();
        add_gdds();
        add_tables();
        add_resolutions();
        for (auto& [id, entry] : entries_) verify_entry(entry);
    }

    const CatalogEntry& get(const std::string& id) const {
        auto it = entries_.find(id);
        if (it != entries_.end()) return it->second;
        std::string near;
        for (const auto& [eid, _] : entries_)
            if (eid.find(id) != std::string::npos ||
                id.find(eid) != std::string::npos)
                near += (near.empty() ? "" : ", ") + eid;
        throw Error("unknown catalog id '" + id + "'" +
                    (near.empty() ? "" : "; nearest: " + near));
    }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        for (const auto& [id, _] : entries_) out.push_back(id);
        return out;
    }

private:
    void put(CatalogEntry e) { entries_.emplace(e.id, std::move(e)); }

    void add_designs() {
        auto des = [&](const char* id, const char* text, const char* src,
                       std::vector<std::string> subset = {}) {
            CatalogEntry e;
            e.id = id;
            e.kind = EntryKind::design;
            e.source = src;
            e.payload = parse_des(text);
            e.marked_subset = std::move(subset);
            put(std::move(e));
        };
        des("s2-4-13.L4.1", data::kD13, "S(2,4,13), 13 blocks");
        des("s2-4-16.L4.2", data::kD16, "S(2,4,16), 20 blocks");
        des("s2-4-25.L4.3", data::kD25,
            "S(2,4,25), 50 blocks (one printed block corrected to restore "
            "pair balance)");
        des("s2-4-25.Ex6.1", data::kD25ex,
            "S(2,4,25) on Z25 with a marked sub-STS(7)",
            {"1", "2", "3", "5", "6", "8", "9"});
        des("s2-4-28.L6.3s1", data::kD28a,
            "S(2,4,28) on Z28 with a marked sub-STS(7)",
            {"2", "4", "16", "22", "25", "26", "27"});
        des("s2-4-28.L6.3s2", data::kD28b,
            "S(2,4,28) on Z28 with a marked sub-STS(9)",
            {"4", "5", "6", "13", "14", "15", "19", "20", "21"});
    }

    void add_dev_specs() {
        auto dev = [&](const char* id, const char* text, const char* src,
                       long blocks, bool steiner,
                       std::vector<std::string> subset = {}) {
            CatalogEntry e;
            e.id = id;
            e.kind = EntryKind::dev_spec;
            e.source = src;
            e.payload = parse_dev(text);
            e.expect_blocks = blocks;
            e.expect_steiner = steiner;
            e.marked_subset = std::move(subset);
            put(std::move(e));
        };
        dev("s2-4-37.step1", data::kDev37z9,
            "S(2,4,37) base blocks over Z9, marked sub-STS(9)", 111, true,
            {"a0", "a3", "a6", "b0", "b3", "b6", "c0", "c3", "c6"});
        dev("s2-4-37.step2", data::kDev37z11,
            "S(2,4,37) base blocks over Z11, marked sub-STS(7)", 111, true,
            {"p0", "p1", "q2", "q10", "r3", "r4", "r5"});
        dev("s2-4-37.step3", data::kDev37z12,
            "partial S(2,4,37) over Z12; 102 blocks, x-fiber pairs open",
            102, false);
    }

    void add_gdds() {
        auto from_design = [&](const char* id, const char* base,
                               const char* src, GDD g) {
            CatalogEntry e;
            e.id = id;
            e.kind = EntryKind::gdd;
            e.source = std::string(src) + " of " + base;
            e.payload = std::move(g);
            put(std::move(e));
        };
        const Design d13 = parse_des(data::kD13);
        const Design d16 = parse_des(data::kD16);
        std::vector<Block> pclass;
        for (const char* s : {"0 1 2 3", "4 8 b f", "5 9 a e", "6 7 c d"}) {
            std::istringstream is(s);
            std::vector<std::string> toks;
            std::string t;
            while (is >> t) toks.push_back(t);
            pclass.push_back(d16.parse_block(toks));
        }
        from_design("gdd.L4.5", "s2-4-16.L4.2", "parallel-class 4^4 view",
                    gdd_from_parallel_class(d16, pclass));
        from_design("gdd.L4.7.del0", "s2-4-16.L4.2", "delete 0",
                    delete_point(d16, std::string("0")));
        from_design("gdd.L4.7.deld", "s2-4-16.L4.2", "delete d",
                    delete_point(d16, std::string("d")));
        from_design("gdd.L4.8.del0", "s2-4-13.L4.1", "delete 0",
                    delete_point(d13, std::string("0")));
        from_design("gdd.L4.8.del8", "s2-4-13.L4.1", "delete 8",
                    delete_point(d13, std::string("8")));
    }

    void add_tables() {
        auto tbl = [&](const char* id, const char* base, bool on_gdd,
                       std::vector<ScanRow> rows, const char* src) {
            CatalogEntry e;
            e.id = id;
            e.kind = EntryKind::perm_table;
            e.source = src;
            e.payload = PermTable{base, on_gdd, std::move(rows)};
            put(std::move(e));
        };
        tbl("tbl.L4.1", "s2-4-13.L4.1", false,
            {{"(0,1,2,3,4,5)", "(5,4,3,2,1,0)", 0},
             {"(8,5)(a,b)(3,7)(1,6)", "(8,6)(1,5)(a,3,b,7)", 1},
             {"(7,b,c,6)", "(8,5,6,7)", 2},
             {"(4,7)(9,2)(1,8)", "(3,9,c)(1,8)", 3},
             {"(3,7)(c,0,2)(1,6)(9,b)", "(9,4)(3,7)(0,2)(1,6)", 4},
             {"(a,b)(4,5)", "(a,b)(c,8)", 5},
             {"id", "id", 13}},
            "intersection table for v=13");
        tbl("tbl.L4.2", "s2-4-16.L4.2", false,
            {{"(0,1,4,9,d)(6,5)(b,f)", "(2,3,7,6,c)(5,8)(a,b)(f,4)", 0},
             {"(0,1,2,3)(8,9,5,b,c)", "(d,f,e,a)(4,6,7)(c,9)", 1},
             {"(1,2)(a,b)(7,f)(c,e)(6,8)", "(a,b,7,f,c,e,6,8)(4,d)", 2},
             {"(c,e)(5,6)(b,f,7,d,9)", "(8,b,7,a,d,9,f)(1,3)", 3},
             {"(0,1,2,3)", "(4,8,b,f)", 4},
             {"(4,f)(d,7)(a,9,5)", "(7,c,d)(f,b,4)", 5},
             {"(0,1,2)(a,e)", "(f,b)(1,0,2)", 6},
             {"(6,7,c)", "(6,c,7)", 8},
             {"id", "id", 20}},
            "intersection table for v=16");
        tbl("tbl.L4.3", "s2-4-25.L4.3", false,
            {{"(0,1,2,3)", "(2,1,0,3)", 23},
             {"(0,1,2)", "(2,1,0)", 29},
             {"id", "id", 50}},
            "intersection table for v=25");
        tbl("tbl.L4.4", "s2-4-28.L6.3s1", false,
            {{"(0,1,3,5,6,7,12,17,15,18,19,20,11)(25,26,27)", "inv", 1}},
            "single row giving 1 for v=28");
        tbl("tbl.L4.5", "gdd.L4.5", true,
            {{"id", "id", 16},
             {"(6,7,c)", "(6,c,7)", 4},
             {"(0,1,2)(a,e)", "(f,b)(1,0,2)", 2},
             {"(4,f)(d,7)(a,9,5)", "(7,c,d)(f,b,4)", 1},
             {"(0,1,2,3)", "(4,8,b,f)", 0}},
            "4-GDD 4^4 table (common-parallel-class intersections)");
        tbl("tbl.L4.7.del0", "gdd.L4.7.del0", true,
            {{"id", "id", 15},
             {"(a,c)(1,3)(6,5)", "(7,9)(d,e)(2,3)(a,c)", 1},
             {"(2,3)(5,6)(7,8)(a,c)(d,f)", "(1,2)(4,6)(8,9)(a,c)(d,e)", 0}},
            "4-GDD 3^5 table, delete-0 derivation");
        tbl("tbl.L4.7.deld", "gdd.L4.7.deld", true,
            {{"(6,7,c)", "(6,c,7)", 3}},
            "4-GDD 3^5 table, delete-d derivation");
        tbl("tbl.L4.8.del0", "gdd.L4.8.del0", true,
            {{"id", "id", 9}, {"(a,b)(4,5)", "(a,b)(8,c)", 1}},
            "4-GDD 3^4 table, delete-0 derivation");
        tbl("tbl.L4.8.del8", "gdd.L4.8.del8", true,
            {{"(3,7)(c,0,2)(1,6)(9,b)", "(9,4)(3,7)(0,2)(1,6)", 0}},
            "4-GDD 3^4 table, delete-8 derivation");
        tbl("tbl.Ex6.1", "s2-4-25.Ex6.1", false,
            {{"(1,2,3)(18,17,16,13,12,11)", "inv", 7}},
            "split permutation acting on the marked design");
    }

    void add_resolutions() {
        CatalogEntry e;
        e.id = "kts9";
        e.kind = EntryKind::resolution;
        e.source = "AG(2,3) with its four direction classes";
        e.payload = parse_res(data::kKts9);
        put(std::move(e));
    }

    void verify_entry(const CatalogEntry& e) const {
        auto fail = [&](const std::string& why) {
            throw Error("catalog entry '" + e.id +
                        "' failed verification: " + why);
        };
        switch (e.kind) {
        case EntryKind::design: {
            auto rep = verify_steiner(e.design());
            if (!rep.is_steiner) fail("not a Steiner design");
            break;
        }
        case EntryKind::dev_spec: {
            Design d = develop(e.dev());
            if (e.expect_blocks >= 0 &&
                static_cast<long>(d.block_count()) != e.expect_blocks)
                fail("developed block count " +
                     std::to_string(d.block_count()) + " != " +
                     std::to_string(e.expect_blocks));
            if (e.expect_steiner && !verify_steiner(d).is_steiner)
                fail("developed design is not Steiner");
            break;
        }
        case EntryKind::gdd: {
            auto rep = verify_gdd(e.gdd());
            if (!rep.valid) fail(rep.violations.front());
            break;
        }
        case EntryKind::perm_table: {
            const PermTable& t = e.table();
            const CatalogEntry& base = get(t.base_id);
            ScanReport rep = t.on_gdd ? spectrum_scan(base.gdd(), t.rows)
                                      : spectrum_scan(base.design(), t.rows);
            if (!rep.all_match_claims)
                fail("a row does not replay to its claim");
            break;
        }
        case EntryKind::resolution: {
            const auto& [d, r] = e.resolution();
            if (!verify_steiner(d).is_steiner) fail("not a Steiner design");
            if (!verify_resolution(d, r).valid) fail("not a resolution");
            break;
        }
        }
    }

    std::map<std::string, CatalogEntry> entries_;
};

inline const CatalogImpl& catalog_impl() {
    static const CatalogImpl impl;
    return impl;
}

} // namespace detail

inline const CatalogEntry& catalog_get(const std::string& id) {
    return detail::catalog_impl().get(id);
}

inline std::vector<std::string> catalog_ids() {
    return detail::catalog_impl().ids();
}

} // namespace designkit

#endif
