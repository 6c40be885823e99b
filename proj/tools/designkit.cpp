// Command-line surface: verify designs, replay cataloged intersection
// tables, develop base blocks, run constructions from plan files, search
// for trades and compute closure spectra. Exit code 0 on pass, 1 on any
// failed claim or verification, 2 on usage/parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "designkit/assemble.hpp"
#include "designkit/catalog.hpp"
#include "designkit/constructions.hpp"
#include "designkit/exact_cover.hpp"
#include "designkit/io.hpp"
#include "designkit/repro.hpp"
#include "designkit/spectrum.hpp"
#include "designkit/trade_search.hpp"

using namespace designkit;

namespace {

bool g_machine = false;

void kv(const std::string& key, const std::string& value) {
    if (g_machine) std::cout << key << "=" << value << "\n";
}
void kv(const std::string& key, long value) {
    kv(key, std::to_string(value));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Design load_design(const std::string& ref) {
    if (ref.rfind("catalog:", 0) == 0)
        return catalog_get(ref.substr(8)).design();
    return parse_des(slurp(ref));
}

std::string fmt_set(const std::set<long>& s) {
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

// ------------------------------------------------------------- verify
int cmd_verify(const std::string& file) {
    Design d = load_design(file);
    auto rep = verify_steiner(d);
    std::cout << "v=" << d.v() << " k=" << d.k() << " blocks="
              << rep.block_count << " expected=" << rep.expected_blocks
              << "\n";
    kv("v", d.v());
    kv("blocks", static_cast<long>(rep.block_count));
    kv("steiner", rep.is_steiner ? "yes" : "no");
    if (rep.is_steiner) {
        std::cout << "steiner: yes\n";
        return 0;
    }
    std::cout << "steiner: NO (" << rep.violations.size()
              << " pair violations)\n";
    for (size_t i = 0; i < rep.violations.size() && i < 8; ++i) {
        const auto& viol = rep.violations[i];
        std::cout << "  pair {" << d.labels().label(viol.pair.first) << ","
                  << d.labels().label(viol.pair.second) << "} covered "
                  << viol.count << "x\n";
    }
    return 1;
}

// ---------------------------------------------------------- intersect
int cmd_intersect(const std::vector<std::string>& files) {
    std::vector<Design> ds;
    for (const auto& f : files) ds.push_back(load_design(f));
    auto common = common_blocks(std::span<const Design>(ds));
    std::vector<std::vector<Block>> cols;
    for (const Design& d : ds) cols.push_back(d.blocks());
    bool same = same_common_blocks(cols);
    std::cout << "mutual common blocks: " << common.size() << "\n";
    std::cout << "same-common-blocks: " << (same ? "yes" : "NO") << "\n";
    for (const Block& b : common)
        std::cout << "  " << ds[0].block_str(b) << "\n";
    kv("common", static_cast<long>(common.size()));
    kv("same_common", same ? "yes" : "no");
    return same ? 0 : 1;
}

// ------------------------------------------------------------ permute
int cmd_permute(const std::string& file, const std::string& p2s,
                const std::string& p3s, const std::string& emit) {
    Design d = load_design(file);
    Permutation p2 = Permutation::parse(p2s);
    Permutation p3 =
        p3s == "inv" ? p2.inverse() : Permutation::parse(p3s);
    Design d2 = apply_permutation(d, p2);
    Design d3 = apply_permutation(d, p3);
    auto common = common_blocks(d, d2, d3);
    std::vector<std::vector<Block>> cols{d.blocks(), d2.blocks(),
                                         d3.blocks()};
    bool same = same_common_blocks(cols);
    std::cout << "intersection number: " << common.size()
              << (same ? "" : "  (same-common-blocks FAILS)") << "\n";
    kv("common", static_cast<long>(common.size()));
    kv("same_common", same ? "yes" : "no");
    if (!emit.empty()) {
        std::ofstream o2(emit + ".p2.des"), o3(emit + ".p3.des");
        emit_des(o2, d2);
        emit_des(o3, d3);
        std::cout << "wrote " << emit << ".p2.des and " << emit
                  << ".p3.des\n";
    }
    return 0;
}

// ------------------------------------------------------------ develop
int cmd_develop(const std::string& file, const std::string& out) {
    DevelopmentSpec spec = file.rfind("catalog:", 0) == 0
                               ? catalog_get(file.substr(8)).dev()
                               : parse_dev(slurp(file));
    Design d = develop(spec);
    auto rep = verify_steiner(d);
    std::cout << "developed " << d.block_count() << " blocks on " << d.v()
              << " points; steiner: " << (rep.is_steiner ? "yes" : "no")
              << "\n";
    kv("blocks", static_cast<long>(d.block_count()));
    kv("steiner", rep.is_steiner ? "yes" : "no");
    if (!out.empty()) {
        std::ofstream os(out);
        emit_des(os, d);
        std::cout << "wrote " << out << "\n";
    } else if (!g_machine) {
        emit_des(std::cout, d);
    }
    return 0;
}

// --------------------------------------------------------------- scan
int cmd_scan(const std::string& design_id, const std::string& table_id) {
    const auto& entry = catalog_get(table_id);
    const PermTable& t = entry.table();
    if (t.base_id != design_id)
        throw Error("table " + table_id + " scans " + t.base_id + ", not " +
                    design_id);
    ScanReport rep = t.on_gdd
                         ? spectrum_scan(catalog_get(t.base_id).gdd(), t.rows)
                         : spectrum_scan(catalog_get(t.base_id).design(),
                                         t.rows);
    for (const auto& r : rep.rows) {
        std::cout << "p2=" << r.row.p2 << " p3=" << r.row.p3 << " -> "
                  << r.measured;
        if (r.row.claimed >= 0)
            std::cout << " (claimed " << r.row.claimed
                      << (r.matches_claim ? ", ok" : ", MISMATCH") << ")";
        if (!r.same_common) std::cout << " [same-common-blocks fails]";
        std::cout << "\n";
    }
    std::set<long> achieved(rep.achieved.begin(), rep.achieved.end());
    std::cout << "achieved: " << fmt_set(achieved) << "\n";
    kv("achieved", fmt_set(achieved));
    kv("claims", rep.all_match_claims ? "pass" : "fail");
    return rep.all_match_claims ? 0 : 1;
}

// --------------------------------------------------------- gdd-delete
int cmd_gdd_delete(const std::string& design_id, const std::string& point) {
    Design d = load_design(design_id);
    GDD g = delete_point(d, point);
    auto rep = verify_gdd(g);
    std::cout << "# 4-GDD of type " << rep.group_type << ", "
              << g.blocks.size() << " blocks, valid: "
              << (rep.valid ? "yes" : "no") << "\n";
    kv("type", rep.group_type);
    kv("valid", rep.valid ? "yes" : "no");
    if (!g_machine) emit_gdd(std::cout, g);
    return rep.valid ? 0 : 1;
}

// ------------------------------------------------------ trade-extract
int cmd_trade_extract(const std::vector<std::string>& files) {
    Design d1 = load_design(files[0]);
    Design d2 = load_design(files[1]);
    Design d3 = load_design(files[2]);
    TradeSystem tr = extract_trade(d1, d2, d3);
    auto rep = verify_trade(tr, true);
    std::cout << "# volume " << tr.volume() << ", foundation "
              << rep.foundation.size() << ", valid: "
              << (rep.valid ? "yes" : "no") << "\n";
    kv("volume", tr.volume());
    kv("valid", rep.valid ? "yes" : "no");
    if (!g_machine) emit_trd(std::cout, tr);
    return rep.valid ? 0 : 1;
}

// ------------------------------------------------------- trade-search
int cmd_trade_search(int mu, int k, int t, long volume, bool steiner,
                     std::uint64_t max_nodes, double max_seconds,
                     bool extended, bool prune, const std::string& out) {
    SearchBudget budget;
    if (max_nodes) budget.max_nodes = max_nodes;
    if (extended)
        budget.max_nodes =
            std::max<std::uint64_t>(budget.max_nodes, 2000000000ull);
    budget.max_seconds = max_seconds;
    SearchOptions opt;
    opt.replication_bound = prune;
    auto res = search_trade(mu, k, t, volume, steiner, budget, opt);
    std::cout << certificate_text(res);
    kv("status", res.status == SearchStatus::witness_found ? "witness"
                 : res.status == SearchStatus::exhausted   ? "nonexistent"
                                                           : "inconclusive");
    kv("nodes", static_cast<long>(res.nodes));
    if (res.witness) {
        auto rep = verify_trade(*res.witness, steiner);
        kv("witness_valid", rep.valid ? "yes" : "no");
        if (!out.empty()) {
            std::ofstream os(out);
            emit_trd(os, *res.witness);
            std::cout << "wrote " << out << "\n";
        } else if (!g_machine) {
            emit_trd(std::cout, *res.witness);
        }
        return rep.valid ? 0 : 1;
    }
    return res.status == SearchStatus::exhausted ? 0 : 1;
}

// ---------------------------------------------------------- construct
// Plan file grammar (one directive per line, '#' comments):
//   base gdd:<catalog-id> | base file:<path.gdd>
//   weight <w>
//   ingredient <index|*> <table-id> <int-no>
//   fill one|four
//   filler <index|*> <table-id> <int-no>
//   ynames <t1> <t2> <t3> <t4>       (fill four only)
//   expect <n>                       (optional declared common count)
struct Plan {
    GDD base;
    int weight = 0;
    std::vector<std::pair<std::string, int>> ingredients; // per block
    bool fill_four = false;
    std::vector<std::pair<std::string, int>> fillers; // per group
    std::vector<std::string> ynames{"inf1", "inf2", "inf3", "inf4"};
    long expect = -1;
};

Plan parse_plan(const std::string& text) {
    Plan plan;
    bool have_base = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError(msg, lineno);
    };
    std::vector<std::tuple<std::string, std::string, int>> ing_rows,
        fil_rows;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        if (key == "base") {
            std::string ref;
            is >> ref;
            if (ref.rfind("gdd:", 0) == 0)
                plan.base = catalog_get(ref.substr(4)).gdd();
            else if (ref.rfind("file:", 0) == 0)
                plan.base = parse_gdd(slurp(ref.substr(5)));
            else
                fail("base needs gdd:<id> or file:<path>");
            have_base = true;
        } else if (key == "weight") {
            if (!(is >> plan.weight)) fail("weight needs an integer");
        } else if (key == "ingredient" || key == "filler") {
            std::string idx, table;
            int no;
            if (!(is >> idx >> table >> no))
                fail(key + " needs <index|*> <table-id> <int-no>");
            (key == "ingredient" ? ing_rows : fil_rows)
                .push_back({idx, table, no});
        } else if (key == "fill") {
            std::string mode;
            is >> mode;
            if (mode == "one")
                plan.fill_four = false;
            else if (mode == "four")
                plan.fill_four = true;
            else
                fail("fill needs one|four");
        } else if (key == "ynames") {
            plan.ynames.clear();
            std::string tok;
            while (is >> tok) plan.ynames.push_back(tok);
            if (plan.ynames.size() != 4) fail("ynames needs 4 tokens");
        } else if (key == "expect") {
            if (!(is >> plan.expect)) fail("expect needs an integer");
        } else {
            fail("unknown plan directive '" + key + "'");
        }
    }
    if (!have_base) throw ParseError("plan has no base");
    if (plan.weight <= 0) throw ParseError("plan has no weight");
    plan.ingredients.assign(plan.base.blocks.size(), {"", -1});
    for (const auto& [idx, table, no] : ing_rows) {
        if (idx == "*") {
            for (auto& slot : plan.ingredients) slot = {table, no};
        } else {
            size_t i = static_cast<size_t>(std::stoul(idx));
            if (i >= plan.ingredients.size())
                throw ParseError("ingredient index out of range");
            plan.ingredients[i] = {table, no};
        }
    }
    plan.fillers.assign(plan.base.groups.size(), {"", -1});
    for (const auto& [idx, table, no] : fil_rows) {
        if (idx == "*") {
            for (auto& slot : plan.fillers) slot = {table, no};
        } else {
            size_t i = static_cast<size_t>(std::stoul(idx));
            if (i >= plan.fillers.size())
                throw ParseError("filler index out of range");
            plan.fillers[i] = {table, no};
        }
    }
    for (const auto& [table, no] : plan.ingredients)
        if (table.empty())
            throw ParseError("a base block has no ingredient row");
    for (const auto& [table, no] : plan.fillers)
        if (table.empty()) throw ParseError("a group has no filler row");
    return plan;
}

int cmd_construct(const std::string& plan_file, const std::string& out) {
    Plan plan = parse_plan(slurp(plan_file));
    std::vector<WeightingIngredient> ings;
    long declared = 0;
    for (const auto& [table, no] : plan.ingredients) {
        ings.push_back({gdd_triple(table, no)});
        declared += no;
    }
    auto w = weighting(plan.base,
                       std::vector<int>(static_cast<size_t>(plan.base.v()),
                                        plan.weight),
                       ings);
    std::cout << "weighted: three 4-GDDs of type " << w.out[0].group_type()
              << ", common " << w.measured_common << "\n";

    std::vector<DesignTriple> fillers;
    FillResult res;
    if (!plan.fill_four) {
        for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
            const auto& [table, no] = plan.fillers[gi];
            declared += no;
            fillers.push_back(relabel(design_triple(table, no),
                                      fill1_tokens(w.out[0], gi, "inf")));
        }
        res = fill_plus_one(w.out, fillers);
    } else {
        for (size_t gi = 0; gi < w.out[0].groups.size(); ++gi) {
            const auto& [table, no] = plan.fillers[gi];
            declared += no;
            DesignTriple f = design_triple(table, no);
            std::vector<std::string> group_toks;
            for (int p : w.out[0].groups[gi])
                group_toks.push_back(w.out[0].labels.label(p));
            fillers.push_back(fill4_filler(f, first_common_block(f),
                                           group_toks, plan.ynames));
        }
        declared -= static_cast<long>(w.out[0].groups.size()) - 1;
        res = fill_plus_four(w.out, fillers, plan.ynames);
    }
    bool steiner = true;
    for (const Design& d : res.out)
        steiner &= verify_steiner(d).is_steiner;
    std::cout << "filled: three S(2,4," << res.out[0].v() << ") designs, "
              << res.out[0].block_count() << " blocks each, steiner: "
              << (steiner ? "yes" : "NO") << "\n";
    std::cout << "measured common: " << res.measured_common
              << "  (sum of selections: " << declared << ")\n";
    kv("v", res.out[0].v());
    kv("common", res.measured_common);
    kv("declared", declared);
    kv("steiner", steiner ? "yes" : "no");
    bool pass = steiner && res.same_common && res.measured_common == declared;
    if (plan.expect >= 0) {
        pass &= res.measured_common == plan.expect;
        std::cout << "expected " << plan.expect << ": "
                  << (res.measured_common == plan.expect ? "pass" : "FAIL")
                  << "\n";
    }
    if (!out.empty()) {
        for (int i = 0; i < 3; ++i) {
            std::ofstream os(out + "." + std::to_string(i + 1) + ".des");
            emit_des(os, res.out[static_cast<size_t>(i)]);
        }
        std::cout << "wrote " << out << ".{1,2,3}.des\n";
    }
    return pass ? 0 : 1;
}

// ------------------------------------------------------------ closure
// Spec file: lines "offset <n>", "term <count> <v1> <v2> ...",
// optional "target i3 <v>".
int cmd_closure(const std::string& spec_file, const std::string& ledger) {
    ClosureSpec spec;
    int target_v = 0;
    std::istringstream in(slurp(spec_file));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        if (key == "offset") {
            is >> spec.offset;
        } else if (key == "term") {
            ClosureTerm term;
            if (!(is >> term.count))
                throw ParseError("term needs a count", lineno);
            long x;
            while (is >> x) term.base.push_back(x);
            spec.terms.push_back(std::move(term));
        } else if (key == "target") {
            std::string what;
            is >> what >> target_v;
            if (what != "i3")
                throw ParseError("only 'target i3 <v>' is supported",
                                 lineno);
        } else {
            throw ParseError("unknown closure directive '" + key + "'",
                             lineno);
        }
    }
    auto res = sum_closure(spec);
    std::cout << "achievable: " << res.set.values.size() << " values, max "
              << (res.set.values.empty() ? 0 : *res.set.values.rbegin())
              << "\n";
    kv("count", static_cast<long>(res.set.values.size()));
    int rc = 0;
    if (target_v) {
        auto diff = compare(res.set, i3(target_v));
        std::cout << "vs I3[" << target_v << "]: missing "
                  << fmt_set(std::set<long>(diff.missing.begin(),
                                            diff.missing.end()))
                  << "\n";
        kv("missing", fmt_set(std::set<long>(diff.missing.begin(),
                                             diff.missing.end())));
        rc = diff.missing.empty() ? 0 : 1;
    }
    if (!ledger.empty()) {
        std::ofstream os(ledger);
        os << emit_ledger(res.set);
        std::cout << "wrote " << ledger << "\n";
    }
    return rc;
}

// ----------------------------------------------------------- complete
int cmd_complete(const std::string& file, int v, std::size_t limit) {
    Design partial = load_design(file);
    if (v == 0) v = partial.v();
    auto sols = complete_cover(partial, v, limit);
    std::cout << sols.size() << " completion(s)";
    if (!sols.empty())
        std::cout << " of " << sols[0].size() << " block(s) each";
    std::cout << "\n";
    kv("completions", static_cast<long>(sols.size()));
    for (size_t i = 0; i < sols.size(); ++i) {
        std::cout << "completion " << i << ":\n";
        for (const Block& b : sols[i]) {
            std::cout << " ";
            for (int p : b)
                std::cout << " "
                          << (p < partial.v() ? partial.labels().label(p)
                                              : std::to_string(p));
            std::cout << "\n";
        }
    }
    return sols.empty() ? 1 : 0;
}

// -------------------------------------------------------------- repro
int cmd_repro(const std::string& token, const std::string& ledger) {
    ReproReport rep = run_reproduction(token);
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        std::string key = c.name;
        for (char& ch : key)
            if (ch == ' ') ch = '_';
        kv(key, c.pass ? "pass" : "fail");
    }
    for (const auto& n : rep.not_replayed)
        std::cout << "not replayed: " << n << "\n";
    if (!ledger.empty()) {
        std::ofstream os(ledger, std::ios::app);
        for (const SpectrumSet& s : rep.registered) os << emit_ledger(s);
        std::cout << "appended ledger records to " << ledger << "\n";
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL") << " " << token << "\n";
    return rep.passed() ? 0 : 1;
}

// ------------------------------------------------------------ catalog
int cmd_catalog_list() {
    for (const auto& id : catalog_ids()) {
        const auto& e = catalog_get(id);
        std::cout << id << "  (" << to_string(e.kind) << ") " << e.source
                  << "\n";
    }
    return 0;
}

int cmd_catalog_emit(const std::string& id) {
    const auto& e = catalog_get(id);
    switch (e.kind) {
    case EntryKind::design: emit_des(std::cout, e.design()); break;
    case EntryKind::dev_spec: emit_dev(std::cout, e.dev()); break;
    case EntryKind::gdd: emit_gdd(std::cout, e.gdd()); break;
    case EntryKind::resolution:
        emit_res(std::cout, e.resolution().first, e.resolution().second);
        break;
    case EntryKind::perm_table: {
        const PermTable& t = e.table();
        std::cout << "# table on " << t.base_id << "\n";
        for (const auto& r : t.rows)
            std::cout << r.p2 << " ; " << r.p3 << " ; " << r.claimed
                      << "\n";
        break;
    }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"S(2,4,v) designs, GDDs, trades and intersection spectra"};
    app.require_subcommand(1);
    app.add_flag("--machine", g_machine, "line-oriented key=value output");

    std::string file, file2, file3, p2s, p3s{"inv"}, out, table, token,
        point, ledger, plan;
    int mu = 3, k = 4, t = 2, targetv = 0;
    long volume = 0;
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;
    bool steiner = false, extended = false, prune = false;
    std::size_t limit = 16;

    auto* verify = app.add_subcommand("verify", "check a .des file");
    verify->add_option("file", file)->required();

    auto* intersect =
        app.add_subcommand("intersect", "mutual blocks of three designs");
    intersect->add_option("d1", file)->required();
    intersect->add_option("d2", file2)->required();
    intersect->add_option("d3", file3)->required();

    auto* permute =
        app.add_subcommand("permute", "intersection number of (D,p2 D,p3 D)");
    permute->add_option("file", file)->required();
    permute->add_option("--p2", p2s, "cycles, e.g. \"(0,1)(a,b)\"")
        ->required();
    permute->add_option("--p3", p3s, "cycles or 'inv' for p2^-1");
    permute->add_option("--emit", out, "write image designs to <out>.p?.des");

    auto* develop_cmd =
        app.add_subcommand("develop", "develop a .dev base-block file");
    develop_cmd->add_option("file", file)->required();
    develop_cmd->add_option("--out", out);

    auto* scan = app.add_subcommand("scan", "replay a catalog table");
    scan->add_option("design", file)->required();
    scan->add_option("--table", table)->required();

    auto* gdel = app.add_subcommand("gdd-delete", "delete a point");
    gdel->add_option("design", file)->required();
    gdel->add_option("point", point)->required();

    auto* textr = app.add_subcommand("trade-extract",
                                     "leftover trade of a design triple");
    textr->add_option("d1", file)->required();
    textr->add_option("d2", file2)->required();
    textr->add_option("d3", file3)->required();

    auto* tsearch =
        app.add_subcommand("trade-search", "exhaustive trade search");
    tsearch->add_option("--mu", mu);
    tsearch->add_option("--k", k);
    tsearch->add_option("--t", t);
    tsearch->add_option("--volume", volume)->required();
    tsearch->add_flag("--steiner", steiner);
    tsearch->add_option("--max-nodes", max_nodes);
    tsearch->add_option("--max-seconds", max_seconds);
    tsearch->add_flag("--extended", extended, "extended node budget");
    tsearch->add_flag("--prune-replication", prune,
                      "use the r_x >= 2 bound (witness hunts)");
    tsearch->add_option("--out", out, "write a witness .trd here");

    auto* construct =
        app.add_subcommand("construct", "run a weighting/filling plan");
    construct->add_option("--plan", plan)->required();
    construct->add_option("--out", out, "write the three designs here");

    auto* closure = app.add_subcommand("closure", "sum-closure spectrum");
    closure->add_option("--spec", file)->required();
    closure->add_option("--ledger", ledger);

    auto* complete =
        app.add_subcommand("complete", "exact-cover completion of a .des");
    complete->add_option("file", file)->required();
    complete->add_option("--v", targetv);
    complete->add_option("--limit", limit);

    auto* repro = app.add_subcommand("repro", "replay a cataloged result");
    repro->add_option("token", token)->required();
    repro->add_option("--ledger", ledger, "append J-set records here");

    auto* cat = app.add_subcommand("catalog", "embedded data");
    auto* cat_list = cat->add_subcommand("list");
    auto* cat_emit = cat->add_subcommand("emit");
    cat_emit->add_option("id", token)->required();

    // let --machine appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested :
             sub->get_subcommands([](CLI::App*) { return true; }))
            nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(file);
        if (*intersect) return cmd_intersect({file, file2, file3});
        if (*permute) return cmd_permute(file, p2s, p3s, out);
        if (*develop_cmd) return cmd_develop(file, out);
        if (*scan) return cmd_scan(file, table);
        if (*gdel) return cmd_gdd_delete(file, point);
        if (*textr) return cmd_trade_extract({file, file2, file3});
        if (*tsearch)
            return cmd_trade_search(mu, k, t, volume, steiner, max_nodes,
                                    max_seconds, extended, prune, out);
        if (*construct) return cmd_construct(plan, out);
        if (*closure) return cmd_closure(file, ledger);
        if (*complete) return cmd_complete(file, targetv, limit);
        if (*repro) return cmd_repro(token, ledger);
        if (*cat_list) return cmd_catalog_list();
        if (*cat_emit) return cmd_catalog_emit(token);
        if (*cat) return cmd_catalog_list();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
