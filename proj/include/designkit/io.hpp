#ifndef DESIGNKIT_IO_HPP
#define DESIGNKIT_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "designkit/design.hpp"
#include "designkit/develop.hpp"
#include "designkit/gdd.hpp"
#include "designkit/resolution.hpp"
#include "designkit/trade.hpp"

// Line-oriented text formats. '#' starts a comment; blank lines are
// ignored. Emitters write a canonical form whose re-parse reproduces the
// object exactly.
//
//   .des   v <int> k <int> / [labels <tok>...] / one block per line
//   .gdd   v <int> / [labels <tok>...] / group <tok>... / blocks
//   .dev   order <n> / classes <tok>... / [const <tok>...] /
//          base <tok>... / [literal <tok>...]
//   .trd   mu <m> k <k> t <t> / labels <tok>... / 'collection' separators
//   .res   v <int> k <int> / [labels <tok>...] / 'class' separators
namespace designkit {

namespace detail {

struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;

    explicit Lines(std::istream& in) {
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream is(line);
            std::vector<std::string> toks;
            std::string t;
            while (is >> t) toks.push_back(t);
            if (!toks.empty()) rows.push_back({n, toks});
        }
    }
};

inline int to_int(const std::string& s, int lineno) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", lineno);
    }
}

// header like: v 13 k 4  (key/value pairs on one line)
inline std::map<std::string, int> header(
    const std::vector<std::string>& toks, int lineno) {
    if (toks.size() % 2 != 0)
        throw ParseError("header needs key/value pairs", lineno);
    std::map<std::string, int> h;
    for (size_t i = 0; i < toks.size(); i += 2)
        h[toks[i]] = to_int(toks[i + 1], lineno);
    return h;
}

} // namespace detail

// ---------------------------------------------------------------- designs
inline Design parse_des(std::istream& in) {
    detail::Lines ls(in);
    if (ls.rows.empty()) throw ParseError("empty design file");
    auto [hline, htoks] = ls.rows.front();
    auto h = detail::header(htoks, hline);
    if (!h.count("v") || !h.count("k"))
        throw ParseError("design header must give v and k", hline);
    int v = h["v"], k = h["k"];

    size_t at = 1;
    LabelMap labels = LabelMap::decimal(v);
    if (at < ls.rows.size() && ls.rows[at].second.front() == "labels") {
        auto toks = ls.rows[at].second;
        toks.erase(toks.begin());
        if (static_cast<int>(toks.size()) != v)
            throw ParseError("labels line must list exactly v tokens",
                             ls.rows[at].first);
        labels = LabelMap(toks);
        ++at;
    }
    std::vector<Block> blocks;
    for (; at < ls.rows.size(); ++at) {
        auto& [lineno, toks] = ls.rows[at];
        std::vector<int> pts;
        for (const auto& t : toks) {
            try {
                pts.push_back(labels.index(t));
            } catch (const Error& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        blocks.emplace_back(std::move(pts));
    }
    return Design(std::move(labels), k, std::move(blocks));
}

inline void emit_des(std::ostream& os, const Design& d) {
    os << "v " << d.v() << " k " << d.k() << "\n";
    if (!d.labels().is_decimal()) {
        os << "labels";
        for (const auto& l : d.labels().labels()) os << ' ' << l;
        os << "\n";
    }
    for (const Block& b : d.blocks()) os << d.block_str(b) << "\n";
}

// ------------------------------------------------------------------ GDDs
inline GDD parse_gdd(std::istream& in) {
    detail::Lines ls(in);
    if (ls.rows.empty()) throw ParseError("empty GDD file");
    auto [hline, htoks] = ls.rows.front();
    auto h = detail::header(htoks, hline);
    if (!h.count("v")) throw ParseError("GDD header must give v", hline);
    int v = h["v"];

    size_t at = 1;
    LabelMap labels = LabelMap::decimal(v);
    if (at < ls.rows.size() && ls.rows[at].second.front() == "labels") {
        auto toks = ls.rows[at].second;
        toks.erase(toks.begin());
        if (static_cast<int>(toks.size()) != v)
            throw ParseError("labels line must list exactly v tokens",
                             ls.rows[at].first);
        labels = LabelMap(toks);
        ++at;
    }
    std::vector<Block> groups, blocks;
    for (; at < ls.rows.size(); ++at) {
        auto toks = ls.rows[at].second;
        bool is_group = toks.front() == "group";
        if (is_group) toks.erase(toks.begin());
        std::vector<int> pts;
        for (const auto& t : toks) {
            try {
                pts.push_back(labels.index(t));
            } catch (const Error& e) {
                throw ParseError(e.what(), ls.rows[at].first);
            }
        }
        (is_group ? groups : blocks).emplace_back(std::move(pts));
    }
    return GDD(std::move(labels), std::move(groups), std::move(blocks));
}

inline void emit_gdd(std::ostream& os, const GDD& g) {
    os << "v " << g.v() << "\n";
    if (!g.labels.is_decimal()) {
        os << "labels";
        for (const auto& l : g.labels.labels()) os << ' ' << l;
        os << "\n";
    }
    auto row = [&](const Block& b) {
        std::string s;
        for (int p : b) {
            if (!s.empty()) s += ' ';
            s += g.labels.label(p);
        }
        return s;
    };
    for (const Block& grp : g.groups) os << "group " << row(grp) << "\n";
    for (const Block& b : g.blocks) os << row(b) << "\n";
}

// --------------------------------------------------------- development
inline DevelopmentSpec parse_dev(std::istream& in) {
    detail::Lines ls(in);
    DevelopmentSpec spec;
    std::vector<std::pair<int, std::vector<std::string>>> base_rows,
        literal_rows;
    for (auto& [lineno, toks] : ls.rows) {
        const std::string& key = toks.front();
        std::vector<std::string> rest(toks.begin() + 1, toks.end());
        if (key == "order") {
            if (rest.size() != 1)
                throw ParseError("order needs one value", lineno);
            spec.order = detail::to_int(rest[0], lineno);
        } else if (key == "classes") {
            spec.classes = rest;
        } else if (key == "const") {
            spec.constants.insert(spec.constants.end(), rest.begin(),
                                  rest.end());
        } else if (key == "base") {
            base_rows.push_back({lineno, rest});
        } else if (key == "literal") {
            literal_rows.push_back({lineno, rest});
        } else {
            throw ParseError("unknown keyword '" + key + "'", lineno);
        }
    }
    if (spec.order <= 0) throw ParseError("development needs order > 0");
    if (spec.classes.empty()) throw ParseError("development needs classes");
    for (auto& [lineno, rest] : base_rows) {
        std::vector<DevToken> blk;
        for (const auto& t : rest) {
            try {
                blk.push_back(spec.parse_token(t));
            } catch (const Error& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        spec.base_blocks.push_back(std::move(blk));
    }
    for (auto& [lineno, rest] : literal_rows) {
        for (const auto& t : rest) {
            try {
                (void)spec.parse_token(t);
            } catch (const Error& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        spec.literal_blocks.push_back(rest);
    }
    return spec;
}

inline void emit_dev(std::ostream& os, const DevelopmentSpec& spec) {
    os << "order " << spec.order << "\n";
    os << "classes";
    for (const auto& c : spec.classes) os << ' ' << c;
    os << "\n";
    if (!spec.constants.empty()) {
        os << "const";
        for (const auto& c : spec.constants) os << ' ' << c;
        os << "\n";
    }
    for (const auto& blk : spec.base_blocks) {
        os << "base";
        for (const auto& t : blk) os << ' ' << t.text(0, spec.order);
        os << "\n";
    }
    for (const auto& blk : spec.literal_blocks) {
        os << "literal";
        for (const auto& t : blk) os << ' ' << t;
        os << "\n";
    }
}

// -------------------------------------------------------------- trades
inline TradeSystem parse_trd(std::istream& in) {
    detail::Lines ls(in);
    if (ls.rows.empty()) throw ParseError("empty trade file");
    auto [hline, htoks] = ls.rows.front();
    auto h = detail::header(htoks, hline);
    for (const char* key : {"mu", "k", "t"})
        if (!h.count(key))
            throw ParseError("trade header must give mu, k and t", hline);
    TradeSystem tr;
    tr.mu = h["mu"];
    tr.k = h["k"];
    tr.t = h["t"];

    size_t at = 1;
    bool explicit_labels = false;
    if (at < ls.rows.size() && ls.rows[at].second.front() == "labels") {
        auto toks = ls.rows[at].second;
        toks.erase(toks.begin());
        tr.labels = LabelMap(toks);
        explicit_labels = true;
        ++at;
    }
    // without a labels line, points are indexed by first appearance
    std::vector<std::string> seen;
    std::unordered_map<std::string, int> seen_idx;
    std::vector<std::vector<std::vector<std::string>>> raw;
    for (; at < ls.rows.size(); ++at) {
        auto& [lineno, toks] = ls.rows[at];
        if (toks.size() == 1 && toks[0] == "collection") {
            raw.emplace_back();
            continue;
        }
        if (raw.empty())
            throw ParseError("block before first 'collection' line", lineno);
        for (const auto& t : toks) {
            if (explicit_labels && !tr.labels.has(t))
                throw ParseError("unknown point label '" + t + "'", lineno);
            if (!explicit_labels && seen_idx.emplace(t, seen.size()).second)
                seen.push_back(t);
        }
        raw.back().push_back(toks);
    }
    if (!explicit_labels) tr.labels = LabelMap(seen);
    for (auto& col : raw) {
        tr.collections.emplace_back();
        for (auto& toks : col) {
            std::vector<int> pts;
            for (const auto& t : toks) pts.push_back(tr.labels.index(t));
            tr.collections.back().emplace_back(std::move(pts));
        }
    }
    for (auto& col : tr.collections) std::sort(col.begin(), col.end());
    return tr;
}

inline void emit_trd(std::ostream& os, const TradeSystem& tr) {
    os << "mu " << tr.mu << " k " << tr.k << " t " << tr.t << "\n";
    os << "labels";
    for (const auto& l : tr.labels.labels()) os << ' ' << l;
    os << "\n";
    for (const auto& col : tr.collections) {
        os << "collection\n";
        for (const Block& b : col) {
            std::string s;
            for (int p : b) {
                if (!s.empty()) s += ' ';
                s += tr.labels.label(p);
            }
            os << s << "\n";
        }
    }
}

// ---------------------------------------------------------- resolutions
inline std::pair<Design, Resolution> parse_res(std::istream& in) {
    detail::Lines ls(in);
    if (ls.rows.empty()) throw ParseError("empty resolution file");
    auto [hline, htoks] = ls.rows.front();
    auto h = detail::header(htoks, hline);
    if (!h.count("v") || !h.count("k"))
        throw ParseError("resolution header must give v and k", hline);
    int v = h["v"], k = h["k"];

    size_t at = 1;
    LabelMap labels = LabelMap::decimal(v);
    if (at < ls.rows.size() && ls.rows[at].second.front() == "labels") {
        auto toks = ls.rows[at].second;
        toks.erase(toks.begin());
        if (static_cast<int>(toks.size()) != v)
            throw ParseError("labels line must list exactly v tokens",
                             ls.rows[at].first);
        labels = LabelMap(toks);
        ++at;
    }
    Resolution res;
    std::vector<Block> blocks;
    for (; at < ls.rows.size(); ++at) {
        auto& [lineno, toks] = ls.rows[at];
        if (toks.size() == 1 && toks[0] == "class") {
            res.classes.emplace_back();
            continue;
        }
        if (res.classes.empty())
            throw ParseError("block before first 'class' line", lineno);
        std::vector<int> pts;
        for (const auto& t : toks) {
            try {
                pts.push_back(labels.index(t));
            } catch (const Error& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        res.classes.back().emplace_back(std::move(pts));
        blocks.push_back(res.classes.back().back());
    }
    Design d(std::move(labels), k, std::move(blocks));
    for (auto& cls : res.classes) std::sort(cls.begin(), cls.end());
    auto rep = verify_resolution(d, res);
    if (!rep.valid)
        throw ParseError("not a resolution: " + rep.violations.front());
    return {std::move(d), std::move(res)};
}

inline void emit_res(std::ostream& os, const Design& d,
                     const Resolution& res) {
    os << "v " << d.v() << " k " << d.k() << "\n";
    if (!d.labels().is_decimal()) {
        os << "labels";
        for (const auto& l : d.labels().labels()) os << ' ' << l;
        os << "\n";
    }
    for (const auto& cls : res.classes) {
        os << "class\n";
        for (const Block& b : cls) os << d.block_str(b) << "\n";
    }
}

// string convenience wrappers
inline Design parse_des(const std::string& text) {
    std::istringstream is(text);
    return parse_des(is);
}
inline GDD parse_gdd(const std::string& text) {
    std::istringstream is(text);
    return parse_gdd(is);
}
inline DevelopmentSpec parse_dev(const std::string& text) {
    std::istringstream is(text);
    return parse_dev(is);
}
inline TradeSystem parse_trd(const std::string& text) {
    std::istringstream is(text);
    return parse_trd(is);
}
inline std::pair<Design, Resolution> parse_res(const std::string& text) {
    std::istringstream is(text);
    return parse_res(is);
}
template <typename T> std::string to_text(const T& obj) {
    std::ostringstream os;
    if constexpr (std::is_same_v<T, Design>)
        emit_des(os, obj);
    else if constexpr (std::is_same_v<T, GDD>)
        emit_gdd(os, obj);
    else if constexpr (std::is_same_v<T, DevelopmentSpec>)
        emit_dev(os, obj);
    else if constexpr (std::is_same_v<T, TradeSystem>)
        emit_trd(os, obj);
    return os.str();
}

} // namespace designkit

#endif
