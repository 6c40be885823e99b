#ifndef DESIGNKIT_PERMUTATION_HPP
#define DESIGNKIT_PERMUTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "designkit/design.hpp"

namespace designkit {

// Permutation of point labels in cycle notation: "(0,1,2)(a,b)".
// Labels not mentioned are fixed; "id" (or "") is the identity.
// One-cycles are rejected.
class Permutation {
public:
    Permutation() = default;

    static Permutation parse(const std::string& text) {
        Permutation pi;
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty() || s == "id") return pi;
        size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '(')
                throw ParseError("expected '(' in permutation: " + text);
            size_t close = s.find(')', i);
            if (close == std::string::npos)
                throw ParseError("unbalanced '(' in permutation: " + text);
            std::vector<std::string> cyc;
            std::string tok;
            for (size_t j = i + 1; j <= close; ++j) {
                if (j == close || s[j] == ',') {
                    if (tok.empty())
                        throw ParseError("empty token in permutation: " + text);
                    cyc.push_back(tok);
                    tok.clear();
                } else {
                    tok += s[j];
                }
            }
            if (cyc.size() < 2)
                throw ParseError("one-cycles are not allowed: " + text);
            for (size_t j = 0; j < cyc.size(); ++j) {
                const std::string& from = cyc[j];
                const std::string& to = cyc[(j + 1) % cyc.size()];
                if (!pi.map_.emplace(from, to).second)
                    throw ParseError("label '" + from +
                                     "' repeated in permutation: " + text);
            }
            i = close + 1;
        }
        return pi;
    }

    bool is_identity() const { return map_.empty(); }

    const std::string& apply(const std::string& tok) const {
        auto it = map_.find(tok);
        return it == map_.end() ? tok : it->second;
    }

    Permutation inverse() const {
        Permutation inv;
        for (const auto& [from, to] : map_) inv.map_.emplace(to, from);
        return inv;
    }

    Permutation then(const Permutation& next) const {
        Permutation out;
        for (const auto& [from, to] : map_) {
            const std::string& img = next.apply(to);
            if (img != from) out.map_.emplace(from, img);
        }
        for (const auto& [from, to] : next.map_)
            if (!map_.count(from) && !out.map_.count(from))
                out.map_.emplace(from, to);
        return out;
    }

    const std::map<std::string, std::string>& mapping() const { return map_; }

    // Canonical cycle notation (cycles ordered by smallest label).
    std::string to_string() const {
        if (map_.empty()) return "id";
        std::map<std::string, bool> done;
        std::string out;
        for (const auto& [start, _] : map_) {
            if (done[start]) continue;
            std::string cyc = "(" + start;
            done[start] = true;
            for (std::string cur = apply(start); cur != start;
                 cur = apply(cur)) {
                done[cur] = true;
                cyc += "," + cur;
            }
            out += cyc + ")";
        }
        return out;
    }

    // Index-level image table for a concrete label set. Throws on labels
    // outside the map.
    std::vector<int> resolve(const LabelMap& labels) const {
        std::vector<int> img(static_cast<size_t>(labels.size()));
        for (const auto& [from, to] : map_) {
            (void)labels.index(from);
            (void)labels.index(to);
        }
        for (int i = 0; i < labels.size(); ++i)
            img[static_cast<size_t>(i)] = labels.index(apply(labels.label(i)));
        return img;
    }

private:
    std::map<std::string, std::string> map_;
};

inline std::vector<Block> apply_permutation(const std::vector<Block>& blocks,
                                            const std::vector<int>& img) {
    std::vector<Block> out;
    out.reserve(blocks.size());
    for (const Block& b : blocks) {
        std::vector<int> pts;
        pts.reserve(static_cast<size_t>(b.size()));
        for (int p : b) pts.push_back(img[static_cast<size_t>(p)]);
        out.emplace_back(std::move(pts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Design apply_permutation(const Design& d, const Permutation& pi) {
    return Design(d.labels(), d.k(),
                  apply_permutation(d.blocks(), pi.resolve(d.labels())));
}

} // namespace designkit

#endif
