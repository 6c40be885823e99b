#ifndef DESIGNKIT_DEVELOP_HPP
#define DESIGNKIT_DEVELOP_HPP

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "designkit/design.hpp"

namespace designkit {

// Token of a base block: either class point "a3" (class letter(s) +
// subscript, developed mod n) or a constant like "inf2" (fixed).
struct DevToken {
    bool is_const = false;
    std::string cls;   // class name when !is_const, full token when const
    int subscript = 0; // unused for constants

    std::string text(int shift, int order) const {
        if (is_const) return cls;
        return cls + std::to_string((subscript + shift) % order);
    }
};

// Base-block development over Z_n. Constants are fixed; short orbits are
// detected automatically (smallest d | n with block+d = block) and emitted
// once. Literal blocks are appended verbatim.
struct DevelopmentSpec {
    int order = 0;
    std::vector<std::string> classes;
    std::vector<std::string> constants;
    std::vector<std::vector<DevToken>> base_blocks;
    std::vector<std::vector<std::string>> literal_blocks;

    DevToken parse_token(const std::string& tok) const {
        for (const std::string& c : constants)
            if (tok == c) return DevToken{true, tok, 0};
        for (const std::string& c : classes) {
            if (tok.size() > c.size() && tok.compare(0, c.size(), c) == 0 &&
                std::all_of(tok.begin() + static_cast<long>(c.size()),
                            tok.end(), [](char ch) {
                                return std::isdigit(
                                    static_cast<unsigned char>(ch));
                            })) {
                int sub = std::stoi(tok.substr(c.size()));
                if (sub < 0 || sub >= order)
                    throw Error("subscript out of range in token '" + tok +
                                "'");
                return DevToken{false, c, sub};
            }
        }
        throw Error("token '" + tok + "' matches no class or constant");
    }
};

namespace detail {
inline std::set<std::string> shifted_block(const DevelopmentSpec& spec,
                                           const std::vector<DevToken>& base,
                                           int shift) {
    std::set<std::string> out;
    for (const DevToken& t : base)
        if (!out.insert(t.text(shift, spec.order)).second)
            throw Error("base block collapses onto itself under development");
    return out;
}
} // namespace detail

inline int orbit_length(const DevelopmentSpec& spec,
                        const std::vector<DevToken>& base) {
    auto b0 = detail::shifted_block(spec, base, 0);
    for (int d = 1; d <= spec.order; ++d)
        if (spec.order % d == 0 && detail::shifted_block(spec, base, d) == b0)
            return d;
    return spec.order;
}

// The developed design. Point order: each class's points 0..n-1 in class
// declaration order, then constants.
inline Design develop(const DevelopmentSpec& spec) {
    if (spec.order <= 0) throw Error("development order must be positive");
    std::vector<std::string> labels;
    for (const std::string& c : spec.classes)
        for (int i = 0; i < spec.order; ++i)
            labels.push_back(c + std::to_string(i));
    for (const std::string& c : spec.constants) labels.push_back(c);
    LabelMap lm{labels};

    std::set<std::set<std::string>> seen;
    std::vector<Block> blocks;
    auto add = [&](const std::set<std::string>& toks, const char* what) {
        if (!seen.insert(toks).second)
            throw Error(std::string("duplicate developed block from ") + what);
        std::vector<int> pts;
        for (const std::string& t : toks) pts.push_back(lm.index(t));
        blocks.emplace_back(std::move(pts));
    };

    for (const auto& base : spec.base_blocks) {
        int len = orbit_length(spec, base);
        for (int t = 0; t < len; ++t)
            add(detail::shifted_block(spec, base, t), "a base-block orbit");
    }
    for (const auto& lit : spec.literal_blocks)
        add(std::set<std::string>(lit.begin(), lit.end()), "a literal block");

    if (blocks.empty()) throw Error("development produced no blocks");
    int k = blocks.front().size();
    return Design(std::move(lm), k, std::move(blocks));
}

} // namespace designkit

#endif
