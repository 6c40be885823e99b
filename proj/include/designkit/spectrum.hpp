#ifndef DESIGNKIT_SPECTRUM_HPP
#define DESIGNKIT_SPECTRUM_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "designkit/error.hpp"

namespace designkit {

// Number of blocks of an S(2,4,v): v(v-1)/12. Defined for v = 1, 4 mod 12.
inline long bv(int v) {
    if (v <= 0 || (v % 12 != 1 && v % 12 != 4))
        throw Error("inadmissible v=" + std::to_string(v) +
                    " (need v = 1 or 4 mod 12)");
    return static_cast<long>(v) * (v - 1) / 12;
}

struct SpectrumWitness {
    std::string kind; // "table-row" | "closure" | "construction" | ...
    std::string ref;
};

// A set of achievable intersection sizes with optional per-value
// provenance.
struct SpectrumSet {
    std::string label; // e.g. "J3[13]", "I3[16]", "Jp3[16]", "Jf3[13]"
    std::set<long> values;
    std::map<long, SpectrumWitness> witnesses;

    bool contains(long x) const { return values.count(x) != 0; }

    void add(long v, SpectrumWitness w = {}) {
        values.insert(v);
        if (!w.kind.empty()) witnesses.emplace(v, std::move(w));
    }
};

// I_3[v] = [0, b_v] minus [b_v-7, b_v-1].
inline SpectrumSet i3(int v) {
    long b = bv(v);
    SpectrumSet s;
    s.label = "I3[" + std::to_string(v) + "]";
    for (long x = 0; x <= b; ++x)
        if (x < b - 7 || x == b) s.values.insert(x);
    return s;
}

struct ClosureTerm {
    int count = 1;
    std::vector<long> base; // achievable values of one slot
};

struct ClosureSpec {
    std::vector<ClosureTerm> terms;
    long offset = 0;
};

struct ClosureResult {
    SpectrumSet set;
    // per value: the chosen slot values (lexicographically smallest)
    std::map<long, std::vector<long>> decomposition;
};

// All sums  offset + sum over slots (count copies per term) of one base
// value each; every achievable value gets its lexicographically smallest
// decomposition as witness.
inline ClosureResult sum_closure(const ClosureSpec& spec) {
    std::vector<std::vector<long>> slots;
    for (const ClosureTerm& t : spec.terms) {
        if (t.count < 0) throw Error("closure term count must be >= 0");
        if (t.base.empty()) throw Error("closure term base is empty");
        std::vector<long> base = t.base;
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());
        if (base.front() < 0)
            throw Error("closure base values must be nonnegative");
        for (int i = 0; i < t.count; ++i) slots.push_back(base);
    }
    long maxsum = 0;
    for (const auto& s : slots) maxsum += s.back();

    // reach[i][x]: x is achievable using slots i..end
    std::vector<std::vector<char>> reach(
        slots.size() + 1, std::vector<char>(static_cast<size_t>(maxsum) + 1, 0));
    reach[slots.size()][0] = 1;
    for (size_t i = slots.size(); i-- > 0;) {
        for (long x = 0; x <= maxsum; ++x) {
            if (!reach[i + 1][static_cast<size_t>(x)]) continue;
            for (long val : slots[i])
                if (x + val <= maxsum)
                    reach[i][static_cast<size_t>(x + val)] = 1;
        }
    }

    ClosureResult res;
    for (long x = 0; x <= maxsum; ++x) {
        if (!reach[0][static_cast<size_t>(x)]) continue;
        std::vector<long> dec;
        long rem = x;
        for (size_t i = 0; i < slots.size(); ++i)
            for (long val : slots[i])
                if (rem - val >= 0 &&
                    reach[i + 1][static_cast<size_t>(rem - val)]) {
                    dec.push_back(val);
                    rem -= val;
                    break;
                }
        long total = x + spec.offset;
        std::ostringstream ref;
        for (size_t i = 0; i < dec.size(); ++i)
            ref << (i ? "+" : "") << dec[i];
        if (spec.offset) ref << (spec.offset > 0 ? "+" : "") << spec.offset;
        res.set.add(total, {"closure", ref.str()});
        res.decomposition[total] = std::move(dec);
    }
    return res;
}

struct SpectrumDiff {
    std::vector<long> missing; // in target, not found
    std::vector<long> extra;   // found, not in target
    bool empty() const { return missing.empty() && extra.empty(); }
};

inline SpectrumDiff compare(const SpectrumSet& found,
                            const SpectrumSet& target) {
    SpectrumDiff d;
    std::set_difference(target.values.begin(), target.values.end(),
                        found.values.begin(), found.values.end(),
                        std::back_inserter(d.missing));
    std::set_difference(found.values.begin(), found.values.end(),
                        target.values.begin(), target.values.end(),
                        std::back_inserter(d.extra));
    return d;
}

// Line ledger: "<set-label> <value> <witness-kind> <ref>".
inline std::string emit_ledger(const SpectrumSet& s) {
    std::ostringstream os;
    for (long v : s.values) {
        auto it = s.witnesses.find(v);
        os << s.label << ' ' << v << ' '
           << (it == s.witnesses.end() ? "-" : it->second.kind) << ' '
           << (it == s.witnesses.end() || it->second.ref.empty()
                   ? "-"
                   : it->second.ref)
           << '\n';
    }
    return os.str();
}

inline std::vector<SpectrumSet> parse_ledger(std::istream& in) {
    std::vector<SpectrumSet> out;
    std::map<std::string, size_t> by_label;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string label, kind, ref;
        long value;
        if (!(is >> label >> value >> kind >> ref))
            throw ParseError("bad ledger record", lineno);
        auto [it, fresh] = by_label.emplace(label, out.size());
        if (fresh) {
            out.emplace_back();
            out.back().label = label;
        }
        out[it->second].add(value,
                            {kind == "-" ? "" : kind, ref == "-" ? "" : ref});
    }
    return out;
}

} // namespace designkit

#endif
