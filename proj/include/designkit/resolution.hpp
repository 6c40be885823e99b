#ifndef DESIGNKIT_RESOLUTION_HPP
#define DESIGNKIT_RESOLUTION_HPP

#include <set>
#include <vector>

#include "designkit/design.hpp"

namespace designkit {

// A partition of a design's block set into parallel classes (each class
// covers every point exactly once).
struct Resolution {
    std::vector<std::vector<Block>> classes;
};

struct ResolutionReport {
    bool valid = false;
    std::vector<std::string> violations;
};

inline ResolutionReport verify_resolution(const Design& d,
                                          const Resolution& r) {
    ResolutionReport rep;
    std::multiset<Block> all;
    for (size_t ci = 0; ci < r.classes.size(); ++ci) {
        std::vector<int> seen(static_cast<size_t>(d.v()), 0);
        for (const Block& b : r.classes[ci]) {
            all.insert(b);
            if (!d.has_block(b))
                rep.violations.push_back("class " + std::to_string(ci) +
                                         " block not in design");
            for (int p : b) ++seen[static_cast<size_t>(p)];
        }
        for (int p = 0; p < d.v(); ++p)
            if (seen[static_cast<size_t>(p)] != 1) {
                rep.violations.push_back(
                    "class " + std::to_string(ci) + " covers point " +
                    d.labels().label(p) + " " +
                    std::to_string(seen[static_cast<size_t>(p)]) + "x");
                break;
            }
    }
    if (all.size() != d.block_count() ||
        std::set<Block>(all.begin(), all.end()).size() != all.size())
        rep.violations.push_back(
            "classes do not partition the design's block set");
    rep.valid = rep.violations.empty();
    return rep;
}

} // namespace designkit

#endif
