#pragma once

#include <cstdio>
#include <string>

namespace slq {

// One checked inequality: whether its stated precondition applies to this
// graph, whether the conclusion holds, and by how much (slack >= 0 iff it
// holds, except where an op defines its own slack meaning).
struct AuditEntry {
    std::string id;
    bool hypothesis_met = false;
    bool holds = false;
    double slack = 0.0;
    std::string note;
};

// All numeric output is printed at 12 significant digits.
inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

} // namespace slq
