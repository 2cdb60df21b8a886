#pragma once

#include <string>
#include <vector>

#include "homuce/chain.hpp"
#include "homuce/uce.hpp"

namespace homuce {

struct AuditCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AuditReport {
    std::string algebra;
    std::vector<AuditCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

struct AuditOptions {
    /// L is the middle term of a recorded universal (alpha-)central extension.
    bool universal_middle = false;
    ChainOptions chain;
};

/// Instance audit of the universal central extension statements for L:
/// perfectness against surjectivity of u, Ker u against HL_2, and for the
/// middle of a universal extension the vanishing of HL_1 and HL_2.
inline AuditReport theorem_audit(const HomAlgebra& L, const AuditOptions& opt = {}) {
    AuditReport rep;
    rep.algebra = L.name();
    const UceResult U = uce_leibniz(L);
    const bool perfect = perfectness(L).is_perfect;
    rep.checks.push_back({"perfect iff u onto L", perfect == U.surjective && U.universal == perfect,
                          std::string("perfect=") + (perfect ? "yes" : "no") +
                              " u_surjective=" + (U.surjective ? "yes" : "no") +
                              " universality=" + (U.universal ? "enabled" : "disabled")});
    const HomCoRep ground = corep_ground(L);
    const std::size_t hl2 = homology(ground, 2, opt.chain).dim;
    rep.checks.push_back({"dim Ker u = dim HL_2", U.kernel_dim() == hl2,
                          "dim Ker u=" + std::to_string(U.kernel_dim()) + " dim HL_2=" + std::to_string(hl2)});
    if (opt.universal_middle) {
        const std::size_t hl1 = homology(ground, 1, opt.chain).dim;
        rep.checks.push_back({"HL_1 = HL_2 = 0 for a universal middle term", hl1 == 0 && hl2 == 0,
                              "HL_1=" + std::to_string(hl1) + " HL_2=" + std::to_string(hl2)});
    }
    return rep;
}

}  // namespace homuce
