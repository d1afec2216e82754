#include "omcat/axioms.hpp"

#include <algorithm>

namespace omcat {

AxiomReport check_axioms(const std::vector<SignVector>& cands) {
    AxiomReport rep;
    auto fail = [&rep](const std::string& axiom, std::vector<SignVector> wit, std::string detail) {
        rep.pass = false;
        rep.violated = axiom;
        rep.witness = std::move(wit);
        rep.detail = std::move(detail);
        return rep;
    };

    for (const auto& x : cands)
        if (x.is_zero()) return fail("nonzero", {x}, "zero vector is not a cocircuit");

    for (const auto& x : cands) {
        if (std::find(cands.begin(), cands.end(), -x) == cands.end())
            return fail("symmetry", {x}, "negation missing for " + x.str());
    }

    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = 0; j < cands.size(); ++j) {
            if (i == j) continue;
            const auto& x = cands[i];
            const auto& y = cands[j];
            if ((x.support() & ~y.support()) == 0 && x != y && x != -y)
                return fail("incomparability", {x, y},
                            "support of " + x.str() + " contained in support of " + y.str());
        }

    // Weak signed elimination: for X != -Y and e separating them there is a Z
    // with Z(e)=0, Z+ in X+uY+, Z- in X-uY-.
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = 0; j < cands.size(); ++j) {
            const auto& x = cands[i];
            const auto& y = cands[j];
            if (x == -y || i == j) continue;
            std::uint64_t sep = x.separation(y);
            if (!sep) continue;
            std::uint64_t pos_union = x.pos_mask() | y.pos_mask();
            std::uint64_t neg_union = x.neg_mask() | y.neg_mask();
            for (unsigned e = 0; e < x.size(); ++e) {
                std::uint64_t bit = std::uint64_t(1) << e;
                if (!(sep & bit)) continue;
                bool found = false;
                for (const auto& z : cands) {
                    if (z.support() & bit) continue;
                    if ((z.pos_mask() & ~pos_union) || (z.neg_mask() & ~neg_union)) continue;
                    found = true;
                    break;
                }
                if (!found)
                    return fail("elimination", {x, y},
                                "no eliminant for " + x.str() + ", " + y.str() + " at index " +
                                    std::to_string(e));
            }
        }
    return rep;
}

} // namespace omcat
