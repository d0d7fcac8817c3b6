/**
 * Solving the Borel-Moore long exact sequence of a pair for the open part.
 *
 * Given the graded groups of a closed subset C and of the whole space X,
 *   ... -> H_i(C) -> H_i(X) -> H_i(U) -> H_{i-1}(C) -> ...
 * determines H(U) degreewise whenever every restriction map and every
 * extension is forced (zero flanks, coprime torsion, free quotients).
 * Anything not forced is returned as an explicit ambiguity instead of a
 * guess.
 */
#pragma once

#include <string>

#include "abelian.hpp"

namespace cxknots {

struct PairAmbiguity {
    int degree;
    std::string reason;
};

struct PairSolution {
    GradedGroup open_part;               // H(U) = H(X \ C), valid where unambiguous
    std::vector<PairAmbiguity> ambiguities;

    bool forced() const { return ambiguities.empty(); }
};

inline PairSolution pair_sequence_solve(const GradedGroup& closed, const GradedGroup& total) {
    PairSolution out;
    std::set<int> degrees;
    for (const auto& [d, g] : closed) {
        degrees.insert(d);
        degrees.insert(d + 1);
    }
    for (const auto& [d, g] : total) degrees.insert(d);

    for (int d : degrees) {
        AbelianGroup c_d = graded_at(closed, d);
        AbelianGroup x_d = graded_at(total, d);
        AbelianGroup c_prev = graded_at(closed, d - 1);
        AbelianGroup x_prev = graded_at(total, d - 1);

        // 0 -> coker(C_d -> X_d) -> U_d -> ker(C_{d-1} -> X_{d-1}) -> 0
        std::optional<AbelianGroup> coker;
        if (hom_is_zero(c_d, x_d)) coker = x_d;
        std::optional<AbelianGroup> ker;
        if (hom_is_zero(c_prev, x_prev)) ker = c_prev;

        if (!coker) {
            out.ambiguities.push_back({d, "restriction map H_" + std::to_string(d) +
                                              "(C) -> H_" + std::to_string(d) +
                                              "(X) is not forced"});
            continue;
        }
        if (!ker) {
            out.ambiguities.push_back({d, "connecting map H_" + std::to_string(d) +
                                              "(U) -> H_" + std::to_string(d - 1) +
                                              "(C) is not forced"});
            continue;
        }
        if (!extension_is_forced(*coker, *ker)) {
            out.ambiguities.push_back({d, "extension of " + ker->str() + " by " + coker->str() +
                                              " is not forced"});
            continue;
        }
        AbelianGroup u = coker->direct_sum(*ker);
        if (!u.is_zero()) out.open_part[d] = u;
    }
    return out;
}

}  // namespace cxknots
