/**
 * Combinatorics of A-symbols (partitions of point sets into collision
 * groups) and the closed-form dimension counts driving the filtration
 * bookkeeping, plus small standalone formula utilities.
 */
#pragma once

#include <gmpxx.h>

#include "abelian.hpp"

namespace cxknots {

struct SymbolA {
    std::vector<int> parts;  // each >= 2, kept sorted descending
    int b = 0;               // number of marked derivative points

    SymbolA(std::vector<int> p, int marked = 0) : parts(std::move(p)), b(marked) {
        for (int a : parts)
            if (a < 2) throw std::invalid_argument("symbol parts must be >= 2");
        if (b < 0) throw std::invalid_argument("negative mark count");
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }

    int total() const {  // |A|
        int t = 0;
        for (int a : parts) t += a;
        return t;
    }
    int count() const { return static_cast<int>(parts.size()); }  // #(A)

    long complexity() const {
        long c = b;
        for (int a : parts) c += a - 1;
        return c;
    }

    long defect() const { return complexity() - count(); }  // = |A| - 2#(A) when b = 0

    bool operator==(const SymbolA&) const = default;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        s += ")";
        if (b) s += " b=" + std::to_string(b);
        return s;
    }
};

/// all symbols (b = 0) with |A| - #(A) = rho, grouped by defect
inline std::map<int, std::vector<SymbolA>> symbols_for(int rho) {
    if (rho < 1 || rho > 6) throw std::invalid_argument("symbol enumeration supports rho <= 6");
    // parts a contribute a-1 each, so symbols correspond to partitions of rho
    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            partitions.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(rho, rho);
    std::map<int, std::vector<SymbolA>> out;
    for (const auto& part : partitions) {
        std::vector<int> parts;
        for (int p : part) parts.push_back(p + 1);
        SymbolA a(parts);
        out[static_cast<int>(a.defect())].push_back(a);
    }
    return out;
}

/**
 * Homology of the two-connected-graph fiber of an A-block: concentrated in
 * dimension 2|A| - 3#(A) - 1 with free rank prod (a_j - 2)!.
 */
inline std::pair<int, Int> block_fiber(const SymbolA& a) {
    int dim = 2 * a.total() - 3 * a.count() - 1;
    Int rank = 1;
    for (int part : a.parts) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part - 2));
        rank *= f;
    }
    return {dim, rank};
}

// ---------------------------------------------------------------------------
// standalone formula utilities

/// minimal D with s <= min(D-1, ([D/(k+2)]+1)(2k-5)-2)
inline long stable_dimension_for(int k, int s) {
    if (k < 3 || s < 1) throw std::invalid_argument("requires k >= 3 and s >= 1");
    for (long D = 1;; ++D) {
        long cap = std::min(D - 1, (D / (k + 2) + 1) * (2L * k - 5) - 2);
        if (s <= cap) return D;
    }
}

/// complex dimension of the locus of repeated compositions: a + k d/a - 1,
/// a the least divisor of d greater than 1
inline long composite_locus_dim(long d, int k) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    long a = d;
    for (long c = 2; c * c <= d; ++c)
        if (d % c == 0) {
            a = c;
            break;
        }
    return a + static_cast<long>(k) * (d / a) - 1;
}

/// strict upper bound (d-1)^2/2 on the number of distinct elementary
/// conditions a non-composite map can satisfy
inline mpq_class elementary_bound(long d) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    mpq_class q(Int(d - 1) * Int(d - 1), 2);
    q.canonicalize();
    return q;
}

}  // namespace cxknots
