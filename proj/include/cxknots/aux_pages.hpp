/**
 * Auxiliary (inverse-filtration) spectral sequence pages for the strata
 * Lambda_rho \ Lambda_{rho-1}, and their collapse to Borel-Moore homology.
 *
 * The first page at rank rho has one column per defect j: the A-block of a
 * symbol with |A| - #(A) = rho and defect j contributes the homology of its
 * configuration base, with the local system of two-connected-graph fiber
 * classes, shifted by the fiber dimension 2|A| - 3#(A) - 1.  Total
 * Borel-Moore degree is j + q.
 *
 * The collapse runs the first and second differentials, using configured
 * facts for the two geometric maps and forced-zero reasoning elsewhere;
 * whatever stays undetermined is reported as an explicit finite part or as
 * an ambiguity, never guessed.
 */
#pragma once

#include "cells.hpp"
#include "facts.hpp"
#include "pairseq.hpp"
#include "symbols.hpp"

namespace cxknots {

struct AuxPage {
    int rho = 0;
    SSTable table;  // (j, q), total degree j + q
    std::vector<std::string> consumed;
};

struct CollapseAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * First page of the auxiliary sequence for rho = 2 or 3 (Table-style grid
 * over (j, q)).  Inputs are computed configuration-space homologies except
 * where a configured fact supplies a locus this library does not recompute.
 */
inline AuxPage aux_E1(int rho, const FactsRegistry& facts) {
    if (rho != 2 && rho != 3) throw std::invalid_argument("aux_E1 supports rho = 2 and 3");
    AuxPage page;
    page.rho = rho;
    page.table.col_name = "j";
    page.table.row_name = "q";

    auto put_column = [&](int j, const GradedGroup& base, int shift, EntryKind kind) {
        for (const auto& [m, g] : base)
            if (!g.is_zero()) page.table.set(j, m + shift - j, PartialGroup(g), kind);
    };

    if (rho == 2) {
        // j = 0: block (2,2) over the full pair configuration space of R^4
        SymbolA a22({2, 2});
        put_column(0, config_homology(4, 2, sign_rep(2)), block_fiber(a22).first,
                   EntryKind::computed);
        // j = 1: block (3) over triples in the plane
        SymbolA a3({3});
        put_column(1, config_homology(2, 3, sign_rep(3)), block_fiber(a3).first,
                   EntryKind::computed);
        return page;
    }

    // rho = 3
    // j = 0: block (2,2,2); base is B(X,3) minus the triangle locus (a copy
    // of the plane triple space), resolved by the long exact sequence of the
    // pair with both homologies computed from cells.
    {
        GradedGroup closed = config_homology(2, 3, sign_rep(3));
        GradedGroup total = config_homology(4, 3, sign_rep(3));
        PairSolution sol = pair_sequence_solve(closed, total);
        if (!sol.forced())
            throw std::runtime_error("pair sequence for the rank-3 defect-0 base is not forced");
        put_column(0, sol.open_part, block_fiber(SymbolA({2, 2, 2})).first, EntryKind::computed);
    }
    // j = 1: block (3,2); base is (triples in the plane) x X minus the
    // doubled-pair locus, whose sign homology is a configured fact.
    {
        std::string fact_id;
        auto locus = facts.homology_values("triple-with-doubled-pair", &fact_id);
        if (!locus)
            throw std::runtime_error("missing configured fact: triple-with-doubled-pair homology");
        page.consumed.push_back(fact_id);
        // Kunneth with the free factor X ~ R^4 is a degree shift by 4
        GradedGroup product = shifted(config_homology(2, 3, sign_rep(3)), 4);
        PairSolution sol = pair_sequence_solve(*locus, product);
        if (!sol.forced())
            throw std::runtime_error("pair sequence for the rank-3 defect-1 base is not forced");
        put_column(1, sol.open_part, block_fiber(SymbolA({3, 2})).first, EntryKind::configured);
    }
    // j = 2: block (4) over quadruples in the plane with the matching system
    {
        SymbolA a4({4});
        auto [shift, rank] = block_fiber(a4);
        SnRepresentation rep = matching_rep();
        if (Int(rep.dim) != rank)
            throw std::logic_error("fiber rank does not match the matching system dimension");
        put_column(2, config_homology(2, 4, rep), shift, EntryKind::computed);
    }
    return page;
}

// ---------------------------------------------------------------------------
// collapse

namespace detail {

enum class ArrowClass { zero, iso, free_to_infinite, partial };

struct Arrow {
    ArrowClass cls = ArrowClass::zero;
    std::string fact_id;
};

/// kernel part of a spot under its outgoing arrow
inline PartialGroup arrow_kernel(const PartialGroup& src, const PartialGroup& dst, ArrowClass cls,
                                 const std::string& where) {
    switch (cls) {
        case ArrowClass::zero: return src;
        case ArrowClass::iso: return PartialGroup();
        case ArrowClass::free_to_infinite: {
            PartialGroup k;
            k.free_rank = src.free_rank - 1;
            k.rank_exact = src.rank_exact;
            k.torsion_exact = false;
            return k;
        }
        case ArrowClass::partial: {
            if (src.free_rank > 0 && dst.free_rank > 0)
                throw CollapseAmbiguity("differential neither forced nor configured at " + where);
            PartialGroup k;
            // a map into a finite group has full-rank kernel
            k.free_rank = src.free_rank;
            k.rank_exact = src.rank_exact;
            k.torsion_exact = false;
            return k;
        }
    }
    return src;
}

/// cokernel part of a spot under its incoming arrow
inline PartialGroup arrow_cokernel(const PartialGroup& src, const PartialGroup& dst, ArrowClass cls,
                                   const std::string& where) {
    switch (cls) {
        case ArrowClass::zero: return dst;
        case ArrowClass::iso: return PartialGroup();
        case ArrowClass::free_to_infinite: {
            PartialGroup c;
            c.free_rank = dst.free_rank - 1;
            c.rank_exact = dst.rank_exact;
            c.torsion_exact = false;
            return c;
        }
        case ArrowClass::partial: {
            if (src.free_rank > 0 && dst.free_rank > 0)
                throw CollapseAmbiguity("differential neither forced nor configured at " + where);
            PartialGroup c;
            // the image of a finite group meets no free part
            c.free_rank = dst.free_rank;
            c.rank_exact = dst.rank_exact;
            c.torsion_exact = false;
            return c;
        }
    }
    return dst;
}

inline bool partial_hom_zero(const PartialGroup& a, const PartialGroup& b) {
    if (a.is_zero() || b.is_zero()) return true;
    if (a.exact() && b.exact()) return hom_is_zero(a.as_group(), b.as_group());
    return false;
}

}  // namespace detail

struct Collapse {
    int rho = 0;
    std::map<long, SSEntry> by_degree;  // total Borel-Moore degree -> survivor
    std::vector<std::string> consumed;  // fact ids applied
    std::vector<std::string> notes;     // extension annotations
};

inline Collapse collapse_aux(const AuxPage& page, const FactsRegistry& facts) {
    using namespace detail;
    Collapse out;
    out.rho = page.rho;
    out.consumed = page.consumed;

    std::map<std::pair<int, int>, PartialGroup> spot;
    for (const auto& [jq, e] : page.table.entries) spot[jq] = e.group;

    auto at = [&](const std::map<std::pair<int, int>, PartialGroup>& s, int j, int q) {
        auto it = s.find({j, q});
        return it == s.end() ? PartialGroup() : it->second;
    };

    // one page of differentials (j,q) -> (j-r, q+r-1)
    auto run_page = [&](const std::map<std::pair<int, int>, PartialGroup>& cur, int r, bool use_facts) {
        std::map<std::pair<int, int>, Arrow> arrows;  // keyed by source
        std::set<std::pair<int, int>> spots;
        for (const auto& [jq, g] : cur)
            if (!g.is_zero()) spots.insert(jq);
        for (const auto& [jq, g] : cur) {
            auto [j, q] = jq;
            PartialGroup src = g;
            PartialGroup dst = at(cur, j - r, q + r - 1);
            if (src.is_zero() || dst.is_zero()) continue;
            Arrow a;
            const GeometricFact* f = nullptr;
            if (use_facts) {
                if ((f = facts.find_differential("aux-d1-iso", page.rho, j, q))) {
                    if (!(src.exact() && dst.exact() && src.as_group() == dst.as_group()))
                        throw std::runtime_error("configured isomorphism with mismatched groups at " +
                                                 f->id);
                    a.cls = ArrowClass::iso;
                } else if ((f = facts.find_differential("aux-d1-free-to-infinite", page.rho, j, q))) {
                    if (src.free_rank < 1 || dst.free_rank < 1)
                        throw std::runtime_error("configured free-to-infinite map without free parts at " +
                                                 f->id);
                    a.cls = ArrowClass::free_to_infinite;
                }
            }
            if (!f) {
                if (partial_hom_zero(src, dst)) continue;  // forced zero
                a.cls = ArrowClass::partial;
            } else {
                a.fact_id = f->id;
            }
            arrows[{j, q}] = a;
        }
        std::map<std::pair<int, int>, PartialGroup> next;
        for (const auto& [jq, g] : cur) {
            auto [j, q] = jq;
            if (g.is_zero()) continue;
            std::string where = "rho=" + std::to_string(page.rho) + " (j=" + std::to_string(j) +
                                ",q=" + std::to_string(q) + ")";
            PartialGroup val = g;
            if (auto it = arrows.find({j, q}); it != arrows.end()) {
                val = arrow_kernel(val, at(cur, j - r, q + r - 1), it->second.cls, where);
                if (!it->second.fact_id.empty()) out.consumed.push_back(it->second.fact_id);
            }
            if (auto it = arrows.find({j + r, q - r + 1}); it != arrows.end())
                val = arrow_cokernel(at(cur, j + r, q - r + 1), val, it->second.cls, where);
            if (!val.is_zero()) next[{j, q}] = val;
        }
        return next;
    };

    std::map<std::pair<int, int>, PartialGroup> cur = spot;
    for (int r = 1; r < page.rho; ++r) cur = run_page(cur, r, r == 1);

    // assemble total degrees along the filtration (extensions)
    std::map<long, std::vector<std::pair<int, PartialGroup>>> per_degree;
    for (const auto& [jq, g] : cur)
        if (!g.is_zero()) per_degree[jq.first + jq.second].push_back({jq.first, g});
    for (auto& [deg, parts] : per_degree) {
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        PartialGroup total;
        bool first = true;
        for (const auto& [j, g] : parts) {
            if (first) {
                total = g;
                first = false;
                continue;
            }
            if (total.exact() && g.exact() &&
                !extension_is_forced(total.as_group(), g.as_group())) {
                out.notes.push_back("degree " + std::to_string(deg) +
                                    ": extension of " + g.str() + " by " + total.str() +
                                    " not forced; direct sum not asserted");
                PartialGroup t = total.direct_sum(g);
                t.torsion_exact = false;
                total = t;
                continue;
            }
            total = total.direct_sum(g);
        }
        SSEntry e;
        e.group = total;
        e.kind = total.exact() ? EntryKind::computed : EntryKind::bound_only;
        out.by_degree[deg] = e;
    }
    std::sort(out.consumed.begin(), out.consumed.end());
    out.consumed.erase(std::unique(out.consumed.begin(), out.consumed.end()), out.consumed.end());
    return out;
}

}  // namespace cxknots
