/**
 * Assembly of the main (cohomological) spectral sequence page and the stable
 * cohomology tables of spaces of nonsingular polynomial maps C -> C^k.
 *
 * Index conventions.  A Borel-Moore class of degree m in the rank-rho
 * stratum sits in the main page at p = -rho, q = rho(2k+1) - 1 - m; the
 * dimension parameter of the ambient approximating space cancels, so q is
 * an affine function of k.  Nonzero entries live in the wedge
 * q >= -2p(k-2).  For every column p <= -2 the general bounds hold: the
 * entry is trivial for q <= -p(2k-4), equals Z_2 at q = -p(2k-4)+1 and is
 * finite at q = -p(2k-4)+2.
 *
 * Two assembly modes: "paper" pins the published placements of the computed
 * torsion; "computed" uses the bottom-up collapse of the auxiliary pages.
 * Every placement difference between the two is emitted as a discrepancy
 * line; the one known difference (rank-2 torsion at q = 4k-5 computed
 * versus 4k-4 pinned) is surfaced, never resolved.  Each mode's cohomology
 * table is read off the first page on the degree range where its own
 * placements force degeneration.
 */
#pragma once

#include "aux_pages.hpp"

namespace cxknots {

/// affine function of k
struct LinExpr {
    long k_coeff = 0;
    long constant = 0;

    long at(int k) const { return k_coeff * k + constant; }
    bool operator==(const LinExpr&) const = default;
    auto operator<=>(const LinExpr&) const = default;

    std::string str() const {
        std::string s;
        if (k_coeff == 1) s = "k";
        else if (k_coeff == -1) s = "-k";
        else if (k_coeff != 0) s = std::to_string(k_coeff) + "k";
        if (constant != 0 || s.empty()) {
            if (!s.empty() && constant > 0) s += "+";
            s += std::to_string(constant);
        }
        return s;
    }
};

/// main-page vertical coordinate of a Borel-Moore degree-m class at rank rho
inline LinExpr q_of(int rho, long m) {
    if (rho < 1) throw std::invalid_argument("rank must be >= 1");
    return {2L * rho, rho - 1 - m};
}

inline bool wedge_ok(int p, long q, int k) { return p < 0 && q >= -2L * p * (k - 2); }

inline bool stable_range(int rho, long D, int k) {
    return static_cast<long>(rho) * (k + 2) < D + 1;
}

/// vanishing bound for the auxiliary page: trivial above 5 rho - j - 1
inline long pro99_bound(int rho, int j) { return 5L * rho - j - 1; }

struct ColumnBounds {
    LinExpr trivial_through;  // entry trivial for q <= this
    LinExpr z2_at;            // entry is Z_2 here
    LinExpr finite_through;   // entry finite for q <= this
};

inline ColumnBounds column_bounds(int p) {
    if (p >= -1) throw std::invalid_argument("column bounds apply to p <= -2");
    long c = -static_cast<long>(p);  // -p(2k-4) = 2ck - 4c
    return {{2 * c, -4 * c}, {2 * c, -4 * c + 1}, {2 * c, -4 * c + 2}};
}

// ---------------------------------------------------------------------------

enum class AssemblyMode { paper, computed };

inline std::string mode_label(AssemblyMode m) {
    return m == AssemblyMode::paper ? "paper" : "computed";
}

/// symbolic column entry: q as a function of k, with its (partial) value
struct ColumnEntry {
    LinExpr q;
    PartialGroup group;
    EntryKind kind;
};

/// convert a collapse result into a main-page column at p = -rho
inline std::vector<ColumnEntry> main_column(int rho, const Collapse& collapse) {
    std::vector<ColumnEntry> col;
    for (const auto& [m, e] : collapse.by_degree)
        col.push_back({q_of(rho, m), e.group, e.kind});
    std::sort(col.begin(), col.end(),
              [](const ColumnEntry& a, const ColumnEntry& b) { return a.q < b.q; });
    return col;
}

/// published placements of the three leftmost columns
inline std::vector<ColumnEntry> pinned_column(int rho) {
    auto Z = []() { return PartialGroup(AbelianGroup::free(1)); };
    auto Zn = [](long n) { return PartialGroup(AbelianGroup::cyclic(n)); };
    auto T = []() { return PartialGroup::finite_undetermined(); };
    auto ZplusT = []() {
        PartialGroup g;
        g.free_rank = 1;
        g.torsion_exact = false;
        return g;
    };
    switch (rho) {
        case 1:
            return {{{2, -4}, Z(), EntryKind::configured}};
        case 2:
            return {{{4, -7}, Zn(2), EntryKind::configured},
                    {{4, -4}, Zn(3), EntryKind::configured}};
        case 3:
            return {{{6, -11}, Zn(2), EntryKind::configured},
                    {{6, -10}, Zn(3), EntryKind::configured},
                    {{6, -9}, PartialGroup(AbelianGroup(1, {Int(3)})), EntryKind::configured},
                    {{6, -8}, T(), EntryKind::bound_only},
                    {{6, -7}, T(), EntryKind::bound_only},
                    {{6, -6}, ZplusT(), EntryKind::configured},
                    {{6, -5}, T(), EntryKind::bound_only}};
    }
    throw std::invalid_argument("no pinned column for this rank");
}

/// bottom-up column at p = -rho (rho <= 3)
inline std::vector<ColumnEntry> computed_column(int rho, const FactsRegistry& facts,
                                                std::vector<std::string>* consumed = nullptr) {
    if (rho == 1) {
        // the rank-1 stratum is a bundle over the space of elementary
        // conditions X ~ R^4: one open cell in degree 4
        IntegerChainComplex x(4, 4);
        x.set_rank(4, 1);
        GradedGroup h = nonzero_part(x.homology());
        std::vector<ColumnEntry> col;
        for (const auto& [m, g] : h)
            col.push_back({q_of(1, m), PartialGroup(g), EntryKind::computed});
        return col;
    }
    AuxPage page = aux_E1(rho, facts);
    Collapse c = collapse_aux(page, facts);
    if (consumed) consumed->insert(consumed->end(), c.consumed.begin(), c.consumed.end());
    return main_column(rho, c);
}

// ---------------------------------------------------------------------------

struct MainPage {
    int k = 3;
    int rho_max = 5;
    AssemblyMode mode = AssemblyMode::paper;
    SSTable table;  // (p, q) at this k
    std::vector<std::string> consumed;
};

struct KnotCohomologyTable {
    int k = 3;
    AssemblyMode mode = AssemblyMode::paper;
    long determined_through = 0;
    std::map<long, SSEntry> entries;  // cohomology degree -> group
    std::vector<std::string> notes;
};

struct RationalEntry {
    long degree;
    long rank;  // lower bound when !exact
    bool exact;
};

struct RationalSummary {
    long through = 0;
    std::vector<RationalEntry> entries;
};

struct AssemblyResult {
    MainPage page;
    KnotCohomologyTable table;
    RationalSummary rational;
    std::vector<std::string> discrepancies;  // computed-vs-pinned ledger
};

namespace detail {

/// what the degeneration scan knows about one cell
struct CellView {
    bool known_zero = false;
    bool exact = false;   // exact nonzero group
    AbelianGroup group;   // when exact
    bool finite = false;  // guaranteed finite
    long free_lower = 0;
    bool rank_exact = true;
};

inline CellView view_of(const MainPage& page, int p, long q) {
    CellView v;
    if (p >= 0) {
        v.known_zero = true;
        return v;
    }
    if (-p <= page.rho_max) {
        if (const SSEntry* e = page.table.find(p, static_cast<int>(q))) {
            const PartialGroup& g = e->group;
            if (g.exact()) {
                v.exact = true;
                v.group = g.as_group();
                v.finite = v.group.free_rank == 0;
                v.free_lower = v.group.free_rank;
            } else {
                v.finite = g.rank_exact && g.free_rank == 0;
                v.free_lower = g.free_rank;
                v.rank_exact = g.rank_exact;
            }
            return v;
        }
        if (page.table.asserted(p, q)) v.known_zero = true;
        return v;
    }
    // beyond the assembled columns: the general column bounds
    ColumnBounds b = column_bounds(p);
    if (q <= b.trivial_through.at(page.k)) {
        v.known_zero = true;
    } else if (q == b.z2_at.at(page.k)) {
        v.exact = true;
        v.group = AbelianGroup::cyclic(2);
        v.finite = true;
    } else if (q == b.finite_through.at(page.k)) {
        v.finite = true;
    } else {
        v.rank_exact = false;  // unknown cell
    }
    return v;
}

/// is the differential src -> dst forced to vanish (integrally)?
inline bool arrow_forced(const CellView& src, const CellView& dst, int r) {
    if (src.known_zero || dst.known_zero) return true;
    if (r == 1 && src.exact && dst.exact) return hom_is_zero(src.group, dst.group);
    return false;
}

inline bool arrow_forced_rational(const CellView& src, const CellView& dst) {
    if (src.known_zero || dst.known_zero) return true;
    return src.finite || dst.finite;
}

/// all differentials touching (p, q) vanish
inline bool settled(const MainPage& page, int p, long q, bool rational) {
    CellView me = view_of(page, p, q);
    int k = page.k;
    for (int r = 1;; ++r) {
        int out_p = p + r;
        if (out_p < 0) {
            CellView dst = view_of(page, out_p, q - r + 1);
            bool ok = rational ? arrow_forced_rational(me, dst) : arrow_forced(me, dst, r);
            if (!ok) return false;
        }
        int in_p = p - r;
        long in_q = q + r - 1;
        // deep columns vanish below their trivial bound; the margin grows
        // with r, so once inside it stays inside
        bool deep_zero = in_q <= -static_cast<long>(in_p) * (2L * k - 4);
        if (!deep_zero) {
            CellView src = view_of(page, in_p, in_q);
            bool ok = rational ? arrow_forced_rational(src, me) : arrow_forced(src, me, r);
            if (!ok) return false;
        }
        if (out_p >= 0 && deep_zero) return true;
        if (r > 500) throw std::logic_error("degeneration scan did not terminate");
    }
}

}  // namespace detail

inline AssemblyResult assemble(int k, int rho_max, const FactsRegistry& facts, AssemblyMode mode) {
    if (k < 3) throw std::invalid_argument("k >= 3 required");
    if (rho_max < 3) throw std::invalid_argument("rho_max >= 3 required");
    AssemblyResult out;
    MainPage& page = out.page;
    page.k = k;
    page.rho_max = rho_max;
    page.mode = mode;
    page.table.col_name = "p";
    page.table.row_name = "q";

    // columns rho = 1..3, plus the computed-vs-pinned diff
    for (int rho = 1; rho <= 3; ++rho) {
        std::vector<ColumnEntry> comp = computed_column(rho, facts, &page.consumed);
        std::vector<ColumnEntry> pin = pinned_column(rho);
        const std::vector<ColumnEntry>& mine = (mode == AssemblyMode::computed) ? comp : pin;
        for (const auto& e : mine)
            page.table.set(-rho, static_cast<int>(e.q.at(k)), e.group, e.kind);

        std::map<std::string, std::vector<LinExpr>> at_comp, at_pin;
        for (const auto& e : comp) at_comp[e.group.str()].push_back(e.q);
        for (const auto& e : pin) at_pin[e.group.str()].push_back(e.q);
        for (const auto& [g, qs] : at_comp) {
            auto it = at_pin.find(g);
            std::vector<LinExpr> pins = it == at_pin.end() ? std::vector<LinExpr>{} : it->second;
            if (qs == pins) continue;
            for (size_t i = 0; i < std::max(qs.size(), pins.size()); ++i) {
                std::string line = "column p=-" + std::to_string(rho) + ": " + g + " at q=";
                line += i < qs.size() ? qs[i].str() : "(absent)";
                line += " (computed) vs q=";
                line += i < pins.size() ? pins[i].str() : "(absent)";
                line += " (paper-pinned)";
                out.discrepancies.push_back(line);
            }
        }
        for (const auto& [g, qs] : at_pin)
            if (!at_comp.count(g))
                out.discrepancies.push_back("column p=-" + std::to_string(rho) + ": " + g +
                                            " pinned at q=" + qs.front().str() +
                                            " has no computed counterpart");
    }

    // columns rho >= 4 from the general bounds plus configured facts
    const GeometricFact* z2_fact = facts.find_by_id("sign-top-homology-general-rank");
    const GeometricFact* rank4_fact = facts.find_by_id("fourth-column-free-rank");
    for (int rho = 4; rho <= rho_max; ++rho) {
        ColumnBounds b = column_bounds(-rho);
        if (z2_fact) {
            page.table.set(-rho, static_cast<int>(b.z2_at.at(k)),
                           PartialGroup(AbelianGroup::cyclic(2)), EntryKind::configured);
            page.consumed.push_back(z2_fact->id);
        } else {
            page.table.set(-rho, static_cast<int>(b.z2_at.at(k)),
                           PartialGroup::finite_undetermined(), EntryKind::bound_only);
        }
        if (rho == 4) {
            page.table.set(-4, static_cast<int>(b.finite_through.at(k)),
                           PartialGroup::finite_undetermined(), EntryKind::bound_only);
            long q4 = 8L * k - 13;
            if (rank4_fact) {
                PartialGroup g =
                    PartialGroup::unknown_free_part(rank4_fact->data.value("free_rank", 1));
                page.table.set(-4, static_cast<int>(q4), g, EntryKind::unknown);
                page.consumed.push_back(rank4_fact->id);
                page.table.unknown_above[-4] = q4;
            } else {
                page.table.unknown_above[-4] = b.finite_through.at(k);
            }
        } else {
            page.table.unknown_above[-rho] = b.z2_at.at(k);
        }
    }
    std::sort(page.consumed.begin(), page.consumed.end());
    page.consumed.erase(std::unique(page.consumed.begin(), page.consumed.end()),
                        page.consumed.end());

    // every asserted nonzero entry must respect the wedge
    for (const auto& [pq, e] : page.table.entries)
        if (!wedge_ok(pq.first, pq.second, k))
            throw std::logic_error("assembled entry escapes the wedge at p=" +
                                   std::to_string(pq.first) + ", q=" + std::to_string(pq.second));

    // potentially nonzero cells on the diagonal p + q = i
    auto cells_at_total = [&](long i) {
        std::vector<std::pair<int, long>> cells;
        for (int p = -1;; --p) {
            if (-p > rho_max && i <= static_cast<long>(-p) * (2L * k - 5)) break;
            long q = i - p;
            detail::CellView v = detail::view_of(page, p, q);
            if (!v.known_zero) cells.push_back({p, q});
            if (-p > 1000) throw std::logic_error("diagonal enumeration did not terminate");
        }
        return cells;
    };

    // --- stable cohomology table on the forced-degeneration range ----------
    KnotCohomologyTable& table = out.table;
    table.k = k;
    table.mode = mode;
    long determined = -1;
    for (long i = 0; i <= 10L * k; ++i) {
        bool ok = true;
        for (auto [p, q] : cells_at_total(i)) {
            detail::CellView v = detail::view_of(page, p, q);
            if (!v.exact || !detail::settled(page, p, q, false)) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
        determined = i;
    }
    table.determined_through = determined;
    table.entries[0] = SSEntry{PartialGroup(AbelianGroup::free(1)), EntryKind::computed};
    for (long i = 1; i <= determined; ++i) {
        std::vector<std::pair<int, AbelianGroup>> parts;
        for (auto [p, q] : cells_at_total(i)) parts.push_back({p, detail::view_of(page, p, q).group});
        if (parts.empty()) continue;
        // filtration runs from the p = -1 end: deeper columns extend on top
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        PartialGroup total(parts.front().second);
        for (size_t idx = 1; idx < parts.size(); ++idx) {
            if (!extension_is_forced(total.as_group(), parts[idx].second)) {
                table.notes.push_back("degree " + std::to_string(i) + ": extension not forced");
                PartialGroup t = total.direct_sum(PartialGroup(parts[idx].second));
                t.torsion_exact = false;
                total = t;
                continue;
            }
            total = total.direct_sum(PartialGroup(parts[idx].second));
        }
        table.entries[i] = SSEntry{total, EntryKind::computed};
    }

    // --- rational summary through degree 8k-17 ------------------------------
    RationalSummary& rat = out.rational;
    rat.through = 8L * k - 17;
    long rank_exact_from_k =
        rank4_fact ? rank4_fact->data.value("rank_exact_from_k", 1 << 30) : (1 << 30);
    rat.entries.push_back({0, 1, true});
    for (long i = 1; i <= rat.through; ++i) {
        long rank = 0;
        bool exact = true;
        for (auto [p, q] : cells_at_total(i)) {
            detail::CellView v = detail::view_of(page, p, q);
            if (v.finite) continue;  // rationally invisible
            if (!detail::settled(page, p, q, true)) {
                exact = false;
                continue;
            }
            rank += v.free_lower;
            bool cell_rank_exact = v.exact || v.rank_exact;
            if (p == -4 && q == 8L * k - 13) cell_rank_exact = k >= rank_exact_from_k;
            if (!cell_rank_exact) exact = false;
        }
        if (rank > 0 || !exact) rat.entries.push_back({i, rank, exact});
    }
    return out;
}

}  // namespace cxknots
