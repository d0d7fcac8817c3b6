/**
 * Sparse grids of (possibly partially known) abelian groups indexed by
 * spectral-sequence coordinates, with one annotation per entry recording how
 * the value was obtained.  Absent entries are zero unless a column declares
 * an unasserted region.
 */
#pragma once

#include "abelian.hpp"

namespace cxknots {

/**
 * An abelian group that may carry undetermined parts: the free rank is a
 * known value (exact unless rank_exact is false, in which case it is a lower
 * bound), and torsion is either the exact list or an undetermined finite
 * part ("T").
 */
struct PartialGroup {
    long free_rank = 0;
    bool rank_exact = true;
    std::vector<Int> torsion;
    bool torsion_exact = true;

    PartialGroup() = default;
    PartialGroup(const AbelianGroup& g)
        : free_rank(g.free_rank), rank_exact(true), torsion(g.torsion), torsion_exact(true) {}

    static PartialGroup finite_undetermined() {
        PartialGroup g;
        g.torsion_exact = false;
        return g;
    }
    static PartialGroup unknown_free_part(long lower) {
        PartialGroup g;
        g.free_rank = lower;
        g.rank_exact = false;
        g.torsion_exact = false;
        return g;
    }

    bool exact() const { return rank_exact && torsion_exact; }
    bool is_zero() const { return exact() && free_rank == 0 && torsion.empty(); }

    AbelianGroup as_group() const {
        if (!exact()) throw std::logic_error("group has undetermined parts");
        return AbelianGroup(free_rank, torsion);
    }

    PartialGroup direct_sum(const PartialGroup& o) const {
        PartialGroup s;
        s.free_rank = free_rank + o.free_rank;
        s.rank_exact = rank_exact && o.rank_exact;
        s.torsion = torsion;
        s.torsion.insert(s.torsion.end(), o.torsion.begin(), o.torsion.end());
        s.torsion = canonical_torsion(std::move(s.torsion));
        s.torsion_exact = torsion_exact && o.torsion_exact;
        return s;
    }

    bool operator==(const PartialGroup&) const = default;

    /// "Z_2", "Z+T", "Z(+)?", "T", "0" -- matching the usual table shorthand
    std::string str() const {
        if (exact()) return as_group().str();
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (const Int& t : torsion) {
            if (!s.empty()) s += "+";
            s += "Z_" + t.get_str();
        }
        if (!torsion_exact && rank_exact) s = s.empty() ? "T" : s + "+T";
        else if (!rank_exact) s = s.empty() ? "?" : s + "+?";
        return s;
    }
};

enum class EntryKind { computed, configured, bound_only, unknown };

inline std::string kind_label(EntryKind k) {
    switch (k) {
        case EntryKind::computed: return "computed";
        case EntryKind::configured: return "configured";
        case EntryKind::bound_only: return "bound-only: finite (T)";
        case EntryKind::unknown: return "unknown (?)";
    }
    return "?";
}

struct SSEntry {
    PartialGroup group;
    EntryKind kind = EntryKind::computed;

    bool operator==(const SSEntry&) const = default;
};

struct SSTable {
    std::string col_name = "j";  // first coordinate
    std::string row_name = "q";  // second coordinate
    std::map<std::pair<int, int>, SSEntry> entries;
    // per-column upper edge of the asserted region: entries with second
    // coordinate strictly above the bound are not claimed to vanish
    std::map<int, long> unknown_above;

    void set(int c, int r, PartialGroup g, EntryKind kind) {
        if (g.is_zero()) return;
        entries[{c, r}] = SSEntry{std::move(g), kind};
    }

    const SSEntry* find(int c, int r) const {
        auto it = entries.find({c, r});
        return it == entries.end() ? nullptr : &it->second;
    }

    bool asserted(int c, long r) const {
        auto it = unknown_above.find(c);
        return it == unknown_above.end() || r <= it->second;
    }

    Json to_json() const {
        Json j;
        j["columns"] = col_name;
        j["rows"] = row_name;
        Json cells = Json::array();
        for (const auto& [rc, e] : entries) {
            Json cell;
            cell[col_name] = rc.first;
            cell[row_name] = rc.second;
            cell["value"] = e.group.str();
            if (e.group.exact()) cell["group"] = cxknots::to_json(e.group.as_group());
            cell["annotation"] = kind_label(e.kind);
            cells.push_back(cell);
        }
        j["cells"] = cells;
        if (!unknown_above.empty()) {
            Json u = Json::object();
            for (const auto& [c, r] : unknown_above) u[std::to_string(c)] = r;
            j["asserted_through"] = u;
        }
        return j;
    }

    /// aligned markdown grid, rows descending, columns ascending
    std::string markdown() const {
        if (entries.empty()) return "(empty)\n";
        std::set<int> cols;
        std::set<int> rows;
        for (const auto& [rc, e] : entries) {
            cols.insert(rc.first);
            rows.insert(rc.second);
        }
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> head = {row_name + "\\" + col_name};
        for (int c : cols) head.push_back(std::to_string(c));
        grid.push_back(head);
        for (auto rit = rows.rbegin(); rit != rows.rend(); ++rit) {
            std::vector<std::string> line = {std::to_string(*rit)};
            for (int c : cols) {
                const SSEntry* e = find(c, *rit);
                line.push_back(e ? e->group.str() : (asserted(c, *rit) ? "0" : ""));
            }
            grid.push_back(line);
        }
        std::vector<size_t> width(grid[0].size(), 0);
        for (const auto& line : grid)
            for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        std::string out;
        for (size_t li = 0; li < grid.size(); ++li) {
            out += "|";
            for (size_t i = 0; i < grid[li].size(); ++i) {
                out += " " + grid[li][i] + std::string(width[i] - grid[li][i].size(), ' ') + " |";
            }
            out += "\n";
            if (li == 0) {
                out += "|";
                for (size_t i = 0; i < grid[li].size(); ++i)
                    out += std::string(width[i] + 2, '-') + "|";
                out += "\n";
            }
        }
        return out;
    }
};

}  // namespace cxknots
