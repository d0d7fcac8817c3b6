/**
 * Finitely generated abelian groups in canonical form.
 *
 * Every homology value produced by this library is an AbelianGroup: a free
 * rank together with torsion coefficients in divisibility order (each entry
 * divides the next).  The canonical form is unique, so equality against
 * reference tables is structural.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cxknots {

using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Bring a multiset of torsion orders into the unique divisibility chain
/// d1 | d2 | ... (pairwise gcd/lcm sweeps; no factorization required).
inline std::vector<Int> canonical_torsion(std::vector<Int> ts) {
    for (Int& t : ts) {
        t = abs(t);
        if (t == 0) throw std::invalid_argument("torsion order must be nonzero");
    }
    std::erase_if(ts, [](const Int& t) { return t == 1; });
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < ts.size(); ++i) {
            for (size_t j = i + 1; j < ts.size(); ++j) {
                Int g = int_gcd(ts[i], ts[j]);
                if (g == ts[i] || g == ts[j]) continue;
                Int l = int_lcm(ts[i], ts[j]);
                ts[i] = g;
                ts[j] = l;
                changed = true;
            }
        }
        std::erase_if(ts, [](const Int& t) { return t == 1; });
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

struct AbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion;  // each >= 2, each divides the next

    AbelianGroup() = default;
    AbelianGroup(long rank, std::vector<Int> tors)
        : free_rank(rank), torsion(canonical_torsion(std::move(tors))) {
        if (rank < 0) throw std::invalid_argument("negative free rank");
    }

    static AbelianGroup zero() { return AbelianGroup(); }
    static AbelianGroup free(long rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(long order) { return AbelianGroup(0, {Int(order)}); }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    AbelianGroup direct_sum(const AbelianGroup& other) const {
        std::vector<Int> t = torsion;
        t.insert(t.end(), other.torsion.begin(), other.torsion.end());
        return AbelianGroup(free_rank + other.free_rank, std::move(t));
    }

    bool operator==(const AbelianGroup& o) const = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (const Int& t : torsion) {
            if (!s.empty()) s += "+";
            s += "Z_" + t.get_str();
        }
        return s;
    }
};

inline AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
    return a.direct_sum(b);
}

/// Hom(A, B) = 0?  (Used to recognize forced-zero maps in exact sequences.)
inline bool hom_is_zero(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.is_zero() || b.is_zero()) return true;
    if (a.free_rank > 0) return false;  // Hom(Z, B) != 0 for B != 0
    if (b.torsion.empty()) return true; // finite -> free
    // divisibility chains: the last entries carry every prime
    return int_gcd(a.torsion.back(), b.torsion.back()) == 1;
}

/// Is the extension 0 -> A -> E -> B -> 0 forced to split as A + B?
inline bool extension_is_forced(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.is_zero() || b.is_zero()) return true;
    if (b.torsion.empty()) return true;  // B free: always splits
    if (a.free_rank > 0) return false;   // Ext(Z_m, Z) != 0
    return int_gcd(a.torsion.back(), b.torsion.back()) == 1;
}

// ---------------------------------------------------------------------------
// graded groups: degree -> group, absent entries are zero

using GradedGroup = std::map<int, AbelianGroup>;

inline GradedGroup shifted(const GradedGroup& g, int s) {
    GradedGroup out;
    for (const auto& [d, v] : g) out[d + s] = v;
    return out;
}

inline GradedGroup nonzero_part(const GradedGroup& g) {
    GradedGroup out;
    for (const auto& [d, v] : g)
        if (!v.is_zero()) out[d] = v;
    return out;
}

inline AbelianGroup graded_at(const GradedGroup& g, int d) {
    auto it = g.find(d);
    return it == g.end() ? AbelianGroup() : it->second;
}

// ---------------------------------------------------------------------------
// JSON (stable key order everywhere; nlohmann::ordered_json)

using Json = nlohmann::ordered_json;

inline long long int_to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer too large for JSON: " + v.get_str());
    return static_cast<long long>(v.get_si());
}

inline Json to_json(const AbelianGroup& g) {
    Json j;
    j["rank"] = g.free_rank;
    j["torsion"] = Json::array();
    for (const Int& t : g.torsion) j["torsion"].push_back(int_to_ll(t));
    return j;
}

inline AbelianGroup abelian_from_json(const Json& j) {
    std::vector<Int> t;
    for (const auto& x : j.at("torsion")) t.emplace_back(x.get<long>());
    return AbelianGroup(j.at("rank").get<long>(), std::move(t));
}

/// graded groups serialize with degrees as keys, descending, zeros omitted
inline Json to_json(const GradedGroup& g) {
    Json j = Json::object();
    for (auto it = g.rbegin(); it != g.rend(); ++it)
        if (!it->second.is_zero()) j[std::to_string(it->first)] = to_json(it->second);
    return j;
}

}  // namespace cxknots
