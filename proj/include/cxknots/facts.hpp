/**
 * Registry of configured geometric facts.
 *
 * Facts are append-only inputs consumed during page assembly: differentials
 * established by geometric (not combinatorial) arguments, and homology
 * values of auxiliary loci that this library does not recompute.  They are
 * explicit data, never hardcoded into algorithms; swapping the facts file
 * changes the output.  Every assembly records which fact ids it consumed.
 */
#pragma once

#include <fstream>

#include "sstable.hpp"

namespace cxknots {

struct GeometricFact {
    std::string id;
    int rho = 0;  // 0 when not tied to a filtration rank
    std::string kind;
    Json data;
    std::string provenance;
};

inline const char* bundled_facts_text() {
    return R"JSON([
 {
  "id": "aux-d1-iso-rank2",
  "rho": 2,
  "kind": "aux-d1-iso",
  "data": {"from": [1, 6], "to": [0, 6]},
  "provenance": "rank-2 stratum: the first auxiliary differential from (j=1,q=6) to (j=0,q=6) is an isomorphism, by the mod-2 intersection index of the equal-real-part cycle with the unit-sphere 3-cycle of doubled conditions (nine transversal intersection points)"
 },
 {
  "id": "aux-d1-iso-rank3",
  "rho": 3,
  "kind": "aux-d1-iso",
  "data": {"from": [1, 11], "to": [0, 11]},
  "provenance": "rank-3 stratum: the first auxiliary differential from (j=1,q=11) to (j=0,q=11) is an isomorphism, by the same intersection-index argument as in the rank-2 case"
 },
 {
  "id": "aux-d1-free-to-infinite-rank3",
  "rho": 3,
  "kind": "aux-d1-free-to-infinite",
  "data": {"from": [2, 8], "to": [1, 8]},
  "provenance": "rank-3 stratum: the first auxiliary differential from (j=2,q=8) to (j=1,q=8) sends a free generator to an element of infinite order (boundary-tracing of the three-stacked-points chain against the 1-cycle of the doubled-pair locus; odd intersection index).  Indices are recorded filtration-first; the transposed order (q,j) also circulates for this statement"
 },
 {
  "id": "doubled-pair-locus-sign-homology",
  "rho": 3,
  "kind": "homology-values",
  "data": {
   "space": "triple-with-doubled-pair",
   "values": {"5": {"rank": 1, "torsion": [2]}, "4": {"rank": 1, "torsion": []}}
  },
  "provenance": "sign-twisted Borel-Moore homology of the locus of pairs ({a,b,c},{d,e}) with {d,e} a doubled pair inside the triple: Z+Z_2 in degree 5, Z in degree 4, trivial elsewhere (fibered over the configuration space of the pair with fiber a twice-punctured plane)"
 },
 {
  "id": "sign-top-homology-general-rank",
  "rho": 0,
  "kind": "homology-values",
  "data": {
   "space": "B(R4,rho)",
   "general_rho": true,
   "finite": true,
   "vanishing_top": "4*rho",
   "z2_at": "4*rho-1"
  },
  "provenance": "for every rho > 1 the sign-twisted Borel-Moore homology of B(R^4,rho) is finite in every degree, vanishes in degree 4*rho, and equals Z_2 in degree 4*rho-1"
 },
 {
  "id": "fourth-column-free-rank",
  "rho": 4,
  "kind": "main-free-rank",
  "data": {"p": -4, "q": {"k": 8, "const": -13}, "free_rank": 1, "rank_exact_from_k": 4},
  "provenance": "the main-page group at (p=-4, q=8k-13) is infinite: a free generator survives from the two-connected stratum of the rank-4 term; for k >= 4 its free rank equals one"
 }
]
)JSON";
}

class FactsRegistry {
  public:
    static FactsRegistry bundled() { return from_json(Json::parse(bundled_facts_text())); }

    static FactsRegistry from_json(const Json& j) {
        FactsRegistry r;
        for (const auto& item : j) {
            GeometricFact f;
            f.id = item.at("id").get<std::string>();
            f.rho = item.value("rho", 0);
            f.kind = item.at("kind").get<std::string>();
            f.data = item.value("data", Json::object());
            f.provenance = item.value("provenance", "");
            r.facts_.push_back(std::move(f));
        }
        return r;
    }

    static FactsRegistry from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open facts file: " + path);
        Json j;
        in >> j;
        return from_json(j);
    }

    const std::vector<GeometricFact>& all() const { return facts_; }

    const GeometricFact* find_differential(const std::string& kind, int rho, int j, int q) const {
        for (const GeometricFact& f : facts_) {
            if (f.kind != kind || f.rho != rho) continue;
            const auto& from = f.data.at("from");
            if (from.at(0).get<int>() == j && from.at(1).get<int>() == q) return &f;
        }
        return nullptr;
    }

    const GeometricFact* find_by_id(const std::string& id) const {
        for (const GeometricFact& f : facts_)
            if (f.id == id) return &f;
        return nullptr;
    }

    /// homology-values fact for a named space, as a graded group
    std::optional<GradedGroup> homology_values(const std::string& space, std::string* id_out = nullptr) const {
        for (const GeometricFact& f : facts_) {
            if (f.kind != "homology-values") continue;
            if (f.data.value("space", "") != space || !f.data.contains("values")) continue;
            GradedGroup g;
            for (const auto& [deg, val] : f.data.at("values").items())
                g[std::stoi(deg)] = abelian_from_json(val);
            if (id_out) *id_out = f.id;
            return g;
        }
        return std::nullopt;
    }

    Json to_json() const {
        Json j = Json::array();
        for (const GeometricFact& f : facts_) {
            Json item;
            item["id"] = f.id;
            if (f.rho) item["rho"] = f.rho;
            item["kind"] = f.kind;
            item["data"] = f.data;
            item["provenance"] = f.provenance;
            j.push_back(item);
        }
        return j;
    }

  private:
    std::vector<GeometricFact> facts_;
};

}  // namespace cxknots
