/**
 * Integer-matrix representations of symmetric groups S(n).
 *
 * A representation is given by one invertible integer matrix per adjacent
 * transposition s_1, ..., s_{n-1}.  Arbitrary permutations are evaluated by
 * factoring into adjacent transpositions; validate() certifies that the
 * result is independent of the factorization (involution, braid and
 * commutation relations).
 *
 * Built-in systems: the trivial system Z, the sign system, the
 * 3-dimensional permutation action of S(4) on the matchings of four points
 * (A2hat), and its 2-dimensional quotient by the diagonal (A2).
 */
#pragma once

#include <array>
#include <functional>

#include "sparse.hpp"

namespace cxknots {

/// permutation of {1..n} as the image list perm[i-1] = sigma(i)
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

inline int perm_sign(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

/// adjacent-transposition word w with sigma = s_{w.back()} * ... * s_{w.front()}
inline std::vector<int> adjacent_word(Perm p) {
    std::vector<int> word;
    int n = static_cast<int>(p.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                word.push_back(i + 1);  // 1-based generator index
                changed = true;
            }
        }
    }
    return word;
}

using Mat = std::vector<std::vector<Int>>;

inline Mat mat_identity(int n) {
    Mat m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat c(n, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

struct SnRepresentation {
    int n = 2;
    int dim = 1;
    std::string name;
    std::vector<Mat> gen_matrices;  // one per s_1 .. s_{n-1}

    /// matrix of an arbitrary permutation
    Mat evaluate(const Perm& p) const {
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
        Mat m = mat_identity(dim);
        // sorting the one-line form gives sigma * s_{w1} * ... * s_{wk} = id,
        // hence sigma = s_{wk} * ... * s_{w1}
        for (int g : adjacent_word(p)) m = mat_mul(gen_matrices[g - 1], m);
        return m;
    }

    Int character(const Perm& p) const {
        Mat m = evaluate(p);
        Int tr = 0;
        for (int i = 0; i < dim; ++i) tr += m[i][i];
        return tr;
    }

    /// violated involution/braid/commutation relations; empty means valid
    std::vector<std::string> validate() const {
        std::vector<std::string> bad;
        auto is_id = [&](const Mat& m) {
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if (m[i][j] != (i == j ? 1 : 0)) return false;
            return true;
        };
        for (int i = 0; i < n - 1; ++i)
            if (!is_id(mat_mul(gen_matrices[i], gen_matrices[i])))
                bad.push_back("s_" + std::to_string(i + 1) + "^2 != 1");
        for (int i = 0; i + 1 < n - 1; ++i) {
            Mat lhs = mat_mul(gen_matrices[i], mat_mul(gen_matrices[i + 1], gen_matrices[i]));
            Mat rhs = mat_mul(gen_matrices[i + 1], mat_mul(gen_matrices[i], gen_matrices[i + 1]));
            if (lhs != rhs)
                bad.push_back("braid relation fails at s_" + std::to_string(i + 1));
        }
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 2; j < n - 1; ++j)
                if (mat_mul(gen_matrices[i], gen_matrices[j]) !=
                    mat_mul(gen_matrices[j], gen_matrices[i]))
                    bad.push_back("commutation fails for s_" + std::to_string(i + 1) +
                                  ", s_" + std::to_string(j + 1));
        return bad;
    }
};

inline SnRepresentation trivial_rep(int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    return {n, 1, "Z", std::vector<Mat>(n - 1, Mat{{Int(1)}})};
}

inline SnRepresentation sign_rep(int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    return {n, 1, "sign", std::vector<Mat>(n - 1, Mat{{Int(-1)}})};
}

// ---------------------------------------------------------------------------
// matchings of four points; the label of a matching is the point paired with 1

inline const std::array<int, 3>& matching_labels() {
    static const std::array<int, 3> labels = {2, 3, 4};
    return labels;
}

inline std::array<std::pair<int, int>, 2> matching_pairs(int label) {
    switch (label) {
        case 2: return {{{1, 2}, {3, 4}}};
        case 3: return {{{1, 3}, {2, 4}}};
        case 4: return {{{1, 4}, {2, 3}}};
    }
    throw std::invalid_argument("matching label must be 2, 3 or 4");
}

/// image of a matching under a permutation of the four points
inline int permute_matching(const Perm& p, int label) {
    auto pairs = matching_pairs(label);
    for (auto& [x, y] : pairs) {
        x = p[x - 1];
        y = p[y - 1];
    }
    for (auto& [x, y] : pairs) {
        if (x == 1) return y;
        if (y == 1) return x;
    }
    throw std::logic_error("matching image did not contain point 1");
}

/// 3-dimensional permutation representation of S(4) on matchings (basis 2,3,4)
inline SnRepresentation matching_rep_hat() {
    SnRepresentation r{4, 3, "A2hat", {}};
    for (int g = 1; g <= 3; ++g) {
        Perm p = identity_perm(4);
        std::swap(p[g - 1], p[g]);
        Mat m(3, std::vector<Int>(3, Int(0)));
        for (int col = 0; col < 3; ++col) {
            int image = permute_matching(p, matching_labels()[col]);
            int row = image - 2;
            m[row][col] = 1;
        }
        r.gen_matrices.push_back(std::move(m));
    }
    return r;
}

/// 2-dimensional quotient of A2hat by the all-ones vector; basis: images of
/// the first two matching vectors
inline SnRepresentation matching_rep() {
    SnRepresentation hat = matching_rep_hat();
    SnRepresentation r{4, 2, "A2", {}};
    for (const Mat& m : hat.gen_matrices) {
        // coordinates (a, b, c) on the quotient become (a - c, b - c)
        Mat q(2, std::vector<Int>(2, Int(0)));
        for (int col = 0; col < 2; ++col) {
            q[0][col] = m[0][col] - m[2][col];
            q[1][col] = m[1][col] - m[2][col];
        }
        r.gen_matrices.push_back(std::move(q));
    }
    return r;
}

inline SnRepresentation tensor(const SnRepresentation& a, const SnRepresentation& b) {
    if (a.n != b.n) throw std::invalid_argument("tensor factors must share n");
    SnRepresentation r{a.n, a.dim * b.dim, a.name + "(x)" + b.name, {}};
    for (int g = 0; g < a.n - 1; ++g) {
        Mat m(r.dim, std::vector<Int>(r.dim, Int(0)));
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < b.dim; ++k)
                    for (int l = 0; l < b.dim; ++l)
                        m[i * b.dim + k][j * b.dim + l] =
                            a.gen_matrices[g][i][j] * b.gen_matrices[g][k][l];
        r.gen_matrices.push_back(std::move(m));
    }
    return r;
}

/**
 * Report on the short exact sequence of coefficients Z -> A2hat -> A2:
 * the all-ones vector spans a trivial subrepresentation, the quotient
 * matrices equal matching_rep() exactly, and characters add up.
 */
inline std::vector<std::string> exact_triple_check() {
    std::vector<std::string> bad;
    SnRepresentation hat = matching_rep_hat();
    SnRepresentation quo = matching_rep();
    SnRepresentation triv = trivial_rep(4);
    for (int g = 0; g < 3; ++g) {
        const Mat& m = hat.gen_matrices[g];
        for (int i = 0; i < 3; ++i) {
            Int s = m[i][0] + m[i][1] + m[i][2];
            if (s != 1) {
                bad.push_back("all-ones vector not fixed by s_" + std::to_string(g + 1));
                break;
            }
        }
        Mat q(2, std::vector<Int>(2, Int(0)));
        for (int col = 0; col < 2; ++col) {
            q[0][col] = m[0][col] - m[2][col];
            q[1][col] = m[1][col] - m[2][col];
        }
        if (q != quo.gen_matrices[g])
            bad.push_back("quotient of s_" + std::to_string(g + 1) + " differs from A2");
    }
    // character additivity on every transposition (x, y)
    for (int x = 1; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y) {
            Perm p = identity_perm(4);
            std::swap(p[x - 1], p[y - 1]);
            if (hat.character(p) != triv.character(p) + quo.character(p))
                bad.push_back("character additivity fails on (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
        }
    return bad;
}

/// named local systems addressable from the CLI
inline SnRepresentation rep_by_name(const std::string& name, int n) {
    if (name == "Z") return trivial_rep(n);
    if (name == "sign") return sign_rep(n);
    if (name == "A2" || name == "A2hat" || name == "sign(x)A2" || name == "sign⊗A2") {
        if (n != 4) throw std::invalid_argument("local system '" + name + "' requires n = 4");
        if (name == "A2") return matching_rep();
        if (name == "A2hat") return matching_rep_hat();
        return tensor(sign_rep(4), matching_rep());
    }
    throw std::invalid_argument("unknown local system: " + name);
}

}  // namespace cxknots
