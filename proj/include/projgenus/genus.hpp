#pragma once

/**
 * @file genus.hpp
 * @brief The genus monoid A and big-projective semigroup B as solution sets
 *        of linear systems over N0*.
 *
 * A vector X of per-block multiplicities is the genus of a finitely
 * generated projective iff all block ranks r_{i,.} . X_i agree on a common
 * finite value r (its rank); it is the genus of a relatively big projective
 * that is not finitely generated iff every block rank is inf, i.e. every
 * block carries at least one inf entry.
 *
 * hilbert_basis_A computes the minimal generating set of A as the Hilbert
 * basis of the system "adjacent block ranks equal"; big_generators emits
 * the minimal generating set of B.  The shape of the B generating set
 * depends only on the t_i, not on the ranks; it is exercised against a
 * bounded generation/minimality oracle in the test suite.
 */

#include "projgenus/diophantine.hpp"
#include "projgenus/profile.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace projgenus {

/// Element of prod_i (N0*)^{t_i}.
struct GenusVector {
    std::vector<std::vector<ExtNat>> blocks;

    bool operator==(const GenusVector&) const = default;

    [[nodiscard]] bool all_finite() const {
        for (const auto& b : blocks) {
            for (const ExtNat& x : b) {
                if (x.is_inf()) return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& b : blocks) {
            for (const ExtNat& x : b) {
                if (!(x == ExtNat(0))) return false;
            }
        }
        return true;
    }

    [[nodiscard]] std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) out += ",";
            out += "(";
            for (std::size_t j = 0; j < blocks[i].size(); ++j) {
                if (j) out += ",";
                out += blocks[i][j].str();
            }
            out += ")";
        }
        return out + ")";
    }
};

inline bool shape_matches(const AlgebraProfile& p, const GenusVector& v) {
    if (v.blocks.size() != p.block_count()) return false;
    for (std::size_t i = 0; i < v.blocks.size(); ++i) {
        if (v.blocks[i].size() != p.blocks[i].type_count()) return false;
    }
    return true;
}

inline void require_shape(const AlgebraProfile& p, const GenusVector& v) {
    if (!shape_matches(p, v)) {
        throw std::invalid_argument("genus vector shape does not match profile");
    }
}

/// Componentwise sum in N0*.
inline GenusVector add(const GenusVector& a, const GenusVector& b) {
    if (a.blocks.size() != b.blocks.size()) {
        throw std::invalid_argument("genus add: shape mismatch");
    }
    GenusVector out = a;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        if (a.blocks[i].size() != b.blocks[i].size()) {
            throw std::invalid_argument("genus add: shape mismatch");
        }
        for (std::size_t j = 0; j < a.blocks[i].size(); ++j) {
            out.blocks[i][j] += b.blocks[i][j];
        }
    }
    return out;
}

/// inf * v componentwise: inf on the support, 0 elsewhere.
inline GenusVector inf_scale(const GenusVector& v) {
    GenusVector out = v;
    for (auto& b : out.blocks) {
        for (ExtNat& x : b) {
            x = ExtNat::inf() * x;
        }
    }
    return out;
}

/// Lexicographic comparison of the flattened entries, inf greatest.
inline bool genus_less(const GenusVector& a, const GenusVector& b) {
    for (std::size_t i = 0; i < std::min(a.blocks.size(), b.blocks.size()); ++i) {
        const auto& x = a.blocks[i];
        const auto& y = b.blocks[i];
        for (std::size_t j = 0; j < std::min(x.size(), y.size()); ++j) {
            if (x[j] != y[j]) return x[j] < y[j];
        }
        if (x.size() != y.size()) return x.size() < y.size();
    }
    return a.blocks.size() < b.blocks.size();
}

/// Per-block inf positions S_i(v) = {j | v_{i,j} = inf}, 1-based.
inline std::vector<std::vector<int>> inf_support(const GenusVector& v) {
    std::vector<std::vector<int>> support(v.blocks.size());
    for (std::size_t i = 0; i < v.blocks.size(); ++i) {
        for (std::size_t j = 0; j < v.blocks[i].size(); ++j) {
            if (v.blocks[i][j].is_inf()) {
                support[i].push_back(static_cast<int>(j + 1));
            }
        }
    }
    return support;
}

/// Entry i is r_{i,.} . v_i, the rank of block i seen over the quotient ring.
inline std::vector<ExtNat> block_ranks(const AlgebraProfile& p,
                                       const GenusVector& v) {
    require_shape(p, v);
    std::vector<ExtNat> out;
    out.reserve(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        out.push_back(dot(p.blocks[i].ranks, v.blocks[i]));
    }
    return out;
}

/// Rank r when v lies in A (all block ranks equal and finite), nothing
/// otherwise.  Requires an all-finite vector of matching shape; an empty
/// profile only carries the zero module, reported with rank 0.
inline std::optional<Int> membership_A(const AlgebraProfile& p,
                                       const GenusVector& v) {
    require_shape(p, v);
    if (!v.all_finite()) {
        throw std::invalid_argument("membership_A: entries must be finite");
    }
    if (p.block_count() == 0) return Int(0);
    std::vector<ExtNat> ranks = block_ranks(p, v);
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        if (ranks[i] != ranks[0]) return std::nullopt;
    }
    return ranks[0].finite();
}

/// True iff every block rank is inf, i.e. every block has an inf entry.
inline bool membership_B(const AlgebraProfile& p, const GenusVector& v) {
    require_shape(p, v);
    for (const auto& b : v.blocks) {
        if (std::none_of(b.begin(), b.end(),
                         [](const ExtNat& x) { return x.is_inf(); })) {
            return false;
        }
    }
    return true;
}

/// Membership of r in the image of the rank map: r must lie in the
/// numerical monoid generated by the ranks of every block.
inline bool rank_monoid_contains(const AlgebraProfile& p, const Int& r) {
    if (r < 0) return false;
    for (const Block& b : p.blocks) {
        if (!numerical_monoid_contains(b.ranks, r)) return false;
    }
    return true;
}

/// An element of A together with its rank.
struct AnnotatedGenus {
    GenusVector vec;
    Int rank;

    bool operator==(const AnnotatedGenus&) const = default;
};

namespace detail {

/// Positions (block, index) of the flattened coordinate layout.
inline std::vector<std::pair<std::size_t, std::size_t>> flat_layout(
    const AlgebraProfile& p) {
    std::vector<std::pair<std::size_t, std::size_t>> layout;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
            layout.emplace_back(i, j);
        }
    }
    return layout;
}

inline GenusVector from_flat(const AlgebraProfile& p,
                             const std::vector<Int>& flat) {
    GenusVector v;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        std::vector<ExtNat> entries;
        for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
            entries.emplace_back(flat[pos++]);
        }
        v.blocks.push_back(std::move(entries));
    }
    return v;
}

/// The homogeneous system "rank of block i equals rank of block i+1".
inline DiophantineSystem equal_ranks_system(const AlgebraProfile& p) {
    const auto layout = flat_layout(p);
    DiophantineSystem sys;
    for (std::size_t i = 0; i + 1 < p.block_count(); ++i) {
        std::vector<Int> row(layout.size(), 0);
        std::size_t pos = 0;
        for (std::size_t bi = 0; bi < p.block_count(); ++bi) {
            for (std::size_t j = 0; j < p.blocks[bi].type_count(); ++j, ++pos) {
                if (bi == i) row[pos] = p.blocks[bi].ranks[j];
                if (bi == i + 1) row[pos] = -p.blocks[bi].ranks[j];
            }
        }
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(0);
    }
    return sys;
}

}  // namespace detail

/// Minimal generating set of A, as the Hilbert basis of the equal-ranks
/// system, each element annotated with its rank.  Requires l >= 1.
inline std::vector<AnnotatedGenus> hilbert_basis_A(const AlgebraProfile& p) {
    if (p.block_count() == 0) {
        throw std::invalid_argument("hilbert_basis_A: profile has no blocks");
    }
    DiophantineSystem sys = detail::equal_ranks_system(p);
    if (sys.matrix.empty()) {
        // l = 1: A is free on the t_1 indecomposables.
        std::vector<AnnotatedGenus> out;
        const std::size_t t = p.blocks[0].type_count();
        for (std::size_t j = 0; j < t; ++j) {
            std::vector<Int> flat(t, 0);
            flat[j] = 1;
            out.push_back({detail::from_flat(p, flat), p.blocks[0].ranks[j]});
        }
        return out;
    }
    std::vector<AnnotatedGenus> out;
    for (const auto& sol : minimal_solutions(sys)) {
        GenusVector v = detail::from_flat(p, sol);
        Int rank = block_ranks(p, v)[0].finite();
        out.push_back({std::move(v), std::move(rank)});
    }
    std::sort(out.begin(), out.end(),
              [](const AnnotatedGenus& a, const AnnotatedGenus& b) {
                  return genus_less(a.vec, b.vec);
              });
    return out;
}

/// Minimal generating set of B for l >= 2: every vector with exactly one
/// inf per block and all finite entries 0, plus every such vector with a
/// single finite entry 1 at a non-inf position.
inline std::vector<GenusVector> big_generators(const AlgebraProfile& p) {
    if (p.block_count() < 2) {
        throw std::invalid_argument("big_generators: requires l >= 2");
    }
    std::vector<GenusVector> out;
    std::vector<std::size_t> inf_at(p.block_count(), 0);
    while (true) {
        GenusVector base;
        for (std::size_t i = 0; i < p.block_count(); ++i) {
            std::vector<ExtNat> entries(p.blocks[i].type_count(), ExtNat(0));
            entries[inf_at[i]] = ExtNat::inf();
            base.blocks.push_back(std::move(entries));
        }
        out.push_back(base);
        for (std::size_t i = 0; i < p.block_count(); ++i) {
            for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
                if (j == inf_at[i]) continue;
                GenusVector g = base;
                g.blocks[i][j] = ExtNat(1);
                out.push_back(std::move(g));
            }
        }
        std::size_t i = inf_at.size();
        bool done = false;
        while (i > 0) {
            --i;
            if (++inf_at[i] < p.blocks[i].type_count()) break;
            inf_at[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), genus_less);
    return out;
}

// ---------------------------------------------------------------------------
// Text format: nested parenthesized tuples with "inf", e.g. ((inf,1),(inf,0))
// ---------------------------------------------------------------------------

inline std::optional<GenusVector> parse_genus(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') s += c;
    }
    std::size_t pos = 0;
    auto eat = [&](char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    };
    if (!eat('(')) return std::nullopt;
    GenusVector v;
    while (true) {
        if (!eat('(')) return std::nullopt;
        std::vector<ExtNat> entries;
        while (true) {
            std::size_t start = pos;
            while (pos < s.size() && s[pos] != ',' && s[pos] != ')') ++pos;
            auto e = ExtNat::parse(std::string_view(s).substr(start, pos - start));
            if (!e) return std::nullopt;
            entries.push_back(*e);
            if (eat(')')) break;
            if (!eat(',')) return std::nullopt;
        }
        v.blocks.push_back(std::move(entries));
        if (eat(')')) break;
        if (!eat(',')) return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;
    return v;
}

}  // namespace projgenus
