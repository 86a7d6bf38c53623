#pragma once

/**
 * @file profile.hpp
 * @brief The finite invariant of a locally semiperfect torsion-free algebra.
 *
 * A profile records the length k of the algebra over its simple artinian
 * ring of quotients together with, for each of the finitely many
 * exceptional maximal ideals, the ranks r_{i,1..t_i} and multiplicities
 * m_{i,1..t_i} of the indecomposable projectives of the local piece.
 * Each block satisfies sum_j r_{i,j} * m_{i,j} = k.
 */

#include "projgenus/extnat.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace projgenus {

/// Local data at one exceptional maximal ideal.
struct Block {
    std::string label;
    std::vector<Int> ranks;           // r_{i,1..t_i}, all >= 1
    std::vector<Int> multiplicities;  // m_{i,1..t_i}, all >= 1

    /// t_i, the number of indecomposable types.
    [[nodiscard]] std::size_t type_count() const { return ranks.size(); }

    bool operator==(const Block&) const = default;
};

struct AlgebraProfile {
    Int k;
    std::vector<Block> blocks;

    /// l, the number of exceptional maximal ideals.
    [[nodiscard]] std::size_t block_count() const { return blocks.size(); }

    bool operator==(const AlgebraProfile&) const = default;
};

enum class ProfileDefect {
    NonpositiveK,
    EmptyBlock,
    LengthMismatch,
    ZeroRank,
    ZeroMultiplicity,
    BlockSumMismatch,
    DuplicateLabel,
};

inline const char* to_string(ProfileDefect d) {
    switch (d) {
        case ProfileDefect::NonpositiveK: return "NonpositiveK";
        case ProfileDefect::EmptyBlock: return "EmptyBlock";
        case ProfileDefect::LengthMismatch: return "LengthMismatch";
        case ProfileDefect::ZeroRank: return "ZeroRank";
        case ProfileDefect::ZeroMultiplicity: return "ZeroMultiplicity";
        case ProfileDefect::BlockSumMismatch: return "BlockSumMismatch";
        case ProfileDefect::DuplicateLabel: return "DuplicateLabel";
    }
    return "?";
}

/// First violated profile invariant, with the offending block index (0-based,
/// npos for profile-level defects) and the actual/expected sums for
/// BlockSumMismatch.
class ProfileError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ProfileError(ProfileDefect defect, std::size_t block, std::string message,
                 Int actual = 0, Int expected = 0)
        : std::runtime_error(std::move(message)),
          defect_(defect),
          block_(block),
          actual_(std::move(actual)),
          expected_(std::move(expected)) {}

    [[nodiscard]] ProfileDefect defect() const { return defect_; }
    [[nodiscard]] std::size_t block() const { return block_; }
    [[nodiscard]] const Int& actual() const { return actual_; }
    [[nodiscard]] const Int& expected() const { return expected_; }

private:
    ProfileDefect defect_;
    std::size_t block_;
    Int actual_;
    Int expected_;
};

/// Validates every profile invariant and returns the profile unchanged.
/// Throws ProfileError naming the first violation, scanning blocks in order.
inline AlgebraProfile validate(AlgebraProfile p) {
    if (p.k <= 0) {
        throw ProfileError(ProfileDefect::NonpositiveK, ProfileError::npos,
                           "profile: k must be positive");
    }
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const Block& b = p.blocks[i];
        const std::string where = "block " + std::to_string(i + 1) +
                                  " (" + b.label + ")";
        if (b.ranks.empty() || b.multiplicities.empty()) {
            throw ProfileError(ProfileDefect::EmptyBlock, i,
                               where + ": empty rank or multiplicity list");
        }
        if (b.ranks.size() != b.multiplicities.size()) {
            throw ProfileError(ProfileDefect::LengthMismatch, i,
                               where + ": ranks and multiplicities differ in length");
        }
        for (const Int& r : b.ranks) {
            if (r <= 0) {
                throw ProfileError(ProfileDefect::ZeroRank, i,
                                   where + ": ranks must be >= 1");
            }
        }
        for (const Int& m : b.multiplicities) {
            if (m <= 0) {
                throw ProfileError(ProfileDefect::ZeroMultiplicity, i,
                                   where + ": multiplicities must be >= 1");
            }
        }
        Int sum = 0;
        for (std::size_t j = 0; j < b.ranks.size(); ++j) {
            sum += b.ranks[j] * b.multiplicities[j];
        }
        if (sum != p.k) {
            throw ProfileError(ProfileDefect::BlockSumMismatch, i,
                               where + ": sum r*m = " + sum.str() +
                                   " but k = " + p.k.str(),
                               sum, p.k);
        }
    }
    std::set<std::string> labels;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (!labels.insert(p.blocks[i].label).second) {
            throw ProfileError(ProfileDefect::DuplicateLabel, i,
                               "duplicate block label '" + p.blocks[i].label + "'");
        }
    }
    return p;
}

/// True iff l <= 1.  In that case every projective module is a direct sum
/// of finitely generated ones and the genus monoid is free (l = 1) or the
/// profile carries no exceptional data at all (l = 0); callers short-circuit.
inline bool is_degenerate(const AlgebraProfile& p) {
    return p.block_count() <= 1;
}

/// Largest rank appearing in any block; 0 for an empty profile.
inline Int max_rank(const AlgebraProfile& p) {
    Int best = 0;
    for (const Block& b : p.blocks) {
        for (const Int& r : b.ranks) {
            best = std::max(best, r);
        }
    }
    return best;
}

/// Per-coordinate/rank caps for the bounded desk-scale searches.
struct SearchBounds {
    Int coordinate;
    Int rank;
};

/// Default bound max(12, 2 * max rank), both coordinates and ranks.
inline SearchBounds default_bounds(const AlgebraProfile& p) {
    Int b = std::max<Int>(12, 2 * max_rank(p));
    return SearchBounds{b, b};
}

}  // namespace projgenus
