#pragma once

/**
 * @file decomp.hpp
 * @brief Does every projective module decompose into finitely generated
 *        ones, and does a given big genus vector decompose, with witnesses
 *        and obstructions.
 *
 * decide_all_fg runs the gcd criterion: for every choice a of one
 * indecomposable per block, every block j and every other type b of block
 * j, gcd(lcm{r_{i,a_i} : i != j}, r_{j,a_j}) must divide r_{j,b}.  The
 * first violating tuple (lexicographically) is returned as a certificate.
 *
 * decompose_big decides whether a vector of B lies in A + inf*(A \ {0}).
 * The inf-multiplied part is assembled from minimal solutions of the
 * equal-ranks system restricted to the inf support; the finite part is a
 * minimal solution of the inhomogeneous system with the finite coordinates
 * of the target fixed.  Failure yields a congruence certificate: the fixed
 * contributions of two blocks land in different residue classes modulo the
 * gcd of the restricted coefficient gcds.
 */

#include "projgenus/genus.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace projgenus {

class NotBigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lifting equations
// ---------------------------------------------------------------------------

/// Non-negative solution of m y - s x = r_last with m = lcm(r_head), plus
/// the expanded per-equation values x_i = (m / r_i) y.
struct LiftingEquationsWitness {
    Int m;
    Int y;
    Int x_last;
    std::vector<Int> expanded;
};

/// Solvability of the staircase system diag(r_1..r_{l-1}) x - s x_l = r_last:
/// solvable iff gcd(lcm(r_head), s) divides r_last.  Returns a witness with
/// the least admissible y on success.
inline std::optional<LiftingEquationsWitness> lifting_equations_solvable(
    const std::vector<Int>& r_head, const Int& s, const Int& r_last) {
    if (r_head.empty() || s <= 0 || r_last <= 0) {
        throw std::invalid_argument("lifting_equations_solvable: inputs must be >= 1");
    }
    Int m = 1;
    for (const Int& r : r_head) {
        if (r <= 0) {
            throw std::invalid_argument("lifting_equations_solvable: inputs must be >= 1");
        }
        m = detail::lcm(m, r);
    }
    const Int g = detail::gcd(m, s);
    if (r_last % g != 0) return std::nullopt;

    // Least y >= 0 with m y congruent to r_last mod s and m y >= r_last.
    const Int s1 = s / g;
    const Int m1 = (m / g) % s1;
    const Int r1 = (r_last / g) % s1;
    Int y = 0;
    if (s1 > 1) {
        // Inverse of m1 modulo s1 by extended Euclid.
        Int t0 = 0, t1 = 1, a = s1, b = m1 % s1;
        while (b != 0) {
            Int q = a / b;
            Int tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
            Int rem = a % b;
            a = b;
            b = rem;
        }
        Int inv = ((t0 % s1) + s1) % s1;
        y = (r1 * inv) % s1;
    }
    while (m * y < r_last) y += s1;

    LiftingEquationsWitness w;
    w.m = m;
    w.y = y;
    w.x_last = (m * y - r_last) / s;
    for (const Int& r : r_head) {
        w.expanded.push_back((m / r) * y);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Global decision: every projective a direct sum of finitely generated ones
// ---------------------------------------------------------------------------

/// Violating tuple for the gcd criterion: picking indecomposable a_i in
/// every block, the type b of block j fails gcd(lcm_rest, r_{j,a_j}) | r_{j,b}.
struct FgObstruction {
    std::vector<int> tuple;  // a_1..a_l, 1-based
    int j = 0;               // 1-based block
    int b = 0;               // 1-based type, b != a_j
    Int lcm_rest;            // lcm{r_{i,a_i} : i != j}
    Int gcd_value;           // gcd(lcm_rest, r_{j,a_j})
    Int target;              // r_{j,b}
};

/// Re-check of the certificate against the profile.
inline bool verify_fg_obstruction(const AlgebraProfile& p,
                                  const FgObstruction& o) {
    if (o.tuple.size() != p.block_count()) return false;
    if (o.j < 1 || static_cast<std::size_t>(o.j) > p.block_count()) return false;
    Int m = 1;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        int a = o.tuple[i];
        if (a < 1 || static_cast<std::size_t>(a) > p.blocks[i].type_count()) return false;
        if (static_cast<int>(i) + 1 != o.j) {
            m = detail::lcm(m, p.blocks[i].ranks[a - 1]);
        }
    }
    if (m != o.lcm_rest) return false;
    const Block& bj = p.blocks[o.j - 1];
    if (o.b < 1 || static_cast<std::size_t>(o.b) > bj.type_count() ||
        o.b == o.tuple[o.j - 1]) {
        return false;
    }
    Int g = detail::gcd(m, bj.ranks[o.tuple[o.j - 1] - 1]);
    return g == o.gcd_value && o.target == bj.ranks[o.b - 1] &&
           o.target % g != 0;
}

/// Empty optional means every projective module is a direct sum of finitely
/// generated ones (immediately so for l <= 1); otherwise the
/// lexicographically least violating tuple.
inline std::optional<FgObstruction> decide_all_fg(const AlgebraProfile& p) {
    if (p.block_count() <= 1) return std::nullopt;
    const std::size_t l = p.block_count();
    std::vector<int> a(l, 1);
    while (true) {
        for (std::size_t j = 0; j < l; ++j) {
            Int m = 1;
            for (std::size_t i = 0; i < l; ++i) {
                if (i != j) m = detail::lcm(m, p.blocks[i].ranks[a[i] - 1]);
            }
            const Int g = detail::gcd(m, p.blocks[j].ranks[a[j] - 1]);
            for (std::size_t b = 1; b <= p.blocks[j].type_count(); ++b) {
                if (static_cast<int>(b) == a[j]) continue;
                if (p.blocks[j].ranks[b - 1] % g != 0) {
                    FgObstruction o;
                    o.tuple = a;
                    o.j = static_cast<int>(j + 1);
                    o.b = static_cast<int>(b);
                    o.lcm_rest = m;
                    o.gcd_value = g;
                    o.target = p.blocks[j].ranks[b - 1];
                    return o;
                }
            }
        }
        std::size_t i = l;
        bool done = false;
        while (i > 0) {
            --i;
            if (static_cast<std::size_t>(++a[i]) <= p.blocks[i].type_count()) break;
            a[i] = 1;
            if (i == 0) done = true;
        }
        if (done) return std::nullopt;
    }
}

/// True iff r_{i,a} and r_{j,b} are coprime for all blocks i != j and all
/// types a, b.  Implies decide_all_fg; the converse holds when every block
/// contains a rank-1 type.
inline bool coprime_criterion(const AlgebraProfile& p) {
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (std::size_t j = i + 1; j < p.block_count(); ++j) {
            for (const Int& ra : p.blocks[i].ranks) {
                for (const Int& rb : p.blocks[j].ranks) {
                    if (detail::gcd(ra, rb) != 1) return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Decomposition of a single big genus vector
// ---------------------------------------------------------------------------

/// target = a + inf * aprime with a in A, aprime in A \ {0} supported
/// exactly on the inf support of the target.
struct Witness {
    GenusVector a;
    GenusVector aprime;
    GenusVector target;
};

inline bool verify_witness(const AlgebraProfile& p, const Witness& w) {
    if (!shape_matches(p, w.a) || !shape_matches(p, w.aprime) ||
        !shape_matches(p, w.target)) {
        return false;
    }
    if (!w.a.all_finite() || !w.aprime.all_finite()) return false;
    if (!membership_A(p, w.a) || !membership_A(p, w.aprime)) return false;
    if (w.aprime.is_zero()) return false;
    if (inf_support(w.target) != inf_support(inf_scale(w.aprime))) return false;
    return add(w.a, inf_scale(w.aprime)) == w.target;
}

/// One side of the residue certificate: the contribution of block `block`
/// to the common rank is sum of coeffs[j] * x over the free inf-support
/// positions plus the fixed constant, so it is constant mod `side_gcd`.
struct ResidueSide {
    int block = 0;                // 1-based
    std::vector<int> positions;   // inf-support positions, 1-based
    std::vector<Int> coeffs;      // ranks at those positions
    Int fixed;                    // contribution of the fixed finite entries
    Int side_gcd;                 // gcd of coeffs
    Int residue;                  // fixed mod modulus
};

/// Two blocks whose rank congruences are disjoint: fixed_i != fixed_j
/// modulo gcd(side_gcd_i, side_gcd_j), so no common finite rank exists.
struct ResidueObstruction {
    ResidueSide lhs;
    ResidueSide rhs;
    Int modulus;
};

inline bool verify_residue_obstruction(const AlgebraProfile& p,
                                       const GenusVector& target,
                                       const ResidueObstruction& o) {
    if (!shape_matches(p, target)) return false;
    auto check_side = [&](const ResidueSide& s) {
        if (s.block < 1 || static_cast<std::size_t>(s.block) > p.block_count()) {
            return false;
        }
        const std::size_t i = static_cast<std::size_t>(s.block) - 1;
        Int g = 0, fixed = 0;
        std::vector<int> positions;
        std::vector<Int> coeffs;
        for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
            if (target.blocks[i][j].is_inf()) {
                positions.push_back(static_cast<int>(j + 1));
                coeffs.push_back(p.blocks[i].ranks[j]);
                g = detail::gcd(g, p.blocks[i].ranks[j]);
            } else {
                fixed += p.blocks[i].ranks[j] * target.blocks[i][j].finite();
            }
        }
        return positions == s.positions && coeffs == s.coeffs &&
               fixed == s.fixed && g == s.side_gcd &&
               ((fixed % o.modulus) + o.modulus) % o.modulus == s.residue;
    };
    if (!check_side(o.lhs) || !check_side(o.rhs)) return false;
    if (o.modulus != detail::gcd(o.lhs.side_gcd, o.rhs.side_gcd)) return false;
    return o.lhs.residue != o.rhs.residue;
}

using DecomposeResult = std::variant<Witness, ResidueObstruction>;

namespace detail {

/// Free inf-support coordinates of the target, flattened in block order.
struct SupportLayout {
    std::vector<std::pair<std::size_t, std::size_t>> coords;  // (block, 0-based)
    std::vector<Int> fixed_contrib;                           // c_i per block
};

inline SupportLayout support_layout(const AlgebraProfile& p,
                                    const GenusVector& target) {
    SupportLayout lay;
    lay.fixed_contrib.assign(p.block_count(), 0);
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
            if (target.blocks[i][j].is_inf()) {
                lay.coords.emplace_back(i, j);
            } else {
                lay.fixed_contrib[i] +=
                    p.blocks[i].ranks[j] * target.blocks[i][j].finite();
            }
        }
    }
    return lay;
}

/// Equal-ranks system on the support coordinates only, with right-hand side
/// c_{i+1} - c_i coming from the fixed finite entries.
inline DiophantineSystem restricted_system(const AlgebraProfile& p,
                                           const SupportLayout& lay,
                                           bool inhomogeneous) {
    DiophantineSystem sys;
    for (std::size_t i = 0; i + 1 < p.block_count(); ++i) {
        std::vector<Int> row(lay.coords.size(), 0);
        for (std::size_t c = 0; c < lay.coords.size(); ++c) {
            auto [bi, j] = lay.coords[c];
            if (bi == i) row[c] = p.blocks[bi].ranks[j];
            if (bi == i + 1) row[c] = -p.blocks[bi].ranks[j];
        }
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(inhomogeneous
                              ? lay.fixed_contrib[i + 1] - lay.fixed_contrib[i]
                              : Int(0));
    }
    return sys;
}

inline GenusVector vector_on_support(const AlgebraProfile& p,
                                     const SupportLayout& lay,
                                     const std::vector<Int>& values,
                                     const GenusVector* fill_from) {
    GenusVector v;
    v.blocks.resize(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        v.blocks[i].assign(p.blocks[i].type_count(), ExtNat(0));
    }
    for (std::size_t c = 0; c < lay.coords.size(); ++c) {
        auto [bi, j] = lay.coords[c];
        v.blocks[bi][j] = ExtNat(values[c]);
    }
    if (fill_from) {
        for (std::size_t i = 0; i < p.block_count(); ++i) {
            for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
                if (fill_from->blocks[i][j].is_finite()) {
                    v.blocks[i][j] = fill_from->blocks[i][j];
                }
            }
        }
    }
    return v;
}

inline ResidueObstruction residue_certificate(const AlgebraProfile& p,
                                              const GenusVector& target,
                                              const SupportLayout& lay) {
    auto side = [&](std::size_t i) {
        ResidueSide s;
        s.block = static_cast<int>(i + 1);
        s.fixed = lay.fixed_contrib[i];
        Int g = 0;
        for (std::size_t j = 0; j < p.blocks[i].type_count(); ++j) {
            if (target.blocks[i][j].is_inf()) {
                s.positions.push_back(static_cast<int>(j + 1));
                s.coeffs.push_back(p.blocks[i].ranks[j]);
                g = gcd(g, p.blocks[i].ranks[j]);
            }
        }
        s.side_gcd = g;
        return s;
    };
    // A common finite rank rho must satisfy rho = c_i (mod g_i) for each
    // block; pairwise compatibility is equivalent to solvability, so an
    // unsolvable system has a lexicographically first incompatible pair.
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (std::size_t j = i + 1; j < p.block_count(); ++j) {
            ResidueSide a = side(i);
            ResidueSide b = side(j);
            Int mod = gcd(a.side_gcd, b.side_gcd);
            Int ra = ((a.fixed % mod) + mod) % mod;
            Int rb = ((b.fixed % mod) + mod) % mod;
            if (ra != rb) {
                a.residue = ra;
                b.residue = rb;
                return ResidueObstruction{std::move(a), std::move(b), std::move(mod)};
            }
        }
    }
    throw std::logic_error("decompose_big: unsolvable system without residue certificate");
}

}  // namespace detail

/// Decides target in A + inf*(A \ {0}).  On success the witness re-verifies
/// before it is returned; on failure the congruence certificate does.
/// Requires membership_B(target).
///
/// Witnesses are not canonical; this routine deterministically returns the
/// lexicographically least minimal solution for the finite part and the sum
/// of the per-coordinate least positive minimal solutions for the
/// inf-multiplied part.
inline DecomposeResult decompose_big(const AlgebraProfile& p,
                                     const GenusVector& target) {
    require_shape(p, target);
    if (p.block_count() == 0) {
        throw std::invalid_argument("decompose_big: profile has no blocks");
    }
    if (!membership_B(p, target)) {
        throw NotBigError("decompose_big: target is not in B: " + target.str());
    }
    const auto lay = detail::support_layout(p, target);

    if (p.block_count() == 1) {
        // A is free, so the indicator of the support and the finite part of
        // the target decompose every member of B.
        Witness w;
        w.aprime = detail::vector_on_support(
            p, lay, std::vector<Int>(lay.coords.size(), 1), nullptr);
        w.a = detail::vector_on_support(
            p, lay, std::vector<Int>(lay.coords.size(), 0), &target);
        w.target = target;
        if (!verify_witness(p, w)) {
            throw std::logic_error("decompose_big: constructed witness failed verification");
        }
        return w;
    }

    // inf-multiplied part: minimal solutions of the homogeneous restricted
    // system, one chosen positive at each support coordinate, summed.
    const auto homogeneous =
        minimal_solutions(detail::restricted_system(p, lay, false));
    std::vector<std::vector<Int>> picked;
    for (std::size_t c = 0; c < lay.coords.size(); ++c) {
        const std::vector<Int>* choice = nullptr;
        for (const auto& sol : homogeneous) {
            if (sol[c] > 0) {
                choice = &sol;
                break;
            }
        }
        if (choice == nullptr) {
            throw std::logic_error(
                "decompose_big: no minimal solution positive at a support coordinate");
        }
        if (std::find(picked.begin(), picked.end(), *choice) == picked.end()) {
            picked.push_back(*choice);
        }
    }
    std::vector<Int> aprime_flat(lay.coords.size(), 0);
    for (const auto& sol : picked) {
        for (std::size_t c = 0; c < lay.coords.size(); ++c) {
            aprime_flat[c] += sol[c];
        }
    }

    // Finite part: least minimal solution of the inhomogeneous system; the
    // all-zero right-hand side admits a itself zero on the support.
    DiophantineSystem inhom = detail::restricted_system(p, lay, true);
    std::vector<Int> a_flat(lay.coords.size(), 0);
    if (!inhom.homogeneous()) {
        const auto sols = minimal_solutions(inhom);
        if (sols.empty()) {
            return detail::residue_certificate(p, target, lay);
        }
        a_flat = sols.front();
    }

    Witness w;
    w.a = detail::vector_on_support(p, lay, a_flat, &target);
    w.aprime = detail::vector_on_support(p, lay, aprime_flat, nullptr);
    w.target = target;
    if (!verify_witness(p, w)) {
        throw std::logic_error("decompose_big: constructed witness failed verification");
    }
    return w;
}

}  // namespace projgenus
