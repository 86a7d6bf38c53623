#pragma once

/**
 * @file bigmonoid.hpp
 * @brief The pair representation of V u B as the disjoint union of the
 *        quotient monoids V(Lambda/I) over all trace ideals I.
 *
 * A class is either finite (zero trace, a full vector of multiplicities in
 * A) or big (a non-zero trace I together with finite multiplicities of the
 * indecomposables surviving in Lambda/I).  Addition follows the rule
 * ([P1/P1 J + P2/P2 I], I + J): traces add, and both finite parts restrict
 * to the survivors of the combined trace.
 *
 * to_genus / from_genus translate between this representation and genus
 * vectors; the two routes to addition agree and the tests check it.  The
 * model identifies classes at genus level: faithful on big projectives,
 * while for finitely generated ones the genus map may be non-injective
 * over general h-local domains (it is injective for module-finite algebras
 * over semilocal domains); the library makes no injectivity claim beyond
 * the genus for the finite part.
 */

#include "projgenus/genus.hpp"
#include "projgenus/traces.hpp"

#include <string>
#include <utility>
#include <vector>

namespace projgenus {

class NotAGenusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One class of V u B: a trace ideal plus finite multiplicities on the
/// survivor positions of its quotient (all positions when the trace is 0).
struct BigClass {
    TraceIdeal trace;
    std::vector<std::vector<Int>> multiplicities;

    [[nodiscard]] bool is_finite() const { return trace.is_zero(); }

    bool operator==(const BigClass&) const = default;
};

namespace detail {

inline std::vector<std::vector<int>> survivor_index(const AlgebraProfile& p,
                                                    const TraceIdeal& trace) {
    if (trace.is_zero()) {
        std::vector<std::vector<int>> all(p.block_count());
        for (std::size_t i = 0; i < p.block_count(); ++i) {
            for (std::size_t j = 1; j <= p.blocks[i].type_count(); ++j) {
                all[i].push_back(static_cast<int>(j));
            }
        }
        return all;
    }
    return quotient_profile(p, trace).survivors;
}

inline void check_class_shape(const AlgebraProfile& p, const BigClass& c) {
    check_trace_shape(p, c.trace);
    const auto survivors = survivor_index(p, c.trace);
    if (c.multiplicities.size() != survivors.size()) {
        throw std::invalid_argument("BigClass: block count mismatch");
    }
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (c.multiplicities[i].size() != survivors[i].size()) {
            throw std::invalid_argument("BigClass: multiplicity shape mismatch");
        }
        for (const Int& m : c.multiplicities[i]) {
            if (m < 0) {
                throw std::invalid_argument("BigClass: negative multiplicity");
            }
        }
    }
}

}  // namespace detail

/// Finite class from an all-finite genus vector; requires membership in A.
inline BigClass fin_class(const AlgebraProfile& p, const GenusVector& v) {
    if (!membership_A(p, v)) {
        throw std::invalid_argument("fin_class: vector is not in A");
    }
    BigClass c;
    c.trace = TraceIdeal::zero();
    c.multiplicities.resize(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (const ExtNat& x : v.blocks[i]) {
            c.multiplicities[i].push_back(x.finite());
        }
    }
    return c;
}

/// Big class from a non-zero trace and survivor multiplicities.
inline BigClass big_class(const AlgebraProfile& p, TraceIdeal trace,
                          std::vector<std::vector<Int>> multiplicities) {
    if (trace.is_zero()) {
        throw std::invalid_argument("big_class: trace must be non-zero");
    }
    BigClass c{std::move(trace), std::move(multiplicities)};
    detail::check_class_shape(p, c);
    return c;
}

/// Genus of the class: inf on the trace subsets, the stored multiplicities
/// on the survivors.
inline GenusVector to_genus(const AlgebraProfile& p, const BigClass& c) {
    detail::check_class_shape(p, c);
    const auto survivors = detail::survivor_index(p, c.trace);
    GenusVector v;
    v.blocks.resize(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        v.blocks[i].assign(p.blocks[i].type_count(), ExtNat::inf());
        for (std::size_t s = 0; s < survivors[i].size(); ++s) {
            v.blocks[i][survivors[i][s] - 1] = ExtNat(c.multiplicities[i][s]);
        }
    }
    return v;
}

/// Inverse of to_genus on A u B; throws NotAGenusError outside.
inline BigClass from_genus(const AlgebraProfile& p, const GenusVector& v) {
    require_shape(p, v);
    if (v.all_finite()) {
        if (!membership_A(p, v)) {
            throw NotAGenusError("vector is finite but not in A: " + v.str());
        }
        return fin_class(p, v);
    }
    if (!membership_B(p, v)) {
        throw NotAGenusError("vector is neither in A nor in B: " + v.str());
    }
    TraceIdeal trace = TraceIdeal::nonzero(inf_support(v));
    std::vector<std::vector<Int>> mult(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (const ExtNat& x : v.blocks[i]) {
            if (x.is_finite()) mult[i].push_back(x.finite());
        }
    }
    return big_class(p, std::move(trace), std::move(mult));
}

/// Addition in the pair representation: traces add; each finite part is
/// reduced to the survivors of the combined trace and the results add
/// componentwise there.
inline BigClass add(const AlgebraProfile& p, const BigClass& x,
                    const BigClass& y) {
    detail::check_class_shape(p, x);
    detail::check_class_shape(p, y);
    TraceIdeal combined = sum(x.trace, y.trace);
    const auto survivors = detail::survivor_index(p, combined);
    const auto x_surv = detail::survivor_index(p, x.trace);
    const auto y_surv = detail::survivor_index(p, y.trace);

    // Multiplicity of indecomposable idx (1-based) in a class; idx survives
    // the class's own trace whenever it survives the combined one.
    auto value_at = [](const BigClass& c, const std::vector<std::vector<int>>& surv,
                       std::size_t block, int idx) -> const Int& {
        const auto& own = surv[block];
        auto it = std::lower_bound(own.begin(), own.end(), idx);
        return c.multiplicities[block][static_cast<std::size_t>(it - own.begin())];
    };

    BigClass out;
    out.trace = std::move(combined);
    out.multiplicities.resize(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (int idx : survivors[i]) {
            out.multiplicities[i].push_back(value_at(x, x_surv, i, idx) +
                                            value_at(y, y_surv, i, idx));
        }
    }
    return out;
}

}  // namespace projgenus
