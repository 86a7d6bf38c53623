#pragma once

/**
 * @file diophantine.hpp
 * @brief Minimal non-negative solutions of linear Diophantine systems.
 *
 * The solver is a Contejean-Devie completion: a breadth-first frontier
 * starting from the unit vectors, extending a node t by e_j only when
 * <A t, A e_j> < 0, pruning everything dominated by an already found
 * solution.  For A x = 0 the result is the Hilbert basis of the solution
 * monoid minus the zero vector; inhomogeneous systems are homogenized with
 * one extra column -b and read off at x_0 = 1.
 *
 * Coefficients may be negative.  All arithmetic is exact.
 */

#include "projgenus/extnat.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace projgenus {

/// A x = b with integer entries of either sign.
struct DiophantineSystem {
    std::vector<std::vector<Int>> matrix;  // one row per equation
    std::vector<Int> rhs;

    [[nodiscard]] std::size_t equations() const { return matrix.size(); }

    [[nodiscard]] std::size_t variables() const {
        return matrix.empty() ? 0 : matrix.front().size();
    }

    [[nodiscard]] bool homogeneous() const {
        return std::all_of(rhs.begin(), rhs.end(),
                           [](const Int& v) { return v == 0; });
    }

    void check_consistent() const {
        if (matrix.size() != rhs.size()) {
            throw std::invalid_argument("DiophantineSystem: row/rhs mismatch");
        }
        for (const auto& row : matrix) {
            if (row.size() != variables()) {
                throw std::invalid_argument("DiophantineSystem: ragged matrix");
            }
        }
    }
};

namespace detail {

/// Componentwise a >= b.
inline bool dominates(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
    }
    return true;
}

inline bool dominated_by_any(const std::vector<std::vector<Int>>& mins,
                             const std::vector<Int>& x) {
    for (const auto& m : mins) {
        if (dominates(x, m)) return true;
    }
    return false;
}

/// Hilbert basis (minimal non-zero solutions) of A x = 0.
inline std::vector<std::vector<Int>> contejean_devie(
    const std::vector<std::vector<Int>>& rows, std::size_t n) {
    const std::size_t m = rows.size();

    std::vector<std::vector<Int>> columns(n, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            columns[j][i] = rows[i][j];
        }
    }

    struct Node {
        std::vector<Int> x;
        std::vector<Int> value;  // A x
    };

    std::vector<std::vector<Int>> minimals;
    std::vector<Node> frontier;
    std::set<std::vector<Int>> seen;

    for (std::size_t j = 0; j < n; ++j) {
        Node node;
        node.x.assign(n, 0);
        node.x[j] = 1;
        node.value = columns[j];
        seen.insert(node.x);
        frontier.push_back(std::move(node));
    }

    while (!frontier.empty()) {
        std::vector<Node> next;
        for (Node& node : frontier) {
            if (dominated_by_any(minimals, node.x)) continue;
            if (std::all_of(node.value.begin(), node.value.end(),
                            [](const Int& v) { return v == 0; })) {
                minimals.push_back(node.x);
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                Int inner = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    inner += node.value[i] * columns[j][i];
                }
                if (inner >= 0) continue;
                Node child;
                child.x = node.x;
                child.x[j] += 1;
                if (seen.count(child.x) || dominated_by_any(minimals, child.x)) {
                    continue;
                }
                child.value = node.value;
                for (std::size_t i = 0; i < m; ++i) {
                    child.value[i] += columns[j][i];
                }
                seen.insert(child.x);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    // Breadth-first order already keeps minimals incomparable; the filter
    // stays as a cheap guarantee of the contract.
    std::vector<std::vector<Int>> result;
    for (std::size_t i = 0; i < minimals.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < minimals.size() && keep; ++j) {
            if (i != j && dominates(minimals[i], minimals[j]) &&
                minimals[i] != minimals[j]) {
                keep = false;
            }
        }
        if (keep) result.push_back(minimals[i]);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace detail

/// The complete set of componentwise-minimal non-negative solutions of
/// A x = b, lexicographically sorted.  For b = 0 this is the Hilbert basis
/// of the solution monoid minus the zero vector.  An empty list for b != 0
/// means the system has no non-negative solution at all.
inline std::vector<std::vector<Int>> minimal_solutions(
    const DiophantineSystem& system) {
    system.check_consistent();
    const std::size_t n = system.variables();
    if (system.homogeneous()) {
        return detail::contejean_devie(system.matrix, n);
    }

    // Homogenize: minimal solutions of A x = b are exactly the basis
    // elements of [A | -b] (y, y0) = 0 with y0 = 1.
    std::vector<std::vector<Int>> rows = system.matrix;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].push_back(-system.rhs[i]);
    }
    std::vector<std::vector<Int>> basis = detail::contejean_devie(rows, n + 1);
    std::vector<std::vector<Int>> result;
    for (auto& v : basis) {
        if (v[n] == 1) {
            v.pop_back();
            result.push_back(std::move(v));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// Membership of target in the numerical monoid generated by gens,
/// decided by dynamic programming up to target.
inline bool numerical_monoid_contains(const std::vector<Int>& gens,
                                      const Int& target) {
    if (target < 0) return false;
    if (target == 0) return true;
    for (const Int& g : gens) {
        if (g <= 0) {
            throw std::invalid_argument("numerical_monoid_contains: generators must be positive");
        }
    }
    if (target > std::numeric_limits<std::size_t>::max() / 2) {
        throw std::invalid_argument("numerical_monoid_contains: target too large");
    }
    const auto cap = target.convert_to<std::size_t>();
    std::vector<char> reach(cap + 1, 0);
    reach[0] = 1;
    for (const Int& g : gens) {
        if (g > target) continue;
        const auto step = g.convert_to<std::size_t>();
        for (std::size_t v = step; v <= cap; ++v) {
            if (reach[v - step]) reach[v] = 1;
        }
    }
    return reach[cap] != 0;
}

}  // namespace projgenus
