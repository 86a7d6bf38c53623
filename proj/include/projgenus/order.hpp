#pragma once

/**
 * @file order.hpp
 * @brief The explicit semiperfect Z_(p)-orders in M_k(Q) built from a
 *        partition of {1..k} and order-preserving bijections, with exact
 *        verification of their structural identities.
 *
 * For parts (r_1,m_1)..(r_t,m_t) with sum m_i r_i = k, the construction
 * partitions {1..k} into contiguous blocks A_{i,a} of size r_i and forms
 * the 0/1 matrices e_{i,a,b} = sum_{j in A_{i,a}} E_{f_{i,a,b}(j), j} for
 * the order-preserving bijections f_{i,a,b}: A_{i,a} -> A_{i,b}.  The order
 * is Lambda = M_k(p Z_(p)) + sum e_{i,a,b} Z_(p); modulo p its image is the
 * span of the reduced generators and is isomorphic to prod_i M_{m_i}(F_p)
 * under e_{i,a,b} -> E_{b,a} in factor i.
 *
 * Z_(p) elements are exact rationals whose denominators are checked to be
 * coprime to p; every verification happens after reduction mod p, so no
 * p-adic machinery is involved.
 */

#include "projgenus/profile.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace projgenus {

using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Dense exact integer matrices
// ---------------------------------------------------------------------------

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] const Int& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] const std::vector<Int>& flat() const { return data_; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        }
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Int& v = a.at(i, l);
                if (v == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out.at(i, j) += v * b.at(l, j);
                }
            }
        }
        return out;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
        }
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) {
            out.data_[i] += b.data_[i];
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](const Int& v) { return v == 0; });
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// ---------------------------------------------------------------------------
// Order specification and construction
// ---------------------------------------------------------------------------

struct OrderSpec {
    Int p;                                   // prime
    Int k;                                   // matrix size
    std::vector<std::pair<Int, Int>> parts;  // (rank r_i, multiplicity m_i)
};

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline void validate_order_spec(const OrderSpec& spec) {
    if (!is_prime(spec.p)) {
        throw std::invalid_argument("OrderSpec: p must be prime");
    }
    if (spec.parts.empty()) {
        throw std::invalid_argument("OrderSpec: at least one part required");
    }
    Int sum = 0;
    for (const auto& [r, m] : spec.parts) {
        if (r <= 0 || m <= 0) {
            throw std::invalid_argument("OrderSpec: parts must be positive");
        }
        sum += r * m;
    }
    if (sum != spec.k) {
        throw std::invalid_argument("OrderSpec: sum m_i r_i = " + sum.str() +
                                    " does not equal k = " + spec.k.str());
    }
    if (spec.k > 1 << 12) {
        throw std::invalid_argument("OrderSpec: k too large for dense matrices");
    }
}

/// The partition of {1..k} and the generator matrices e_{i,a,b}.
struct IdempotentSet {
    OrderSpec spec;

    struct Generator {
        int part = 0;  // i, 1-based
        int a = 0;     // source copy, 1-based
        int b = 0;     // target copy, 1-based
        IntMatrix matrix;
    };

    std::vector<std::vector<int>> partition_start;  // [i][a] 0-based offset
    std::vector<Generator> generators;

    [[nodiscard]] std::size_t dimension() const {
        return spec.k.convert_to<std::size_t>();
    }

    /// Indices of A_{i,a}, 1-based ascending.
    [[nodiscard]] std::vector<int> part_indices(int i, int a) const {
        const auto r = spec.parts[static_cast<std::size_t>(i) - 1]
                           .first.convert_to<int>();
        std::vector<int> out;
        const int start = partition_start[static_cast<std::size_t>(i) - 1]
                                         [static_cast<std::size_t>(a) - 1];
        for (int s = 0; s < r; ++s) out.push_back(start + s + 1);
        return out;
    }

    [[nodiscard]] const IntMatrix& matrix(int i, int a, int b) const {
        for (const Generator& g : generators) {
            if (g.part == i && g.a == a && g.b == b) return g.matrix;
        }
        throw std::out_of_range("IdempotentSet: no such generator");
    }
};

/// Builds the contiguous ascending partition (A_{1,1} = {1..r_1}, then the
/// next r_1 indices, ...) and the matrices of the unique order-preserving
/// bijections, which satisfy f_{i,a,a} = id and f_{i,b,c} f_{i,a,b} = f_{i,a,c}.
inline IdempotentSet build(const OrderSpec& spec) {
    validate_order_spec(spec);
    IdempotentSet set;
    set.spec = spec;
    const std::size_t k = set.dimension();

    int offset = 0;
    for (const auto& [r, m] : spec.parts) {
        std::vector<int> starts;
        const int ri = r.convert_to<int>();
        const int mi = m.convert_to<int>();
        for (int a = 0; a < mi; ++a) {
            starts.push_back(offset);
            offset += ri;
        }
        set.partition_start.push_back(std::move(starts));
    }

    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        const int ri = spec.parts[i].first.convert_to<int>();
        const int mi = spec.parts[i].second.convert_to<int>();
        for (int a = 1; a <= mi; ++a) {
            for (int b = 1; b <= mi; ++b) {
                IntMatrix e(k, k);
                const int src = set.partition_start[i][static_cast<std::size_t>(a - 1)];
                const int dst = set.partition_start[i][static_cast<std::size_t>(b - 1)];
                for (int s = 0; s < ri; ++s) {
                    e.at(static_cast<std::size_t>(dst + s),
                         static_cast<std::size_t>(src + s)) = 1;
                }
                set.generators.push_back(
                    {static_cast<int>(i + 1), a, b, std::move(e)});
            }
        }
    }
    return set;
}

// ---------------------------------------------------------------------------
// Exact verification of the defining identities
// ---------------------------------------------------------------------------

struct RelationReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string gen_name(const IdempotentSet::Generator& g) {
    return "e(" + std::to_string(g.part) + "," + std::to_string(g.a) + "," +
           std::to_string(g.b) + ")";
}

}  // namespace detail

/// Exact integer checks of all identities: idempotency of the e_{i,a,a},
/// the composition rule e_{i,b,c} e_{i,a,b} = e_{i,a,c}, the vanishing
/// products across parts or mismatched copies, and sum e_{i,a,a} = I.
inline RelationReport verify_relations(const IdempotentSet& set) {
    RelationReport report;
    const auto& gens = set.generators;
    for (const auto& x : gens) {
        for (const auto& y : gens) {
            IntMatrix prod = x.matrix * y.matrix;
            ++report.checks;
            if (x.part == y.part && y.b == x.a) {
                // x = e(i,a,b), y = e(i,c,a): expect e(i,c,b).
                const IntMatrix& expected = set.matrix(x.part, y.a, x.b);
                if (!(prod == expected)) {
                    const char* kind =
                        (x.a == x.b && y.a == y.b) ? "idempotency" : "composition";
                    report.violations.push_back(
                        std::string(kind) + ": " + detail::gen_name(x) + " * " +
                        detail::gen_name(y) + " != e(" + std::to_string(x.part) +
                        "," + std::to_string(y.a) + "," + std::to_string(x.b) + ")");
                }
            } else if (!prod.is_zero()) {
                report.violations.push_back("vanishing: " + detail::gen_name(x) +
                                            " * " + detail::gen_name(y) + " != 0");
            }
        }
    }

    IntMatrix diag_sum(set.dimension(), set.dimension());
    for (const auto& g : gens) {
        if (g.a == g.b) diag_sum = diag_sum + g.matrix;
    }
    ++report.checks;
    if (!(diag_sum == IntMatrix::identity(set.dimension()))) {
        report.violations.push_back("identity-sum: sum of e(i,a,a) != I");
    }
    return report;
}

/// The subset of verify_relations checks that touch one generator: every
/// product with it on either side, plus the identity-sum.  A failure here
/// implies verify_relations fails too; mutation screens use it before
/// falling back to the full sweep.
inline bool relations_involving_ok(const IdempotentSet& set,
                                   std::size_t generator_index) {
    const auto& gens = set.generators;
    auto pair_ok = [&](const IdempotentSet::Generator& x,
                       const IdempotentSet::Generator& y) {
        IntMatrix prod = x.matrix * y.matrix;
        if (x.part == y.part && y.b == x.a) {
            return prod == set.matrix(x.part, y.a, x.b);
        }
        return prod.is_zero();
    };
    const auto& g = gens.at(generator_index);
    for (const auto& other : gens) {
        if (!pair_ok(g, other) || !pair_ok(other, g)) return false;
    }
    IntMatrix diag_sum(set.dimension(), set.dimension());
    for (const auto& other : gens) {
        if (other.a == other.b) diag_sum = diag_sum + other.matrix;
    }
    return diag_sum == IntMatrix::identity(set.dimension());
}

// ---------------------------------------------------------------------------
// F_p linear algebra on the residue algebra
// ---------------------------------------------------------------------------

namespace detail {

inline Int mod_norm(const Int& v, const Int& p) { return ((v % p) + p) % p; }

inline Int mod_inverse(const Int& a, const Int& p) {
    Int t0 = 0, t1 = 1, r0 = p, r1 = mod_norm(a, p);
    while (r1 != 0) {
        Int q = r0 / r1;
        Int t = t0 - q * t1;
        t0 = t1;
        t1 = t;
        Int r = r0 % r1;
        r0 = r1;
        r1 = r;
    }
    if (r0 != 1) {
        throw std::invalid_argument("mod_inverse: not invertible");
    }
    return mod_norm(t0, p);
}

/// Row-echelon basis over F_p with pivot columns, supporting membership and
/// coordinate queries against the original generator list.
class FpSpan {
public:
    FpSpan(std::vector<std::vector<Int>> generators, Int p)
        : p_(std::move(p)), generators_(std::move(generators)) {
        for (std::size_t g = 0; g < generators_.size(); ++g) {
            for (Int& v : generators_[g]) v = mod_norm(v, p_);
            insert(generators_[g]);
        }
    }

    [[nodiscard]] std::size_t dimension() const { return rows_.size(); }

    /// Coordinates of v in terms of the generators, if v lies in the span.
    /// Solves x^T G = v by elimination over the echelon rows, tracking the
    /// generator combination that produced each row.
    [[nodiscard]] std::optional<std::vector<Int>> coordinates(
        std::vector<Int> v) const {
        for (Int& x : v) x = mod_norm(x, p_);
        std::vector<Int> combo(generators_.size(), 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Int c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) {
                v[j] = mod_norm(v[j] - c * rows_[r][j], p_);
            }
            for (std::size_t g = 0; g < combo.size(); ++g) {
                combo[g] = mod_norm(combo[g] + c * row_combo_[r][g], p_);
            }
        }
        if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) {
            return std::nullopt;
        }
        return combo;
    }

    [[nodiscard]] bool contains(std::vector<Int> v) const {
        return coordinates(std::move(v)).has_value();
    }

private:
    void insert(const std::vector<Int>& gen) {
        std::vector<Int> v = gen;
        std::vector<Int> combo(generators_.size(), 0);
        combo[inserted_] = 1;
        ++inserted_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Int c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) {
                v[j] = mod_norm(v[j] - c * rows_[r][j], p_);
            }
            for (std::size_t g = 0; g < combo.size(); ++g) {
                combo[g] = mod_norm(combo[g] - c * row_combo_[r][g], p_);
            }
        }
        std::size_t pivot = v.size();
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == v.size()) return;  // dependent
        const Int inv = mod_inverse(v[pivot], p_);
        for (Int& x : v) x = mod_norm(x * inv, p_);
        for (Int& x : combo) x = mod_norm(x * inv, p_);
        rows_.push_back(std::move(v));
        row_combo_.push_back(std::move(combo));
        pivots_.push_back(pivot);
    }

    Int p_;
    std::vector<std::vector<Int>> generators_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::vector<Int>> row_combo_;
    std::vector<std::size_t> pivots_;
    std::size_t inserted_ = 0;
};

inline std::vector<Int> flat_mod(const IntMatrix& m, const Int& p) {
    std::vector<Int> out;
    out.reserve(m.flat().size());
    for (const Int& v : m.flat()) out.push_back(mod_norm(v, p));
    return out;
}

}  // namespace detail

struct ResidueReport {
    std::size_t span_dimension = 0;
    std::size_t expected_dimension = 0;
    std::vector<Int> factor_sizes;  // m_i of the matrix-ring factors
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const {
        return violations.empty() && span_dimension == expected_dimension;
    }
};

/// Certifies the residue algebra: the span of the reduced generators has
/// dimension sum m_i^2, its multiplication table is the one of
/// prod_i M_{m_i}(F_p) under e_{i,a,b} -> E_{b,a} in factor i, and
/// e_{i,a,a} Lambda e_{j,b,b} vanishes mod p across parts i != j.
inline ResidueReport residue_structure_check(const IdempotentSet& set,
                                             const Int& p) {
    if (p != set.spec.p) {
        throw std::invalid_argument("residue_structure_check: p differs from the spec");
    }
    ResidueReport report;
    for (const auto& [r, m] : set.spec.parts) {
        report.factor_sizes.push_back(m);
        report.expected_dimension += (m * m).convert_to<std::size_t>();
    }

    std::vector<std::vector<Int>> flats;
    for (const auto& g : set.generators) {
        flats.push_back(detail::flat_mod(g.matrix, p));
    }
    detail::FpSpan span(flats, p);
    report.span_dimension = span.dimension();
    if (report.span_dimension != report.expected_dimension) {
        report.violations.push_back(
            "span dimension " + std::to_string(report.span_dimension) +
            " != sum m_i^2 = " + std::to_string(report.expected_dimension));
    }

    const auto& gens = set.generators;
    auto gen_index = [&](int part, int a, int b) -> std::size_t {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].part == part && gens[g].a == a && gens[g].b == b) return g;
        }
        throw std::out_of_range("residue_structure_check: missing generator");
    };

    // Multiplication table against the matrix units: phi(e(i,a,b)) = E_{b,a}
    // in factor i, so phi(x) phi(y) = [i==j][x.a==y.b] phi(e(i, y.a, x.b)).
    for (const auto& x : gens) {
        for (const auto& y : gens) {
            auto coords = span.coordinates(detail::flat_mod(x.matrix * y.matrix, p));
            if (!coords) {
                report.violations.push_back("product " + detail::gen_name(x) + " * " +
                                            detail::gen_name(y) + " leaves the span");
                continue;
            }
            std::vector<Int> expected(gens.size(), 0);
            if (x.part == y.part && y.b == x.a) {
                expected[gen_index(x.part, y.a, x.b)] = 1;
            }
            if (*coords != expected) {
                report.violations.push_back("table: " + detail::gen_name(x) + " * " +
                                            detail::gen_name(y) +
                                            " has wrong span coordinates");
            }
        }
    }

    // Fact (v): e(i,a,a) M e(j,b,b) = 0 mod p for members M and i != j.
    for (const auto& x : gens) {
        if (x.a != x.b) continue;
        for (const auto& y : gens) {
            if (y.a != y.b || y.part == x.part) continue;
            for (const auto& mid : gens) {
                IntMatrix m = x.matrix * mid.matrix * y.matrix;
                bool zero_mod_p = std::all_of(
                    m.flat().begin(), m.flat().end(),
                    [&](const Int& v) { return v % p == 0; });
                if (!zero_mod_p) {
                    report.violations.push_back(
                        "corner: " + detail::gen_name(x) + " * " +
                        detail::gen_name(mid) + " * " + detail::gen_name(y) +
                        " != 0 mod p");
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Membership in Lambda
// ---------------------------------------------------------------------------

class DenominatorDivisibleByP : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Membership of a rational matrix with p-coprime denominators in
/// Lambda = M_k(p Z_(p)) + sum e_{i,a,b} Z_(p): since J reduces to 0, the
/// matrix lies in Lambda iff its reduction mod p lies in the F_p-span of
/// the reduced generators.
inline bool lambda_membership(const std::vector<std::vector<Rat>>& matrix,
                              const IdempotentSet& set, const Int& p) {
    const std::size_t k = set.dimension();
    if (matrix.size() != k) {
        throw std::invalid_argument("lambda_membership: matrix must be k x k");
    }
    std::vector<Int> reduced;
    reduced.reserve(k * k);
    for (const auto& row : matrix) {
        if (row.size() != k) {
            throw std::invalid_argument("lambda_membership: matrix must be k x k");
        }
        for (const Rat& q : row) {
            const Int num = boost::multiprecision::numerator(q);
            const Int den = boost::multiprecision::denominator(q);
            if (den % p == 0) {
                throw DenominatorDivisibleByP("denominator divisible by p: " +
                                              den.str());
            }
            reduced.push_back(detail::mod_norm(
                detail::mod_norm(num, p) * detail::mod_inverse(den, p), p));
        }
    }
    std::vector<std::vector<Int>> flats;
    for (const auto& g : set.generators) {
        flats.push_back(detail::flat_mod(g.matrix, p));
    }
    return detail::FpSpan(flats, p).contains(std::move(reduced));
}

/// Profile block carried by the construction: ranks r_1..r_t and
/// multiplicities m_1..m_t, labelled by the prime.
inline Block order_to_profile_block(const OrderSpec& spec) {
    validate_order_spec(spec);
    Block b;
    b.label = "p" + spec.p.str();
    for (const auto& [r, m] : spec.parts) {
        b.ranks.push_back(r);
        b.multiplicities.push_back(m);
    }
    return b;
}

}  // namespace projgenus
