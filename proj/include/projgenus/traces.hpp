#pragma once

/**
 * @file traces.hpp
 * @brief The finite lattice of trace ideals of countably generated
 *        projectives, in its combinatorial form.
 *
 * A non-zero trace ideal corresponds to one non-empty subset A_i of
 * {1..t_i} per block; the zero ideal stands alone.  Addition of traces is
 * componentwise union with Zero neutral, the full trace (all A_i complete)
 * is the ring itself, and the quotient by a non-zero trace is semiperfect
 * with surviving indecomposables indexed by the complements C_i.
 */

#include "projgenus/profile.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace projgenus {

/// Zero, or one non-empty sorted subset of {1..t_i} per block (1-based).
class TraceIdeal {
public:
    static TraceIdeal zero() { return TraceIdeal{}; }

    static TraceIdeal nonzero(std::vector<std::vector<int>> subsets) {
        TraceIdeal t;
        t.zero_ = false;
        t.subsets_ = std::move(subsets);
        for (auto& s : t.subsets_) {
            if (s.empty()) {
                throw std::invalid_argument("TraceIdeal: empty block subset");
            }
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        return t;
    }

    [[nodiscard]] bool is_zero() const { return zero_; }

    [[nodiscard]] const std::vector<std::vector<int>>& subsets() const {
        if (zero_) {
            throw std::logic_error("TraceIdeal: subsets() on the zero trace");
        }
        return subsets_;
    }

    bool operator==(const TraceIdeal&) const = default;
    auto operator<=>(const TraceIdeal&) const = default;

    [[nodiscard]] std::string str() const {
        if (zero_) return "0";
        std::string out = "(";
        for (std::size_t i = 0; i < subsets_.size(); ++i) {
            if (i) out += ",";
            out += "{";
            for (std::size_t j = 0; j < subsets_[i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(subsets_[i][j]);
            }
            out += "}";
        }
        return out + ")";
    }

private:
    bool zero_ = true;
    std::vector<std::vector<int>> subsets_;
};

/// Shape bounds: every subset index within 1..t_i and one subset per block.
inline void check_trace_shape(const AlgebraProfile& p, const TraceIdeal& t) {
    if (t.is_zero()) return;
    if (t.subsets().size() != p.block_count()) {
        throw std::invalid_argument("trace/profile block count mismatch");
    }
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (int idx : t.subsets()[i]) {
            if (idx < 1 || static_cast<std::size_t>(idx) > p.blocks[i].type_count()) {
                throw std::invalid_argument("trace subset index out of range");
            }
        }
    }
}

/// The trace of the ring: every subset complete.
inline TraceIdeal full_trace(const AlgebraProfile& p) {
    std::vector<std::vector<int>> subsets(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (std::size_t j = 1; j <= p.blocks[i].type_count(); ++j) {
            subsets[i].push_back(static_cast<int>(j));
        }
    }
    return TraceIdeal::nonzero(std::move(subsets));
}

/// Componentwise inclusion a <= b (Zero below everything).
inline bool trace_contained(const TraceIdeal& a, const TraceIdeal& b) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    if (a.subsets().size() != b.subsets().size()) {
        throw std::invalid_argument("trace_contained: block count mismatch");
    }
    for (std::size_t i = 0; i < a.subsets().size(); ++i) {
        if (!std::includes(b.subsets()[i].begin(), b.subsets()[i].end(),
                           a.subsets()[i].begin(), a.subsets()[i].end())) {
            return false;
        }
    }
    return true;
}

/// Sum of trace ideals: Zero is neutral, otherwise componentwise union.
inline TraceIdeal sum(const TraceIdeal& a, const TraceIdeal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.subsets().size() != b.subsets().size()) {
        throw std::invalid_argument("trace sum: block count mismatch");
    }
    std::vector<std::vector<int>> subsets(a.subsets().size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::set_union(a.subsets()[i].begin(), a.subsets()[i].end(),
                       b.subsets()[i].begin(), b.subsets()[i].end(),
                       std::back_inserter(subsets[i]));
    }
    return TraceIdeal::nonzero(std::move(subsets));
}

namespace detail {

/// Non-empty subsets of {1..t} in lexicographic order of their sorted
/// index vectors: {1}, {1,2}, ..., {1,..,t}, {2}, ...
inline std::vector<std::vector<int>> nonempty_subsets_lex(std::size_t t) {
    std::vector<std::vector<int>> all;
    for (unsigned long mask = 1; mask < (1UL << t); ++mask) {
        std::vector<int> s;
        for (std::size_t j = 0; j < t; ++j) {
            if (mask & (1UL << j)) s.push_back(static_cast<int>(j + 1));
        }
        all.push_back(std::move(s));
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace detail

/// All of T(Lambda): Zero first, then every product of non-empty per-block
/// subsets, blocks odometer-ordered with the first block most significant.
/// Requires l >= 1.
inline std::vector<TraceIdeal> enumerate_traces(const AlgebraProfile& p) {
    if (p.block_count() == 0) {
        throw std::invalid_argument("enumerate_traces: profile has no blocks");
    }
    std::vector<std::vector<std::vector<int>>> lists;
    for (const Block& b : p.blocks) {
        lists.push_back(detail::nonempty_subsets_lex(b.type_count()));
    }
    std::vector<TraceIdeal> out;
    out.push_back(TraceIdeal::zero());
    std::vector<std::size_t> pos(p.block_count(), 0);
    while (true) {
        std::vector<std::vector<int>> subsets;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            subsets.push_back(lists[i][pos[i]]);
        }
        out.push_back(TraceIdeal::nonzero(std::move(subsets)));
        std::size_t i = pos.size();
        while (i > 0) {
            --i;
            if (++pos[i] < lists[i].size()) break;
            pos[i] = 0;
            if (i == 0) return out;
        }
    }
}

/// The minimal non-zero traces: all per-block singletons, the traces of the
/// finite powers of a single indecomposable at every block.
inline std::vector<TraceIdeal> minimal_traces(const AlgebraProfile& p) {
    if (p.block_count() == 0) {
        throw std::invalid_argument("minimal_traces: profile has no blocks");
    }
    std::vector<TraceIdeal> out;
    std::vector<int> pick(p.block_count(), 1);
    while (true) {
        std::vector<std::vector<int>> subsets;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            subsets.push_back({pick[i]});
        }
        out.push_back(TraceIdeal::nonzero(std::move(subsets)));
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (static_cast<std::size_t>(++pick[i]) <= p.blocks[i].type_count()) break;
            pick[i] = 1;
            if (i == 0) return out;
        }
    }
}

/// Surviving indecomposables of the semiperfect quotient by a non-zero
/// trace: C_i = {1..t_i} minus A_i per block.  All C_i empty means the
/// quotient is the zero ring.
struct QuotientShape {
    std::vector<std::vector<int>> survivors;  // 1-based, sorted

    [[nodiscard]] bool is_zero_ring() const {
        return std::all_of(survivors.begin(), survivors.end(),
                           [](const std::vector<int>& s) { return s.empty(); });
    }
};

inline QuotientShape quotient_profile(const AlgebraProfile& p,
                                      const TraceIdeal& trace) {
    if (trace.is_zero()) {
        throw std::invalid_argument("quotient_profile: trace must be non-zero");
    }
    check_trace_shape(p, trace);
    QuotientShape q;
    q.survivors.resize(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        const auto& a = trace.subsets()[i];
        for (std::size_t j = 1; j <= p.blocks[i].type_count(); ++j) {
            if (!std::binary_search(a.begin(), a.end(), static_cast<int>(j))) {
                q.survivors[i].push_back(static_cast<int>(j));
            }
        }
    }
    return q;
}

}  // namespace projgenus
