#include "projgenus/genus.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace projgenus;

namespace {

AlgebraProfile coprime_profile() {
    return validate({12, {{"m1", {2, 4}, {2, 2}}, {"m2", {3, 9}, {1, 1}}}});
}

GenusVector gv(const std::string& text) {
    auto v = parse_genus(text);
    REQUIRE(v.has_value());
    return *v;
}

std::set<std::string> as_strings(const std::vector<AnnotatedGenus>& gens) {
    std::set<std::string> out;
    for (const auto& g : gens) out.insert(g.vec.str() + "_" + g.rank.str());
    return out;
}

std::set<std::string> as_strings(const std::vector<GenusVector>& gens) {
    std::set<std::string> out;
    for (const auto& g : gens) out.insert(g.str());
    return out;
}

// The thirteen generators of A for the coprime sample profile.
const std::set<std::string> kExpectedBasisOfA = {
    "((3,0),(2,0))_6",  "((1,1),(2,0))_6",  "((0,3),(4,0))_12",
    "((6,0),(1,1))_12", "((4,1),(1,1))_12", "((2,2),(1,1))_12",
    "((0,3),(1,1))_12", "((9,0),(0,2))_18", "((7,1),(0,2))_18",
    "((5,2),(0,2))_18", "((3,3),(0,2))_18", "((1,4),(0,2))_18",
    "((0,9),(0,4))_36",
};

// The twelve generators of B.
const std::set<std::string> kExpectedGeneratorsOfB = {
    "((inf,0),(inf,0))", "((inf,0),(0,inf))", "((0,inf),(inf,0))",
    "((0,inf),(0,inf))", "((inf,1),(inf,0))", "((inf,1),(0,inf))",
    "((1,inf),(inf,0))", "((1,inf),(0,inf))", "((inf,0),(inf,1))",
    "((inf,0),(1,inf))", "((0,inf),(inf,1))", "((0,inf),(1,inf))",
};

}  // namespace

TEST_CASE("block ranks", "[genus]") {
    auto p = coprime_profile();
    CHECK(block_ranks(p, gv("((3,0),(2,0))")) ==
          std::vector<ExtNat>{ExtNat(6), ExtNat(6)});
    CHECK(block_ranks(p, gv("((1,0),(1,0))")) ==
          std::vector<ExtNat>{ExtNat(2), ExtNat(3)});
    CHECK(block_ranks(p, gv("((inf,0),(inf,0))")) ==
          std::vector<ExtNat>{ExtNat::inf(), ExtNat::inf()});
    CHECK_THROWS_AS(block_ranks(p, gv("((1,0))")), std::invalid_argument);
}

TEST_CASE("membership in A", "[genus]") {
    auto p = coprime_profile();
    CHECK(membership_A(p, gv("((1,1),(2,0))")) == Int(6));
    CHECK_FALSE(membership_A(p, gv("((1,0),(1,0))")).has_value());
    CHECK(membership_A(p, gv("((0,0),(0,0))")) == Int(0));
    CHECK_THROWS_AS(membership_A(p, gv("((inf,0),(0,0))")), std::invalid_argument);
}

TEST_CASE("membership in B", "[genus]") {
    auto p = coprime_profile();
    CHECK(membership_B(p, gv("((inf,1),(inf,0))")));
    CHECK_FALSE(membership_B(p, gv("((5,0),(inf,0))")));
    CHECK(membership_B(p, gv("((0,inf),(0,inf))")));
}

TEST_CASE("membership_B iff all block ranks are inf", "[genus]") {
    auto p = coprime_profile();
    for (const auto& v : oracle::enumerate_genus_box(p, 2, true)) {
        const auto ranks = block_ranks(p, v);
        const bool all_inf = std::all_of(ranks.begin(), ranks.end(),
                                         [](const ExtNat& r) { return r.is_inf(); });
        CHECK(membership_B(p, v) == all_inf);
    }
}

TEST_CASE("rank monoid", "[genus]") {
    auto p = coprime_profile();
    CHECK(rank_monoid_contains(p, 6));
    CHECK_FALSE(rank_monoid_contains(p, 8));
    CHECK(rank_monoid_contains(p, 0));
    // The image of the rank map is exactly 6 N0.
    for (Int r = 0; r <= 60; ++r) {
        CHECK(rank_monoid_contains(p, r) == (r % 6 == 0));
    }
}

TEST_CASE("rank monoid closure under addition", "[genus]") {
    auto p = validate({10, {{"m1", {2, 3}, {2, 2}}, {"m2", {5, 5}, {1, 1}}}});
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        Int r1 = pick(rng), r2 = pick(rng);
        if (rank_monoid_contains(p, r1) && rank_monoid_contains(p, r2)) {
            CHECK(rank_monoid_contains(p, r1 + r2));
        }
    }
}

TEST_CASE("hilbert basis of the coprime sample profile", "[genus]") {
    auto basis = hilbert_basis_A(coprime_profile());
    CHECK(basis.size() == 13);
    CHECK(as_strings(basis) == kExpectedBasisOfA);
}

TEST_CASE("hilbert basis of a single block is free", "[genus]") {
    auto p = validate({8, {{"m1", {2, 4}, {2, 1}}}});
    auto basis = hilbert_basis_A(p);
    REQUIRE(basis.size() == 2);
    CHECK(as_strings(basis) == std::set<std::string>{"((1,0))_2", "((0,1))_4"});
}

TEST_CASE("hilbert basis for t=(1,1) is the diagonal", "[genus]") {
    auto p = validate({1, {{"m1", {1}, {1}}, {"m2", {1}, {1}}}});
    auto basis = hilbert_basis_A(p);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].vec == gv("((1),(1))"));
    CHECK(basis[0].rank == 1);
}

TEST_CASE("basis elements are members and minimal", "[genus]") {
    auto p = coprime_profile();
    auto basis = hilbert_basis_A(p);
    for (const auto& g : basis) {
        auto r = membership_A(p, g.vec);
        REQUIRE(r.has_value());
        CHECK(*r == g.rank);
    }
    // No basis element is a sum of two non-zero members of A.
    for (const auto& g : basis) {
        std::vector<int> caps;
        for (const auto& block : g.vec.blocks) {
            for (const auto& x : block) caps.push_back(x.finite().convert_to<int>());
        }
        // Enumerate a <= g componentwise.
        std::vector<int> a(caps.size(), 0);
        bool found_split = false;
        while (true) {
            GenusVector va, vb;
            std::size_t c = 0;
            bool a_zero = true, b_zero = true;
            va.blocks.resize(g.vec.blocks.size());
            vb.blocks.resize(g.vec.blocks.size());
            for (std::size_t i = 0; i < g.vec.blocks.size(); ++i) {
                for (std::size_t j = 0; j < g.vec.blocks[i].size(); ++j, ++c) {
                    va.blocks[i].push_back(ExtNat(a[c]));
                    vb.blocks[i].push_back(ExtNat(caps[c] - a[c]));
                    if (a[c] != 0) a_zero = false;
                    if (caps[c] - a[c] != 0) b_zero = false;
                }
            }
            if (!a_zero && !b_zero && membership_A(p, va) && membership_A(p, vb)) {
                found_split = true;
                break;
            }
            std::size_t j = 0;
            for (; j < a.size(); ++j) {
                if (a[j] < caps[j]) {
                    ++a[j];
                    break;
                }
                a[j] = 0;
            }
            if (j == a.size()) break;
        }
        CHECK_FALSE(found_split);
    }
}

TEST_CASE("desk-scale completeness of the basis", "[genus]") {
    auto p = coprime_profile();
    auto basis = hilbert_basis_A(p);
    std::vector<GenusVector> gens;
    for (const auto& g : basis) gens.push_back(g.vec);
    for (const auto& v : oracle::enumerate_genus_box(p, 12, false)) {
        if (!membership_A(p, v)) continue;
        CHECK(oracle::reachable_by_sums(gens, v));
    }
}

TEST_CASE("big generators of the coprime sample profile", "[genus]") {
    auto gens = big_generators(coprime_profile());
    CHECK(gens.size() == 12);
    CHECK(as_strings(gens) == kExpectedGeneratorsOfB);
}

TEST_CASE("big generators depend only on the type counts", "[genus]") {
    auto other = validate({12, {{"m1", {2, 8}, {2, 1}}, {"m2", {2, 4}, {4, 1}}}});
    CHECK(big_generators(other) == big_generators(coprime_profile()));
}

TEST_CASE("big generator count formula", "[genus]") {
    // prod t_i * (1 + sum (t_j - 1))
    auto p = validate({6, {{"m1", {1, 2, 3}, {1, 1, 1}},
                           {"m2", {2, 4}, {1, 1}}}});
    CHECK(big_generators(p).size() == 6 * (1 + 2 + 1));
    auto q = validate({1, {{"m1", {1}, {1}}, {"m2", {1}, {1}}}});
    auto single = big_generators(q);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == gv("((inf),(inf))"));
}

TEST_CASE("big generators generate B at desk scale", "[genus]") {
    auto p = coprime_profile();
    auto gens = big_generators(p);
    for (const auto& g : gens) CHECK(membership_B(p, g));
    for (const auto& v : oracle::enumerate_genus_box(p, 4, true)) {
        if (!membership_B(p, v)) continue;
        CHECK(oracle::reachable_by_sums(gens, v));
    }
}

TEST_CASE("removing any big generator breaks generation", "[genus]") {
    auto p = coprime_profile();
    auto gens = big_generators(p);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::vector<GenusVector> rest;
        for (std::size_t h = 0; h < gens.size(); ++h) {
            if (h != g) rest.push_back(gens[h]);
        }
        CHECK_FALSE(oracle::reachable_by_sums(rest, gens[g]));
    }
}

TEST_CASE("no big generator splits into two other members of B", "[genus]") {
    auto p = coprime_profile();
    auto gens = big_generators(p);
    auto box = oracle::enumerate_genus_box(p, 1, true);
    std::vector<GenusVector> members;
    for (const auto& v : box) {
        if (membership_B(p, v)) members.push_back(v);
    }
    for (const auto& g : gens) {
        for (const auto& x : members) {
            if (x == g) continue;
            for (const auto& y : members) {
                if (y == g) continue;
                CHECK_FALSE(add(x, y) == g);
            }
        }
    }
}

TEST_CASE("preconditions", "[genus]") {
    AlgebraProfile empty = validate({5, {}});
    CHECK_THROWS_AS(hilbert_basis_A(empty), std::invalid_argument);
    CHECK_THROWS_AS(big_generators(empty), std::invalid_argument);
    auto one = validate({8, {{"m1", {2, 4}, {2, 1}}}});
    CHECK_THROWS_AS(big_generators(one), std::invalid_argument);
    CHECK(rank_monoid_contains(empty, 17));
}

TEST_CASE("genus text format round trips", "[genus]") {
    for (const std::string& text :
         {"((3,0),(2,0))", "((inf,1),(inf,0))", "((0))", "((1,2,3),(4,5))"}) {
        CHECK(gv(text).str() == text);
    }
    CHECK_FALSE(parse_genus("((1,2)").has_value());
    CHECK_FALSE(parse_genus("(1,2)").has_value());
    CHECK_FALSE(parse_genus("((1,x))").has_value());
    CHECK_FALSE(parse_genus("((1),(2)) trailing").has_value());
    CHECK(parse_genus("( ( inf, 1 ), ( 2, 0 ) )").has_value());
}

TEST_CASE("the genus parser never accepts something it cannot print back",
          "[genus]") {
    const std::string alphabet = "((((,,))infinf0123 x";
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    for (int trial = 0; trial < 5000; ++trial) {
        std::string s;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
        auto v = parse_genus(s);
        if (v) {
            auto again = parse_genus(v->str());
            REQUIRE(again.has_value());
            CHECK(*again == *v);
        }
    }
}
