#include "projgenus/bigmonoid.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

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

using oracle::enumerate_classes;

}  // namespace

TEST_CASE("finite classes add like A", "[bigmonoid]") {
    auto p = coprime_profile();
    BigClass a = fin_class(p, gv("((3,0),(2,0))"));
    BigClass b = fin_class(p, gv("((1,1),(2,0))"));
    BigClass s = add(p, a, b);
    CHECK(s.is_finite());
    CHECK(to_genus(p, s) == gv("((4,1),(4,0))"));
}

TEST_CASE("big plus big unions the traces and restricts", "[bigmonoid]") {
    auto p = coprime_profile();
    BigClass x = big_class(p, TraceIdeal::nonzero({{1}, {1}}), {{1}, {0}});
    BigClass y = big_class(p, TraceIdeal::nonzero({{2}, {2}}), {{0}, {0}});
    BigClass s = add(p, x, y);
    CHECK(s.trace == TraceIdeal::nonzero({{1, 2}, {1, 2}}));
    CHECK(s.multiplicities == std::vector<std::vector<Int>>{{}, {}});
    CHECK(to_genus(p, s) == gv("((inf,inf),(inf,inf))"));
}

TEST_CASE("finite plus big restricts the finite part", "[bigmonoid]") {
    auto p = coprime_profile();
    BigClass fin = fin_class(p, gv("((1,1),(2,0))"));
    BigClass big = big_class(p, TraceIdeal::nonzero({{1}, {1}}), {{0}, {0}});
    BigClass s = add(p, fin, big);
    CHECK(s.trace == TraceIdeal::nonzero({{1}, {1}}));
    CHECK(s.multiplicities == std::vector<std::vector<Int>>{{1}, {0}});
}

TEST_CASE("to_genus", "[bigmonoid]") {
    auto p = coprime_profile();
    CHECK(to_genus(p, big_class(p, TraceIdeal::nonzero({{1}, {1}}), {{1}, {0}})) ==
          gv("((inf,1),(inf,0))"));
    CHECK(to_genus(p, fin_class(p, gv("((3,0),(2,0))"))) == gv("((3,0),(2,0))"));
    CHECK(to_genus(p, big_class(p, full_trace(p), {{}, {}})) ==
          gv("((inf,inf),(inf,inf))"));
}

TEST_CASE("from_genus", "[bigmonoid]") {
    auto p = coprime_profile();
    BigClass c = from_genus(p, gv("((inf,1),(inf,0))"));
    CHECK(c.trace == TraceIdeal::nonzero({{1}, {1}}));
    CHECK(c.multiplicities == std::vector<std::vector<Int>>{{1}, {0}});
    CHECK(from_genus(p, gv("((3,0),(2,0))")).is_finite());
    CHECK_THROWS_AS(from_genus(p, gv("((5,0),(inf,0))")), NotAGenusError);
    CHECK_THROWS_AS(from_genus(p, gv("((1,0),(1,0))")), NotAGenusError);
}

TEST_CASE("class constructors validate", "[bigmonoid]") {
    auto p = coprime_profile();
    CHECK_THROWS_AS(fin_class(p, gv("((1,0),(1,0))")), std::invalid_argument);
    CHECK_THROWS_AS(big_class(p, TraceIdeal::zero(), {}), std::invalid_argument);
    CHECK_THROWS_AS(big_class(p, TraceIdeal::nonzero({{1}, {1}}), {{1, 2}, {0}}),
                    std::invalid_argument);
}

TEST_CASE("to_genus is an additive homomorphism on a bounded sample",
          "[bigmonoid]") {
    auto p = coprime_profile();
    auto classes = enumerate_classes(p, 1);
    for (const auto& x : classes) {
        for (const auto& y : classes) {
            CHECK(to_genus(p, add(p, x, y)) == add(to_genus(p, x), to_genus(p, y)));
        }
    }
}

TEST_CASE("from_genus and to_genus invert each other (entries <= 3)",
          "[bigmonoid]") {
    auto p = coprime_profile();
    for (const auto& c : enumerate_classes(p, 3)) {
        CHECK(from_genus(p, to_genus(p, c)) == c);
    }
    for (const auto& v : oracle::enumerate_genus_box(p, 3, true)) {
        const bool in_a = v.all_finite() && membership_A(p, v).has_value();
        const bool in_b = membership_B(p, v);
        if (!in_a && !in_b) continue;
        CHECK(to_genus(p, from_genus(p, v)) == v);
    }
}

TEST_CASE("the big classes of a fixed trace map onto the matching inf support",
          "[bigmonoid]") {
    auto p = coprime_profile();
    TraceIdeal trace = TraceIdeal::nonzero({{2}, {1}});
    std::set<std::string> image;
    for (const auto& c : enumerate_classes(p, 3)) {
        if (!c.is_finite() && c.trace == trace) {
            image.insert(to_genus(p, c).str());
        }
    }
    std::set<std::string> expected;
    for (const auto& v : oracle::enumerate_genus_box(p, 3, true)) {
        if (membership_B(p, v) && inf_support(v) == trace.subsets()) {
            expected.insert(v.str());
        }
    }
    CHECK(image == expected);
}
