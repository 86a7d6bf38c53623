#include "projgenus/extnat.hpp"

#include <catch2/catch_amalgamated.hpp>

using projgenus::ExtNat;
using projgenus::Int;

TEST_CASE("addition", "[extnat]") {
    CHECK(ExtNat(3) + ExtNat(4) == ExtNat(7));
    CHECK(ExtNat(5) + ExtNat::inf() == ExtNat::inf());
    CHECK(ExtNat::inf() + ExtNat(5) == ExtNat::inf());
    CHECK(ExtNat(0) + ExtNat(0) == ExtNat(0));
    CHECK(ExtNat::inf() + ExtNat::inf() == ExtNat::inf());
}

TEST_CASE("multiplication", "[extnat]") {
    CHECK(ExtNat(2) * ExtNat(3) == ExtNat(6));
    CHECK(ExtNat(0) * ExtNat::inf() == ExtNat(0));
    CHECK(ExtNat::inf() * ExtNat(0) == ExtNat(0));
    CHECK(ExtNat(7) * ExtNat::inf() == ExtNat::inf());
    CHECK(ExtNat::inf() * ExtNat(7) == ExtNat::inf());
    CHECK(ExtNat::inf() * ExtNat::inf() == ExtNat::inf());
}

TEST_CASE("dot products", "[extnat]") {
    using projgenus::dot;
    CHECK(dot({2, 4}, {ExtNat(3), ExtNat(0)}) == ExtNat(6));
    CHECK(dot({2, 4}, {ExtNat(1), ExtNat::inf()}) == ExtNat::inf());
    CHECK(dot({3, 9}, {ExtNat(0), ExtNat(0)}) == ExtNat(0));
    CHECK(dot({}, {}) == ExtNat(0));
    CHECK_THROWS_AS(dot({1, 2}, {ExtNat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(dot({0}, {ExtNat(1)}), std::invalid_argument);
}

TEST_CASE("no negative values, one representation of inf", "[extnat]") {
    CHECK_THROWS_AS(ExtNat(Int(-1)), std::invalid_argument);
    CHECK(ExtNat::inf() == ExtNat::inf());
    CHECK_FALSE(ExtNat(1000000) == ExtNat::inf());
    CHECK_THROWS_AS(ExtNat::inf().finite(), std::logic_error);
}

TEST_CASE("total order with inf greatest", "[extnat]") {
    CHECK(ExtNat(0) < ExtNat(1));
    CHECK(ExtNat(999) < ExtNat::inf());
    CHECK_FALSE(ExtNat::inf() < ExtNat::inf());
    CHECK(ExtNat::inf() > ExtNat(Int("123456789012345678901234567890")));
}

TEST_CASE("serialization round trip", "[extnat]") {
    CHECK(ExtNat::inf().str() == "inf");
    CHECK(ExtNat(42).str() == "42");
    CHECK(ExtNat::parse("inf") == ExtNat::inf());
    CHECK(ExtNat::parse("17") == ExtNat(17));
    CHECK_FALSE(ExtNat::parse("").has_value());
    CHECK_FALSE(ExtNat::parse("-3").has_value());
    CHECK_FALSE(ExtNat::parse("3x").has_value());
}

namespace {

std::vector<ExtNat> small_domain() {
    std::vector<ExtNat> xs;
    for (int i = 0; i <= 20; ++i) xs.emplace_back(i);
    xs.push_back(ExtNat::inf());
    return xs;
}

}  // namespace

TEST_CASE("commutative monoid and distributivity on {0..20, inf}", "[extnat]") {
    const auto xs = small_domain();
    for (const ExtNat& a : xs) {
        CHECK(a + ExtNat(0) == a);
        for (const ExtNat& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const ExtNat& c : xs) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
}

TEST_CASE("dot is finite iff the vector is finite on the support", "[extnat]") {
    // With all-positive coefficients the support is every position.
    const auto xs = small_domain();
    for (const ExtNat& a : xs) {
        for (const ExtNat& b : xs) {
            const ExtNat d = projgenus::dot({3, 5}, {a, b});
            CHECK(d.is_finite() == (a.is_finite() && b.is_finite()));
        }
    }
}
