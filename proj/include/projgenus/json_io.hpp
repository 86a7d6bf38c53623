#pragma once

/**
 * @file json_io.hpp
 * @brief On-disk JSON formats for profiles, order specs, genus vectors,
 *        traces and result documents.
 *
 * Profile documents:
 *   {"k": int, "blocks": [{"label": str, "ranks": [int],
 *    "multiplicities": [int]}], "bounds": {"coordinate": int, "rank": int}?}
 *
 * Order specs: {"p": int, "k": int, "parts": [[r, m], ...]}.
 *
 * Integers are accepted as JSON numbers or as decimal strings (for values
 * beyond 64 bits) and emitted as numbers when they fit.  inf is the string
 * "inf".  Matrices are row-major integer arrays; rationals are "num/den"
 * strings.
 */

#include "projgenus/bigmonoid.hpp"
#include "projgenus/decomp.hpp"
#include "projgenus/order.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace projgenus {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------------

inline Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

inline Int int_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
        }
    }
    throw std::invalid_argument(std::string(what) + ": expected an integer");
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

struct ProfileDocument {
    AlgebraProfile profile;
    std::optional<SearchBounds> bounds;
};

inline Json to_json(const AlgebraProfile& p) {
    Json blocks = Json::array();
    for (const Block& b : p.blocks) {
        Json ranks = Json::array();
        Json mults = Json::array();
        for (const Int& r : b.ranks) ranks.push_back(int_to_json(r));
        for (const Int& m : b.multiplicities) mults.push_back(int_to_json(m));
        blocks.push_back({{"label", b.label},
                          {"ranks", std::move(ranks)},
                          {"multiplicities", std::move(mults)}});
    }
    return Json{{"k", int_to_json(p.k)}, {"blocks", std::move(blocks)}};
}

/// Parses and validates a profile document.
inline ProfileDocument profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("blocks")) {
        throw std::invalid_argument("profile: expected {\"k\":..., \"blocks\":[...]}");
    }
    AlgebraProfile p;
    p.k = int_from_json(j.at("k"), "profile.k");
    for (const Json& jb : j.at("blocks")) {
        Block b;
        b.label = jb.value("label", "");
        if (b.label.empty()) {
            throw std::invalid_argument("profile block: missing label");
        }
        for (const Json& r : jb.at("ranks")) {
            b.ranks.push_back(int_from_json(r, "profile ranks"));
        }
        for (const Json& m : jb.at("multiplicities")) {
            b.multiplicities.push_back(int_from_json(m, "profile multiplicities"));
        }
        p.blocks.push_back(std::move(b));
    }
    ProfileDocument doc;
    doc.profile = validate(std::move(p));
    if (j.contains("bounds")) {
        const Json& jb = j.at("bounds");
        SearchBounds b = default_bounds(doc.profile);
        if (jb.contains("coordinate")) {
            b.coordinate = int_from_json(jb.at("coordinate"), "bounds.coordinate");
        }
        if (jb.contains("rank")) {
            b.rank = int_from_json(jb.at("rank"), "bounds.rank");
        }
        doc.bounds = b;
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Order specs
// ---------------------------------------------------------------------------

inline Json to_json(const OrderSpec& spec) {
    Json parts = Json::array();
    for (const auto& [r, m] : spec.parts) {
        parts.push_back(Json::array({int_to_json(r), int_to_json(m)}));
    }
    return Json{{"p", int_to_json(spec.p)},
                {"k", int_to_json(spec.k)},
                {"parts", std::move(parts)}};
}

inline OrderSpec order_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("k") ||
        !j.contains("parts")) {
        throw std::invalid_argument(
            "order spec: expected {\"p\":..., \"k\":..., \"parts\":[[r,m],...]}");
    }
    OrderSpec spec;
    spec.p = int_from_json(j.at("p"), "order.p");
    spec.k = int_from_json(j.at("k"), "order.k");
    for (const Json& part : j.at("parts")) {
        if (!part.is_array() || part.size() != 2) {
            throw std::invalid_argument("order spec: parts must be [r, m] pairs");
        }
        spec.parts.emplace_back(int_from_json(part[0], "order part rank"),
                                int_from_json(part[1], "order part multiplicity"));
    }
    validate_order_spec(spec);
    return spec;
}

// ---------------------------------------------------------------------------
// Genus vectors and traces
// ---------------------------------------------------------------------------

inline Json to_json(const ExtNat& x) {
    if (x.is_inf()) return "inf";
    return int_to_json(x.finite());
}

inline ExtNat extnat_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::inf();
    return ExtNat(int_from_json(j, "extended natural"));
}

inline Json to_json(const GenusVector& v) {
    Json out = Json::array();
    for (const auto& block : v.blocks) {
        Json jb = Json::array();
        for (const ExtNat& x : block) jb.push_back(to_json(x));
        out.push_back(std::move(jb));
    }
    return out;
}

inline GenusVector genus_from_json(const Json& j) {
    GenusVector v;
    for (const Json& jb : j) {
        std::vector<ExtNat> block;
        for (const Json& x : jb) block.push_back(extnat_from_json(x));
        v.blocks.push_back(std::move(block));
    }
    return v;
}

inline Json to_json(const TraceIdeal& t) {
    if (t.is_zero()) return Json{{"zero", true}};
    return Json{{"zero", false}, {"subsets", t.subsets()}};
}

inline Json to_json(const Witness& w) {
    return Json{{"a", to_json(w.a)},
                {"aprime", to_json(w.aprime)},
                {"target", to_json(w.target)}};
}

inline Json to_json(const ResidueSide& s) {
    Json coeffs = Json::array();
    for (const Int& c : s.coeffs) coeffs.push_back(int_to_json(c));
    return Json{{"block", s.block},          {"positions", s.positions},
                {"coeffs", std::move(coeffs)}, {"fixed", int_to_json(s.fixed)},
                {"side_gcd", int_to_json(s.side_gcd)},
                {"residue", int_to_json(s.residue)}};
}

inline Json to_json(const ResidueObstruction& o) {
    return Json{{"kind", "residue"},
                {"modulus", int_to_json(o.modulus)},
                {"lhs", to_json(o.lhs)},
                {"rhs", to_json(o.rhs)}};
}

inline Json to_json(const FgObstruction& o) {
    return Json{{"kind", "gcd"},
                {"tuple", o.tuple},
                {"j", o.j},
                {"b", o.b},
                {"lcm_rest", int_to_json(o.lcm_rest)},
                {"gcd", int_to_json(o.gcd_value)},
                {"target", int_to_json(o.target)}};
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Row-major integer array.
inline Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const Int& v : m.flat()) out.push_back(int_to_json(v));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(out)}};
}

inline Rat rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
}

inline std::string rational_to_string(const Rat& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

// ---------------------------------------------------------------------------
// Result documents
// ---------------------------------------------------------------------------

/// FNV-1a, the digest of the inputs recorded in every result document.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline Json result_document(const std::string& command, const std::string& digest,
                            Json result, std::vector<std::string> verified) {
    return Json{{"command", command},
                {"input_digest", digest},
                {"result", std::move(result)},
                {"verified_invariants", std::move(verified)}};
}

}  // namespace projgenus
