#pragma once

/**
 * @file cli.hpp
 * @brief Command-line entry point: subcommand dispatch, file loading and
 *        machine-readable output.
 *
 * Exit codes: 0 for success or a positive decision, 1 for a negative
 * mathematical decision (non-membership, decide-fg false, an obstruction),
 * 2 for usage or input errors.  Every embedded witness or obstruction is
 * re-verified before it is emitted, and JSON results list what was checked
 * under "verified_invariants".
 *
 * The environment variable PROJGENUS_BOUND overrides the default search
 * bounds (and the per-file "bounds" object overrides the default derived
 * from the profile).
 */

#include "projgenus/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace projgenus::cli {

namespace detail {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& path) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw InputError("malformed JSON in " + path);
    }
    return j;
}

struct LoadedProfile {
    ProfileDocument doc;
    SearchBounds bounds;
    std::string digest_material;
};

inline LoadedProfile load_profile(const std::string& path) {
    LoadedProfile lp;
    lp.digest_material = read_file(path);
    lp.doc = profile_from_json(parse_json(lp.digest_material, path));
    lp.bounds = lp.doc.bounds.value_or(default_bounds(lp.doc.profile));
    if (const char* env = std::getenv("PROJGENUS_BOUND")) {
        try {
            Int b(env);
            lp.bounds.coordinate = b;
            lp.bounds.rank = b;
        } catch (const std::exception&) {
            throw InputError("PROJGENUS_BOUND is not an integer");
        }
    }
    return lp;
}

inline Int parse_int_arg(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw InputError(std::string(what) + " is not an integer: " + text);
    }
}

inline GenusVector parse_genus_arg(const AlgebraProfile& p,
                                   const std::string& text) {
    auto v = parse_genus(text);
    if (!v) {
        throw InputError("cannot parse genus vector '" + text + "'");
    }
    if (!shape_matches(p, *v)) {
        throw InputError("genus vector shape does not match the profile: " + text);
    }
    return *v;
}

inline std::string annotated_str(const AnnotatedGenus& g) {
    return g.vec.str() + "_" + g.rank.str();
}

inline std::string residue_side_str(const ResidueSide& s, const Int& modulus) {
    std::string out;
    if (s.fixed != 0) out += s.fixed.str();
    for (std::size_t t = 0; t < s.coeffs.size(); ++t) {
        if (!out.empty()) out += " + ";
        out += s.coeffs[t].str() + "*x[" + std::to_string(s.block) + "," +
               std::to_string(s.positions[t]) + "]";
    }
    out += " == " + s.residue.str() + " (mod " + modulus.str() + ")";
    return out;
}

inline std::string fg_obstruction_str(const AlgebraProfile& p,
                                      const FgObstruction& o) {
    std::string tuple = "(";
    std::string ranks = "(";
    for (std::size_t i = 0; i < o.tuple.size(); ++i) {
        if (i) {
            tuple += ",";
            ranks += ",";
        }
        tuple += std::to_string(o.tuple[i]);
        ranks += p.blocks[i].ranks[static_cast<std::size_t>(o.tuple[i]) - 1].str();
    }
    tuple += ")";
    ranks += ")";
    return "choice a = " + tuple + " with ranks " + ranks + ", block j = " +
           std::to_string(o.j) + ", type b = " + std::to_string(o.b) +
           ": gcd(" + o.lcm_rest.str() + ", " +
           p.blocks[static_cast<std::size_t>(o.j) - 1]
               .ranks[static_cast<std::size_t>(o.tuple[o.j - 1]) - 1]
               .str() +
           ") = " + o.gcd_value.str() + " does not divide r[" +
           std::to_string(o.j) + "," + std::to_string(o.b) + "] = " +
           o.target.str();
}

struct Emitter {
    bool json = false;
    std::string command;
    std::string digest;
    std::ostream& out;

    void emit(const Json& result, std::vector<std::string> verified,
              const std::string& human) const {
        if (json) {
            out << result_document(command, digest, result, std::move(verified))
                       .dump(2)
                << "\n";
        } else {
            out << human;
        }
    }
};

// ---------------------------------------------------------------------------
// Subcommand bodies; each returns the process exit code.
// ---------------------------------------------------------------------------

inline int cmd_validate(const Emitter& e, const LoadedProfile& lp) {
    const AlgebraProfile& p = lp.doc.profile;
    std::ostringstream human;
    human << "valid profile: k = " << p.k << ", " << p.block_count()
          << " block(s)\n";
    for (const Block& b : p.blocks) {
        human << "  " << b.label << ": ranks (";
        for (std::size_t j = 0; j < b.ranks.size(); ++j) {
            human << (j ? "," : "") << b.ranks[j];
        }
        human << "), multiplicities (";
        for (std::size_t j = 0; j < b.multiplicities.size(); ++j) {
            human << (j ? "," : "") << b.multiplicities[j];
        }
        human << ")\n";
    }
    human << "degenerate (l <= 1): " << (is_degenerate(p) ? "true" : "false")
          << "\n";
    e.emit(Json{{"valid", true},
                {"profile", to_json(p)},
                {"degenerate", is_degenerate(p)}},
           {"profile-invariants"}, human.str());
    return 0;
}

inline int cmd_rank_monoid(const Emitter& e, const LoadedProfile& lp,
                           const Int& upto) {
    const AlgebraProfile& p = lp.doc.profile;
    std::vector<Int> members;
    for (Int r = 0; r <= upto; ++r) {
        if (rank_monoid_contains(p, r)) members.push_back(r);
    }
    // The reported slice is closed under addition inside the bound.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            Int s = members[i] + members[j];
            if (s <= upto && !rank_monoid_contains(p, s)) {
                throw std::logic_error("rank monoid slice not closed under addition");
            }
        }
    }
    Json jm = Json::array();
    std::ostringstream human;
    human << "rank monoid members up to " << upto << ":";
    for (const Int& r : members) {
        jm.push_back(int_to_json(r));
        human << " " << r;
    }
    human << "\n";
    e.emit(Json{{"upto", int_to_json(upto)}, {"members", std::move(jm)}},
           {"members-closed-under-addition-up-to-bound"}, human.str());
    return 0;
}

inline int cmd_hilbert(const Emitter& e, const LoadedProfile& lp) {
    const AlgebraProfile& p = lp.doc.profile;
    const auto basis = hilbert_basis_A(p);
    Json jgens = Json::array();
    std::ostringstream human;
    human << basis.size() << " generator(s) of the genus monoid A:\n";
    for (const AnnotatedGenus& g : basis) {
        auto r = membership_A(p, g.vec);
        if (!r || *r != g.rank) {
            throw std::logic_error("hilbert basis element failed membership_A");
        }
        jgens.push_back(Json{{"vector", to_json(g.vec)}, {"rank", int_to_json(g.rank)}});
        human << "  " << annotated_str(g) << "\n";
    }
    e.emit(Json{{"generators", std::move(jgens)}},
           {"generators-pass-membership_A"}, human.str());
    return 0;
}

inline int cmd_big_generators(const Emitter& e, const LoadedProfile& lp) {
    const AlgebraProfile& p = lp.doc.profile;
    const auto gens = big_generators(p);
    Json jgens = Json::array();
    std::ostringstream human;
    human << gens.size() << " generator(s) of the big semigroup B:\n";
    for (const GenusVector& g : gens) {
        if (!membership_B(p, g)) {
            throw std::logic_error("big generator failed membership_B");
        }
        jgens.push_back(to_json(g));
        human << "  " << g.str() << "\n";
    }
    e.emit(Json{{"generators", std::move(jgens)}},
           {"generators-pass-membership_B"}, human.str());
    return 0;
}

inline int cmd_traces(const Emitter& e, const LoadedProfile& lp, bool minimal) {
    const AlgebraProfile& p = lp.doc.profile;
    const auto traces = minimal ? minimal_traces(p) : enumerate_traces(p);
    Json jt = Json::array();
    std::ostringstream human;
    human << traces.size() << (minimal ? " minimal" : "")
          << " trace ideal(s):\n";
    for (const TraceIdeal& t : traces) {
        if (!(sum(t, t) == t)) {
            throw std::logic_error("trace sum is not idempotent");
        }
        jt.push_back(to_json(t));
        human << "  " << t.str() << "\n";
    }
    e.emit(Json{{"minimal", minimal}, {"traces", std::move(jt)}},
           {"sum-idempotent"}, human.str());
    return 0;
}

inline int cmd_check(const Emitter& e, const LoadedProfile& lp,
                     const GenusVector& v) {
    const AlgebraProfile& p = lp.doc.profile;
    std::optional<Int> rank;
    bool in_a = false;
    if (v.all_finite()) {
        rank = membership_A(p, v);
        in_a = rank.has_value();
    }
    const bool in_b = membership_B(p, v);
    Json result{{"vector", to_json(v)}, {"in_A", in_a}, {"in_B", in_b}};
    std::ostringstream human;
    human << v.str() << ": ";
    if (in_a) {
        result["rank"] = int_to_json(*rank);
        human << "member of A with rank " << *rank << "\n";
    } else if (in_b) {
        human << "member of B\n";
    } else {
        human << "not a member of A or B\n";
    }
    e.emit(result, {}, human.str());
    return (in_a || in_b) ? 0 : 1;
}

inline int cmd_decompose(const Emitter& e, const LoadedProfile& lp,
                         const GenusVector& v) {
    const AlgebraProfile& p = lp.doc.profile;
    DecomposeResult res = decompose_big(p, v);
    if (const Witness* w = std::get_if<Witness>(&res)) {
        if (!verify_witness(p, *w)) {
            throw std::logic_error("emitted witness failed re-verification");
        }
        Int rank_a = *membership_A(p, w->a);
        Int rank_ap = *membership_A(p, w->aprime);
        std::ostringstream human;
        human << v.str() << " decomposes: target = a + inf*a'\n"
              << "  a  = " << w->a.str() << "_" << rank_a << "\n"
              << "  a' = " << w->aprime.str() << "_" << rank_ap << "\n";
        e.emit(Json{{"decomposes", true}, {"witness", to_json(*w)}},
               {"witness-reverified"}, human.str());
        return 0;
    }
    const auto& o = std::get<ResidueObstruction>(res);
    if (!verify_residue_obstruction(p, v, o)) {
        throw std::logic_error("emitted obstruction failed re-verification");
    }
    std::ostringstream human;
    human << v.str()
          << " does not decompose: disjoint rank congruences of blocks "
          << o.lhs.block << " and " << o.rhs.block << "\n"
          << "  " << residue_side_str(o.lhs, o.modulus) << "\n"
          << "  " << residue_side_str(o.rhs, o.modulus) << "\n";
    e.emit(Json{{"decomposes", false}, {"obstruction", to_json(o)}},
           {"obstruction-reverified"}, human.str());
    return 1;
}

inline int cmd_decide_fg(const Emitter& e, const LoadedProfile& lp) {
    const AlgebraProfile& p = lp.doc.profile;
    const auto obstruction = decide_all_fg(p);
    const bool coprime = coprime_criterion(p);
    std::ostringstream human;
    Json result{{"all_fg", !obstruction.has_value()}, {"coprime", coprime}};
    std::vector<std::string> verified;
    if (!obstruction) {
        human << "every projective module is a direct sum of finitely "
                 "generated modules: true\n";
    } else {
        if (!verify_fg_obstruction(p, *obstruction)) {
            throw std::logic_error("emitted obstruction failed re-verification");
        }
        verified.push_back("obstruction-reverified");
        result["obstruction"] = to_json(*obstruction);
        human << "every projective module is a direct sum of finitely "
                 "generated modules: false\n  "
              << fg_obstruction_str(p, *obstruction) << "\n";
    }
    human << "coprime criterion: " << (coprime ? "true" : "false") << "\n";
    e.emit(result, std::move(verified), human.str());
    return obstruction ? 1 : 0;
}

inline int cmd_add(const Emitter& e, const LoadedProfile& lp,
                   const GenusVector& v1, const GenusVector& v2) {
    const AlgebraProfile& p = lp.doc.profile;
    BigClass x = from_genus(p, v1);
    BigClass y = from_genus(p, v2);
    GenusVector through_pairs = to_genus(p, add(p, x, y));
    GenusVector direct = add(v1, v2);
    if (!(through_pairs == direct)) {
        throw std::logic_error("pair addition disagrees with genus addition");
    }
    std::ostringstream human;
    human << v1.str() << " + " << v2.str() << " = " << through_pairs.str() << "\n";
    e.emit(Json{{"lhs", to_json(v1)}, {"rhs", to_json(v2)},
                {"sum", to_json(through_pairs)}},
           {"pair-addition-matches-genus-addition"}, human.str());
    return 0;
}

inline int cmd_make_order(const Emitter& e, const OrderSpec& spec, bool verify) {
    IdempotentSet set = build(spec);
    Json jgens = Json::array();
    for (const auto& g : set.generators) {
        jgens.push_back(Json{{"part", g.part}, {"a", g.a}, {"b", g.b},
                             {"matrix", to_json(g.matrix)}});
    }
    Json result{{"spec", to_json(spec)}, {"generators", std::move(jgens)}};
    std::vector<std::string> verified;
    std::ostringstream human;
    human << "order: p = " << spec.p << ", k = " << spec.k << ", "
          << set.generators.size() << " generator matrices\n";
    bool all_ok = true;
    if (verify) {
        RelationReport rel = verify_relations(set);
        ResidueReport res = residue_structure_check(set, spec.p);
        result["relations"] = Json{{"checks", rel.checks},
                                   {"violations", rel.violations}};
        result["residue"] = Json{{"span_dimension", res.span_dimension},
                                 {"expected_dimension", res.expected_dimension},
                                 {"violations", res.violations}};
        all_ok = rel.ok() && res.ok();
        human << "relations: " << (rel.ok() ? "all identities hold" : "VIOLATIONS")
              << " (" << rel.checks << " checks)\n";
        for (const auto& s : rel.violations) human << "  " << s << "\n";
        human << "residue algebra: dimension " << res.span_dimension
              << " (expected " << res.expected_dimension << "), structure prod M_m(F_"
              << spec.p << "): " << (res.ok() ? "certified" : "VIOLATIONS") << "\n";
        for (const auto& s : res.violations) human << "  " << s << "\n";
        if (all_ok) {
            verified.push_back("relations-verified");
            verified.push_back("residue-structure-verified");
        }
    }
    e.emit(result, std::move(verified), human.str());
    return all_ok ? 0 : 1;
}

inline int cmd_order_profile(const Emitter& e,
                             const std::vector<OrderSpec>& specs) {
    AlgebraProfile p;
    p.k = specs.front().k;
    for (const OrderSpec& spec : specs) {
        if (spec.k != p.k) {
            throw InputError("order specs disagree on k: " + spec.k.str() +
                             " vs " + p.k.str());
        }
        p.blocks.push_back(order_to_profile_block(spec));
    }
    p = validate(std::move(p));
    Json doc = to_json(p);
    e.emit(Json{{"profile", doc}}, {"profile-invariants"}, doc.dump(2) + "\n");
    return 0;
}

}  // namespace detail

/// Dispatches one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"monoids of projective modules over locally semiperfect "
                 "orders from finite profile data"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable result document");

    std::string file;
    std::string upto_str;
    std::vector<std::string> genus_args;
    bool minimal = false;
    bool verify = false;
    std::vector<std::string> spec_files;

    CLI::App* c_validate = app.add_subcommand("validate", "check a profile file");
    c_validate->add_option("file", file)->required();

    CLI::App* c_rank = app.add_subcommand("rank-monoid",
                                          "membership table of the rank monoid");
    c_rank->add_option("file", file)->required();
    c_rank->add_option("--upto", upto_str, "largest rank to tabulate");

    CLI::App* c_hilbert = app.add_subcommand("hilbert",
                                             "minimal generators of the genus monoid A");
    c_hilbert->add_option("file", file)->required();

    CLI::App* c_big = app.add_subcommand("big-generators",
                                         "minimal generators of the big semigroup B");
    c_big->add_option("file", file)->required();

    CLI::App* c_traces = app.add_subcommand("traces", "trace ideals of the profile");
    c_traces->add_option("file", file)->required();
    c_traces->add_flag("--minimal", minimal, "only the minimal non-zero traces");

    CLI::App* c_check = app.add_subcommand("check", "genus membership in A or B");
    c_check->add_option("file", file)->required();
    c_check->add_option("--genus", genus_args, "vector, e.g. ((inf,1),(inf,0))")
        ->required();

    CLI::App* c_decompose = app.add_subcommand(
        "decompose", "decompose a big genus vector as a + inf*a'");
    c_decompose->add_option("file", file)->required();
    c_decompose->add_option("--genus", genus_args)->required();

    CLI::App* c_decide = app.add_subcommand(
        "decide-fg", "is every projective a direct sum of finitely generated ones");
    c_decide->add_option("file", file)->required();

    CLI::App* c_add = app.add_subcommand("add", "add two genus vectors in V u B");
    c_add->add_option("file", file)->required();
    c_add->add_option("--genus", genus_args, "given twice")->required();

    CLI::App* c_make = app.add_subcommand("make-order",
                                          "build the explicit Z_(p)-order matrices");
    c_make->add_option("specfile", file)->required();
    c_make->add_flag("--verify", verify, "verify relations and residue structure");

    CLI::App* c_order_profile = app.add_subcommand(
        "order-profile", "assemble a profile from one order spec per prime");
    c_order_profile->add_option("specfiles", spec_files)->required();

    // Let --json appear after the subcommand too.
    for (CLI::App* sub : {c_validate, c_rank, c_hilbert, c_big, c_traces,
                          c_check, c_decompose, c_decide, c_add, c_make,
                          c_order_profile}) {
        sub->fallthrough();
    }

    std::vector<const char*> argv;
    argv.push_back("projgenus");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& pe) {
        const int code = app.exit(pe, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        auto make_emitter = [&](const std::string& command,
                                const std::string& material) {
            return detail::Emitter{json, command,
                                   fnv1a_hex(material), out};
        };

        if (app.got_subcommand(c_make)) {
            std::string text = detail::read_file(file);
            OrderSpec spec = order_spec_from_json(detail::parse_json(text, file));
            return detail::cmd_make_order(make_emitter("make-order", text), spec,
                                          verify);
        }
        if (app.got_subcommand(c_order_profile)) {
            std::string material;
            std::vector<OrderSpec> specs;
            for (const std::string& sf : spec_files) {
                std::string text = detail::read_file(sf);
                material += text;
                material += '\0';
                specs.push_back(order_spec_from_json(detail::parse_json(text, sf)));
            }
            return detail::cmd_order_profile(make_emitter("order-profile", material),
                                             specs);
        }

        detail::LoadedProfile lp = detail::load_profile(file);
        std::string material = lp.digest_material;
        for (const auto& g : genus_args) {
            material += '\0';
            material += g;
        }

        if (app.got_subcommand(c_validate)) {
            return detail::cmd_validate(make_emitter("validate", material), lp);
        }
        if (app.got_subcommand(c_rank)) {
            Int upto = lp.bounds.rank;
            if (!upto_str.empty()) {
                upto = detail::parse_int_arg(upto_str, "--upto");
            }
            return detail::cmd_rank_monoid(make_emitter("rank-monoid", material),
                                           lp, upto);
        }
        if (app.got_subcommand(c_hilbert)) {
            return detail::cmd_hilbert(make_emitter("hilbert", material), lp);
        }
        if (app.got_subcommand(c_big)) {
            return detail::cmd_big_generators(
                make_emitter("big-generators", material), lp);
        }
        if (app.got_subcommand(c_traces)) {
            return detail::cmd_traces(make_emitter("traces", material), lp, minimal);
        }
        if (app.got_subcommand(c_check)) {
            if (genus_args.size() != 1) {
                throw detail::InputError("check expects exactly one --genus");
            }
            return detail::cmd_check(
                make_emitter("check", material), lp,
                detail::parse_genus_arg(lp.doc.profile, genus_args[0]));
        }
        if (app.got_subcommand(c_decompose)) {
            if (genus_args.size() != 1) {
                throw detail::InputError("decompose expects exactly one --genus");
            }
            return detail::cmd_decompose(
                make_emitter("decompose", material), lp,
                detail::parse_genus_arg(lp.doc.profile, genus_args[0]));
        }
        if (app.got_subcommand(c_decide)) {
            return detail::cmd_decide_fg(make_emitter("decide-fg", material), lp);
        }
        if (app.got_subcommand(c_add)) {
            if (genus_args.size() != 2) {
                throw detail::InputError("add expects exactly two --genus");
            }
            return detail::cmd_add(
                make_emitter("add", material), lp,
                detail::parse_genus_arg(lp.doc.profile, genus_args[0]),
                detail::parse_genus_arg(lp.doc.profile, genus_args[1]));
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const NotBigError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const NotAGenusError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const detail::InputError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const ProfileError& ex) {
        err << "invalid profile [" << to_string(ex.defect()) << "]: " << ex.what()
            << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 70;
    }
}

}  // namespace projgenus::cli
