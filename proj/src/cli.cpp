#include "loopblocks/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "loopblocks/error.hpp"
#include "loopblocks/json_io.hpp"
#include "loopblocks/root_system_cache.hpp"

namespace loopblocks::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    CacheOptions cache;

    RootSystem root_system(const std::string& type_text) const {
        return load_root_system(parse_simple_type(type_text), cache);
    }
    RootSystem root_system(const SimpleType& type) const { return load_root_system(type, cache); }

    // "-" reads stdin, text starting with '{' or '[' is inline JSON, anything else a file path
    Json document(const std::string& source) const {
        std::string text;
        auto first = source.find_first_not_of(" \t\r\n");
        if (source == "-") {
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
            text = source;
        } else {
            std::ifstream file(source);
            if (!file) throw UsageError("cannot read input file '" + source + "'");
            text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw UsageError(std::string("invalid JSON input: ") + e.what());
        }
    }
};

Weight parse_weight(const std::string& text, int rank) {
    IntVector coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            coords.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("malformed weight '" + text + "': expected comma-separated integers");
        }
    }
    if (static_cast<int>(coords.size()) != rank)
        throw UsageError("weight '" + text + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                         std::to_string(rank));
    return Weight(std::move(coords));
}

Json factors_json(const std::vector<CoprimeFactor>& factors) {
    Json out = Json::array();
    for (const auto& f : factors) {
        Json entry{{"weight", to_json(f.weight)}};
        entry.update(point_fields(f.point));
        out.push_back(entry);
    }
    return out;
}

Json pi_info(const Context& ctx, const DrinfeldPoly& pi) {
    RootSystem rs = ctx.root_system(pi.type());
    Json out{{"pi", to_json(pi)}, {"lambda", to_json(pi_lambda(pi))}, {"dual_lambda", to_json(dual_weight_of_pi(rs, pi))}};
    try {
        out["m"] = m_of_pi(pi);
    } catch (const DomainError& e) {
        out["m"] = nullptr;
        out["m_error"] = e.what();
    }
    out["factors"] = factors_json(coprime_factorize(pi));
    Json coeffs = Json::array();
    for (int i = 1; i <= pi.type().rank; ++i) coeffs.push_back(to_json(poly_coefficients(pi, i)));
    out["coefficients"] = coeffs;
    return out;
}

Json orbit_canon(const Context& ctx, const Json& input) {
    XiFunction chi;
    if (input.is_object() && input.contains("support")) {
        DrinfeldPoly pi = drinfeld_from_json(input);
        chi = chi_of_pi(ctx.root_system(pi.type()), pi);
    } else {
        chi = xi_from_json(input);
    }
    XiOrbitKey key = orbit_canonical(chi);
    return Json{{"canonical", to_json(key)}, {"shift", point_fields(key.shift)}};
}

Json tensor(const RootSystem& rs, const std::vector<Weight>& factors) {
    Json in = Json::array();
    std::int64_t dim = 1;
    for (const auto& w : factors) {
        in.push_back(to_json(w));
        dim *= weyl_dim(rs, w);
    }
    Json parts = Json::array();
    for (const auto& [mu, m] : tensor_decompose(rs, factors))
        parts.push_back(Json{{"highest", to_json(mu)}, {"mult", m}, {"dim", weyl_dim(rs, mu)}});
    return Json{{"type", to_string(rs.type)}, {"factors", in}, {"dimension", dim}, {"decomposition", parts}};
}

void emit_error(std::ostream& err, const std::string& message) {
    err << Json{{"error", message}}.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block invariants and Drinfeld-polynomial combinatorics for graded loop-algebra modules",
                 "loopblocks"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string cache_dir;
    bool no_cache = false;
    bool pretty = false;
    app.add_option("--cache-dir", cache_dir, "Root system cache directory (overrides $LOOPBLOCKS_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Neither read nor write the root system cache");
    app.add_flag("--pretty", pretty, "Indent the JSON output");

    std::string type, lambda, mu, pi_a, pi_b, grade;
    std::vector<std::string> weights;
    std::function<Json(const Context&)> action;

    auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

    auto* rootsys = add("rootsys", "Root system data including Gamma = P/Q");
    rootsys->add_option("type", type, "Lie type such as A2 or E8")->required();
    rootsys->callback([&] { action = [&](const Context& c) { return to_json(c.root_system(type)); }; });

    auto* gamma = add("gamma", "Invariant factors and minimal representatives of P/Q");
    gamma->add_option("type", type)->required();
    gamma->callback([&] {
        action = [&](const Context& c) {
            RootSystem rs = c.root_system(type);
            Json j{{"type", to_string(rs.type)}};
            j.update(to_json(rs.gamma));
            return j;
        };
    });

    auto* dominance = add("dominance", "Compare two weights in the dominance order");
    dominance->add_option("type", type)->required();
    dominance->add_option("lambda", lambda)->required();
    dominance->add_option("mu", mu)->required();
    dominance->callback([&] {
        action = [&](const Context& c) {
            RootSystem rs = c.root_system(type);
            Weight l = parse_weight(lambda, rs.rank()), m = parse_weight(mu, rs.rank());
            return Json{{"type", to_string(rs.type)},
                        {"lambda", to_json(l)},
                        {"mu", to_json(m)},
                        {"result", to_string(dominance_compare(rs, l, m))}};
        };
    });

    auto* rlambda = add("rlambda", "Smallest positive value of lambda on the Z-span of W theta^vee");
    rlambda->add_option("type", type)->required();
    rlambda->add_option("lambda", lambda)->required();
    rlambda->callback([&] {
        action = [&](const Context& c) {
            RootSystem rs = c.root_system(type);
            Weight l = parse_weight(lambda, rs.rank());
            return Json{{"type", to_string(rs.type)}, {"lambda", to_json(l)}, {"r_lambda", r_lambda(rs, l)}};
        };
    });

    auto* info = add("pi-info", "lambda_pi, m(pi), coprime factors and coefficients of a Drinfeld polynomial");
    info->add_option("pi", pi_a, "Inline JSON, file path, or - for stdin")->required();
    info->callback([&] { action = [&](const Context& c) { return pi_info(c, drinfeld_from_json(c.document(pi_a))); }; });

    auto* chi = add("chi", "The Gamma-valued function chi_pi");
    chi->add_option("pi", pi_a)->required();
    chi->callback([&] {
        action = [&](const Context& c) {
            DrinfeldPoly pi = drinfeld_from_json(c.document(pi_a));
            return to_json(chi_of_pi(c.root_system(pi.type()), pi));
        };
    });

    auto* canon = add("orbit-canon", "Canonical form of the C^x-orbit of chi (or of chi_pi)");
    canon->add_option("input", pi_a)->required();
    canon->callback([&] { action = [&](const Context& c) { return orbit_canon(c, c.document(pi_a)); }; });

    auto* block = add("same-block", "Whether two Drinfeld polynomials give simples in the same block");
    block->add_option("pi1", pi_a)->required();
    block->add_option("pi2", pi_b)->required();
    block->callback([&] {
        action = [&](const Context& c) {
            DrinfeldPoly a = drinfeld_from_json(c.document(pi_a));
            DrinfeldPoly b = drinfeld_from_json(c.document(pi_b));
            if (a.type() != b.type()) throw DomainError("same_block needs both Drinfeld polynomials over the same type");
            BlockVerdict v = same_block(c.root_system(a.type()), a, b);
            return Json{{"same_block", v.same_block}, {"conjectural", v.conjectural}};
        };
    });

    auto* decompose = add("l-decompose", "Simple summands L^s(V(pi)) of L(V(pi))");
    decompose->add_option("pi", pi_a)->required();
    decompose->callback([&] {
        action = [&](const Context& c) {
            DrinfeldPoly pi = drinfeld_from_json(c.document(pi_a));
            Json labels = Json::array();
            for (const auto& l : summand_labels(pi)) labels.push_back(to_json(l));
            return Json{{"summand_count", summand_count(pi)}, {"labels", labels}};
        };
    });

    auto* iso = add("simple-iso", "Isomorphism test for two simple labels {\"pi\": ..., \"s\": ...}");
    iso->add_option("label1", pi_a)->required();
    iso->add_option("label2", pi_b)->required();
    iso->callback([&] {
        action = [&](const Context& c) {
            SimpleLabel a = label_from_json(c.document(pi_a));
            SimpleLabel b = label_from_json(c.document(pi_b));
            if (a.pi().type() != b.pi().type()) return Json{{"simple_iso", false}, {"lg_restriction_iso", false}};
            RootSystem rs = c.root_system(a.pi().type());
            return Json{{"simple_iso", simple_iso(rs, a, b)}, {"lg_restriction_iso", lg_restriction_iso(a, b)}};
        };
    });

    auto* reduce = add("reduce-weight", "Reduce lambda + n delta to 0 <= n < r_lambda");
    reduce->add_option("type", type)->required();
    reduce->add_option("lambda", lambda)->required();
    reduce->add_option("n", grade)->required();
    reduce->callback([&] {
        action = [&](const Context& c) {
            RootSystem rs = c.root_system(type);
            std::int64_t n = 0;
            try {
                std::size_t used = 0;
                n = std::stoll(grade, &used);
                if (used != grade.size()) throw std::invalid_argument(grade);
            } catch (const std::exception&) {
                throw UsageError("malformed grade '" + grade + "'");
            }
            GradedWeight gw = reduce_graded_weight(rs, {parse_weight(lambda, rs.rank()), n});
            Json j = to_json(gw);
            j["r_lambda"] = r_lambda(rs, gw.finite_part);
            return j;
        };
    });

    auto* character = add("char", "Weight multiplicities of V(lambda) (Freudenthal)");
    character->add_option("type", type)->required();
    character->add_option("lambda", lambda)->required();
    character->callback([&] {
        action = [&](const Context& c) {
            RootSystem rs = c.root_system(type);
            CharacterTable t = freudenthal(rs, parse_weight(lambda, rs.rank()));
            Json j = to_json(t);
            j["dimension"] = t.dimension();
            return j;
        };
    });

    auto* tens = add("tensor", "Decompose V(lambda_1) x ... x V(lambda_k)");
    tens->add_option("type", type)->required();
    tens->add_option("lambdas", weights)->required();
    tens->callback([&] {
        action = [&](const Context& c) {
            RootSystem rs = c.root_system(type);
            std::vector<Weight> ws;
            for (const auto& w : weights) ws.push_back(parse_weight(w, rs.rank()));
            return tensor(rs, ws);
        };
    });

    auto* weyl = add("weyl-dim-A", "Dimension of the Weyl module W(pi) in type A");
    weyl->add_option("pi", pi_a)->required();
    weyl->callback([&] {
        action = [&](const Context& c) {
            DrinfeldPoly pi = drinfeld_from_json(c.document(pi_a));
            RootSystem rs = c.root_system(pi.type());
            return Json{{"type", to_string(rs.type)},
                        {"lambda", to_json(pi_lambda(pi))},
                        {"dimension", to_json(weyl_module_dim_type_A(rs, pi))}};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, e.what());
        return kExitUsage;
    }

    try {
        CacheOptions cache;
        cache.enabled = !no_cache;
        if (!cache_dir.empty()) cache.directory = cache_dir;
        Context ctx{in, cache};
        Json result = action(ctx);
        out << (pretty ? result.dump(2) : result.dump()) << '\n';
        return kExitOk;
    } catch (const UsageError& e) {
        emit_error(err, e.what());
        return kExitUsage;
    } catch (const FormatError& e) {
        emit_error(err, std::string("malformed input: ") + e.what());
        return kExitUsage;
    } catch (const Json::exception& e) {
        emit_error(err, std::string("malformed input: ") + e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        emit_error(err, e.what());
        return kExitDomain;
    }
}

} // namespace loopblocks::cli
