#include "loopblocks/json_io.hpp"

#include <algorithm>
#include <cstdlib>

#include "loopblocks/error.hpp"

namespace loopblocks {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::int64_t int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw FormatError(std::string("field '") + name + "' must be an integer");
    return v.get<std::int64_t>();
}

Rational rational_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw FormatError(std::string("field '") + name + "' must be a \"p/q\" string");
    return parse_rational(v.get<std::string>());
}

IntVector int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of integers");
    IntVector out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw FormatError(std::string(what) + " must be an array of integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

Json int_matrix(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

IntMatrix int_matrix_from(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be a matrix");
    IntMatrix m;
    for (const auto& row : j) m.push_back(int_vector(row, what));
    return m;
}

} // namespace

Json to_json(const Weight& w) {
    return Json(w.coords);
}

Weight weight_from_json(const Json& j, int rank) {
    Weight w(int_vector(j, "weight"));
    if (static_cast<int>(w.size()) != rank)
        throw FormatError("weight has " + std::to_string(w.size()) + " coordinates, expected " + std::to_string(rank));
    return w;
}

Json to_json(const RootVector& r) {
    Json out = Json::array();
    for (const auto& c : r.coords) {
        if (c.get_den() == 1 && c.get_num().fits_slong_p())
            out.push_back(c.get_num().get_si());
        else
            out.push_back(rational_to_string(c));
    }
    return out;
}

RootVector root_vector_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("root vector must be an array");
    RootVector r;
    for (const auto& c : j)
        r.coords.push_back(c.is_number_integer() ? Rational(c.get<long>()) : parse_rational(c.get<std::string>()));
    return r;
}

Json to_json(const GammaGroup& g) {
    Json reps = Json::array();
    for (const auto& w : g.minimal_reps) reps.push_back(to_json(w));
    return Json{{"factors", g.invariant_factors},
                {"order", g.order()},
                {"projection", int_matrix(g.projection)},
                {"elements", int_matrix(g.elements)},
                {"minimal_reps", reps}};
}

GammaGroup gamma_from_json(const Json& j) {
    GammaGroup g;
    g.invariant_factors = int_vector(field(j, "factors"), "factors");
    g.projection = int_matrix_from(field(j, "projection"), "projection");
    g.elements = int_matrix_from(field(j, "elements"), "elements");
    for (const auto& w : field(j, "minimal_reps")) g.minimal_reps.emplace_back(int_vector(w, "minimal_reps"));
    if (g.elements.size() != g.minimal_reps.size() || static_cast<std::int64_t>(g.elements.size()) != g.order())
        throw FormatError("inconsistent Gamma table");
    for (std::size_t k = 0; k < g.elements.size(); ++k)
        if (!g.is_valid(g.elements[k]) || g.project(g.minimal_reps[k]) != g.elements[k])
            throw FormatError("Gamma table representative does not project to its class");
    return g;
}

Json to_json(const RootSystem& rs) {
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots) roots.push_back(to_json(r));
    Json involution = Json::array();
    for (int x : rs.involution) involution.push_back(x + 1);
    return Json{{"format", "loopblocks-root-system"},
                {"version", kRootSystemFormatVersion},
                {"type", to_string(rs.type)},
                {"rank", rs.rank()},
                {"simply_laced", rs.simply_laced},
                {"cartan", int_matrix(rs.cartan)},
                {"positive_roots", roots},
                {"theta", to_json(rs.theta)},
                {"theta_short", to_json(rs.theta_short)},
                {"involution", involution},
                {"gamma", to_json(rs.gamma)}};
}

RootSystem root_system_from_json(const Json& j) {
    if (!j.is_object() || j.value("format", "") != "loopblocks-root-system")
        throw FormatError("not a root system document");
    if (int_field(j, "version") != kRootSystemFormatVersion) throw FormatError("unsupported root system format version");
    SimpleType type = parse_simple_type(field(j, "type").get<std::string>());
    GammaGroup gamma = gamma_from_json(field(j, "gamma"));
    RootSystem rs = assemble_root_system(type, gamma);
    // everything but Gamma is cheap to rebuild, so the stored copy must agree with it
    Json fresh = to_json(rs);
    for (const char* key : {"cartan", "positive_roots", "theta", "theta_short", "involution"})
        if (fresh.at(key) != field(j, key)) throw FormatError(std::string("stale root system field '") + key + "'");
    if (rs.gamma.order() != std::llabs(determinant(rs.cartan)))
        throw FormatError("Gamma order does not match the Cartan determinant");
    return rs;
}

Json point_fields(const ExactPoint& p) {
    return Json{{"magnitude", rational_to_string(p.magnitude())}, {"phase", rational_to_string(p.phase())}};
}

ExactPoint point_from_json(const Json& j) {
    Rational phase = rational_field(j, "phase");
    if (phase < 0 || phase >= 1) throw FormatError("phase must lie in [0, 1)");
    return ExactPoint(rational_field(j, "magnitude"), phase);
}

Json to_json(const DrinfeldPoly& pi) {
    Json support = Json::array();
    for (const auto& [key, mult] : pi.support()) {
        Json entry{{"node", key.first}};
        entry.update(point_fields(key.second));
        entry["mult"] = mult;
        support.push_back(entry);
    }
    return Json{{"type", to_string(pi.type())}, {"rank", pi.type().rank}, {"support", support}};
}

DrinfeldPoly drinfeld_from_json(const Json& j) {
    const Json& type_field = field(j, "type");
    if (!type_field.is_string()) throw FormatError("field 'type' must be a string such as \"A2\"");
    SimpleType type = parse_simple_type(type_field.get<std::string>());
    if (j.contains("rank") && int_field(j, "rank") != type.rank)
        throw FormatError("field 'rank' disagrees with type " + to_string(type));
    const Json& support = field(j, "support");
    if (!support.is_array()) throw FormatError("field 'support' must be an array");
    DrinfeldPoly::Support s;
    for (const auto& entry : support) {
        int node = static_cast<int>(int_field(entry, "node"));
        std::int64_t mult = entry.contains("mult") ? int_field(entry, "mult") : 1;
        if (mult <= 0) throw DomainError("Drinfeld multiplicities must be positive");
        s[{node, point_from_json(entry)}] += mult;
    }
    return DrinfeldPoly(type, std::move(s));
}

Json to_json(const CyclotomicNumber& c) {
    Json coords = Json::array();
    for (const auto& q : c.coords()) coords.push_back(rational_to_string(q));
    return Json{{"conductor", c.conductor()}, {"coords", coords}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
    std::int64_t n = int_field(j, "conductor");
    CyclotomicNumber out(n);
    const Json& coords = field(j, "coords");
    if (!coords.is_array() || coords.size() != out.coords().size())
        throw FormatError("cyclotomic coordinates must have phi(conductor) entries");
    CyclotomicNumber acc(n);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        // k-th power basis element is zeta_n^k
        CyclotomicNumber term = CyclotomicNumber::from_point(n, ExactPoint(1, Rational(static_cast<long>(k)) / Rational(n)));
        acc += term * parse_rational(coords[k].get<std::string>());
    }
    return acc;
}

Json to_json(const PolyCoeffs& c) {
    Json plus = Json::array(), minus = Json::array();
    for (const auto& x : c.plus_coeffs) plus.push_back(to_json(x));
    for (const auto& x : c.minus_coeffs) minus.push_back(to_json(x));
    return Json{{"node", c.node}, {"plus", plus}, {"minus", minus}};
}

Json to_json(const XiFunction& chi) {
    Json points = Json::array();
    for (const auto& [z, r] : chi.support()) {
        Json entry = point_fields(z);
        entry["gamma"] = r;
        points.push_back(entry);
    }
    return Json{{"points", points}, {"gamma_factors", chi.gamma_factors()}};
}

XiFunction xi_from_json(const Json& j) {
    IntVector factors = int_vector(field(j, "gamma_factors"), "gamma_factors");
    const Json& points = field(j, "points");
    if (!points.is_array()) throw FormatError("field 'points' must be an array");
    XiFunction chi(factors);
    for (const auto& entry : points) {
        XiFunction::Support one{{point_from_json(entry), int_vector(field(entry, "gamma"), "gamma")}};
        chi += XiFunction(factors, one);
    }
    return chi;
}

Json to_json(const XiOrbitKey& key) {
    return to_json(key.canonical);
}

Json to_json(const SimpleLabel& label) {
    return Json{{"pi", to_json(label.pi())}, {"s", label.s()}};
}

SimpleLabel label_from_json(const Json& j) {
    return SimpleLabel(drinfeld_from_json(field(j, "pi")), int_field(j, "s"));
}

Json to_json(const GradedWeight& gw) {
    return Json{{"weight", to_json(gw.finite_part)}, {"grade", gw.grade}};
}

GradedWeight graded_weight_from_json(const Json& j, int rank) {
    return {weight_from_json(field(j, "weight"), rank), int_field(j, "grade")};
}

Json to_json(const CharacterTable& table) {
    Json weights = Json::array();
    for (const auto& [w, m] : table.mult) weights.push_back(Json{{"coords", to_json(w)}, {"mult", m}});
    return Json{{"highest", to_json(table.highest)}, {"weights", weights}};
}

CharacterTable character_table_from_json(const Json& j, int rank) {
    CharacterTable t{weight_from_json(field(j, "highest"), rank), {}};
    for (const auto& entry : field(j, "weights")) {
        std::int64_t m = int_field(entry, "mult");
        if (m <= 0) throw FormatError("character multiplicities must be positive");
        t.mult[weight_from_json(field(entry, "coords"), rank)] = m;
    }
    return t;
}

Json to_json(const BigInt& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

} // namespace loopblocks
