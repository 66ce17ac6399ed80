#include "rlf/json_io.hpp"

#include "rlf/errors.hpp"

namespace rlf {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long int_from(const Json& j) {
    if (!j.is_number_integer()) throw ParseError("expected an integer");
    return j.get<long long>();
}

} // namespace

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const AffineClass& f) {
    return Json{{"m", Json::array({Json::array({f.m.a, f.m.b}), Json::array({f.m.c, f.m.d})})},
                {"t", Json::array({f.t.x.str(), f.t.y.str()})}};
}

Json to_json(const CurveClass& k) {
    return Json{{"v", Json::array({k.v.x, k.v.y})}, {"s", k.s.str()}};
}

Json to_json(const InvariantCurveClass& k) {
    Json j = to_json(k.curve);
    j["action"] = action_name(k.action);
    if (k.twin_index) j["twin"] = *k.twin_index;
    return j;
}

Json to_json(const RealCode& code) {
    return Json{{"c", to_json(code.structure)}, {"a", to_json(code.cycle)}};
}

Json to_json(const FixedSetReport& rep) {
    Json circles = Json::array();
    for (const FixedCircle& c : rep.components)
        circles.push_back(Json{{"direction", Json::array({c.direction.x, c.direction.y})},
                               {"base", Json::array({c.base.x.str(), c.base.y.str()})}});
    return Json{{"components", rep.component_count}, {"circles", circles}};
}

Json to_json(const DecoratedChain& d) {
    Json classes = Json::array();
    for (int id : d.classes) classes.push_back(code_class_name(id));
    Json bits = Json::object();
    for (const auto& [junction, bit] : d.bits) bits[std::to_string(junction)] = bit;
    Json j{{"classes", classes}, {"bits", bits}};
    j["closure_bit"] = d.closure_bit ? Json(*d.closure_bit) : Json(nullptr);
    return j;
}

Json chain_to_json(const ConcreteChain& chain) {
    Json cycles = Json::array();
    for (const CurveClass& a : chain.cycles) cycles.push_back(to_json(a));
    return Json{{"c1", to_json(chain.structures.at(0))}, {"cycles", cycles}};
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw ParseError("expected a fraction string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
}

AffineClass affine_from_json(const Json& j) {
    const Json& m = field(j, "m");
    const Json& t = field(j, "t");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2)
        throw ParseError("'m' must be a 2x2 integer matrix");
    if (!t.is_array() || t.size() != 2) throw ParseError("'t' must hold two fractions");
    Mat2 mat{int_from(m[0][0]), int_from(m[0][1]), int_from(m[1][0]), int_from(m[1][1])};
    if (mat.det() != 1 && mat.det() != -1) throw ParseError("matrix must have determinant +-1");
    return {mat, {rat_from_json(t[0]), rat_from_json(t[1])}};
}

CurveClass curve_from_json(const Json& j) {
    const Json& v = field(j, "v");
    if (!v.is_array() || v.size() != 2) throw ParseError("'v' must hold two integers");
    Vec2 vec{int_from(v[0]), int_from(v[1])};
    Rat s = j.contains("s") ? rat_from_json(j.at("s")) : Rat(0);
    try {
        return CurveClass(vec, s);
    } catch (const InvariantViolation& e) {
        throw ParseError(e.what());
    }
}

RealCode code_from_json(const Json& j) {
    return new_code(affine_from_json(field(j, "c")), curve_from_json(field(j, "a")));
}

DecoratedChain decorated_from_json(const Json& j) {
    DecoratedChain d;
    for (const Json& name : field(j, "classes")) {
        std::string s = name.get<std::string>();
        int id = 0;
        for (int i = 1; i <= 6; ++i)
            if (s == code_class_name(i)) id = i;
        if (id == 0) throw ParseError("unknown code class '" + s + "'");
        d.classes.push_back(id);
    }
    if (j.contains("bits"))
        for (const auto& [key, val] : j.at("bits").items()) d.bits[std::stoi(key)] = int_from(val);
    if (j.contains("closure_bit") && !j.at("closure_bit").is_null()) {
        d.closure_bit = static_cast<int>(int_from(j.at("closure_bit")));
        d.closed = true;
    }
    return d;
}

ConcreteChain chain_from_json(const Json& j) {
    const Json& cycles = field(j, "cycles");
    if (!cycles.is_array()) throw ParseError("'cycles' must be an array");
    std::vector<CurveClass> cs;
    for (const Json& c : cycles) cs.push_back(curve_from_json(c));
    return build_chain(affine_from_json(field(j, "c1")), cs);
}

} // namespace rlf
