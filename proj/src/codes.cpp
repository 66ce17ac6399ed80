#include "rlf/codes.hpp"

#include <cassert>

#include "rlf/errors.hpp"

namespace rlf {

namespace {

constexpr const char* kClassNames[6] = {"k2-real", "k2-refl", "k1-real",
                                        "k1-refl", "k1-anti", "k0-anti"};
constexpr int kClassComponents[6] = {2, 2, 1, 1, 1, 0};
constexpr ActionType kClassActions[6] = {
    ActionType::PointwiseFixed, ActionType::Reflection, ActionType::PointwiseFixed,
    ActionType::Reflection,     ActionType::Antipodal,  ActionType::Antipodal};

} // namespace

const char* code_class_name(int id) {
    if (id < 1 || id > 6) throw Error("code_class_name: id out of range");
    return kClassNames[id - 1];
}

int code_class_components(int id) {
    if (id < 1 || id > 6) throw Error("code_class_components: id out of range");
    return kClassComponents[id - 1];
}

ActionType code_class_action(int id) {
    if (id < 1 || id > 6) throw Error("code_class_action: id out of range");
    return kClassActions[id - 1];
}

int code_class(const RealCode& code) {
    int k = fixed_components(code.structure).component_count;
    ActionType a = code.cycle.action;
    for (int id = 1; id <= 6; ++id)
        if (kClassComponents[id - 1] == k && kClassActions[id - 1] == a) return id;
    throw Error("code_class: impossible (components, action) combination");
}

RealCode new_code(const AffineClass& c, const CurveClass& k) {
    if (!is_real_structure(c)) throw NotInvolution("new_code: not a real structure");
    return {c, classify_curve(c, k)}; // throws InvariantViolation when c(a) != a
}

std::array<RealCode, 6> enumerate_code_classes() {
    AffineClass c2 = canonical_structure(2);
    AffineClass c1 = canonical_structure(1);
    AffineClass c0 = canonical_structure(0);
    std::array<RealCode, 6> out = {
        new_code(c2, CurveClass({1, 0}, Rat(0))),
        new_code(c2, CurveClass({0, 1}, Rat(0))),
        new_code(c1, CurveClass({1, 1}, Rat(0))),
        new_code(c1, CurveClass({1, -1}, Rat(0))),
        new_code(c1, CurveClass({1, 1}, Rat(1, 2))),
        new_code(c0, CurveClass({1, 0}, Rat(0))),
    };
    for (int i = 0; i < 6; ++i) assert(code_class(out[static_cast<size_t>(i)]) == i + 1);
    return out;
}

bool codes_conjugate(const RealCode& x, const RealCode& y) {
    StructureClass sx = classify_structure(x.structure);
    StructureClass sy = classify_structure(y.structure);
    if (sx.components != sy.components) return false;

    // transport both cycles onto the shared canonical structure
    AffineClass canon = canonical_structure(sx.components);
    InvariantCurveClass ax = classify_curve(canon, apply_map_to_curve(sx.to_canonical, x.cycle.curve));
    InvariantCurveClass ay = classify_curve(canon, apply_map_to_curve(sy.to_canonical, y.cycle.curve));
    if (ax == ay) return true;
    // the residual symmetry group acts on the class list through the twin swap only
    return are_twins(canon, ax, ay);
}

const char* local_model_name(LocalModel m) {
    return m == LocalModel::XiPlus ? "xi+" : "xi-";
}

LocalModel local_model(const RealCode& code) {
    return code.cycle.action == ActionType::Reflection ? LocalModel::XiMinus : LocalModel::XiPlus;
}

AffineClass right_structure(const RealCode& code) {
    AffineClass cp = dehn_twist(code.cycle.curve) * code.structure;
    if (!is_real_structure(cp))
        throw Error("right_structure: t_a o c is not an involution"); // cannot happen for valid codes
    return cp;
}

std::pair<int, int> fiber_profile(const RealCode& code, bool mirror) {
    if (!mirror) {
        int km = fixed_components(code.structure).component_count;
        int kp = fixed_components(right_structure(code)).component_count;
        return {km, kp};
    }
    // mirrored convention: the code's structure sits on the right
    AffineClass left = dehn_twist(code.cycle.curve).inverse() * code.structure;
    if (!is_real_structure(left)) throw Error("fiber_profile: t_a^{-1} o c is not an involution");
    int km = fixed_components(left).component_count;
    int kp = fixed_components(code.structure).component_count;
    return {km, kp};
}

} // namespace rlf
