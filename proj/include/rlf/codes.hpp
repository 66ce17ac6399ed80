#pragma once

#include <array>
#include <utility>

#include "rlf/curves.hpp"

namespace rlf {

// Real code (c, a): a real structure together with a setwise invariant
// vanishing cycle. The conjugacy class of a code classifies an elementary
// real Lefschetz fibration with torus fiber.
struct RealCode {
    AffineClass structure;
    InvariantCurveClass cycle;
    friend bool operator==(const RealCode&, const RealCode&) = default;
};

// Conjugacy classes of torus real codes with non-separating cycle. The id
// dictionary is frozen:
//   1 = (k=2, real cycle)   2 = (k=2, reflection)
//   3 = (k=1, real cycle)   4 = (k=1, reflection)   5 = (k=1, antipodal)
//   6 = (k=0, antipodal)
// Twin choices never affect the id.
int code_class(const RealCode& code);

const char* code_class_name(int id); // "k2-real", ..., "k0-anti"
int code_class_components(int id);
ActionType code_class_action(int id);

// Validates c(a) = a, computes action and twin data. Throws NotInvolution /
// InvariantViolation.
RealCode new_code(const AffineClass& c, const CurveClass& k);

// Six pairwise non-conjugate representatives, one per class id, built from
// the canonical structures.
std::array<RealCode, 6> enumerate_code_classes();

// Conjugacy by an orientation preserving (det +1) affine map carrying one
// structure onto the other and the cycle class onto the cycle class up to
// equivariant isotopy. Decided by canonicalizing both sides and comparing
// curve classes modulo the residual symmetries of the canonical structure
// (the twin swap is the only one acting nontrivially).
bool codes_conjugate(const RealCode& x, const RealCode& y);

enum class LocalModel { XiPlus, XiMinus };

const char* local_model_name(LocalModel m);

// xi- exactly for reflection action, xi+ otherwise.
LocalModel local_model(const RealCode& code);

// The structure on the other side of the critical value: t_a o c.
AffineClass right_structure(const RealCode& code);

// Real component counts (k_minus, k_plus) of the fibers flanking the critical
// value. The code's structure is the left one; mirror = true queries the
// mirrored convention (code's structure on the right, left side recovered
// through the inverse twist).
std::pair<int, int> fiber_profile(const RealCode& code, bool mirror = false);

} // namespace rlf
