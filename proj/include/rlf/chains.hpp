#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlf/codes.hpp"

namespace rlf {

// Real Lefschetz chain over the disk: structures c_1..c_{n+1} and cycles
// a_1..a_n with c_{i+1} = t_{a_i} o c_i and every a_i invariant under c_i.
// structures[i] holds c_{i+1} (0-based storage, 1-based math indexing).
struct ConcreteChain {
    std::vector<AffineClass> structures; // n+1 entries
    std::vector<CurveClass> cycles;      // n entries

    int length() const { return static_cast<int>(cycles.size()); }
    const AffineClass& structure(int i) const { return structures[static_cast<size_t>(i) - 1]; } // c_i, 1-based
    const CurveClass& cycle(int i) const { return cycles[static_cast<size_t>(i) - 1] ; }         // a_i, 1-based
    friend bool operator==(const ConcreteChain&, const ConcreteChain&) = default;
};

// Computes the derived structures, checking invariance step by step.
// Throws InvariantViolation carrying the first bad 1-based index.
ConcreteChain build_chain(const AffineClass& c1, const std::vector<CurveClass>& cycles);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> diagnostics;
    explicit operator bool() const { return ok; }
};

// True iff every stored structure is a real structure, every cycle invariant
// under its structure, and each stored c_{i+1} isotopic to t_{a_i} o c_i.
ValidationReport validate_chain(const ConcreteChain& chain);

// Junction i (between a_i and a_{i+1}, mediated by c_{i+1}) is ambiguous iff
// the mediating structure has no real component, or has two and both adjacent
// cycles are pointwise fixed under it. Returns sorted 1-based indices.
std::vector<int> ambiguous_junctions(const ConcreteChain& chain);

// Complete invariant of the chain: code class ids, twin bits at ambiguous
// junctions (0 = adjacent cycles equal as equivariant classes, 1 = twins),
// and an optional decoration at the infinity junction of a closed chain.
struct DecoratedChain {
    std::vector<int> classes;
    std::map<int, int> bits;              // 1-based junction -> bit
    std::optional<int> closure_bit;
    bool closed = false;                  // set by closed_invariant; not part of the value

    friend bool operator==(const DecoratedChain& a, const DecoratedChain& b) {
        return a.classes == b.classes && a.bits == b.bits && a.closure_bit == b.closure_bit;
    }
    friend bool operator<(const DecoratedChain& a, const DecoratedChain& b);
};

DecoratedChain decorated_invariant(const ConcreteChain& chain);

bool chains_isomorphic(const ConcreteChain& x, const ConcreteChain& y);

// t_{a_n} o ... o t_{a_1}; always equals compose(c_{n+1}, c_1).
AffineClass total_monodromy(const ConcreteChain& chain);

enum class ClosureReason { MonodromyNotIdentity, EndStructuresNotConjugate, OK };

const char* closure_reason_name(ClosureReason r);

struct ClosureReport {
    bool closable = false;
    ClosureReason reason = ClosureReason::OK;
    std::optional<int> extension_count; // 1 or 2, present iff closable
};

// Disk chain extends over the sphere iff the total monodromy matrix is the
// identity and the end structures are isotopic. The extension is unique when
// c_1 has one real component, or two with a reflection action at either end;
// otherwise the two extensions are distinguished by the infinity decoration.
ClosureReport sphere_closure(const ConcreteChain& chain);

// Canonical translation tau with tau o cend o tau^{-1} = cstart, for isotopic
// structures sharing a matrix. Used to glue the chain ends over the sphere.
AffineClass closing_translation(const AffineClass& cend, const AffineClass& cstart);

// Decorated invariant plus the infinity junction decoration of a closed
// chain. Throws Error when the chain is not closable.
DecoratedChain closed_invariant(const ConcreteChain& chain);

// Formal rotation of a closed decorated word by k positions.
DecoratedChain rotate_decorated(const DecoratedChain& d, int k);

// Lexicographically least rotation; idempotent, rotation-invariant.
// Requires closure data (a decorated word of a closed chain).
DecoratedChain cyclic_canonical(const DecoratedChain& d);

// Conjugates all data at positions > i by the half-period map commuting with
// c_{i+1}. Legal exactly when the code at index i has reflection action.
ConcreteChain apply_twin_move(const ConcreteChain& chain, int i);

// Same tail conjugation without the legality gate; flips the twin matching at
// junction i. Used to probe decorations.
ConcreteChain conjugate_tail(const ConcreteChain& chain, int i, const AffineClass& psi);

// Conjugates the whole chain by phi.
ConcreteChain conjugate_chain(const AffineClass& phi, const ConcreteChain& chain);

struct CensusOptions {
    std::uint64_t node_limit = 0;              // 0 = unlimited
    int threads = 1;
    std::optional<std::vector<int>> start_components; // filter on k of c_1
};

struct CensusResult {
    std::vector<DecoratedChain> chains;   // canonical, deduplicated, sorted
    std::vector<ConcreteChain> witnesses; // one concrete chain per canonical entry
    bool exhaustive = true;
    std::uint64_t nodes = 0;
};

// Depth-first search over all chains of length n starting from the canonical
// structures, branching over invariant curve classes. Emits one canonical
// decorated word per sphere extension (two for chains with an ambiguous
// closure). Deterministic output independent of thread count.
CensusResult enumerate_closed_chains(int n, const CensusOptions& opts = {});

} // namespace rlf
