#include "rlf/chains.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <thread>

#include "rlf/errors.hpp"

namespace rlf {

ConcreteChain build_chain(const AffineClass& c1, const std::vector<CurveClass>& cycles) {
    if (cycles.empty()) throw Error("build_chain: chains need at least one cycle");
    if (!is_real_structure(c1)) throw NotInvolution("build_chain: c1 is not a real structure");

    ConcreteChain chain;
    chain.cycles = cycles;
    chain.structures.reserve(cycles.size() + 1);
    chain.structures.push_back(c1);
    for (size_t i = 0; i < cycles.size(); ++i) {
        const AffineClass& cur = chain.structures.back();
        if (!is_invariant_curve(cur, cycles[i]))
            throw InvariantViolation("build_chain: cycle " + std::to_string(i + 1) +
                                         " is not invariant under c_" + std::to_string(i + 1),
                                     static_cast<int>(i + 1));
        AffineClass next = dehn_twist(cycles[i]) * cur;
        if (!is_real_structure(next))
            throw Error("build_chain: t_a o c failed to be an involution at " + std::to_string(i + 1));
        chain.structures.push_back(next);
    }
    return chain;
}

namespace {

// Exact chain with the relation c_{i+1} = t_{a_i} o c_i on the nose; stored
// structures may differ from the derived ones by isotopy.
ConcreteChain exact_chain(const ConcreteChain& chain) {
    ConcreteChain e = build_chain(chain.structures.at(0), chain.cycles);
    return e;
}

} // namespace

ValidationReport validate_chain(const ConcreteChain& chain) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.diagnostics.push_back(msg);
    };

    if (chain.cycles.empty()) fail("chain has no cycles");
    if (chain.structures.size() != chain.cycles.size() + 1)
        fail("chain stores " + std::to_string(chain.structures.size()) + " structures for " +
             std::to_string(chain.cycles.size()) + " cycles");
    if (!rep.ok) return rep;

    int n = chain.length();
    for (int i = 1; i <= n + 1; ++i)
        if (!is_real_structure(chain.structure(i)))
            fail("c_" + std::to_string(i) + " is not a real structure");
    if (!rep.ok) return rep;

    for (int i = 1; i <= n; ++i) {
        if (!is_invariant_curve(chain.structure(i), chain.cycle(i))) {
            fail("cycle " + std::to_string(i) + " is not invariant under c_" + std::to_string(i));
            continue;
        }
        AffineClass derived = dehn_twist(chain.cycle(i)) * chain.structure(i);
        if (!isotopic_structures(chain.structure(i + 1), derived))
            fail("c_" + std::to_string(i + 1) + " is not isotopic to t_{a_" + std::to_string(i) +
                 "} o c_" + std::to_string(i));
    }
    return rep;
}

std::vector<int> ambiguous_junctions(const ConcreteChain& chain) {
    ConcreteChain e = exact_chain(chain);
    std::vector<int> out;
    for (int i = 1; i <= e.length() - 1; ++i) {
        const AffineClass& mid = e.structure(i + 1);
        int k = fixed_components(mid).component_count;
        if (k == 0) {
            out.push_back(i);
        } else if (k == 2) {
            if (curve_action(mid, e.cycle(i)) == ActionType::PointwiseFixed &&
                curve_action(mid, e.cycle(i + 1)) == ActionType::PointwiseFixed)
                out.push_back(i);
        }
    }
    return out;
}

DecoratedChain decorated_invariant(const ConcreteChain& chain) {
    ConcreteChain e = exact_chain(chain);
    DecoratedChain d;
    for (int i = 1; i <= e.length(); ++i)
        d.classes.push_back(code_class(new_code(e.structure(i), e.cycle(i))));
    for (int i : ambiguous_junctions(e)) {
        const AffineClass& mid = e.structure(i + 1);
        InvariantCurveClass prev = classify_curve(mid, e.cycle(i));
        InvariantCurveClass next = classify_curve(mid, e.cycle(i + 1));
        if (prev == next) {
            d.bits[i] = 0;
        } else {
            assert(are_twins(mid, prev, next));
            d.bits[i] = 1;
        }
    }
    return d;
}

bool chains_isomorphic(const ConcreteChain& x, const ConcreteChain& y) {
    return decorated_invariant(x) == decorated_invariant(y);
}

AffineClass total_monodromy(const ConcreteChain& chain) {
    AffineClass total;
    for (const CurveClass& a : chain.cycles) total = dehn_twist(a) * total;
    return total;
}

const char* closure_reason_name(ClosureReason r) {
    switch (r) {
        case ClosureReason::MonodromyNotIdentity: return "monodromy-not-identity";
        case ClosureReason::EndStructuresNotConjugate: return "end-structures-not-conjugate";
        case ClosureReason::OK: return "ok";
    }
    return "?";
}

ClosureReport sphere_closure(const ConcreteChain& chain) {
    ConcreteChain e = exact_chain(chain);
    ClosureReport rep;
    AffineClass total = total_monodromy(e);
    assert(total == e.structures.back() * e.structures.front());
    if (!(total.m == Mat2::identity())) {
        rep.reason = ClosureReason::MonodromyNotIdentity;
        return rep;
    }
    int n = e.length();
    if (!isotopic_structures(e.structure(n + 1), e.structure(1))) {
        rep.reason = ClosureReason::EndStructuresNotConjugate;
        return rep;
    }
    rep.closable = true;
    rep.reason = ClosureReason::OK;

    int k = fixed_components(e.structure(1)).component_count;
    if (k == 1) {
        rep.extension_count = 1;
    } else if (k == 2) {
        bool refl_end = curve_action(e.structure(n + 1), e.cycle(n)) == ActionType::Reflection ||
                        curve_action(e.structure(1), e.cycle(1)) == ActionType::Reflection;
        rep.extension_count = refl_end ? 1 : 2;
    } else {
        rep.extension_count = 2;
    }
    return rep;
}

// Canonical translation u with tau_u o c_{n+1} o tau_u^{-1} = c_1, i.e.
// (I - M) u = t_1 - t_{n+1} mod Z^2, via the Smith form particular solution.
AffineClass closing_translation(const AffineClass& cend, const AffineClass& cstart) {
    assert(cend.m == cstart.m);
    Mat2 a{1 - cend.m.a, -cend.m.b, -cend.m.c, 1 - cend.m.d};
    Snf s = smith_normal_form(a);
    RatVec2 rhs = s.u * (cstart.t - cend.t);
    long long d1 = s.d.a;
    assert(d1 > 0 && s.d.d == 0);
    if (!rhs.y.mod1().is_zero())
        throw Error("closing_translation: end structures are not translation conjugate");
    Rat y1 = (rhs.x / Rat(d1)).mod1();
    RatVec2 u{y1 * Rat(s.v.a), y1 * Rat(s.v.c)};
    AffineClass tau = AffineClass::translation(u.mod1());
    assert(conjugate(tau, cend) == cstart);
    return tau;
}

DecoratedChain closed_invariant(const ConcreteChain& chain) {
    ConcreteChain e = exact_chain(chain);
    ClosureReport rep = sphere_closure(e);
    if (!rep.closable)
        throw Error(std::string("closed_invariant: chain is not closable (") +
                    closure_reason_name(rep.reason) + ")");

    DecoratedChain d = decorated_invariant(e);
    d.closed = true;
    if (rep.extension_count == 2) {
        int n = e.length();
        const AffineClass& cend = e.structure(n + 1);
        AffineClass tau = closing_translation(cend, e.structure(1));
        // pull a_1 back to the c_{n+1} fiber and compare with a_n there
        CurveClass a1_back = apply_map_to_curve(tau.inverse(), e.cycle(1));
        InvariantCurveClass last = classify_curve(cend, e.cycle(n));
        InvariantCurveClass first = classify_curve(cend, a1_back);
        if (first == last) {
            d.closure_bit = 0;
        } else {
            assert(are_twins(cend, first, last));
            d.closure_bit = 1;
        }
    }
    return d;
}

bool operator<(const DecoratedChain& a, const DecoratedChain& b) {
    if (a.classes != b.classes) return a.classes < b.classes;
    if (a.bits != b.bits) return a.bits < b.bits;
    return a.closure_bit < b.closure_bit;
}

DecoratedChain rotate_decorated(const DecoratedChain& d, int k) {
    int n = static_cast<int>(d.classes.size());
    if (n == 0) return d;
    k = ((k % n) + n) % n;
    auto word = [&](int j) -> std::optional<int> { // 1-based junction bit, j = n is infinity
        if (j == n) return d.closure_bit;
        auto it = d.bits.find(j);
        return it == d.bits.end() ? std::nullopt : std::optional<int>(it->second);
    };
    DecoratedChain out;
    out.closed = d.closed;
    for (int j = 1; j <= n; ++j) out.classes.push_back(d.classes[static_cast<size_t>((j - 1 + k) % n)]);
    for (int j = 1; j <= n; ++j) {
        std::optional<int> bit = word(((j - 1 + k) % n) + 1);
        if (j == n) out.closure_bit = bit;
        else if (bit) out.bits[j] = *bit;
    }
    return out;
}

DecoratedChain cyclic_canonical(const DecoratedChain& d) {
    if (!d.closed) throw Error("cyclic_canonical: input carries no closure data");
    DecoratedChain best = d;
    for (int k = 1; k < static_cast<int>(d.classes.size()); ++k) {
        DecoratedChain cand = rotate_decorated(d, k);
        if (cand < best) best = cand;
    }
    return best;
}

ConcreteChain conjugate_chain(const AffineClass& phi, const ConcreteChain& chain) {
    std::vector<CurveClass> cycles;
    cycles.reserve(chain.cycles.size());
    for (const CurveClass& a : chain.cycles) cycles.push_back(apply_map_to_curve(phi, a));
    return build_chain(conjugate(phi, chain.structures.at(0)), cycles);
}

ConcreteChain conjugate_tail(const ConcreteChain& chain, int i, const AffineClass& psi) {
    ConcreteChain e = exact_chain(chain);
    if (i < 0 || i > e.length()) throw Error("conjugate_tail: index out of range");
    if (i == 0) return conjugate_chain(psi, e);
    if (!(conjugate(psi, e.structure(i + 1)) == e.structure(i + 1)))
        throw Error("conjugate_tail: map does not commute with the mediating structure");
    std::vector<CurveClass> cycles(e.cycles.begin(), e.cycles.end());
    for (int j = i + 1; j <= e.length(); ++j)
        cycles[static_cast<size_t>(j - 1)] = apply_map_to_curve(psi, e.cycle(j));
    return build_chain(e.structure(1), cycles);
}

ConcreteChain apply_twin_move(const ConcreteChain& chain, int i) {
    ConcreteChain e = exact_chain(chain);
    if (i < 1 || i > e.length()) throw Error("apply_twin_move: index out of range");
    if (curve_action(e.structure(i), e.cycle(i)) != ActionType::Reflection)
        throw IllegalMove("apply_twin_move: code at index " + std::to_string(i) +
                          " does not act as a reflection");
    return conjugate_tail(e, i, half_rotation_map(e.structure(i + 1)));
}

namespace {

struct SearchTask {
    AffineClass start;
    InvariantCurveClass first;
};

struct SearchState {
    int n;
    std::uint64_t node_budget; // 0 = unlimited
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;
    std::vector<std::pair<DecoratedChain, ConcreteChain>> found;

    void dfs(const AffineClass& start, std::vector<CurveClass>& cycles, const AffineClass& cur,
             const AffineClass& partial, int depth) {
        if (node_budget && nodes >= node_budget) {
            exhausted_budget = true;
            return;
        }
        ++nodes;
        if (depth == n) {
            if (partial.m == Mat2::identity() && isotopic_structures(cur, start)) {
                ConcreteChain chain = build_chain(start, cycles);
                DecoratedChain word = closed_invariant(chain);
                found.emplace_back(cyclic_canonical(word), chain);
                if (word.closure_bit) {
                    // an ambiguous closure carries two sphere extensions; emit both
                    word.closure_bit = 1 - *word.closure_bit;
                    found.emplace_back(cyclic_canonical(word), chain);
                }
            }
            return;
        }
        for (const InvariantCurveClass& cls : invariant_curve_classes(cur)) {
            AffineClass tw = dehn_twist(cls.curve);
            cycles.push_back(cls.curve);
            dfs(start, cycles, tw * cur, tw * partial, depth + 1);
            cycles.pop_back();
            if (exhausted_budget) return;
        }
    }
};

} // namespace

CensusResult enumerate_closed_chains(int n, const CensusOptions& opts) {
    if (n < 1) throw Error("enumerate_closed_chains: n must be >= 1");

    std::vector<int> start_ks = {0, 1, 2};
    if (opts.start_components) start_ks = *opts.start_components;

    // one task per (start structure, first cycle class): deterministic split
    std::vector<SearchTask> tasks;
    for (int k : start_ks) {
        AffineClass c1 = canonical_structure(k);
        for (const InvariantCurveClass& cls : invariant_curve_classes(c1))
            tasks.push_back({c1, cls});
    }

    int threads = std::max(1, opts.threads);
    std::uint64_t per_task_budget =
        opts.node_limit ? std::max<std::uint64_t>(1, opts.node_limit / std::max<size_t>(1, tasks.size()))
                        : 0;

    std::vector<SearchState> states(tasks.size());
    std::atomic<size_t> next_task{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next_task.fetch_add(1);
            if (i >= tasks.size()) return;
            SearchState& st = states[i];
            st.n = n;
            st.node_budget = per_task_budget;
            std::vector<CurveClass> cycles;
            cycles.push_back(tasks[i].first.curve);
            AffineClass tw = dehn_twist(tasks[i].first.curve);
            st.dfs(tasks[i].start, cycles, tw * tasks[i].start, tw, 1);
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    CensusResult result;
    // states are merged in task order, so the retained witness per canonical
    // class is independent of thread scheduling
    std::map<DecoratedChain, ConcreteChain> dedup;
    for (const SearchState& st : states) {
        result.nodes += st.nodes;
        if (st.exhausted_budget) result.exhaustive = false;
        for (const auto& [d, chain] : st.found) dedup.emplace(d, chain);
    }
    for (const auto& [d, chain] : dedup) {
        result.chains.push_back(d);
        result.chains.back().closed = true;
        result.witnesses.push_back(chain);
    }
    return result;
}

} // namespace rlf
