#include "rlf/genus.hpp"

#include "rlf/codes.hpp"
#include "rlf/errors.hpp"

namespace rlf {

int harnack_bound(int g) {
    if (g < 0) throw Error("harnack_bound: genus must be >= 0");
    return g + 1;
}

std::vector<SymbolicStructureClass> structure_classes(int g) {
    if (g < 1) throw Error("structure_classes: genus must be >= 1");
    std::vector<SymbolicStructureClass> out;
    // separating: real part bounds an orientable half, k = g+1 mod 2, 1 <= k <= g+1
    for (int k = g + 1; k >= 1; k -= 2) out.push_back({g, true, k});
    // non-separating: any k from 0 to g
    for (int k = 0; k <= g; ++k) out.push_back({g, false, k});
    return out;
}

long long count_code_classes_nonsep(int g) {
    if (g < 1) throw Error("count_code_classes_nonsep: genus must be >= 1");
    if (g == 1) return 6;
    if (g % 2 == 1) return 8LL * g - 3;
    return 8LL * g - 4;
}

bool crosscheck_genus1() {
    return count_code_classes_nonsep(1) ==
           static_cast<long long>(enumerate_code_classes().size());
}

} // namespace rlf
