#pragma once

#include <vector>

namespace rlf {

// Symbolic inventory of real structures on a genus-g surface: type plus real
// component count determine the class.
struct SymbolicStructureClass {
    int genus = 1;
    bool separating = false;
    int components = 0;
    friend bool operator==(const SymbolicStructureClass&, const SymbolicStructureClass&) = default;
};

// Harnack bound g + 1 on the number of real components.
int harnack_bound(int g);

// Complete class list for genus g >= 1: 1 + g/2 separating classes
// (k = g+1, g-1, ... >= 1) and g + 1 non-separating ones (k = 0..g).
std::vector<SymbolicStructureClass> structure_classes(int g);

// Conjugacy classes of real codes with non-separating cycle:
// 6 for g = 1, 8g-3 for odd g > 1, 8g-4 for even g.
long long count_code_classes_nonsep(int g);

// The g = 1 closed count against the concrete enumeration.
bool crosscheck_genus1();

} // namespace rlf
