#pragma once

#include "wittdiv/witt.hpp"

#include <string>

namespace wittdiv {

struct VarietyClass {
    std::string name;
    int dim = 0;
    WittDivisor zeta;
    bool irreducible = true;
};

VarietyClass affine_space(int n);
VarietyClass projective_space(int n);
VarietyClass split_torus(int r);
VarietyClass general_linear(int n);
VarietyClass product(const VarietyClass& x, const VarietyClass& y);
VarietyClass disjoint_union(const VarietyClass& x, const VarietyClass& y);

// Grammar: factors joined by 'x'; a factor is A<n>, An:<n>, P<n>, Pn:<n>, GL<n>,
// GLn:<n>, Gm, Gm^<r>, Gm^r:<r> or pt. Example: "A1xGm^r:2".
VarietyClass variety(const std::string& spec);

// Zeta measure on Z[L^{+-1}]: L^k -> [q^k].
WittDivisor class_to_divisor(const ZLaurent& c);
WittDivisor sym_power_divisor(const VarietyClass& x, int j);

}  // namespace wittdiv
