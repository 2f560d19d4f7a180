#pragma once

#include "bcells/signed_perm.hpp"
#include "bcells/tableau.hpp"

namespace bcells {

struct TableauPair {
    DominoTableau left;   // insertion tableau S_r(w)
    DominoTableau right;  // recording tableau T_r(w)

    bool operator==(const TableauPair&) const = default;
    bool operator<(const TableauPair& o) const {
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
};

// The generalized Robinson-Schensted map of rank r: domino insertion of the
// window letters over the staircase core, positive letters entering as
// horizontal dominoes and negative ones as vertical.
TableauPair g_r(const SignedPermutation& w, int rank);

// Inverse map; rejects pairs of different shape or invalid tableaux.
SignedPermutation g_r_inverse(const TableauPair& pair);

}  // namespace bcells
