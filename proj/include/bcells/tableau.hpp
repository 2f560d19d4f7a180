#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcells/partition.hpp"

namespace bcells {

// A standard domino tableau of rank r: the Young diagram of a rank-r shape
// whose core squares (i+j < r+2) are labeled 0 and whose remaining squares
// are tiled by dominoes labeled 1..n, labels weakly increasing along rows
// and columns.
class DominoTableau {
public:
    DominoTableau() = default;
    DominoTableau(int rank, Partition shape,
                  std::vector<std::pair<Square, Square>> dominoes);

    // Core-only tableau of the given rank.
    static DominoTableau core_tableau(int rank);

    int rank() const { return rank_; }
    const Partition& shape() const { return shape_; }
    int domino_count() const { return static_cast<int>(dominoes_.size()); }

    // Support of the domino with the given 1-based label, squares in
    // (row, col) order.
    const std::pair<Square, Square>& domino(int label) const;
    // 0 for core squares, the domino label otherwise; squares outside the
    // shape are an error.
    int label_at(const Square& s) const;
    bool contains(const Square& s) const { return shape_.contains(s); }

    // Label seen by the comparison step of the D' map: 0 above or to the
    // left of the diagram and on the core, +infinity (INT_MAX) beyond the
    // diagram to the lower right.
    int extended_label(const Square& s) const;

    bool variable(const Square& s) const { return (s.diag() - rank_) % 2 == 0; }

    bool operator==(const DominoTableau& o) const;
    bool operator<(const DominoTableau& o) const;

    std::string to_string() const;  // grid rendering, one row per line

private:
    int rank_ = 0;
    Partition shape_;
    std::vector<std::pair<Square, Square>> dominoes_;  // index = label-1
    std::vector<std::vector<int>> grid_;               // labels, row-major
};

// Full invariant check; returns the first violated invariant or nothing.
std::optional<std::string> validate_tableau(const DominoTableau& t);

enum class SquareKind { Fixed, Variable };
SquareKind classify_square(const DominoTableau& t, const Square& s);

// The shifted domino D'(k,T) of the four-case definition: keeps the fixed
// square of D(k,T) and moves the variable square to the opposite side,
// chosen by comparing k against the label of the diagonal neighbour of the
// fixed square.
std::pair<Square, Square> d_prime(const DominoTableau& t, int label);

enum class CycleKind { Closed, CoreOpen, NonCoreOpen };

struct Cycle {
    std::vector<int> labels;        // sorted
    CycleKind kind = CycleKind::Closed;
    std::optional<Square> start;    // S_b: removed from the shape or absorbed by the core
    std::optional<Square> finish;   // S_f: added to the shape

    bool open() const { return kind != CycleKind::Closed; }
};

// The cycle through `label`: closure under the D/D' overlap relation.
Cycle cycle_through(const DominoTableau& t, int label);

// All cycles of t; together their labels partition {1..n}.
std::vector<Cycle> cycles_of(const DominoTableau& t);
std::vector<Cycle> non_core_open_cycles(const DominoTableau& t);

// Moving through a set of cycles of t, all replacements taken in t itself.
// With only non-core open (or closed) cycles the result keeps rank r; with
// all core open cycles included the result is reinterpreted at rank r+1.
// A proper nonempty subset of the core open cycles is rejected.
DominoTableau move_through(const DominoTableau& t, const std::vector<Cycle>& cs);
DominoTableau move_through(const DominoTableau& t, const Cycle& c);

// Begin/final squares of open cycles: cs(T) ordered, starred restriction.
struct CycleStructure {
    std::vector<std::pair<Square, Square>> cs;       // (S_b, S_f), all open cycles
    std::vector<std::pair<Square, Square>> cs_star;  // non-core open cycles only
};
CycleStructure cycle_structure(const DominoTableau& t);

// A cycle structure set for a partition: a nested pairing of starred holes
// with starred corners leaving exactly gamma_p squares unpaired.  Pairs are
// stored with the smaller-row square first and sorted; equality is
// structural.
struct CycleStructureSet {
    std::vector<std::pair<Square, Square>> pairs;

    static CycleStructureSet of(std::vector<std::pair<Square, Square>> raw);
    bool operator==(const CycleStructureSet&) const = default;
    bool operator<(const CycleStructureSet& o) const { return pairs < o.pairs; }
    std::string to_string() const;
};

// The unordered cycle structure set realized by the tableau's non-core
// open cycles.
CycleStructureSet tableau_cs_set(const DominoTableau& t);

std::optional<std::string> validate_cs_set(const Partition& p, const CycleStructureSet& s);

// Every cycle structure set for p, by backtracking over nested pairings.
std::vector<CycleStructureSet> all_cycle_structure_sets(const Partition& p);

// A rank-r standard domino tableau whose non-core open cycles realize
// sigma.  Built as in the existence argument: peel a pair adjacent in HC,
// lay a rim ribbon carrying the largest labels, recurse on the rest.  The
// shape agrees with p whenever each pair of sigma holds exactly one filled
// square of p.
DominoTableau construct_with_cs(const Partition& p, const CycleStructureSet& sigma);

// A cycle structure set whose every pair meets S in exactly one square;
// S must consist of kappa_p starred squares.
CycleStructureSet complete_to_cs(const Partition& p, const std::vector<Square>& S);

// As above but with one pair forced; used by the family ladder.
CycleStructureSet complete_to_cs_with_pair(const Partition& p, const Square& a, const Square& b,
                                           const std::vector<Square>& S);

// All standard domino tableaux of the given shape, deterministic order.
std::vector<DominoTableau> enumerate_sdt(const Partition& shape);
// Streaming variant.
void enumerate_sdt(const Partition& shape, const std::function<void(const DominoTableau&)>& visit);
// All tableaux of rank r with n dominoes.
std::vector<DominoTableau> enumerate_sdt(int n, int r);

// |SDT_r(p)|, memoized; safe for concurrent use.
std::int64_t count_sdt(const Partition& shape);

}  // namespace bcells
