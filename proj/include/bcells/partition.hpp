#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcells {

// A square of a Young diagram, 1-based: row counts from the top, column
// from the left.
struct Square {
    int row = 0;
    int col = 0;

    auto operator<=>(const Square&) const = default;
    int diag() const { return row + col; }
    std::string to_string() const;  // "(i,j)"
};

// m lies between a and b iff its row is in the closed row-interval spanned
// by a and b and likewise for columns (either orientation).
bool between(const Square& a, const Square& b, const Square& m);

class Partition;

// Corners, holes and their starred restrictions for a partition of rank r.
// A square s_{ij} belongs to the pool when i+j = r (mod 2), i+j > r+1, and
// adding it to or removing it from the diagram leaves a Young diagram.
// Corners have odd row number, holes even.  Starred sets require i+j > r+2.
// All vectors are sorted by increasing row number.
struct CornerHoleData {
    std::vector<Square> corners;        // C(p)
    std::vector<Square> holes;          // H(p)
    std::vector<Square> corners_star;   // C*(p)
    std::vector<Square> holes_star;     // H*(p)
    std::vector<Square> all;            // HC(p), row-sorted
    std::vector<Square> all_star;       // HC*(p), row-sorted
    std::vector<bool> filled;           // parallel to all: square lies in Y_p
    int gamma = 0;                      // #squares of Y_p on the diagonal i+j = r+2
    int kappa = 0;                      // #filled squares of HC(p)

    bool is_filled(const Square& s) const;
    bool contains(const Square& s) const;
    bool contains_star(const Square& s) const;
    std::vector<Square> filled_squares() const;
};

// An integer partition identified with its Young diagram.  Immutable; the
// rank decomposition and the corner/hole data are computed at construction.
//
// The rank r is the unique value such that repeatedly removing dominoes
// from the diagram terminates in the staircase (r, r-1, ..., 1).  The empty
// partition has rank 0.
class Partition {
public:
    Partition() : Partition(std::vector<int>{}) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return rank_; }
    std::vector<int> core() const;      // the staircase (r, r-1, ..., 1)
    int size() const { return total_; } // number of squares
    int rows() const { return static_cast<int>(parts_.size()); }
    int row_length(int row) const;      // 0 outside the diagram
    bool contains(const Square& s) const;
    bool empty() const { return parts_.empty(); }

    const CornerHoleData& corner_hole_data() const { return chd_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;      // "4,3,3,1"; empty partition is "-"
    static Partition parse(const std::string& text);

private:
    void decompose();
    void compute_corner_holes();

    std::vector<int> parts_;
    int rank_ = 0;
    int total_ = 0;
    CornerHoleData chd_;
};

// Rank and staircase core of a weakly decreasing sequence.  Trailing zeros
// are ignored; rejects sequences that are not weakly decreasing.
std::pair<int, Partition> rank_decompose(const std::vector<int>& parts);

// The heart: Y_p minus the filled squares of HC*(p).
Partition heart(const Partition& p);

// The partition p_Y obtained from a heart by filling exactly the squares
// in Y.  Every square of HC(p) sits one column past the heart's row end,
// so filling (i,j) sets row i to length j.  Rejects fillings that do not
// produce a Young diagram of rank `rank`.
Partition fill_squares(const Partition& heart, const std::vector<Square>& filling, int rank);

// All rank-r partitions with exactly n dominoes on top of the core.
std::vector<Partition> partitions_of_rank(int n, int r);

}  // namespace bcells
