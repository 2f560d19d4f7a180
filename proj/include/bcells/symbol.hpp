#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bcells/partition.hpp"

namespace bcells {

// A symbol: two strictly increasing rows of non-negative integers with
// |top| >= |bottom|; the defect is the length difference.  Symbols are kept
// as the minimal representative of their shift class (prepending 0 to both
// rows and increasing all other entries by one gives an equivalent symbol),
// so equality of representatives is equality in Sym_s.
class Symbol {
public:
    Symbol() = default;
    Symbol(std::vector<int> top, std::vector<int> bottom);

    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }
    int defect() const { return static_cast<int>(top_.size() - bottom_.size()); }

    bool operator==(const Symbol&) const = default;
    bool operator<(const Symbol& o) const;

    std::string to_string() const;  // "0 1 3 4 / 2"
    static Symbol parse(const std::string& text);

private:
    std::vector<int> top_, bottom_;
};

struct Bipartition {
    Partition first;   // d_Lambda
    Partition second;  // f_Lambda

    bool operator==(const Bipartition&) const = default;
};

// The symbol Lambda_p of a rank-r partition, of defect r+1: pad p with one
// zero part if the rank and the number of parts have equal parity, take the
// shifted entries p_i + k' - i and split them into even values 2*lambda and
// odd values 2*mu+1.
Symbol partition_to_symbol(const Partition& p);

// Number of parts of the padded partition used by partition_to_symbol.
int padded_length(const Partition& p);

// (d_Lambda, f_Lambda) with d = {lambda_i - i + 1}, f = {mu_i - i + 1},
// zero parts dropped.
Bipartition symbol_to_bipartition(const Symbol& s);

// Inverses of the two bijections.
Symbol bipartition_to_symbol(const Bipartition& bp, int defect);
Partition symbol_to_partition(const Symbol& s);

// Entries appearing once resp. twice across the rows, ascending.
std::pair<std::vector<int>, std::vector<int>> singles_doubles(const Symbol& s);

// The order-reversing bijection Z_1(Lambda_p) <-> HC(p): the square (i,j)
// corresponds to the entry (j + k' - i - 1)/2, filled squares landing in
// the bottom row of the symbol.  Returned sorted by entry.
std::vector<std::pair<int, Square>> z1_to_hc(const Partition& p);

}  // namespace bcells
