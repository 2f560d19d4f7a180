#include "bcells/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bcells {

std::string Square::to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

bool between(const Square& a, const Square& b, const Square& m) {
    auto in = [](int lo, int hi, int x) {
        return (lo <= x && x <= hi) || (hi <= x && x <= lo);
    };
    return in(a.row, b.row, m.row) && in(a.col, b.col, m.col);
}

bool CornerHoleData::contains(const Square& s) const {
    return std::find(all.begin(), all.end(), s) != all.end();
}

bool CornerHoleData::contains_star(const Square& s) const {
    return std::find(all_star.begin(), all_star.end(), s) != all_star.end();
}

bool CornerHoleData::is_filled(const Square& s) const {
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return filled[i];
    return false;
}

std::vector<Square> CornerHoleData::filled_squares() const {
    std::vector<Square> out;
    for (size_t i = 0; i < all.size(); ++i)
        if (filled[i]) out.push_back(all[i]);
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    decompose();
    compute_corner_holes();
}

int Partition::row_length(int row) const {
    if (row < 1 || row > rows()) return 0;
    return parts_[row - 1];
}

bool Partition::contains(const Square& s) const {
    return s.row >= 1 && s.col >= 1 && s.col <= row_length(s.row);
}

std::vector<int> Partition::core() const {
    std::vector<int> c;
    for (int i = rank_; i >= 1; --i) c.push_back(i);
    return c;
}

// Strip dominoes greedily until no removal is possible.  A partition with
// no removable domino is a staircase, and the 2-core is independent of the
// removal order, so any greedy strategy lands on the same remainder.
void Partition::decompose() {
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    std::vector<int> q = parts_;
    auto remove_one = [&q]() -> bool {
        int k = static_cast<int>(q.size());
        for (int i = 0; i < k; ++i) {
            int below = (i + 1 < k) ? q[i + 1] : 0;
            if (q[i] >= 2 && q[i] - 2 >= below) {  // horizontal at the end of row i
                q[i] -= 2;
                return true;
            }
            int next2 = (i + 2 < k) ? q[i + 2] : 0;
            if (i + 1 < k && q[i] == q[i + 1] && q[i + 1] - 1 >= next2) {  // vertical
                q[i] -= 1;
                q[i + 1] -= 1;
                return true;
            }
        }
        return false;
    };
    while (remove_one()) {
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    int r = static_cast<int>(q.size());
    for (int i = 0; i < r; ++i) {
        if (q[i] != r - i)
            throw std::logic_error("domino stripping did not end in a staircase");
    }
    rank_ = r;
}

void Partition::compute_corner_holes() {
    const int r = rank_;
    const int k = rows();
    chd_ = CornerHoleData{};
    // One candidate per row: either the removable square at the row end or
    // the addable square just past it; their diagonals differ in parity, so
    // at most one matches i+j = r (mod 2).
    for (int i = 1; i <= k + 1; ++i) {
        int len = row_length(i);
        std::optional<Square> hit;
        bool hit_filled = false;
        // removable square (i, len)
        if (len >= 1 && row_length(i + 1) < len) {
            Square s{i, len};
            if ((s.diag() - r) % 2 == 0 && s.diag() > r + 1) {
                hit = s;
                hit_filled = true;
            }
        }
        // addable square (i, len+1)
        if (i == 1 || row_length(i - 1) >= len + 1) {
            Square s{i, len + 1};
            if ((s.diag() - r) % 2 == 0 && s.diag() > r + 1) {
                hit = s;
                hit_filled = false;
            }
        }
        if (!hit) continue;
        chd_.all.push_back(*hit);
        chd_.filled.push_back(hit_filled);
        bool corner = hit->row % 2 == 1;
        (corner ? chd_.corners : chd_.holes).push_back(*hit);
        if (hit->diag() > r + 2) {
            chd_.all_star.push_back(*hit);
            (corner ? chd_.corners_star : chd_.holes_star).push_back(*hit);
        }
        if (hit_filled) chd_.kappa++;
    }
    for (int i = 1; i <= r + 1; ++i) {
        if (row_length(i) >= r + 2 - i) chd_.gamma++;
    }
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "-") return Partition(parts);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("bad partition text: " + text);
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

std::pair<int, Partition> rank_decompose(const std::vector<int>& parts) {
    Partition p(parts);
    return {p.rank(), Partition(p.core())};
}

Partition heart(const Partition& p) {
    std::vector<int> parts = p.parts();
    const auto& chd = p.corner_hole_data();
    for (size_t i = 0; i < chd.all_star.size(); ++i) {
        const Square& s = chd.all_star[i];
        if (!chd.is_filled(s)) continue;
        parts[s.row - 1] = s.col - 1;
    }
    return Partition(std::move(parts));
}

Partition fill_squares(const Partition& heart, const std::vector<Square>& filling, int rank) {
    std::vector<int> parts = heart.parts();
    for (const Square& s : filling) {
        if (s.row < 1 || s.col < 1)
            throw std::invalid_argument("fill_squares: square outside the grid");
        if (static_cast<int>(parts.size()) < s.row) parts.resize(s.row, 0);
        if (parts[s.row - 1] != s.col - 1)
            throw std::invalid_argument("fill_squares: " + s.to_string() +
                                        " does not extend row " + std::to_string(s.row) +
                                        " of the heart by one square");
        parts[s.row - 1] = s.col;
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("fill_squares: filling is not a Young diagram");
    }
    Partition out(std::move(parts));
    if (out.rank() != rank)
        throw std::invalid_argument("fill_squares: filling changes the rank");
    return out;
}

std::vector<Partition> partitions_of_rank(int n, int r) {
    std::vector<int> core;
    for (int i = r; i >= 1; --i) core.push_back(i);
    std::set<std::vector<int>> layer{core};
    for (int step = 0; step < n; ++step) {
        std::set<std::vector<int>> next;
        for (const auto& q : layer) {
            int k = static_cast<int>(q.size());
            auto piece = [&](int row) { return row <= k ? q[row - 1] : 0; };
            for (int i = 1; i <= k + 1; ++i) {
                // horizontal domino at the end of row i
                if (i == 1 || piece(i - 1) >= piece(i) + 2) {
                    auto w = q;
                    if (i > k) w.push_back(0);
                    w[i - 1] += 2;
                    next.insert(w);
                }
                // vertical domino on rows i, i+1
                if (piece(i) == piece(i + 1) && (i == 1 || piece(i - 1) >= piece(i) + 1)) {
                    auto w = q;
                    while (static_cast<int>(w.size()) < i + 1) w.push_back(0);
                    w[i - 1] += 1;
                    w[i] += 1;
                    next.insert(w);
                }
            }
        }
        layer = std::move(next);
    }
    std::vector<Partition> out;
    for (const auto& q : layer) out.emplace_back(q);
    return out;
}

}  // namespace bcells
