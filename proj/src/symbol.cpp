#include "bcells/symbol.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bcells {

namespace {

void check_row(const std::vector<int>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0) throw std::invalid_argument("symbol entries must be non-negative");
        if (i > 0 && row[i] <= row[i - 1])
            throw std::invalid_argument("symbol rows must be strictly increasing");
    }
}

}  // namespace

Symbol::Symbol(std::vector<int> top, std::vector<int> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    check_row(top_);
    check_row(bottom_);
    if (top_.size() < bottom_.size())
        throw std::invalid_argument("symbol defect must be non-negative");
    // reduce to the minimal representative of the shift class
    while (!top_.empty() && !bottom_.empty() && top_[0] == 0 && bottom_[0] == 0) {
        top_.erase(top_.begin());
        bottom_.erase(bottom_.begin());
        for (int& v : top_) --v;
        for (int& v : bottom_) --v;
    }
}

bool Symbol::operator<(const Symbol& o) const {
    if (top_ != o.top_) return top_ < o.top_;
    return bottom_ < o.bottom_;
}

std::string Symbol::to_string() const {
    std::string out;
    for (size_t i = 0; i < top_.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(top_[i]);
    }
    out += out.empty() ? "/" : " /";
    for (size_t i = 0; i < bottom_.size(); ++i) out += " " + std::to_string(bottom_[i]);
    return out;
}

Symbol Symbol::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("symbol text needs a '/'");
    auto read = [](const std::string& part) {
        std::vector<int> row;
        std::stringstream ss(part);
        int v;
        while (ss >> v) row.push_back(v);
        return row;
    };
    return Symbol(read(text.substr(0, slash)), read(text.substr(slash + 1)));
}

int padded_length(const Partition& p) {
    int k = p.rows();
    return (p.rank() % 2 == k % 2) ? k + 1 : k;
}

Symbol partition_to_symbol(const Partition& p) {
    const int kp = padded_length(p);
    std::vector<int> lambda, mu;
    for (int i = 1; i <= kp; ++i) {
        int v = p.row_length(i) + kp - i;
        if (v % 2 == 0)
            lambda.push_back(v / 2);
        else
            mu.push_back((v - 1) / 2);
    }
    std::sort(lambda.begin(), lambda.end());
    std::sort(mu.begin(), mu.end());
    return Symbol(std::move(lambda), std::move(mu));
}

Bipartition symbol_to_bipartition(const Symbol& s) {
    std::vector<int> d, f;
    for (size_t i = 0; i < s.top().size(); ++i)
        d.push_back(s.top()[i] - static_cast<int>(i));
    for (size_t i = 0; i < s.bottom().size(); ++i)
        f.push_back(s.bottom()[i] - static_cast<int>(i));
    std::reverse(d.begin(), d.end());
    std::reverse(f.begin(), f.end());
    return {Partition(std::move(d)), Partition(std::move(f))};
}

Symbol bipartition_to_symbol(const Bipartition& bp, int defect) {
    if (defect < 0) throw std::invalid_argument("defect must be non-negative");
    int nd = bp.first.rows(), nf = bp.second.rows();
    int bottom_len = std::max({nf, nd - defect, 0});
    int top_len = bottom_len + defect;
    std::vector<int> top(top_len), bottom(bottom_len);
    for (int i = 1; i <= top_len; ++i)
        top[i - 1] = bp.first.row_length(top_len - i + 1) + i - 1;
    for (int i = 1; i <= bottom_len; ++i)
        bottom[i - 1] = bp.second.row_length(bottom_len - i + 1) + i - 1;
    return Symbol(std::move(top), std::move(bottom));
}

Partition symbol_to_partition(const Symbol& s) {
    if (s.defect() < 1)
        throw std::invalid_argument("only symbols of positive defect label partitions");
    const int r = s.defect() - 1;
    // Undo p_i = v_i - k' + i on the merged entry values; the minimal
    // representative always has the padded size k' = 2N + defect.
    const int kp = static_cast<int>(s.top().size() + s.bottom().size());
    std::vector<int> values;
    for (int v : s.top()) values.push_back(2 * v);
    for (int v : s.bottom()) values.push_back(2 * v + 1);
    std::sort(values.rbegin(), values.rend());
    std::vector<int> parts(kp);
    for (int i = 1; i <= kp; ++i) {
        parts[i - 1] = values[i - 1] - kp + i;
        if (parts[i - 1] < 0)
            throw std::invalid_argument("symbol is not the image of a rank-" + std::to_string(r) +
                                        " partition");
    }
    Partition p(std::move(parts));
    if (p.rank() != r)
        throw std::invalid_argument("symbol does not come from a partition of its defect rank");
    return p;
}

std::pair<std::vector<int>, std::vector<int>> singles_doubles(const Symbol& s) {
    std::map<int, int> count;
    for (int v : s.top()) count[v]++;
    for (int v : s.bottom()) count[v]++;
    std::vector<int> z1, z2;
    for (const auto& [v, c] : count) {
        if (c == 1) z1.push_back(v);
        if (c == 2) z2.push_back(v);
    }
    return {z1, z2};
}

std::vector<std::pair<int, Square>> z1_to_hc(const Partition& p) {
    const int kp = padded_length(p);
    std::vector<std::pair<int, Square>> out;
    for (const Square& s : p.corner_hole_data().all)
        out.emplace_back((s.col + kp - s.row - 1) / 2, s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bcells
