#include "bcells/signed_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcells {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a])
            throw std::invalid_argument("window is not a signed permutation");
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
}

int SignedPermutation::apply(int i) const {
    if (i == 0 || std::abs(i) > n()) throw std::out_of_range("value outside +-1..n");
    int v = window_[std::abs(i) - 1];
    return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> w(n());
    for (int i = 1; i <= n(); ++i) {
        int v = window_[i - 1];
        w[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("rank mismatch");
    std::vector<int> w(n());
    for (int i = 1; i <= n(); ++i) w[i - 1] = apply(o.apply(i));
    return SignedPermutation(std::move(w));
}

int SignedPermutation::length() const {
    int inv = 0, neg = 0, nsp = 0;
    const int k = n();
    for (int i = 0; i < k; ++i) {
        if (window_[i] < 0) ++neg;
        for (int j = i + 1; j < k; ++j) {
            if (window_[i] > window_[j]) ++inv;
            if (window_[i] + window_[j] < 0) ++nsp;
        }
    }
    return inv + neg + nsp;
}

std::string SignedPermutation::to_string() const {
    if (window_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(window_[i]);
    }
    return out;
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.empty() || text == "-") return SignedPermutation(w);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
    return SignedPermutation(std::move(w));
}

WeylGroupB::WeylGroupB(int n) : n_(n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            std::vector<int> w = perm;
            for (int i = 0; i < n; ++i)
                if (signs & (1 << i)) w[i] = -w[i];
            elements_.emplace_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(elements_.begin(), elements_.end());
    for (int i = 0; i < size(); ++i) index_[elements_[i].window()] = i;
    identity_ = id_of(SignedPermutation::identity(n));

    inverse_.resize(size());
    length_.resize(size());
    for (int i = 0; i < size(); ++i) {
        inverse_[i] = id_of(elements_[i].inverse());
        length_[i] = elements_[i].length();
    }
    left_.assign(generators(), std::vector<int>(size()));
    right_.assign(generators(), std::vector<int>(size()));
    for (int g = 0; g < generators(); ++g) {
        SignedPermutation s = generator(g);
        for (int i = 0; i < size(); ++i) {
            left_[g][i] = id_of(s * elements_[i]);
            right_[g][i] = id_of(elements_[i] * s);
        }
    }
}

int WeylGroupB::id_of(const SignedPermutation& w) const {
    auto it = index_.find(w.window());
    if (it == index_.end()) throw std::invalid_argument("element not in this group");
    return it->second;
}

SignedPermutation WeylGroupB::generator(int gen) const {
    if (gen < 0 || gen >= generators()) throw std::out_of_range("no such generator");
    std::vector<int> w(n_);
    std::iota(w.begin(), w.end(), 1);
    if (gen == 0) {
        w[0] = -1;
    } else {
        std::swap(w[gen - 1], w[gen]);
    }
    return SignedPermutation(std::move(w));
}

}  // namespace bcells
