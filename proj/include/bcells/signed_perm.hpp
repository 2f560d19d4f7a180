#pragma once

#include <map>
#include <string>
#include <vector>

namespace bcells {

// An element of the hyperoctahedral group W_n: a permutation of
// {-n..-1, 1..n} commuting with negation, stored in window notation
// (w(1), ..., w(n)).
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window);
    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }
    int apply(int i) const;  // defined on +-1..+-n

    SignedPermutation inverse() const;
    SignedPermutation operator*(const SignedPermutation& o) const;  // (u*v)(i) = u(v(i))
    bool operator==(const SignedPermutation&) const = default;
    bool operator<(const SignedPermutation& o) const { return window_ < o.window_; }

    // Coxeter length for the B_n generating set {t, s_1, ..., s_{n-1}}:
    // inversions + negative entries + negative-sum pairs.
    int length() const;

    std::string to_string() const;  // "2,-1,3"
    static SignedPermutation parse(const std::string& text);

private:
    std::vector<int> window_;
};

// W_n with its elements indexed, generator multiplication tables and
// lengths; generator 0 is the sign change t, generator i swaps i, i+1.
class WeylGroupB {
public:
    explicit WeylGroupB(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int generators() const { return n_ == 0 ? 0 : n_; }

    const SignedPermutation& element(int id) const { return elements_[id]; }
    int id_of(const SignedPermutation& w) const;
    int identity_id() const { return identity_; }

    int left_mult(int gen, int id) const { return left_[gen][id]; }
    int right_mult(int gen, int id) const { return right_[gen][id]; }
    int inverse(int id) const { return inverse_[id]; }
    int length(int id) const { return length_[id]; }

    SignedPermutation generator(int gen) const;

private:
    int n_;
    int identity_ = 0;
    std::vector<SignedPermutation> elements_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> left_, right_;
    std::vector<int> inverse_;
    std::vector<int> length_;
};

}  // namespace bcells
