#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "symsos/errors.hpp"

namespace symsos {

// A permutation of {0..n-1} stored as an image sequence: image()[i] is
// where point i goes.
class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size(), 0);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v]) {
                throw DimensionError("not a permutation image sequence");
            }
            seen[v] = 1;
        }
    }

    static Perm identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Perm(std::move(im));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    // (a.compose(b))(i) == a(b(i)); b acts first.
    Perm compose(const Perm& other) const {
        if (size() != other.size()) throw DimensionError("permutation size mismatch");
        std::vector<int> im(image_.size());
        for (int i = 0; i < size(); ++i) im[i] = image_[other.image_[i]];
        Perm p;
        p.image_ = std::move(im);
        return p;
    }

    Perm inverse() const {
        std::vector<int> im(image_.size());
        for (int i = 0; i < size(); ++i) im[image_[i]] = i;
        Perm p;
        p.image_ = std::move(im);
        return p;
    }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (image_[i] != i) return false;
        return true;
    }

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> image_;
};

}  // namespace symsos
