#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "ybe/errors.hpp"

namespace ybe {

// A permutation of {0, ..., m-1} stored as its image array.
class Perm {
public:
    Perm() = default;
    explicit Perm(int m) : img_(m) { std::iota(img_.begin(), img_.end(), 0); }

    static std::optional<Perm> try_from_image(std::vector<int> img) {
        std::vector<char> seen(img.size(), 0);
        for (int v : img) {
            if (v < 0 || v >= static_cast<int>(img.size()) || seen[v]) return std::nullopt;
            seen[v] = 1;
        }
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    static Perm from_image(std::vector<int> img) {
        auto p = try_from_image(std::move(img));
        if (!p) fail(Errc::NotAPermutation, "image array is not a bijection");
        return *p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // (*this) ∘ g : x ↦ this(g(x))
    Perm after(const Perm& g) const {
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 0; i < degree(); ++i) r.img_[i] = img_[g.img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    Perm power(long k) const {
        long n = order();
        k %= n;
        if (k < 0) k += n;
        Perm acc(degree());
        Perm base = *this;
        while (k > 0) {
            if (k & 1) acc = acc.after(base);
            base = base.after(base);
            k >>= 1;
        }
        return acc;
    }

    long order() const {
        long ord = 1;
        std::vector<char> seen(img_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            long len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                cyc.push_back(j);
            }
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

}  // namespace ybe
