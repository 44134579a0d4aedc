#pragma once

// Finite boxes in ℕ^d with 1-based coordinates, and the strictly increasing
// multi-indices that label basis forms dx_{i_1} ∧ ⋯ ∧ dx_{i_q} and cell
// directions.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dexc {

/// Coordinates of a lattice point, 1-based.
using Point = std::vector<int>;

std::string to_string(std::span<const int> point);

/// Axis-aligned box {a : 1 ≤ a_i ≤ N_i}. Points are stored row-major with
/// the last axis fastest.
class Box {
 public:
    Box() = default;
    explicit Box(std::vector<int> extents);

    int dimension() const { return static_cast<int>(extents_.size()); }
    const std::vector<int>& extents() const { return extents_; }
    /// Axis is 1-based.
    int extent(int axis) const { return extents_[static_cast<std::size_t>(axis - 1)]; }
    std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis - 1)]; }
    std::size_t size() const { return size_; }

    bool contains(std::span<const int> point) const;
    std::size_t offset(std::span<const int> point) const;
    Point point_at(std::size_t offset) const;

    /// Extents N_i − 1 in every axis; EmptyDomainError if some N_i = 1.
    Box shrink() const;
    /// Extent N_axis − 1 in one axis only.
    Box shrink_axis(int axis) const;
    Box grow() const;
    /// True when every extent is ≤ the matching extent of `outer`.
    bool fits_in(const Box& outer) const;

    /// Visits points in storage order as f(point, offset).
    template <class F>
    void for_each_point(F&& f) const;

    friend bool operator==(const Box& a, const Box& b) { return a.extents_ == b.extents_; }

 private:
    std::vector<int> extents_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

std::string to_string(const Box& box);

/// Strictly increasing list of axes from {1..d}; possibly empty.
class MultiIndex {
 public:
    MultiIndex() = default;
    /// ValidationError unless strictly increasing and positive.
    explicit MultiIndex(std::vector<int> indices);
    MultiIndex(std::initializer_list<int> indices) : MultiIndex(std::vector<int>(indices)) {}

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    int operator[](std::size_t k) const { return indices_[k]; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }
    const std::vector<int>& indices() const { return indices_; }

    bool contains(int axis) const;
    /// Largest entry, 0 for the empty index.
    int max() const { return indices_.empty() ? 0 : indices_.back(); }
    MultiIndex without(int axis) const;
    MultiIndex with(int axis) const;

    /// Comma-separated ascending integers; "" for the empty index.
    std::string key() const;
    static MultiIndex parse_key(std::string_view key);

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
    std::vector<int> indices_;
};

std::size_t binomial(int n, int k);

/// All size-q multi-indices over {1..d} in lexicographic order.
std::vector<MultiIndex> multi_indices(int dimension, int degree);

/// Position of `index` in multi_indices(dimension, index.size()).
std::size_t lex_rank(const MultiIndex& index, int dimension);

/// +1 if #{i ∈ I : i < j} is even, −1 otherwise.
int sign_s(const MultiIndex& index, int j);

template <class F>
void Box::for_each_point(F&& f) const {
    if (size_ == 0) {
        return;
    }
    Point p(extents_.size(), 1);
    for (std::size_t off = 0; off < size_; ++off) {
        f(static_cast<const Point&>(p), off);
        for (std::size_t k = p.size(); k-- > 0;) {
            if (++p[k] <= extents_[k]) {
                break;
            }
            p[k] = 1;
        }
    }
}

}  // namespace dexc
