#include "dexc/lattice.hpp"

#include <algorithm>
#include <charconv>

#include "dexc/errors.hpp"

namespace dexc {

std::string to_string(std::span<const int> point) {
    std::string out = "(";
    for (std::size_t k = 0; k < point.size(); ++k) {
        out += (k ? "," : "") + std::to_string(point[k]);
    }
    return out + ")";
}

Box::Box(std::vector<int> extents) : extents_(std::move(extents)) {
    if (extents_.empty()) {
        throw ValidationError("box needs dimension >= 1");
    }
    strides_.assign(extents_.size(), 1);
    size_ = 1;
    for (std::size_t k = extents_.size(); k-- > 0;) {
        if (extents_[k] < 1) {
            throw ValidationError("box extents must be positive, got " + to_string(extents_));
        }
        strides_[k] = size_;
        size_ *= static_cast<std::size_t>(extents_[k]);
    }
}

bool Box::contains(std::span<const int> point) const {
    if (point.size() != extents_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < point.size(); ++k) {
        if (point[k] < 1 || point[k] > extents_[k]) {
            return false;
        }
    }
    return true;
}

std::size_t Box::offset(std::span<const int> point) const {
    if (!contains(point)) {
        throw OutOfDomainError("point " + to_string(point) + " outside box " + to_string(*this));
    }
    std::size_t off = 0;
    for (std::size_t k = 0; k < point.size(); ++k) {
        off += static_cast<std::size_t>(point[k] - 1) * strides_[k];
    }
    return off;
}

Point Box::point_at(std::size_t offset) const {
    Point p(extents_.size());
    for (std::size_t k = 0; k < extents_.size(); ++k) {
        p[k] = static_cast<int>(offset / strides_[k]) + 1;
        offset %= strides_[k];
    }
    return p;
}

Box Box::shrink() const {
    std::vector<int> e = extents_;
    for (int& n : e) {
        if (n < 2) {
            throw EmptyDomainError("cannot shrink box " + to_string(*this) + ": an extent is 1");
        }
        --n;
    }
    return Box(std::move(e));
}

Box Box::shrink_axis(int axis) const {
    if (axis < 1 || axis > dimension()) {
        throw ValidationError("axis " + std::to_string(axis) + " outside 1.." +
                              std::to_string(dimension()));
    }
    std::vector<int> e = extents_;
    if (e[static_cast<std::size_t>(axis - 1)] < 2) {
        throw EmptyDomainError("extent of axis " + std::to_string(axis) + " is 1");
    }
    --e[static_cast<std::size_t>(axis - 1)];
    return Box(std::move(e));
}

Box Box::grow() const {
    std::vector<int> e = extents_;
    for (int& n : e) {
        ++n;
    }
    return Box(std::move(e));
}

bool Box::fits_in(const Box& outer) const {
    if (outer.dimension() != dimension()) {
        return false;
    }
    for (std::size_t k = 0; k < extents_.size(); ++k) {
        if (extents_[k] > outer.extents_[k]) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Box& box) {
    std::string out = "[";
    for (std::size_t k = 0; k < box.extents().size(); ++k) {
        out += (k ? "x" : "") + std::to_string(box.extents()[k]);
    }
    return out + "]";
}

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] < 1 || (k > 0 && indices_[k] <= indices_[k - 1])) {
            throw ValidationError("multi-index must be strictly increasing positive integers: {" +
                                  key() + "}");
        }
    }
}

bool MultiIndex::contains(int axis) const {
    return std::binary_search(indices_.begin(), indices_.end(), axis);
}

MultiIndex MultiIndex::without(int axis) const {
    MultiIndex out;
    out.indices_.reserve(indices_.size());
    for (int i : indices_) {
        if (i != axis) {
            out.indices_.push_back(i);
        }
    }
    return out;
}

MultiIndex MultiIndex::with(int axis) const {
    if (axis < 1 || contains(axis)) {
        throw ValidationError("cannot add axis " + std::to_string(axis) + " to {" + key() + "}");
    }
    MultiIndex out = *this;
    out.indices_.insert(std::lower_bound(out.indices_.begin(), out.indices_.end(), axis), axis);
    return out;
}

std::string MultiIndex::key() const {
    std::string out;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        out += (k ? "," : "") + std::to_string(indices_[k]);
    }
    return out;
}

MultiIndex MultiIndex::parse_key(std::string_view key) {
    std::vector<int> out;
    while (!key.empty()) {
        auto comma = key.find(',');
        std::string_view part = key.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw FormatError("bad multi-index key '" + std::string(key) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        key.remove_prefix(comma + 1);
        if (key.empty()) {
            throw FormatError("trailing comma in multi-index key");
        }
    }
    return MultiIndex(std::move(out));
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    }
    return r;
}

std::vector<MultiIndex> multi_indices(int dimension, int degree) {
    std::vector<MultiIndex> out;
    if (degree < 0 || degree > dimension) {
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) {
        idx[static_cast<std::size_t>(k)] = k + 1;
    }
    while (true) {
        out.emplace_back(idx);
        int k = degree - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == dimension - degree + k + 1) {
            --k;
        }
        if (k < 0) {
            break;
        }
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < degree; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::size_t lex_rank(const MultiIndex& index, int dimension) {
    // Count the size-q subsets that precede `index` lexicographically.
    const int q = static_cast<int>(index.size());
    std::size_t rank = 0;
    int prev = 0;
    for (int k = 0; k < q; ++k) {
        for (int v = prev + 1; v < index[static_cast<std::size_t>(k)]; ++v) {
            rank += binomial(dimension - v, q - k - 1);
        }
        prev = index[static_cast<std::size_t>(k)];
    }
    return rank;
}

int sign_s(const MultiIndex& index, int j) {
    std::size_t below = 0;
    for (int i : index) {
        below += i < j ? 1 : 0;
    }
    return below % 2 == 0 ? 1 : -1;
}

}  // namespace dexc
