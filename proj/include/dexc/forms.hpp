#pragma once

// Discrete differential forms on a finite box: one dense scalar grid per
// size-q multi-index, components in lexicographic order of their index.
// Forms are immutable; every operation returns a new form.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dexc/errors.hpp"
#include "dexc/lattice.hpp"
#include "dexc/ring.hpp"

namespace dexc {

template <CommutativeRing R>
class GridForm {
 public:
    using ring_type = R;
    using Scalar = typename R::value_type;
    using Grid = std::vector<Scalar>;

    /// `components` must hold C(d, q) grids of box.size() entries, ordered as
    /// multi_indices(d, q).
    GridForm(R ring, Box box, int degree, std::vector<Grid> components)
        : ring_(std::move(ring)), box_(std::move(box)), degree_(degree),
          components_(std::move(components)) {
        if (degree_ < 0 || degree_ > box_.dimension()) {
            throw DegreeError("form degree " + std::to_string(degree_) + " outside 0.." +
                              std::to_string(box_.dimension()));
        }
        const std::size_t expected = binomial(box_.dimension(), degree_);
        if (components_.size() != expected) {
            throw ValidationError("degree-" + std::to_string(degree_) + " form in dimension " +
                                  std::to_string(box_.dimension()) + " needs " +
                                  std::to_string(expected) + " components, got " +
                                  std::to_string(components_.size()));
        }
        for (const Grid& g : components_) {
            if (g.size() != box_.size()) {
                throw ValidationError("component has " + std::to_string(g.size()) +
                                      " entries, box " + to_string(box_) + " needs " +
                                      std::to_string(box_.size()));
            }
        }
    }

    static GridForm zero(R ring, Box box, int degree) {
        const std::size_t n = binomial(box.dimension(), degree);
        std::vector<Grid> comps(n, Grid(box.size(), ring.zero()));
        return GridForm(std::move(ring), std::move(box), degree, std::move(comps));
    }

    /// Builds a form by evaluating f(index, point) everywhere.
    template <class F>
    static GridForm generate(R ring, Box box, int degree, F&& f) {
        std::vector<Grid> comps;
        for (const MultiIndex& index : multi_indices(box.dimension(), degree)) {
            Grid g;
            g.reserve(box.size());
            box.for_each_point([&](const Point& p, std::size_t) { g.push_back(f(index, p)); });
            comps.push_back(std::move(g));
        }
        return GridForm(std::move(ring), std::move(box), degree, std::move(comps));
    }

    const R& ring() const { return ring_; }
    const Box& box() const { return box_; }
    int degree() const { return degree_; }
    int dimension() const { return box_.dimension(); }

    std::vector<MultiIndex> indices() const { return multi_indices(dimension(), degree_); }
    std::size_t component_count() const { return components_.size(); }

    /// Position of a component; ValidationError for indices of the wrong
    /// size or outside {1..d}.
    std::size_t position(const MultiIndex& index) const {
        if (static_cast<int>(index.size()) != degree_ || index.max() > dimension()) {
            throw ValidationError("multi-index {" + index.key() + "} is not a component of a degree-" +
                                  std::to_string(degree_) + " form in dimension " +
                                  std::to_string(dimension()));
        }
        return lex_rank(index, dimension());
    }

    std::span<const Scalar> component(std::size_t k) const { return components_[k]; }
    std::span<const Scalar> component(const MultiIndex& index) const {
        return components_[position(index)];
    }
    const std::vector<Grid>& components() const { return components_; }

    const Scalar& at(const MultiIndex& index, std::span<const int> point) const {
        return components_[position(index)][box_.offset(point)];
    }

    bool is_zero() const {
        for (const Grid& g : components_) {
            for (const Scalar& v : g) {
                if (!ring_.is_zero(v)) {
                    return false;
                }
            }
        }
        return true;
    }

 private:
    R ring_;
    Box box_;
    int degree_ = 0;
    std::vector<Grid> components_;
};

/// Validating constructor from a map keyed by multi-index. Every one of
/// the C(d, q) components must be present.
template <CommutativeRing R>
GridForm<R> make_form(R ring, Box box, int degree,
                      std::map<MultiIndex, typename GridForm<R>::Grid> components) {
    std::vector<typename GridForm<R>::Grid> ordered;
    for (const MultiIndex& index : multi_indices(box.dimension(), degree)) {
        auto it = components.find(index);
        if (it == components.end()) {
            throw ValidationError("missing component {" + index.key() + "}");
        }
        ordered.push_back(std::move(it->second));
        components.erase(it);
    }
    if (!components.empty()) {
        throw ValidationError("unexpected component {" + components.begin()->first.key() + "}");
    }
    return GridForm<R>(std::move(ring), std::move(box), degree, std::move(ordered));
}

template <CommutativeRing R>
const typename R::value_type& form_get(const GridForm<R>& form, const MultiIndex& index,
                                       std::span<const int> point) {
    return form.at(index, point);
}

template <CommutativeRing R>
bool form_is_zero(const GridForm<R>& form) {
    return form.is_zero();
}

namespace detail {

template <CommutativeRing R>
void require_same_space(const GridForm<R>& a, const GridForm<R>& b, const char* what) {
    if (!(a.ring() == b.ring())) {
        throw RingMismatchError(std::string(what) + ": forms over different rings (" +
                                to_string(a.ring().spec()) + " vs " + to_string(b.ring().spec()) + ")");
    }
    if (!(a.box() == b.box())) {
        throw CompatibilityError(std::string(what) + ": boxes differ (" + to_string(a.box()) +
                                 " vs " + to_string(b.box()) + ")");
    }
}

template <CommutativeRing R, class Op>
GridForm<R> zip(const GridForm<R>& a, const GridForm<R>& b, const char* what, Op op) {
    require_same_space(a, b, what);
    if (a.degree() != b.degree()) {
        throw DegreeError(std::string(what) + ": degrees differ");
    }
    std::vector<typename GridForm<R>::Grid> out(a.component_count());
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto x = a.component(k);
        auto y = b.component(k);
        out[k].reserve(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            out[k].push_back(op(x[i], y[i]));
        }
    }
    return GridForm<R>(a.ring(), a.box(), a.degree(), std::move(out));
}

}  // namespace detail

template <CommutativeRing R>
GridForm<R> operator+(const GridForm<R>& a, const GridForm<R>& b) {
    const R& r = a.ring();
    return detail::zip(a, b, "add", [&](const auto& x, const auto& y) { return r.add(x, y); });
}

template <CommutativeRing R>
GridForm<R> operator-(const GridForm<R>& a, const GridForm<R>& b) {
    const R& r = a.ring();
    return detail::zip(a, b, "sub", [&](const auto& x, const auto& y) { return r.sub(x, y); });
}

template <CommutativeRing R>
GridForm<R> operator-(const GridForm<R>& a) {
    return scale(a.ring().neg(a.ring().one()), a);
}

template <CommutativeRing R>
GridForm<R> scale(const typename R::value_type& s, const GridForm<R>& a) {
    const R& r = a.ring();
    std::vector<typename GridForm<R>::Grid> out(a.component_count());
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& v : a.component(k)) {
            out[k].push_back(r.mul(s, v));
        }
    }
    return GridForm<R>(a.ring(), a.box(), a.degree(), std::move(out));
}

/// Ring equality entry by entry; forms on different boxes or of different
/// degree are unequal.
template <CommutativeRing R>
bool operator==(const GridForm<R>& a, const GridForm<R>& b) {
    if (!(a.ring() == b.ring()) || !(a.box() == b.box()) || a.degree() != b.degree()) {
        return false;
    }
    for (std::size_t k = 0; k < a.component_count(); ++k) {
        auto x = a.component(k);
        auto y = b.component(k);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!a.ring().eq(x[i], y[i])) {
                return false;
            }
        }
    }
    return true;
}

/// Restriction to the sub-box sharing the corner (1, …, 1).
template <CommutativeRing R>
GridForm<R> restrict_to(const GridForm<R>& form, const Box& sub) {
    if (!sub.fits_in(form.box())) {
        throw CompatibilityError("box " + to_string(sub) + " does not fit in " +
                                 to_string(form.box()));
    }
    std::vector<typename GridForm<R>::Grid> out(form.component_count());
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto src = form.component(k);
        out[k].reserve(sub.size());
        sub.for_each_point(
            [&](const Point& p, std::size_t) { out[k].push_back(src[form.box().offset(p)]); });
    }
    return GridForm<R>(form.ring(), sub, form.degree(), std::move(out));
}

/// (∂_i f)(a) = f(a + e_i) − f(a) for a 0-form f. The result lives on the
/// box shrunk in axis i only.
template <CommutativeRing R>
GridForm<R> partial(const GridForm<R>& f, int axis) {
    if (f.degree() != 0) {
        throw DegreeError("partial expects a scalar grid (degree 0)");
    }
    const Box out_box = f.box().shrink_axis(axis);
    const R& r = f.ring();
    auto src = f.component(0);
    const std::size_t step = f.box().stride(axis);
    typename GridForm<R>::Grid out;
    out.reserve(out_box.size());
    out_box.for_each_point([&](const Point& p, std::size_t) {
        const std::size_t off = f.box().offset(p);
        out.push_back(r.sub(src[off + step], src[off]));
    });
    std::vector<typename GridForm<R>::Grid> comps;
    comps.push_back(std::move(out));
    return GridForm<R>(r, out_box, 0, std::move(comps));
}

/// Exterior derivative of a degree-q form, returned on shrink(box):
///   (Dω)_L(a) = Σ_m (−1)^(m−1) ∂_{l_m} f_{L∖l_m}(a),   L = {l_1 < ⋯ < l_{q+1}}.
template <CommutativeRing R>
GridForm<R> exterior_derivative(const GridForm<R>& form) {
    const int d = form.dimension();
    const int q = form.degree();
    if (q >= d) {
        throw DegreeError("no exterior derivative of a degree-" + std::to_string(q) +
                          " form in dimension " + std::to_string(d));
    }
    const Box& in_box = form.box();
    const Box out_box = in_box.shrink();
    const R& r = form.ring();

    // Input offsets of the shrunken box's points, shared by every component.
    std::vector<std::size_t> base;
    base.reserve(out_box.size());
    out_box.for_each_point([&](const Point& p, std::size_t) { base.push_back(in_box.offset(p)); });

    std::vector<typename GridForm<R>::Grid> out;
    for (const MultiIndex& target : multi_indices(d, q + 1)) {
        typename GridForm<R>::Grid g(out_box.size(), r.zero());
        for (std::size_t m = 0; m < target.size(); ++m) {
            const int axis = target[m];
            auto src = form.component(target.without(axis));
            const std::size_t step = in_box.stride(axis);
            const bool negative = m % 2 == 1;
            for (std::size_t i = 0; i < base.size(); ++i) {
                auto diff = r.sub(src[base[i] + step], src[base[i]]);
                g[i] = negative ? r.sub(g[i], diff) : r.add(g[i], diff);
            }
        }
        out.push_back(std::move(g));
    }
    return GridForm<R>(r, out_box, q + 1, std::move(out));
}

/// Sign of the permutation sorting the concatenation I ++ J, or 0 when
/// I and J share an index.
int wedge_sign(const MultiIndex& left, const MultiIndex& right);

template <CommutativeRing R>
GridForm<R> wedge(const GridForm<R>& a, const GridForm<R>& b) {
    detail::require_same_space(a, b, "wedge");
    const int d = a.dimension();
    const int degree = a.degree() + b.degree();
    if (degree > d) {
        throw DegreeError("wedge of degrees " + std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()) + " exceeds dimension " + std::to_string(d));
    }
    const R& r = a.ring();
    GridForm<R> zero = GridForm<R>::zero(r, a.box(), degree);
    std::vector<typename GridForm<R>::Grid> out = zero.components();
    const auto left = a.indices();
    const auto right = b.indices();
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            const int sign = wedge_sign(left[i], right[j]);
            if (sign == 0) {
                continue;
            }
            MultiIndex merged = left[i];
            for (int axis : right[j]) {
                merged = merged.with(axis);
            }
            auto& dst = out[lex_rank(merged, d)];
            auto x = a.component(i);
            auto y = b.component(j);
            for (std::size_t k = 0; k < dst.size(); ++k) {
                auto prod = r.mul(x[k], y[k]);
                dst[k] = sign > 0 ? r.add(dst[k], prod) : r.sub(dst[k], prod);
            }
        }
    }
    return GridForm<R>(r, a.box(), degree, std::move(out));
}

}  // namespace dexc
