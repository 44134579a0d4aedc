#pragma once

// Constructive Poincaré lemma on lattice boxes.
//
// The cylinder over a d-dimensional base box is the (d+1)-dimensional box
// whose last axis t is the new coordinate. pullback_cylinder (π*) copies a
// form along t, restrict_base (s*) slices at t = 1 and drops components
// containing dx_t, and homotopy_K sums along t. These satisfy
//
//     Id − π* ∘ s* = D K + K D
//
// on the shrunken cylinder, so for closed ω the recursion
//
//     ξ = K ω + π* ξ',   ξ' a potential for s* ω on the base,
//
// yields D ξ = ω. The recursion bottoms out when the ambient dimension
// equals the degree: s* ω is then a q-form over q − 1 axes, which is zero.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dexc/errors.hpp"
#include "dexc/forms.hpp"
#include "dexc/lattice.hpp"

namespace dexc {

/// Raised when an operation needs a closed form and got one that is not.
class NotClosedError : public Error {
 public:
    NotClosedError(MultiIndex component, Point point)
        : Error("form is not closed: component {" + component.key() + "} of D(omega) is nonzero at " +
                to_string(point)),
          component_(std::move(component)), point_(std::move(point)) {}

    /// Component of Dω (size q + 1) that is nonzero.
    const MultiIndex& component() const { return component_; }
    const Point& point() const { return point_; }

 private:
    MultiIndex component_;
    Point point_;
};

struct ClosednessViolation {
    MultiIndex component;
    Point point;
};

/// First nonzero entry of Dω in (component, point) storage order. Top-degree
/// forms have no D and never violate.
template <CommutativeRing R>
std::optional<ClosednessViolation> find_closedness_violation(const GridForm<R>& form) {
    if (form.degree() >= form.dimension()) {
        return std::nullopt;
    }
    const GridForm<R> d = exterior_derivative(form);
    const auto indices = d.indices();
    for (std::size_t k = 0; k < indices.size(); ++k) {
        auto comp = d.component(k);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (!d.ring().is_zero(comp[i])) {
                return ClosednessViolation{indices[k], d.box().point_at(i)};
            }
        }
    }
    return std::nullopt;
}

template <CommutativeRing R>
bool check_closed(const GridForm<R>& form) {
    return !find_closedness_violation(form).has_value();
}

/// π*: replicate every component along a new last axis of extent t_extent.
/// Components containing dx_{d+1} are zero.
template <CommutativeRing R>
GridForm<R> pullback_cylinder(const GridForm<R>& form, int t_extent) {
    if (t_extent < 1) {
        throw ValidationError("cylinder height must be >= 1");
    }
    std::vector<int> extents = form.box().extents();
    extents.push_back(t_extent);
    Box cylinder(std::move(extents));
    const int d1 = cylinder.dimension();
    const auto height = static_cast<std::size_t>(t_extent);

    std::vector<typename GridForm<R>::Grid> out;
    for (const MultiIndex& index : multi_indices(d1, form.degree())) {
        if (index.contains(d1)) {
            out.emplace_back(cylinder.size(), form.ring().zero());
            continue;
        }
        auto src = form.component(index);
        typename GridForm<R>::Grid g;
        g.reserve(cylinder.size());
        for (const auto& v : src) {
            g.insert(g.end(), height, v);
        }
        out.push_back(std::move(g));
    }
    return GridForm<R>(form.ring(), std::move(cylinder), form.degree(), std::move(out));
}

/// s*: slice at t = 1 (last axis); components containing dx_t map to zero.
template <CommutativeRing R>
GridForm<R> restrict_base(const GridForm<R>& form) {
    const int d1 = form.dimension();
    if (d1 < 2) {
        throw EmptyDomainError("restrict_base needs a box of dimension >= 2");
    }
    if (form.degree() > d1 - 1) {
        throw DegreeError("a degree-" + std::to_string(form.degree()) +
                          " form restricts to the zero module on a " + std::to_string(d1 - 1) +
                          "-dimensional base");
    }
    std::vector<int> extents = form.box().extents();
    const auto height = static_cast<std::size_t>(extents.back());
    extents.pop_back();
    Box base(std::move(extents));

    std::vector<typename GridForm<R>::Grid> out;
    for (const MultiIndex& index : multi_indices(d1 - 1, form.degree())) {
        auto src = form.component(index);
        typename GridForm<R>::Grid g;
        g.reserve(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            g.push_back(src[i * height]);
        }
        out.push_back(std::move(g));
    }
    return GridForm<R>(form.ring(), std::move(base), form.degree(), std::move(out));
}

/// K: for each component f_I with t ∈ I, writes dx_I = (−1)^{|I|−1} dx_t ∧ dx_{I∖t}
/// and contributes (−1)^{|I|−1} (Σ_{k=1}^{t−1} f_I(·, k)) dx_{I∖t}.
/// Components without dx_t contribute nothing.
template <CommutativeRing R>
GridForm<R> homotopy_K(const GridForm<R>& form) {
    if (form.degree() < 1) {
        throw DegreeError("homotopy operator needs degree >= 1");
    }
    const int d1 = form.dimension();
    const R& r = form.ring();
    const Box& box = form.box();
    const auto height = static_cast<std::size_t>(box.extent(d1));

    std::vector<typename GridForm<R>::Grid> out;
    for (const MultiIndex& target : multi_indices(d1, form.degree() - 1)) {
        typename GridForm<R>::Grid g(box.size(), r.zero());
        if (!target.contains(d1)) {
            const MultiIndex source = target.with(d1);
            const bool negative = (source.size() - 1) % 2 == 1;
            auto src = form.component(source);
            // Running sum along each contiguous t-column.
            for (std::size_t col = 0; col < box.size(); col += height) {
                for (std::size_t t = 1; t < height; ++t) {
                    const auto& v = src[col + t - 1];
                    g[col + t] = negative ? r.sub(g[col + t - 1], v) : r.add(g[col + t - 1], v);
                }
            }
        }
        out.push_back(std::move(g));
    }
    return GridForm<R>(r, box, form.degree() - 1, std::move(out));
}

template <CommutativeRing R>
struct PotentialResult {
    GridForm<R> potential;
    /// D(potential) equals the input on this box.
    Box guarantee_box;
};

namespace detail {

template <CommutativeRing R>
GridForm<R> homotopy_potential(const GridForm<R>& form) {
    GridForm<R> xi = homotopy_K(form);
    if (form.dimension() == form.degree()) {
        return xi;
    }
    const int height = form.box().extent(form.dimension());
    return xi + pullback_cylinder(homotopy_potential(restrict_base(form)), height);
}

}  // namespace detail

/// Potential ξ with Dξ = ω on shrink(box), for a closed ω of degree ≥ 1.
template <CommutativeRing R>
PotentialResult<R> solve_potential(const GridForm<R>& form) {
    if (form.degree() < 1) {
        throw DegreeError("potentials exist for degree >= 1 only");
    }
    Box guarantee = form.box().shrink();
    if (auto v = find_closedness_violation(form)) {
        throw NotClosedError(std::move(v->component), std::move(v->point));
    }
    return {detail::homotopy_potential(form), std::move(guarantee)};
}

/// Independent q = 1 construction: integrate f_1 along axis 1 on the line
/// through (1, …, 1), then f_2 along axis 2, and so on:
///   F(n) = Σ_i Σ_{k=1}^{n_i − 1} f_i(n_1, …, n_{i−1}, k, 1, …, 1).
template <CommutativeRing R>
GridForm<R> pathsum_scalar_potential(const GridForm<R>& form) {
    if (form.degree() != 1) {
        throw DegreeError("path-sum potential needs a 1-form, got degree " +
                          std::to_string(form.degree()));
    }
    if (auto v = find_closedness_violation(form)) {
        throw NotClosedError(std::move(v->component), std::move(v->point));
    }
    const R& r = form.ring();
    const Box& box = form.box();
    const int d = box.dimension();
    return GridForm<R>::generate(r, box, 0, [&](const MultiIndex&, const Point& n) {
        auto total = r.zero();
        Point walk(static_cast<std::size_t>(d), 1);
        for (int i = 1; i <= d; ++i) {
            auto f = form.component(MultiIndex{i});
            auto& coord = walk[static_cast<std::size_t>(i - 1)];
            for (coord = 1; coord < n[static_cast<std::size_t>(i - 1)]; ++coord) {
                total = r.add(total, f[box.offset(walk)]);
            }
        }
        return total;
    });
}

/// Same construction from d scalar grids f_1 … f_d on one box.
template <CommutativeRing R>
GridForm<R> pathsum_scalar_potential(std::span<const GridForm<R>> fields) {
    if (fields.empty()) {
        throw ValidationError("path-sum potential needs at least one field");
    }
    const Box& box = fields.front().box();
    if (static_cast<int>(fields.size()) != box.dimension()) {
        throw ValidationError("need one scalar grid per axis");
    }
    std::vector<typename GridForm<R>::Grid> comps;
    for (const auto& f : fields) {
        if (f.degree() != 0) {
            throw DegreeError("path-sum inputs must be scalar grids");
        }
        if (!(f.box() == box) || !(f.ring() == fields.front().ring())) {
            throw CompatibilityError("path-sum inputs must share box and ring");
        }
        comps.emplace_back(f.component(0).begin(), f.component(0).end());
    }
    return pathsum_scalar_potential(GridForm<R>(fields.front().ring(), box, 1, std::move(comps)));
}

/// True iff every difference ∂_i f vanishes, i.e. f is constant on the box.
/// Axes of extent 1 impose nothing.
template <CommutativeRing R>
bool h0_kernel_check(const GridForm<R>& form) {
    if (form.degree() != 0) {
        throw DegreeError("H^0 check takes a scalar grid");
    }
    for (int axis = 1; axis <= form.dimension(); ++axis) {
        if (form.box().extent(axis) >= 2 && !partial(form, axis).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace dexc
