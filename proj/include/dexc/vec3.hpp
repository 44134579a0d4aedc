#pragma once

// Three-dimensional vector calculus on top of the form machinery.
// A field (b1, b2, b3) is the 1-form b1 dx1 + b2 dx2 + b3 dx3; a field
// (a1, a2, a3) read as a flux is the 2-form a1 dx2∧dx3 − a2 dx1∧dx3 + a3 dx1∧dx2.
// With these encodings D on 0-, 1- and 2-forms is grad, curl and div.

#include <array>
#include <utility>

#include "dexc/errors.hpp"
#include "dexc/forms.hpp"
#include "dexc/poincare.hpp"

namespace dexc {

template <CommutativeRing R>
class VectorField3 {
 public:
    using Grid = typename GridForm<R>::Grid;

    VectorField3(R ring, Box box, std::array<Grid, 3> comps)
        : ring_(std::move(ring)), box_(std::move(box)), comps_(std::move(comps)) {
        if (box_.dimension() != 3) {
            throw ValidationError("vector fields live on 3-dimensional boxes, got " + to_string(box_));
        }
        for (const Grid& g : comps_) {
            if (g.size() != box_.size()) {
                throw ValidationError("vector field component size does not match box " +
                                      to_string(box_));
            }
        }
    }

    const R& ring() const { return ring_; }
    const Box& box() const { return box_; }
    /// Component 1..3.
    const Grid& component(int i) const { return comps_[static_cast<std::size_t>(i - 1)]; }
    const std::array<Grid, 3>& components() const { return comps_; }

    friend bool operator==(const VectorField3& a, const VectorField3& b) {
        if (!(a.ring_ == b.ring_) || !(a.box_ == b.box_)) {
            return false;
        }
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t i = 0; i < a.box_.size(); ++i) {
                if (!a.ring_.eq(a.comps_[k][i], b.comps_[k][i])) {
                    return false;
                }
            }
        }
        return true;
    }

 private:
    R ring_;
    Box box_;
    std::array<Grid, 3> comps_;
};

namespace detail {

template <CommutativeRing R>
void require_3d(const GridForm<R>& form, int degree) {
    if (form.dimension() != 3) {
        throw ValidationError("expected a form on a 3-dimensional box");
    }
    if (form.degree() != degree) {
        throw DegreeError("expected a degree-" + std::to_string(degree) + " form");
    }
}

template <CommutativeRing R>
typename GridForm<R>::Grid negated(const R& r, std::span<const typename R::value_type> g) {
    typename GridForm<R>::Grid out;
    out.reserve(g.size());
    for (const auto& v : g) {
        out.push_back(r.neg(v));
    }
    return out;
}

template <CommutativeRing R>
typename GridForm<R>::Grid copied(std::span<const typename R::value_type> g) {
    return {g.begin(), g.end()};
}

}  // namespace detail

template <CommutativeRing R>
GridForm<R> to_one_form(const VectorField3<R>& b) {
    return GridForm<R>(b.ring(), b.box(), 1, {b.component(1), b.component(2), b.component(3)});
}

template <CommutativeRing R>
VectorField3<R> from_one_form(const GridForm<R>& form) {
    detail::require_3d(form, 1);
    return VectorField3<R>(form.ring(), form.box(),
                           {detail::copied<R>(form.component(MultiIndex{1})),
                            detail::copied<R>(form.component(MultiIndex{2})),
                            detail::copied<R>(form.component(MultiIndex{3}))});
}

template <CommutativeRing R>
GridForm<R> to_two_form(const VectorField3<R>& a) {
    // Components in lexicographic order {1,2}, {1,3}, {2,3}.
    return GridForm<R>(a.ring(), a.box(), 2,
                       {a.component(3), detail::negated(a.ring(), std::span(a.component(2))),
                        a.component(1)});
}

template <CommutativeRing R>
VectorField3<R> from_two_form(const GridForm<R>& form) {
    detail::require_3d(form, 2);
    return VectorField3<R>(form.ring(), form.box(),
                           {detail::copied<R>(form.component(MultiIndex{2, 3})),
                            detail::negated(form.ring(), form.component(MultiIndex{1, 3})),
                            detail::copied<R>(form.component(MultiIndex{1, 2}))});
}

/// (∂1 f, ∂2 f, ∂3 f) on shrink(box).
template <CommutativeRing R>
VectorField3<R> grad(const GridForm<R>& f) {
    detail::require_3d(f, 0);
    return from_one_form(exterior_derivative(f));
}

/// (∂2 b3 − ∂3 b2, ∂3 b1 − ∂1 b3, ∂1 b2 − ∂2 b1) on shrink(box).
template <CommutativeRing R>
VectorField3<R> curl(const VectorField3<R>& b) {
    return from_two_form(exterior_derivative(to_one_form(b)));
}

/// ∂1 a1 + ∂2 a2 + ∂3 a3 on shrink(box), as a scalar grid.
template <CommutativeRing R>
GridForm<R> div(const VectorField3<R>& a) {
    GridForm<R> top = exterior_derivative(to_two_form(a));
    return GridForm<R>(top.ring(), top.box(), 0,
                       {detail::copied<R>(top.component(MultiIndex{1, 2, 3}))});
}

/// b with ∂_i b = a_i on shrink(box). NotClosedError names the pair {i, j}
/// with ∂_j a_i ≠ ∂_i a_j and the point where it fails.
template <CommutativeRing R>
GridForm<R> scalar_potential3(const VectorField3<R>& a) {
    return solve_potential(to_one_form(a)).potential;
}

/// b with curl b = a on shrink(box). NotClosedError names the point where
/// div a ≠ 0.
template <CommutativeRing R>
VectorField3<R> vector_potential3(const VectorField3<R>& a) {
    return from_one_form(solve_potential(to_two_form(a)).potential);
}

}  // namespace dexc
