#pragma once

// Cells [a : e_{l_1}, …, e_{l_q}], finite R-linear chains of them, the
// boundary map and the pairing of forms with chains.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dexc/errors.hpp"
#include "dexc/forms.hpp"
#include "dexc/lattice.hpp"
#include "dexc/ring.hpp"

namespace dexc {

struct Cell {
    Point base;
    MultiIndex dirs;

    int degree() const { return static_cast<int>(dirs.size()); }

    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend bool operator==(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// Finite formal sum Σ r_A A of cells of one degree. Terms are kept sorted
/// by (base, dirs) with zero coefficients dropped, so equal chains compare
/// equal structurally.
template <CommutativeRing R>
class Chain {
 public:
    using Scalar = typename R::value_type;
    using Terms = std::map<Cell, Scalar>;

    Chain(R ring, int dimension, int degree) : ring_(std::move(ring)), dimension_(dimension), degree_(degree) {
        if (dimension_ < 1) {
            throw ValidationError("chain dimension must be >= 1");
        }
        if (degree_ < 0 || degree_ > dimension_) {
            throw DegreeError("chain degree " + std::to_string(degree_) + " outside 0.." +
                              std::to_string(dimension_));
        }
    }

    /// Accumulates repeated cells; validates each cell against the
    /// dimension and degree (not against any box).
    Chain(R ring, int dimension, int degree, const std::vector<std::pair<Cell, Scalar>>& terms)
        : Chain(std::move(ring), dimension, degree) {
        for (const auto& [cell, coeff] : terms) {
            accumulate(cell, coeff);
        }
    }

    static Chain single(R ring, int dimension, Cell cell) {
        const int q = cell.degree();
        auto one = ring.one();
        return Chain(std::move(ring), dimension, q, {{std::move(cell), std::move(one)}});
    }

    const R& ring() const { return ring_; }
    int dimension() const { return dimension_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const Chain& a, const Chain& b) {
        if (!(a.ring_ == b.ring_) || a.dimension_ != b.dimension_ || a.degree_ != b.degree_ ||
            a.terms_.size() != b.terms_.size()) {
            return false;
        }
        auto it = b.terms_.begin();
        for (const auto& [cell, coeff] : a.terms_) {
            if (!(cell == it->first) || !a.ring_.eq(coeff, it->second)) {
                return false;
            }
            ++it;
        }
        return true;
    }

 private:
    template <CommutativeRing S>
    friend Chain<S> boundary(const Chain<S>&);
    template <CommutativeRing S>
    friend Chain<S> operator+(const Chain<S>&, const Chain<S>&);
    template <CommutativeRing S>
    friend Chain<S> scale(const typename S::value_type&, const Chain<S>&);

    void accumulate(const Cell& cell, const Scalar& coeff) {
        if (cell.degree() != degree_) {
            throw ValidationError("cell " + to_string(cell) + " has degree " +
                                  std::to_string(cell.degree()) + ", chain has degree " +
                                  std::to_string(degree_));
        }
        if (static_cast<int>(cell.base.size()) != dimension_ || cell.dirs.max() > dimension_) {
            throw ValidationError("cell " + to_string(cell) + " does not live in dimension " +
                                  std::to_string(dimension_));
        }
        for (int c : cell.base) {
            if (c < 1) {
                throw ValidationError("cell base " + to_string(cell.base) + " is not in N^d");
            }
        }
        auto [it, inserted] = terms_.try_emplace(cell, coeff);
        if (!inserted) {
            it->second = ring_.add(it->second, coeff);
        }
        if (ring_.is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    R ring_;
    int dimension_ = 0;
    int degree_ = 0;
    Terms terms_;
};

template <CommutativeRing R>
Chain<R> operator+(const Chain<R>& a, const Chain<R>& b) {
    if (!(a.ring() == b.ring())) {
        throw RingMismatchError("chains over different rings");
    }
    if (a.dimension() != b.dimension() || a.degree() != b.degree()) {
        throw CompatibilityError("chains of different dimension or degree");
    }
    Chain<R> out = a;
    for (const auto& [cell, coeff] : b.terms()) {
        out.accumulate(cell, coeff);
    }
    return out;
}

template <CommutativeRing R>
Chain<R> scale(const typename R::value_type& s, const Chain<R>& c) {
    Chain<R> out(c.ring(), c.dimension(), c.degree());
    for (const auto& [cell, coeff] : c.terms()) {
        out.accumulate(cell, c.ring().mul(s, coeff));
    }
    return out;
}

template <CommutativeRing R>
Chain<R> operator-(const Chain<R>& a, const Chain<R>& b) {
    return a + scale(b.ring().neg(b.ring().one()), b);
}

/// D'[a : e_{l_1}, …, e_{l_q}] = Σ_i s_I(l_i) ([a + e_{l_i} : I∖l_i] − [a : I∖l_i]),
/// extended linearly.
template <CommutativeRing R>
Chain<R> boundary(const Chain<R>& chain) {
    if (chain.degree() == 0) {
        throw DegreeError("boundary of a degree-0 chain");
    }
    const R& r = chain.ring();
    Chain<R> out(r, chain.dimension(), chain.degree() - 1);
    for (const auto& [cell, coeff] : chain.terms()) {
        for (int axis : cell.dirs) {
            const MultiIndex face = cell.dirs.without(axis);
            const auto c = sign_s(cell.dirs, axis) > 0 ? coeff : r.neg(coeff);
            Point shifted = cell.base;
            ++shifted[static_cast<std::size_t>(axis - 1)];
            out.accumulate(Cell{std::move(shifted), face}, c);
            out.accumulate(Cell{cell.base, face}, r.neg(c));
        }
    }
    return out;
}

/// B(ω, Σ r_A A) = Σ r_A f_{dirs(A)}(base(A)).
template <CommutativeRing R>
typename R::value_type pair(const GridForm<R>& form, const Chain<R>& chain) {
    if (!(form.ring() == chain.ring())) {
        throw RingMismatchError("pairing a form over " + to_string(form.ring().spec()) +
                                " with a chain over " + to_string(chain.ring().spec()));
    }
    if (form.dimension() != chain.dimension()) {
        throw CompatibilityError("pairing a form of dimension " + std::to_string(form.dimension()) +
                                 " with a chain of dimension " + std::to_string(chain.dimension()));
    }
    if (form.degree() != chain.degree()) {
        throw DegreeError("pairing a degree-" + std::to_string(form.degree()) +
                          " form with a degree-" + std::to_string(chain.degree()) + " chain");
    }
    const R& r = form.ring();
    auto total = r.zero();
    for (const auto& [cell, coeff] : chain.terms()) {
        if (!form.box().contains(cell.base)) {
            throw OutOfDomainError("cell " + to_string(cell) + " lies outside box " +
                                   to_string(form.box()));
        }
        total = r.add(total, r.mul(coeff, form.at(cell.dirs, cell.base)));
    }
    return total;
}

template <CommutativeRing R>
struct StokesReport {
    typename R::value_type lhs;
    typename R::value_type rhs;
    bool equal = false;
};

/// Evaluates B(Dω, c) and B(ω, D'c). Every cell base must lie in
/// shrink(box), where both sides are defined.
template <CommutativeRing R>
StokesReport<R> stokes_verify(const GridForm<R>& form, const Chain<R>& chain) {
    if (chain.degree() != form.degree() + 1) {
        throw DegreeError("stokes: chain degree must be form degree + 1");
    }
    const Box inner = form.box().shrink();
    for (const auto& [cell, coeff] : chain.terms()) {
        if (!inner.contains(cell.base)) {
            throw OutOfDomainError("cell " + to_string(cell) + " outside evaluable region " +
                                   to_string(inner));
        }
    }
    StokesReport<R> report{pair(exterior_derivative(form), chain), pair(form, boundary(chain))};
    report.equal = form.ring().eq(report.lhs, report.rhs);
    return report;
}

}  // namespace dexc
