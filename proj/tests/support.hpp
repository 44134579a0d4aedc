#pragma once

// Random generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "dexc/chains.hpp"
#include "dexc/forms.hpp"
#include "dexc/ring.hpp"

namespace dexc::testing {

class Gen {
 public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

 private:
    std::mt19937_64 rng_;
};

template <CommutativeRing R>
typename R::value_type random_scalar(const R& ring, Gen& gen) {
    if constexpr (std::is_same_v<R, RationalRing>) {
        return Rational(gen.uniform(-9, 9), gen.uniform(1, 5));
    } else {
        return ring.from_int(gen.uniform(-9, 9));
    }
}

inline Box random_box(Gen& gen, int dimension, int min_extent, int max_extent) {
    std::vector<int> extents(static_cast<std::size_t>(dimension));
    for (int& n : extents) {
        n = gen.uniform(min_extent, max_extent);
    }
    return Box(std::move(extents));
}

template <CommutativeRing R>
GridForm<R> random_form(const R& ring, const Box& box, int degree, Gen& gen) {
    return GridForm<R>::generate(ring, box, degree,
                                 [&](const MultiIndex&, const Point&) { return random_scalar(ring, gen); });
}

inline Point random_point(Gen& gen, const Box& box) {
    Point p(static_cast<std::size_t>(box.dimension()));
    for (int k = 0; k < box.dimension(); ++k) {
        p[static_cast<std::size_t>(k)] = gen.uniform(1, box.extent(k + 1));
    }
    return p;
}

inline MultiIndex random_index(Gen& gen, int dimension, int degree) {
    const auto all = multi_indices(dimension, degree);
    return all[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(all.size()) - 1))];
}

/// Chain of `terms` random cells with bases in `region`.
template <CommutativeRing R>
Chain<R> random_chain(const R& ring, const Box& region, int degree, int terms, Gen& gen) {
    std::vector<std::pair<Cell, typename R::value_type>> out;
    for (int k = 0; k < terms; ++k) {
        out.emplace_back(Cell{random_point(gen, region), random_index(gen, region.dimension(), degree)},
                         random_scalar(ring, gen));
    }
    return Chain<R>(ring, region.dimension(), degree, out);
}

/// Calls f(ring) for ℤ, ℚ and ℤ/7.
template <class F>
void for_each_exact_ring(F&& f) {
    f(IntegerRing{});
    f(RationalRing{});
    f(ModularRing{7});
}

}  // namespace dexc::testing
