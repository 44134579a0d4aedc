#pragma once

// Brute-force linear algebra over ℚ for small boxes. The operators D and D'
// are written out as explicit matrices, built straight from their defining
// formulas, and kernels/images are computed by exact Gauss–Jordan
// elimination.
//
// Unknowns are enumerated by multi-index in lexicographic order, then by
// point in row-major order (last axis fastest). This is the storage order
// of GridForm components, so flatten() is a plain concatenation.

#include <cstddef>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "dexc/chains.hpp"
#include "dexc/forms.hpp"
#include "dexc/lattice.hpp"
#include "dexc/ring.hpp"

namespace dexc::oracle {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Largest row or column count the oracle accepts.
inline constexpr std::size_t kMaxUnknowns = 2000;

struct LinearMapMatrix {
    RationalMatrix entries;
    Box domain;
    int source_degree = 0;
    Box codomain;
    int target_degree = 0;
};

/// D on degree-`degree` forms over `domain`, landing on shrink(domain).
LinearMapMatrix exterior_derivative_matrix(const Box& domain, int degree);

/// D' from degree-`degree` chains with bases in `region` to degree−1 chains
/// with bases in region.grow().
LinearMapMatrix boundary_matrix(const Box& region, int degree);

/// Restriction of degree-`degree` forms from `domain` to the corner sub-box `sub`.
LinearMapMatrix restriction_matrix(const Box& domain, int degree, const Box& sub);

/// All per-axis differences ∂_1 f, …, ∂_d f stacked; each ∂_i is taken on the
/// box shrunk in axis i only. Its kernel is exactly the constant grids.
LinearMapMatrix gradient_matrix(const Box& domain);

RationalVector flatten(const GridForm<RationalRing>& form);
GridForm<RationalRing> unflatten(const Box& box, int degree, const RationalVector& v);

/// Cells are indexed like forms over `region`; OutOfDomainError if a base
/// falls outside it.
RationalVector flatten(const Chain<RationalRing>& chain, const Box& region);

std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
bool in_image(const RationalMatrix& m, const RationalVector& v);

/// Kernel of D on degree-q forms over `box` (every form when q = d), as forms.
std::vector<GridForm<RationalRing>> closed_form_basis(const Box& box, int degree);

struct ExactnessReport {
    int degree = 0;
    /// dim Ker(D on Ω^q(box)); all of Ω^q(box) when q = d.
    std::size_t kernel_dim = 0;
    /// dim of that kernel after restriction to shrink(box).
    std::size_t restricted_kernel_dim = 0;
    /// dim Im(D: Ω^{q−1}(box) → Ω^q(shrink box)); 0 when q = 0.
    std::size_t image_dim = 0;
    /// Every restricted kernel basis vector lies in that image (q ≥ 1).
    bool kernel_in_image = false;
    /// For q = 0, the restricted kernel is spanned by the all-ones grid.
    bool constants_only = false;

    /// H^0 = R for q = 0, H^q = 0 for q ≥ 1.
    bool exact() const;
};

/// Certifies exactness at degree q on `box`: closed forms restricted to
/// shrink(box) coincide with the image of D there.
ExactnessReport certify_exactness(const Box& box, int degree);

}  // namespace dexc::oracle
