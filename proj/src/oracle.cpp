#include "dexc/oracle.hpp"

#include <string>
#include <utility>

namespace dexc::oracle {

namespace {

using Index = Eigen::Index;

void check_size(std::size_t rows, std::size_t cols) {
    if (rows > kMaxUnknowns || cols > kMaxUnknowns) {
        throw ResourceError("oracle matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds the cap of " + std::to_string(kMaxUnknowns));
    }
}

RationalMatrix zeros(std::size_t rows, std::size_t cols) {
    check_size(rows, cols);
    return RationalMatrix::Zero(static_cast<Index>(rows), static_cast<Index>(cols));
}

Index slot(const Box& box, const MultiIndex& index, std::span<const int> point) {
    return static_cast<Index>(lex_rank(index, box.dimension()) * box.size() + box.offset(point));
}

Point shifted(Point p, int axis) {
    ++p[static_cast<std::size_t>(axis - 1)];
    return p;
}

struct Reduced {
    RationalMatrix m;
    std::vector<Index> pivot_cols;
};

// Gauss–Jordan to reduced row echelon form.
Reduced reduce(RationalMatrix m) {
    check_size(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.row(row).swap(m.row(pivot));
        const Rational inv = Rational(1) / m(row, col);
        for (Index c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) {
                continue;
            }
            const Rational factor = m(r, col);
            for (Index c = col; c < m.cols(); ++c) {
                m(r, c) -= factor * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

LinearMapMatrix exterior_derivative_matrix(const Box& domain, int degree) {
    const int d = domain.dimension();
    if (degree < 0 || degree >= d) {
        throw DegreeError("no D on degree-" + std::to_string(degree) + " forms in dimension " +
                          std::to_string(d));
    }
    const Box target = domain.shrink();
    RationalMatrix m = zeros(binomial(d, degree + 1) * target.size(), binomial(d, degree) * domain.size());
    for (const MultiIndex& out : multi_indices(d, degree + 1)) {
        target.for_each_point([&](const Point& a, std::size_t) {
            const Index row = slot(target, out, a);
            for (std::size_t k = 0; k < out.size(); ++k) {
                const int axis = out[k];
                const MultiIndex in = out.without(axis);
                const int sign = k % 2 == 0 ? 1 : -1;
                m(row, slot(domain, in, shifted(a, axis))) += sign;
                m(row, slot(domain, in, a)) -= sign;
            }
        });
    }
    return {std::move(m), domain, degree, target, degree + 1};
}

LinearMapMatrix boundary_matrix(const Box& region, int degree) {
    const int d = region.dimension();
    if (degree < 1 || degree > d) {
        throw DegreeError("no boundary on degree-" + std::to_string(degree) + " chains");
    }
    const Box target = region.grow();
    RationalMatrix m = zeros(binomial(d, degree - 1) * target.size(), binomial(d, degree) * region.size());
    for (const MultiIndex& dirs : multi_indices(d, degree)) {
        region.for_each_point([&](const Point& a, std::size_t) {
            const Index col = slot(region, dirs, a);
            for (int axis : dirs) {
                const MultiIndex face = dirs.without(axis);
                const int sign = sign_s(dirs, axis);
                m(slot(target, face, shifted(a, axis)), col) += sign;
                m(slot(target, face, a), col) -= sign;
            }
        });
    }
    return {std::move(m), region, degree, target, degree - 1};
}

LinearMapMatrix restriction_matrix(const Box& domain, int degree, const Box& sub) {
    if (!sub.fits_in(domain)) {
        throw CompatibilityError("restriction target does not fit in the domain");
    }
    const int d = domain.dimension();
    RationalMatrix m = zeros(binomial(d, degree) * sub.size(), binomial(d, degree) * domain.size());
    for (const MultiIndex& index : multi_indices(d, degree)) {
        sub.for_each_point([&](const Point& a, std::size_t) {
            m(slot(sub, index, a), slot(domain, index, a)) = 1;
        });
    }
    return {std::move(m), domain, degree, sub, degree};
}

LinearMapMatrix gradient_matrix(const Box& domain) {
    const int d = domain.dimension();
    std::size_t rows = 0;
    for (int axis = 1; axis <= d; ++axis) {
        if (domain.extent(axis) >= 2) {
            rows += domain.shrink_axis(axis).size();
        }
    }
    RationalMatrix m = zeros(rows, domain.size());
    Index row = 0;
    for (int axis = 1; axis <= d; ++axis) {
        if (domain.extent(axis) < 2) {
            continue;
        }
        domain.shrink_axis(axis).for_each_point([&](const Point& a, std::size_t) {
            m(row, static_cast<Index>(domain.offset(shifted(a, axis)))) += 1;
            m(row, static_cast<Index>(domain.offset(a))) -= 1;
            ++row;
        });
    }
    return {std::move(m), domain, 0, domain, 1};
}

RationalVector flatten(const GridForm<RationalRing>& form) {
    RationalVector v(static_cast<Index>(form.component_count() * form.box().size()));
    Index k = 0;
    for (const auto& grid : form.components()) {
        for (const auto& x : grid) {
            v(k++) = x;
        }
    }
    return v;
}

GridForm<RationalRing> unflatten(const Box& box, int degree, const RationalVector& v) {
    const std::size_t n = binomial(box.dimension(), degree);
    if (static_cast<std::size_t>(v.size()) != n * box.size()) {
        throw ValidationError("vector length does not match a degree-" + std::to_string(degree) +
                              " form on " + to_string(box));
    }
    std::vector<GridForm<RationalRing>::Grid> comps(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < box.size(); ++i) {
            comps[k].push_back(v(static_cast<Index>(k * box.size() + i)));
        }
    }
    return GridForm<RationalRing>(RationalRing{}, box, degree, std::move(comps));
}

RationalVector flatten(const Chain<RationalRing>& chain, const Box& region) {
    if (region.dimension() != chain.dimension()) {
        throw CompatibilityError("chain and region differ in dimension");
    }
    RationalVector v = RationalVector::Zero(
        static_cast<Index>(binomial(chain.dimension(), chain.degree()) * region.size()));
    for (const auto& [cell, coeff] : chain.terms()) {
        if (!region.contains(cell.base)) {
            throw OutOfDomainError("cell " + to_string(cell) + " outside region " + to_string(region));
        }
        v(slot(region, cell.dirs, cell.base)) += coeff;
    }
    return v;
}

std::size_t rank(const RationalMatrix& m) {
    return reduce(m).pivot_cols.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const Reduced red = reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index c : red.pivot_cols) {
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    std::vector<RationalVector> basis;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) {
            continue;
        }
        RationalVector v = RationalVector::Zero(m.cols());
        v(free) = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
            v(red.pivot_cols[r]) = -red.m(static_cast<Index>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_image(const RationalMatrix& m, const RationalVector& v) {
    if (v.size() != m.rows()) {
        throw ValidationError("vector length does not match the matrix codomain");
    }
    RationalMatrix augmented(m.rows(), m.cols() + 1);
    augmented << m, v;
    const Reduced red = reduce(std::move(augmented));
    return red.pivot_cols.empty() || red.pivot_cols.back() != m.cols();
}

std::vector<GridForm<RationalRing>> closed_form_basis(const Box& box, int degree) {
    const int d = box.dimension();
    std::vector<GridForm<RationalRing>> out;
    if (degree == d) {
        const std::size_t n = box.size();
        check_size(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            RationalVector v = RationalVector::Zero(static_cast<Index>(n));
            v(static_cast<Index>(i)) = 1;
            out.push_back(unflatten(box, degree, v));
        }
        return out;
    }
    for (const RationalVector& v : kernel_basis(exterior_derivative_matrix(box, degree).entries)) {
        out.push_back(unflatten(box, degree, v));
    }
    return out;
}

bool ExactnessReport::exact() const {
    if (degree == 0) {
        return restricted_kernel_dim == 1 && constants_only;
    }
    return restricted_kernel_dim == image_dim && kernel_in_image;
}

ExactnessReport certify_exactness(const Box& box, int degree) {
    const int d = box.dimension();
    if (degree < 0 || degree > d) {
        throw DegreeError("degree " + std::to_string(degree) + " outside 0.." + std::to_string(d));
    }
    ExactnessReport report;
    report.degree = degree;
    const Box inner = box.shrink();

    const auto closed = closed_form_basis(box, degree);
    report.kernel_dim = closed.size();

    const RationalMatrix restrict = restriction_matrix(box, degree, inner).entries;
    RationalMatrix restricted(restrict.rows(), static_cast<Index>(closed.size()));
    for (std::size_t k = 0; k < closed.size(); ++k) {
        restricted.col(static_cast<Index>(k)) = restrict * flatten(closed[k]);
    }
    report.restricted_kernel_dim = rank(restricted);

    if (degree == 0) {
        // Every restricted closed function must be a multiple of the all-ones grid.
        bool constants = true;
        for (Index k = 0; k < restricted.cols() && constants; ++k) {
            for (Index i = 1; i < restricted.rows(); ++i) {
                if (restricted(i, k) != restricted(0, k)) {
                    constants = false;
                    break;
                }
            }
        }
        report.constants_only = constants;
        report.kernel_in_image = true;
        return report;
    }

    const RationalMatrix image = exterior_derivative_matrix(box, degree - 1).entries;
    report.image_dim = rank(image);
    report.kernel_in_image = true;
    for (Index k = 0; k < restricted.cols(); ++k) {
        if (!in_image(image, restricted.col(k))) {
            report.kernel_in_image = false;
            break;
        }
    }
    return report;
}

}  // namespace dexc::oracle
