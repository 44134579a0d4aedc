#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dexc/oracle.hpp"
#include "support.hpp"

using namespace dexc;
using namespace dexc::oracle;
using testing::Gen;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
    RationalVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (int x : xs) {
        v(i++) = Rational(x);
    }
    return v;
}

bool entries_are_units(const RationalMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (x != 0 && x != 1 && x != -1) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("one-dimensional difference matrix") {
    const auto d = exterior_derivative_matrix(Box({3}), 0);
    RationalMatrix expected(2, 3);
    expected << Rational(-1), Rational(1), Rational(0), Rational(0), Rational(-1), Rational(1);
    CHECK(d.entries == expected);
    CHECK(d.codomain == Box({2}));
    CHECK(d.target_degree == 1);

    const auto ker = kernel_basis(d.entries);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] / ker[0](0) == vec({1, 1, 1}));
    CHECK(rank(d.entries) == 2);
    CHECK(in_image(d.entries, vec({5, -2})));
}

TEST_CASE("D matrices reproduce exterior_derivative") {
    Gen gen(61);
    RationalRing q;
    for (int trial = 0; trial < 50; ++trial) {
        const int d = gen.uniform(1, 4);
        const int deg = gen.uniform(0, d - 1);
        const Box box = testing::random_box(gen, d, 2, 4);
        const auto m = exterior_derivative_matrix(box, deg);
        CHECK(entries_are_units(m.entries));
        const auto w = testing::random_form(q, box, deg, gen);
        CHECK(m.entries * flatten(w) == flatten(exterior_derivative(w)));
        CHECK(unflatten(box, deg, flatten(w)) == w);
    }
}

TEST_CASE("D after D vanishes as matrices") {
    for (int d = 2; d <= 4; ++d) {
        const Box box(std::vector<int>(static_cast<std::size_t>(d), 3));
        for (int deg = 0; deg + 2 <= d; ++deg) {
            const auto first = exterior_derivative_matrix(box, deg);
            const auto second = exterior_derivative_matrix(first.codomain, deg + 1);
            CHECK((second.entries * first.entries).isZero());
        }
    }
}

TEST_CASE("boundary matrices reproduce chains") {
    Gen gen(67);
    RationalRing q;
    for (int trial = 0; trial < 30; ++trial) {
        const int d = gen.uniform(1, 4);
        const int deg = gen.uniform(1, d);
        const Box region = testing::random_box(gen, d, 1, 3);
        const auto m = boundary_matrix(region, deg);
        CHECK(entries_are_units(m.entries));
        CHECK(m.codomain == region.grow());
        const auto c = testing::random_chain(q, region, deg, gen.uniform(1, 5), gen);
        CHECK(m.entries * flatten(c, region) == flatten(boundary(c), region.grow()));
    }
    const auto c = Chain<RationalRing>::single(q, 2, Cell{Point{3, 1}, {1}});
    CHECK_THROWS_AS(flatten(c, Box({2, 2})), OutOfDomainError);
}

TEST_CASE("in_image on exact vectors") {
    Gen gen(71);
    RationalRing q;
    for (int trial = 0; trial < 15; ++trial) {
        const int d = gen.uniform(1, 3);
        const int deg = gen.uniform(0, d - 1);
        const Box box = testing::random_box(gen, d, 2, 3);
        const auto m = exterior_derivative_matrix(box, deg);
        CHECK(in_image(m.entries, flatten(exterior_derivative(testing::random_form(q, box, deg, gen)))));
    }
    // D_2 maps the 1-forms of a 2x2 box onto the single square.
    CHECK(in_image(exterior_derivative_matrix(Box({2, 2}), 1).entries, vec({1})));

    // f1 = 1 at (1,1) and zero elsewhere is not closed, so it is no gradient.
    const auto g = exterior_derivative_matrix(Box({3, 3}), 0);
    RationalVector v = RationalVector::Zero(g.entries.rows());
    v(0) = 1;
    CHECK_FALSE((exterior_derivative_matrix(g.codomain, 1).entries * v).isZero());
    CHECK_FALSE(in_image(g.entries, v));
}

TEST_CASE("gradient kernel is the constants") {
    for (const Box& box : {Box({3}), Box({2, 3}), Box({3, 3, 3}), Box({1, 4})}) {
        const auto g = gradient_matrix(box);
        const auto ker = kernel_basis(g.entries);
        REQUIRE(ker.size() == 1);
        CHECK(ker[0] / ker[0](0) == RationalVector::Ones(static_cast<Eigen::Index>(box.size())));
    }
}

TEST_CASE("exactness on the 3x3x3 box") {
    const Box box({3, 3, 3});
    const std::size_t restricted[] = {1, 19, 23, 8};
    const std::size_t image[] = {0, 19, 23, 8};
    for (int q = 0; q <= 3; ++q) {
        const auto report = certify_exactness(box, q);
        CHECK(report.degree == q);
        CHECK(report.restricted_kernel_dim == restricted[q]);
        CHECK(report.image_dim == image[q]);
        CHECK(report.exact());
        if (q == 0) {
            CHECK(report.constants_only);
        } else {
            CHECK(report.kernel_in_image);
        }
    }
    // Each closed-basis element really is closed.
    for (const auto& w : closed_form_basis(box, 1)) {
        CHECK(exterior_derivative(w).is_zero());
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(exterior_derivative_matrix(Box({20, 20, 20}), 1), ResourceError);
    CHECK_NOTHROW(exterior_derivative_matrix(Box({10, 10}), 1));
}
