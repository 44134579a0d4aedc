#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dexc/poincare.hpp"
#include "support.hpp"

using namespace dexc;
using testing::Gen;

namespace {

using ZForm = GridForm<IntegerRing>;

// ω = n2 dx1 + n1 dx2 on n×n.
ZForm worked_example(int n) {
    return ZForm::generate(IntegerRing{}, Box({n, n}), 1, [](const MultiIndex& I, const Point& p) {
        return Integer(I[0] == 1 ? p[1] : p[0]);
    });
}

template <CommutativeRing R>
bool constant_grid(const GridForm<R>& f) {
    auto g = f.component(0);
    for (const auto& v : g) {
        if (!f.ring().eq(v, g[0])) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("check_closed") {
    CHECK(check_closed(worked_example(4)));
    const auto bad = ZForm::generate(IntegerRing{}, Box({4, 4}), 1, [](const MultiIndex& I, const Point& p) {
        return Integer(I[0] == 1 ? p[0] * p[1] : 0);
    });
    CHECK_FALSE(check_closed(bad));
    const auto v = find_closedness_violation(bad);
    REQUIRE(v);
    CHECK(v->component == MultiIndex{1, 2});
    CHECK(v->point == Point{1, 1});

    CHECK(check_closed(ZForm::generate(IntegerRing{}, Box({2, 3}), 2,
                                       [](const MultiIndex&, const Point& p) { return Integer(p[0]); })));
    CHECK_THROWS_AS(check_closed(ZForm::zero({}, Box({1, 3}), 0)), EmptyDomainError);

    Gen gen(3);
    testing::for_each_exact_ring([&](const auto& r) {
        for (int trial = 0; trial < 10; ++trial) {
            const int d = gen.uniform(1, 4);
            const int q = gen.uniform(0, d - 1);
            CHECK(check_closed(exterior_derivative(testing::random_form(r, testing::random_box(gen, d, 3, 4), q, gen))));
        }
    });
}

TEST_CASE("pullback and restriction") {
    IntegerRing z;
    const auto c = ZForm::generate(z, Box({2, 2}), 0, [](const MultiIndex&, const Point&) { return Integer(5); });
    const auto pc = pullback_cylinder(c, 3);
    CHECK(pc.box() == Box({2, 2, 3}));
    CHECK(constant_grid(pc));
    CHECK(pc.at(MultiIndex{}, Point{2, 1, 3}) == 5);

    const auto line = ZForm::generate(z, Box({3}), 0, [](const MultiIndex&, const Point& p) { return Integer(p[0]); });
    const auto g = pullback_cylinder(line, 2);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 1; t <= 2; ++t) {
            CHECK(g.at(MultiIndex{}, Point{n, t}) == n);
        }
    }
    CHECK_THROWS_AS(pullback_cylinder(line, 0), ValidationError);

    const auto vertical = ZForm::generate(z, Box({3, 3}), 1, [](const MultiIndex& I, const Point& p) {
        return Integer(I[0] == 2 ? p[0] + 7 * p[1] : 0);
    });
    CHECK(restrict_base(vertical).is_zero());

    const auto sq = ZForm::generate(z, Box({3, 4}), 1, [](const MultiIndex& I, const Point& p) {
        return Integer(I[0] == 1 ? p[0] * p[0] + 10 * (p[1] - 1) : 1);
    });
    const auto base = restrict_base(sq);
    CHECK(base.box() == Box({3}));
    for (int n = 1; n <= 3; ++n) {
        CHECK(base.at(MultiIndex{1}, Point{n}) == n * n);
    }
    CHECK_THROWS_AS(restrict_base(line), EmptyDomainError);
    CHECK_THROWS_AS(restrict_base(ZForm::zero(z, Box({2, 2}), 2)), DegreeError);

    Gen gen(5);
    testing::for_each_exact_ring([&](const auto& r) {
        for (int trial = 0; trial < 15; ++trial) {
            const int d = gen.uniform(1, 4);
            const Box box = testing::random_box(gen, d, 2, 4);
            const int q = gen.uniform(0, d);
            const auto w = testing::random_form(r, box, q, gen);
            const int h = gen.uniform(2, 4);
            CHECK(restrict_base(pullback_cylinder(w, h)) == w);
            if (q < d) {
                CHECK(exterior_derivative(pullback_cylinder(w, h)) == pullback_cylinder(exterior_derivative(w), h - 1));
            }
            const auto cyl = testing::random_form(r, testing::random_box(gen, d + 1, 2, 4), q, gen);
            if (q + 1 <= d) {
                CHECK(restrict_base(exterior_derivative(cyl)) == exterior_derivative(restrict_base(cyl)));
            }
        }
    });
}

TEST_CASE("homotopy operator") {
    IntegerRing z;
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> ext(static_cast<std::size_t>(d + 1), 3);
        ext.back() = 4;
        const auto w = ZForm::generate(z, Box(ext), 1, [&](const MultiIndex& I, const Point&) {
            return Integer(I[0] == d + 1 ? 1 : 0);
        });
        const auto k = homotopy_K(w);
        CHECK(k.degree() == 0);
        k.box().for_each_point([&](const Point& p, std::size_t) { CHECK(k.at(MultiIndex{}, p) == p.back() - 1); });
    }

    const auto horizontal = ZForm::generate(z, Box({3, 3, 3}), 2, [](const MultiIndex& I, const Point& p) {
        return Integer(I == MultiIndex{1, 2} ? p[0] * p[2] : 0);
    });
    CHECK(homotopy_K(horizontal).is_zero());
    CHECK_THROWS_AS(homotopy_K(ZForm::zero(z, Box({2, 2}), 0)), DegreeError);

    SUBCASE("sign on dx1∧dx3 in three dimensions") {
        // dx1∧dx3 = −dx3∧dx1, so K sends g dx1∧dx3 to −(Σ g) dx1.
        const auto w = ZForm::generate(z, Box({2, 2, 3}), 2, [](const MultiIndex& I, const Point&) {
            return Integer(I == MultiIndex{1, 3} ? 1 : 0);
        });
        const auto k = homotopy_K(w);
        CHECK(k.at(MultiIndex{1}, Point{1, 1, 3}) == -2);
        CHECK(k.at(MultiIndex{2}, Point{1, 1, 3}) == 0);
    }

    SUBCASE("Id − π*s* = DK + KD on the shrunken cylinder") {
        Gen gen(7);
        testing::for_each_exact_ring([&](const auto& r) {
            for (int trial = 0; trial < 30; ++trial) {
                const int d = gen.uniform(1, 4);
                const int q = gen.uniform(1, d);
                const Box cyl = testing::random_box(gen, d + 1, 2, 4);
                const auto w = testing::random_form(r, cyl, q, gen);
                const auto lhs = restrict_to(w - pullback_cylinder(restrict_base(w), cyl.extent(d + 1)), cyl.shrink());
                const auto rhs = exterior_derivative(homotopy_K(w)) + homotopy_K(exterior_derivative(w));
                CHECK(lhs == rhs);
            }
        });
    }
}

TEST_CASE("solve_potential") {
    const auto result = solve_potential(worked_example(4));
    CHECK(result.guarantee_box == Box({3, 3}));
    CHECK(result.potential.box() == Box({4, 4}));
    result.potential.box().for_each_point([&](const Point& p, std::size_t) {
        CHECK(result.potential.at(MultiIndex{}, p) == p[0] * p[1] - 1);
    });
    CHECK(exterior_derivative(result.potential) == restrict_to(worked_example(4), result.guarantee_box));

    IntegerRing z;
    CHECK(solve_potential(ZForm::zero(z, Box({3, 3, 3}), 2)).potential.is_zero());
    CHECK_THROWS_AS(solve_potential(ZForm::zero(z, Box({3, 3}), 0)), DegreeError);
    CHECK_THROWS_AS(solve_potential(ZForm::zero(z, Box({1, 3}), 1)), EmptyDomainError);

    SUBCASE("not closed") {
        auto bad = ZForm::generate(z, Box({3, 3}), 1, [](const MultiIndex& I, const Point& p) {
            return Integer(I[0] == 1 ? p[0] * p[1] : 0);
        });
        try {
            solve_potential(bad);
            FAIL("expected NotClosedError");
        } catch (const NotClosedError& e) {
            CHECK(e.component() == MultiIndex{1, 2});
            CHECK(e.point() == Point{1, 1});
        }
    }

    SUBCASE("exact inputs") {
        Gen gen(11);
        testing::for_each_exact_ring([&](const auto& r) {
            for (int trial = 0; trial < 25; ++trial) {
                const int d = gen.uniform(1, 4);
                const int q = gen.uniform(1, d);
                const Box box = testing::random_box(gen, d, 3, 5);
                const auto eta = testing::random_form(r, box, q - 1, gen);
                const auto w = exterior_derivative(eta);
                const auto res = solve_potential(w);
                CHECK(res.guarantee_box == w.box().shrink());
                CHECK(exterior_derivative(res.potential) == restrict_to(w, res.guarantee_box));
            }
        });
    }

    SUBCASE("linear in the input") {
        Gen gen(13);
        RationalRing qr;
        for (int trial = 0; trial < 10; ++trial) {
            const int d = gen.uniform(2, 4);
            const int q = gen.uniform(1, d);
            const Box box = testing::random_box(gen, d, 3, 4);
            const auto a = exterior_derivative(testing::random_form(qr, box, q - 1, gen));
            const auto b = exterior_derivative(testing::random_form(qr, box, q - 1, gen));
            const auto s = testing::random_scalar(qr, gen);
            CHECK(solve_potential(scale(s, a) + b).potential ==
                  scale(s, solve_potential(a).potential) + solve_potential(b).potential);
        }
    }
}

TEST_CASE("path-sum potential") {
    const auto f = pathsum_scalar_potential(worked_example(5));
    f.box().for_each_point([&](const Point& p, std::size_t) { CHECK(f.at(MultiIndex{}, p) == p[0] * p[1] - 1); });

    IntegerRing z;
    CHECK(pathsum_scalar_potential(ZForm::zero(z, Box({3, 2, 4}), 1)).is_zero());
    CHECK_THROWS_AS(pathsum_scalar_potential(ZForm::zero(z, Box({3, 3}), 2)), DegreeError);
    CHECK_THROWS_AS(pathsum_scalar_potential(ZForm::generate(z, Box({3, 3}), 1,
                                                             [](const MultiIndex& I, const Point& p) {
                                                                 return Integer(I[0] == 1 ? p[0] * p[1] : 0);
                                                             })),
                    NotClosedError);

    SUBCASE("separate scalar grids") {
        const std::vector<ZForm> fields{
            ZForm::generate(z, Box({4, 4}), 0, [](const MultiIndex&, const Point& p) { return Integer(p[1]); }),
            ZForm::generate(z, Box({4, 4}), 0, [](const MultiIndex&, const Point& p) { return Integer(p[0]); })};
        CHECK(pathsum_scalar_potential(std::span<const ZForm>(fields)) == pathsum_scalar_potential(worked_example(4)));
        const std::vector<ZForm> one{fields[0]};
        CHECK_THROWS_AS(pathsum_scalar_potential(std::span<const ZForm>(one)), ValidationError);
    }

    SUBCASE("differs from the homotopy potential by a constant") {
        Gen gen(19);
        testing::for_each_exact_ring([&](const auto& r) {
            for (int trial = 0; trial < 15; ++trial) {
                const int d = gen.uniform(1, 4);
                const Box box = testing::random_box(gen, d, 3, 5);
                const auto w = exterior_derivative(testing::random_form(r, box, 0, gen));
                const auto F = pathsum_scalar_potential(w);
                CHECK(exterior_derivative(F) == restrict_to(w, w.box().shrink()));
                // Both potentials agree up to a constant on shrink(w.box) where D pins them.
                const Box where = w.box().shrink();
                CHECK(constant_grid(restrict_to(F - solve_potential(w).potential, where)));
            }
        });
    }
}

TEST_CASE("h0 kernel check") {
    IntegerRing z;
    auto constant = ZForm::generate(z, Box({3, 3}), 0, [](const MultiIndex&, const Point&) { return Integer(4); });
    CHECK(h0_kernel_check(constant));
    CHECK_FALSE(h0_kernel_check(ZForm::generate(z, Box({3, 3}), 0,
                                                [](const MultiIndex&, const Point& p) { return Integer(p[0]); })));
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            auto perturbed = ZForm::generate(z, Box({3, 3}), 0, [&](const MultiIndex&, const Point& p) {
                return Integer(p == Point{i, j} ? 5 : 4);
            });
            CHECK_FALSE(h0_kernel_check(perturbed));
        }
    }
    CHECK(h0_kernel_check(ZForm::generate(z, Box({1, 3}), 0, [](const MultiIndex&, const Point& p) {
        return Integer(p[0] == 1 ? 2 : 0);
    })));
    CHECK_THROWS_AS(h0_kernel_check(ZForm::zero(z, Box({2, 2}), 1)), DegreeError);

    Gen gen(31);
    testing::for_each_exact_ring([&](const auto& r) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = testing::random_form(r, testing::random_box(gen, gen.uniform(1, 3), 2, 3), 0, gen);
            CHECK(h0_kernel_check(f) == constant_grid(f));
        }
    });
}
