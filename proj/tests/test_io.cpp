#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dexc/io.hpp"
#include "support.hpp"

using namespace dexc;
using namespace dexc::io;
using testing::Gen;

namespace {

template <CommutativeRing R>
VectorField3<R> random_field(const R& r, const Box& box, Gen& gen) {
    std::array<typename GridForm<R>::Grid, 3> comps;
    for (auto& g : comps) {
        for (std::size_t i = 0; i < box.size(); ++i) {
            g.push_back(testing::random_scalar(r, gen));
        }
    }
    return VectorField3<R>(r, box, std::move(comps));
}

template <CommutativeRing R>
void round_trips(const R& r, Gen& gen) {
    for (int trial = 0; trial < 10; ++trial) {
        const int d = gen.uniform(1, 4);
        const Box box = testing::random_box(gen, d, 1, 3);
        const auto w = testing::random_form(r, box, gen.uniform(0, d), gen);
        const std::string text = form_to_json(w).dump(2);
        const auto back = form_from_json(parse(text), r);
        CHECK(back == w);
        CHECK(form_to_json(back).dump(2) == text);

        const auto c = testing::random_chain(r, box, gen.uniform(0, d), gen.uniform(0, 4), gen);
        const std::string ctext = chain_to_json(c).dump();
        const auto cback = chain_from_json(parse(ctext), r);
        CHECK(cback == c);
        CHECK(chain_to_json(cback).dump() == ctext);

        const auto v = random_field(r, testing::random_box(gen, 3, 1, 3), gen);
        const std::string vtext = field_to_json(v).dump(2);
        CHECK(field_to_json(field_from_json(parse(vtext), r)).dump(2) == vtext);
    }
}

}  // namespace

TEST_CASE("documents re-serialize byte for byte") {
    Gen gen(73);
    testing::for_each_exact_ring([&](const auto& r) { round_trips(r, gen); });
    round_trips(FloatRing(1e-9), gen);
}

TEST_CASE("form layout") {
    const auto f = GridForm<IntegerRing>(IntegerRing{}, Box({2, 2}), 0, {{1, 2, 4, 8}});
    CHECK(form_to_json(f).dump() ==
          R"({"dimension":2,"extents":[2,2],"ring":{"kind":"integer"},"degree":0,"components":{"":["1","2","4","8"]}})");
    const auto m = GridForm<ModularRing>::zero(ModularRing(7), Box({1, 2}), 2);
    CHECK(form_to_json(m).dump() ==
          R"({"dimension":2,"extents":[1,2],"ring":{"kind":"modular","modulus":7},"degree":2,"components":{"1,2":["0","0"]}})");
    const auto c = Chain<RationalRing>::single(RationalRing{}, 2, Cell{Point{1, 2}, {2}});
    CHECK(chain_to_json(scale(Rational(-3, 4), c)).dump() ==
          R"({"dimension":2,"degree":1,"ring":{"kind":"rational"},"cells":[{"base":[1,2],"dirs":[2],"coeff":"-3/4"}]})");
}

TEST_CASE("envelope inspection") {
    CHECK(peek_kind(parse(R"({"cells":[]})")) == "chain");
    CHECK(peek_kind(parse(R"({"components":{}})")) == "form");
    CHECK(peek_kind(parse(R"({"kind":"vecfield3"})")) == "vecfield3");
    CHECK(peek_ring(parse(R"({"ring":{"kind":"modular","modulus":11}})")).modulus == 11);
    CHECK_THROWS_AS(peek_kind(parse("[1,2]")), FormatError);
    CHECK_THROWS_AS(parse("{\"dimension\": "), FormatError);
    CHECK_THROWS_AS(peek_ring(parse(R"({"ring":{"kind":"modular","modulus":1}})")), ConfigError);
    CHECK_THROWS_AS(peek_ring(parse(R"({"ring":{"kind":"modular","modulus":-5}})")), ConfigError);
    CHECK_THROWS_AS(peek_ring(parse(R"({"ring":{"kind":"octonion"}})")), ConfigError);
}

TEST_CASE("schema violations") {
    IntegerRing z;
    auto form = [](const char* text) { return parse(text); };
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":2,"extents":[2],"ring":{"kind":"integer"},"degree":0,"components":{"":["1","2"]}})"), z),
                    ValidationError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":1,"extents":[2],"ring":{"kind":"integer"},"degree":0,"components":{"":["1"]}})"), z),
                    ValidationError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":1,"extents":[2],"ring":{"kind":"integer"},"degree":0,"components":{"":[1,2]}})"), z),
                    FormatError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":1,"extents":[2],"ring":{"kind":"integer"},"degree":0,"components":{"":["1","x"]}})"), z),
                    FormatError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":1,"extents":[2],"ring":{"kind":"integer"},"degree":0})"), z),
                    FormatError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":2,"extents":[2,2],"ring":{"kind":"integer"},"degree":1,"components":{"1":["1","1","1","1"]}})"), z),
                    ValidationError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":2,"extents":[2,2],"ring":{"kind":"integer"},"degree":1,"components":{"2,1":["1","1","1","1"]}})"), z),
                    ValidationError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":1,"extents":[2],"ring":{"kind":"rational"},"degree":0,"components":{"":["1","2"]}})"), z),
                    RingMismatchError);
    CHECK_THROWS_AS(chain_from_json(form(R"({"dimension":2,"degree":1,"ring":{"kind":"integer"},"cells":[{"base":[1,1],"dirs":[3],"coeff":"1"}]})"), z),
                    ValidationError);
    CHECK_THROWS_AS(chain_from_json(form(R"({"dimension":2,"degree":1,"ring":{"kind":"integer"},"cells":[{"base":[1,1],"dirs":[1]}]})"), z),
                    FormatError);
    CHECK_THROWS_AS(form_from_json(form(R"({"dimension":2,"degree":1,"ring":{"kind":"integer"},"cells":[]})"), z),
                    FormatError);
    CHECK_THROWS_AS(field_from_json(form(R"({"kind":"vecfield3","dimension":3,"extents":[1,1,1],"ring":{"kind":"integer"},"components":{"a1":["1"],"a2":["1"]}})"), z),
                    ValidationError);
}
