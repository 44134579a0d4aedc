#pragma once

// JSON envelopes for forms, chains and 3-d vector fields. Ring elements are
// always strings so no value passes through a JSON number. Output key order
// is fixed, which makes serialization canonical.

#include <string>
#include <vector>

#include <json.hpp>

#include "dexc/chains.hpp"
#include "dexc/errors.hpp"
#include "dexc/forms.hpp"
#include "dexc/ring.hpp"
#include "dexc/vec3.hpp"

namespace dexc::io {

using Json = nlohmann::ordered_json;

Json ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const Json& j);

/// Ring of any envelope, without decoding the payload.
RingSpec peek_ring(const Json& j);
/// "form", "chain" or "vecfield3".
std::string peek_kind(const Json& j);

Json parse(const std::string& text);

namespace detail {

const Json& require(const Json& j, const char* key);
int require_int(const Json& j, const char* key);
std::vector<int> require_int_list(const Json& j, const char* key);
Box read_box(const Json& j);
const std::string& require_string(const Json& j, const char* what);

template <CommutativeRing R>
void check_ring(const Json& j, const R& ring) {
    if (!(ring_spec_from_json(require(j, "ring")) == ring.spec())) {
        throw RingMismatchError("document ring " + to_string(ring_spec_from_json(require(j, "ring"))) +
                                " differs from expected " + to_string(ring.spec()));
    }
}

template <CommutativeRing R>
Json grid_to_json(const R& ring, std::span<const typename R::value_type> grid) {
    Json arr = Json::array();
    for (const auto& v : grid) {
        arr.push_back(ring.format(v));
    }
    return arr;
}

template <CommutativeRing R>
typename GridForm<R>::Grid grid_from_json(const R& ring, const Json& arr, std::size_t expected) {
    if (!arr.is_array()) {
        throw FormatError("component must be an array of strings");
    }
    if (arr.size() != expected) {
        throw ValidationError("component has " + std::to_string(arr.size()) + " entries, expected " +
                              std::to_string(expected));
    }
    typename GridForm<R>::Grid grid;
    grid.reserve(expected);
    for (const auto& v : arr) {
        grid.push_back(ring.parse(require_string(v, "ring element")));
    }
    return grid;
}

}  // namespace detail

template <CommutativeRing R>
Json form_to_json(const GridForm<R>& form) {
    Json j;
    j["dimension"] = form.dimension();
    j["extents"] = form.box().extents();
    j["ring"] = ring_spec_to_json(form.ring().spec());
    j["degree"] = form.degree();
    Json comps = Json::object();
    const auto indices = form.indices();
    for (std::size_t k = 0; k < indices.size(); ++k) {
        comps[indices[k].key()] = detail::grid_to_json(form.ring(), form.component(k));
    }
    j["components"] = std::move(comps);
    return j;
}

template <CommutativeRing R>
GridForm<R> form_from_json(const Json& j, const R& ring) {
    if (peek_kind(j) != "form") {
        throw FormatError("expected a form document, got " + peek_kind(j));
    }
    detail::check_ring(j, ring);
    const Box box = detail::read_box(j);
    const int degree = detail::require_int(j, "degree");
    const Json& comps = detail::require(j, "components");
    if (!comps.is_object()) {
        throw FormatError("'components' must be an object");
    }
    std::map<MultiIndex, typename GridForm<R>::Grid> grids;
    for (const auto& [key, arr] : comps.items()) {
        MultiIndex index = MultiIndex::parse_key(key);
        if (static_cast<int>(index.size()) != degree || index.max() > box.dimension()) {
            throw ValidationError("component key '" + key + "' does not fit degree " +
                                  std::to_string(degree) + " in dimension " +
                                  std::to_string(box.dimension()));
        }
        grids.emplace(std::move(index), detail::grid_from_json(ring, arr, box.size()));
    }
    return make_form(ring, box, degree, std::move(grids));
}

template <CommutativeRing R>
Json chain_to_json(const Chain<R>& chain) {
    Json j;
    j["dimension"] = chain.dimension();
    j["degree"] = chain.degree();
    j["ring"] = ring_spec_to_json(chain.ring().spec());
    Json cells = Json::array();
    for (const auto& [cell, coeff] : chain.terms()) {
        Json c;
        c["base"] = cell.base;
        c["dirs"] = cell.dirs.indices();
        c["coeff"] = chain.ring().format(coeff);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    return j;
}

template <CommutativeRing R>
Chain<R> chain_from_json(const Json& j, const R& ring) {
    if (peek_kind(j) != "chain") {
        throw FormatError("expected a chain document, got " + peek_kind(j));
    }
    detail::check_ring(j, ring);
    const int dimension = detail::require_int(j, "dimension");
    const int degree = detail::require_int(j, "degree");
    const Json& cells = detail::require(j, "cells");
    if (!cells.is_array()) {
        throw FormatError("'cells' must be an array");
    }
    std::vector<std::pair<Cell, typename R::value_type>> terms;
    for (const Json& c : cells) {
        Cell cell{detail::require_int_list(c, "base"),
                  MultiIndex(detail::require_int_list(c, "dirs"))};
        terms.emplace_back(std::move(cell), ring.parse(detail::require_string(detail::require(c, "coeff"), "coeff")));
    }
    return Chain<R>(ring, dimension, degree, terms);
}

template <CommutativeRing R>
Json field_to_json(const VectorField3<R>& field) {
    Json j;
    j["kind"] = "vecfield3";
    j["dimension"] = 3;
    j["extents"] = field.box().extents();
    j["ring"] = ring_spec_to_json(field.ring().spec());
    Json comps = Json::object();
    for (int i = 1; i <= 3; ++i) {
        comps["a" + std::to_string(i)] =
            detail::grid_to_json(field.ring(), std::span(field.component(i)));
    }
    j["components"] = std::move(comps);
    return j;
}

template <CommutativeRing R>
VectorField3<R> field_from_json(const Json& j, const R& ring) {
    if (peek_kind(j) != "vecfield3") {
        throw FormatError("expected a vecfield3 document, got " + peek_kind(j));
    }
    detail::check_ring(j, ring);
    const Box box = detail::read_box(j);
    const Json& comps = detail::require(j, "components");
    if (!comps.is_object() || comps.size() != 3) {
        throw ValidationError("vecfield3 needs exactly the components a1, a2, a3");
    }
    return VectorField3<R>(ring, box,
                           {detail::grid_from_json(ring, detail::require(comps, "a1"), box.size()),
                            detail::grid_from_json(ring, detail::require(comps, "a2"), box.size()),
                            detail::grid_from_json(ring, detail::require(comps, "a3"), box.size())});
}

}  // namespace dexc::io
