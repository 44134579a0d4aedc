#include "dexc/io.hpp"

namespace dexc::io {

namespace detail {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer()) {
        throw FormatError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

std::vector<int> require_int_list(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_array()) {
        throw FormatError(std::string("field '") + key + "' must be an array of integers");
    }
    std::vector<int> out;
    for (const Json& x : v) {
        if (!x.is_number_integer()) {
            throw FormatError(std::string("field '") + key + "' must be an array of integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

const std::string& require_string(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw FormatError(std::string(what) + " must be a string");
    }
    return j.get_ref<const std::string&>();
}

Box read_box(const Json& j) {
    const int dimension = require_int(j, "dimension");
    std::vector<int> extents = require_int_list(j, "extents");
    if (static_cast<int>(extents.size()) != dimension) {
        throw ValidationError("'extents' has " + std::to_string(extents.size()) +
                              " entries but dimension is " + std::to_string(dimension));
    }
    return Box(std::move(extents));
}

}  // namespace detail

Json ring_spec_to_json(const RingSpec& spec) {
    Json j;
    j["kind"] = std::string(kind_name(spec.kind));
    if (spec.kind == RingKind::modular) {
        j["modulus"] = spec.modulus;
    } else if (spec.kind == RingKind::floating) {
        j["tolerance"] = spec.tolerance;
    }
    return j;
}

RingSpec ring_spec_from_json(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("'ring' must be an object");
    }
    RingSpec spec;
    spec.kind = parse_kind(detail::require_string(detail::require(j, "kind"), "ring kind"));
    if (spec.kind == RingKind::modular) {
        const Json& m = detail::require(j, "modulus");
        if (!m.is_number_unsigned()) {
            throw ConfigError("modulus must be a positive integer");
        }
        spec.modulus = m.get<std::uint64_t>();
    } else if (spec.kind == RingKind::floating) {
        const Json& t = detail::require(j, "tolerance");
        if (!t.is_number()) {
            throw ConfigError("tolerance must be a number");
        }
        spec.tolerance = t.get<double>();
    }
    validate(spec);
    return spec;
}

RingSpec peek_ring(const Json& j) {
    return ring_spec_from_json(detail::require(j, "ring"));
}

std::string peek_kind(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("document must be a JSON object");
    }
    if (j.contains("kind")) {
        return detail::require_string(j.at("kind"), "'kind'");
    }
    return j.contains("cells") ? "chain" : "form";
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace dexc::io
