#include "tsv/json_codec.hpp"

#include "tsv/expression.hpp"

#include <charconv>
#include <fstream>

namespace tsv {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *key) {
    if (!j.is_object())
        throw CodecError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw CodecError(std::string("missing field \"") + key + "\"");
    return *it;
}

Scalar scalar_field(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_string())
        throw CodecError(std::string("field \"") + key + "\" must be a string scalar");
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const std::exception &e) {
        throw CodecError(std::string("field \"") + key + "\": " + e.what());
    }
}

Element element_value(const json &v, const std::string &where) {
    if (!v.is_string())
        throw CodecError(where + " must be an element string");
    try {
        return parse_element(v.get<std::string>());
    } catch (const SyntaxError &e) {
        throw CodecError(where + ": " + e.what());
    }
}

json seq_to_json(const FiniteSupportSeq &s) {
    json out = json::object();
    for (const auto &[k, v] : s)
        out[std::to_string(k)] = v.str();
    return out;
}

FiniteSupportSeq seq_from_json(const json &j, const char *key) {
    const json &obj = field(j, key);
    if (!obj.is_object())
        throw CodecError(std::string("field \"") + key + "\" must be an object");
    FiniteSupportSeq out;
    for (const auto &[k, v] : obj.items()) {
        std::int64_t idx = 0;
        auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), idx);
        if (ec != std::errc() || ptr != k.data() + k.size() || idx == 0)
            throw CodecError(std::string("\"") + key + "\" keys must be nonzero integers, got \"" + k + "\"");
        if (!v.is_string())
            throw CodecError(std::string("\"") + key + "\" values must be string scalars");
        try {
            out.set(idx, Scalar::parse(v.get<std::string>()));
        } catch (const ScalarParseError &e) {
            throw CodecError(std::string("\"") + key + "[" + k + "]\": " + e.what());
        }
    }
    return out;
}

} // namespace

json to_json(const AutomorphismParams &p) {
    return json{{"b", seq_to_json(p.b)},         {"c", seq_to_json(p.c)},   {"i", p.i},
                {"u", p.u.str()},                {"w", p.w.str()},          {"alpha", p.alpha.str()},
                {"beta", p.beta.str()},          {"gamma", p.gamma.str()}};
}

AutomorphismParams automorphism_from_json(const json &j) {
    AutomorphismParams p;
    p.b = seq_from_json(j, "b");
    p.c = seq_from_json(j, "c");
    const json &i = field(j, "i");
    if (!i.is_number_integer() || (i.get<int>() != 0 && i.get<int>() != 1))
        throw CodecError("field \"i\" must be 0 or 1");
    p.i = i.get<int>();
    p.u = scalar_field(j, "u");
    p.w = scalar_field(j, "w");
    p.alpha = scalar_field(j, "alpha");
    p.beta = scalar_field(j, "beta");
    p.gamma = scalar_field(j, "gamma");
    try {
        p.validate();
    } catch (const std::invalid_argument &e) {
        throw CodecError(e.what());
    }
    return p;
}

json to_json(const ClassifiedDerivation &d) {
    return json{{"c1", d.c1.str()}, {"c2", d.c2.str()}, {"c3", d.c3.str()}, {"inner", to_string(d.inner)}};
}

ClassifiedDerivation derivation_from_json(const json &j) {
    ClassifiedDerivation d;
    d.c1 = scalar_field(j, "c1");
    d.c2 = scalar_field(j, "c2");
    d.c3 = scalar_field(j, "c3");
    d.inner = element_value(field(j, "inner"), "field \"inner\"");
    return d;
}

json to_json(const WindowMap &m) {
    json images = json::object();
    for (const auto &[b, img] : m.images())
        images[to_string(b)] = to_string(img);
    return json{{"radius", m.window().radius()}, {"images", images}};
}

WindowMap window_map_from_json(const json &j) {
    const json &r = field(j, "radius");
    if (!r.is_number_integer() || r.get<long long>() < 1 || r.get<long long>() > 1000000)
        throw CodecError("field \"radius\" must be a positive integer");
    const json &obj = field(j, "images");
    if (!obj.is_object())
        throw CodecError("field \"images\" must be an object");
    WindowMap::Images images;
    for (const auto &[k, v] : obj.items()) {
        BasisVector b;
        try {
            b = parse_basis(k);
        } catch (const SyntaxError &e) {
            throw CodecError("image key \"" + k + "\": " + e.what());
        }
        images[b] = element_value(v, "image of " + k);
    }
    try {
        return WindowMap(Window(r.get<int>()), std::move(images));
    } catch (const std::invalid_argument &e) {
        throw CodecError(e.what());
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw CodecError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw CodecError(path + ": " + e.what());
    }
}

} // namespace tsv
