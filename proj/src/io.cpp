#include "cohpol/io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace cohpol::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) known = known || it.key() == key;
        if (!known) fail(where, "unknown key '" + it.key() + "'");
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

double parse_number(const json& value, const std::string& where) {
    if (!value.is_number()) fail(where, "expected a number");
    const double v = value.get<double>();
    if (!std::isfinite(v)) fail(where, "number is not finite");
    return v;
}

Complex parse_complex(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 2) fail(where, "expected a complex number [re, im]");
    return {parse_number(value[0], where + "[0]"), parse_number(value[1], where + "[1]")};
}

PureState parse_pure(const json& obj, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object with keys a, b, c, d");
    reject_unknown_keys(obj, where, {"a", "b", "c", "d"});
    Vector4 v;
    const char* names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < kDim; ++i) v(i) = parse_complex(require(obj, names[i], where), where + "." + names[i]);
    try {
        return PureState(v);
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

Matrix4 parse_matrix(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != kDim) fail(where, "expected 4 rows");
    Matrix4 m;
    for (int r = 0; r < kDim; ++r) {
        const std::string row_where = where + "[" + std::to_string(r) + "]";
        const json& row = value[r];
        if (!row.is_array() || row.size() != kDim) fail(row_where, "expected 4 entries");
        for (int c = 0; c < kDim; ++c) m(r, c) = parse_complex(row[c], row_where + "[" + std::to_string(c) + "]");
    }
    return m;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

DensityMatrix parse_state(const json& doc) {
    if (!doc.is_object() || doc.size() != 1) {
        fail("state", "expected exactly one of 'pure', 'mixture' or 'matrix'");
    }
    reject_unknown_keys(doc, "state", {"pure", "mixture", "matrix"});

    if (doc.contains("pure")) return DensityMatrix::from_pure(parse_pure(doc["pure"], "state.pure"));

    if (doc.contains("mixture")) {
        const json& list = doc["mixture"];
        if (!list.is_array() || list.empty()) fail("state.mixture", "expected a non-empty array");
        std::vector<MixtureComponent> components;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = "state.mixture[" + std::to_string(i) + "]";
            const json& item = list[i];
            if (!item.is_object()) fail(where, "expected an object with keys weight, pure");
            reject_unknown_keys(item, where, {"weight", "pure"});
            const double w = parse_number(require(item, "weight", where), where + ".weight");
            components.push_back({w, parse_pure(require(item, "pure", where), where + ".pure")});
        }
        try {
            return DensityMatrix::from_mixture(MixtureSpec(std::move(components)));
        } catch (const InputError& e) {
            fail("state.mixture", e.what());
        }
    }

    const Matrix4 m = parse_matrix(doc["matrix"], "state.matrix");
    try {
        return DensityMatrix::validate(m);
    } catch (const ValidationError& e) {
        fail("state.matrix", e.what());
    }
}

DensityMatrix load_state(const std::filesystem::path& path) {
    const json doc = read_json(path);
    try {
        return parse_state(doc);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

json state_to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (int r = 0; r < kDim; ++r) {
        json row = json::array();
        for (int c = 0; c < kDim; ++c) row.push_back(complex_to_json(rho(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"matrix", std::move(rows)}};
}

KrausChannel ChannelSpec::channel() const {
    if (custom) return *custom;
    if (!kind) throw InputError("channel spec has neither a kind nor Kraus operators");
    if (!p_interact) throw InputError("channel '" + to_string(*kind) + "' needs an interaction probability 'p'");
    return make_channel(*kind, *p_interact);
}

ChannelSpec parse_channel(const json& doc) {
    if (!doc.is_object()) fail("channel", "expected an object");
    const json& kind = require(doc, "kind", "channel");
    if (!kind.is_string()) fail("channel.kind", "expected a string");
    const std::string name = kind.get<std::string>();

    ChannelSpec spec;
    if (name == "custom") {
        reject_unknown_keys(doc, "channel", {"kind", "kraus"});
        const json& list = require(doc, "kraus", "channel");
        if (!list.is_array() || list.empty()) fail("channel.kraus", "expected a non-empty array of 4x4 matrices");
        std::vector<Matrix4> ops;
        for (std::size_t i = 0; i < list.size(); ++i) {
            ops.push_back(parse_matrix(list[i], "channel.kraus[" + std::to_string(i) + "]"));
        }
        try {
            spec.custom.emplace(std::move(ops), "custom");
        } catch (const InputError& e) {
            fail("channel.kraus", e.what());
        }
        return spec;
    }

    reject_unknown_keys(doc, "channel", {"kind", "p"});
    try {
        spec.kind = parse_channel_kind(name);
    } catch (const InputError& e) {
        fail("channel.kind", e.what());
    }
    if (doc.contains("p")) {
        const double p = parse_number(doc["p"], "channel.p");
        if (p < 0.0 || p > 1.0) fail("channel.p", "interaction probability must lie in [0, 1]");
        spec.p_interact = p;
    }
    return spec;
}

ChannelSpec load_channel(const std::filesystem::path& path) {
    const json doc = read_json(path);
    try {
        return parse_channel(doc);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace cohpol::io
