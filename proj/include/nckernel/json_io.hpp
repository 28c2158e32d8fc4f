#pragma once

#include <json.hpp>

#include "nckernel/hopf.hpp"
#include "nckernel/moments.hpp"

namespace nck {

using OJson = nlohmann::ordered_json;

// Ring descriptors: "Q" for the rationals, "Q[v1,v2,...]" for a polynomial ring.
inline std::string ring_name(const MPolyRingPtr& ring) {
    std::string s = "Q[";
    for (size_t i = 0; i < ring->vars().size(); ++i) {
        if (i) s += ",";
        s += ring->vars()[i];
    }
    return s + "]";
}

inline bool ring_is_rational(const std::string& name) { return name == "Q"; }

inline MPolyRingPtr ring_from_name(const std::string& name) {
    if (name.size() < 4 || name.substr(0, 2) != "Q[" || name.back() != ']')
        throw ParseError("bad ring descriptor '" + name + "'", 0);
    std::vector<std::string> vars;
    std::string body = name.substr(2, name.size() - 3);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        if (comma == pos) throw ParseError("empty variable in ring descriptor", pos + 2);
        vars.push_back(body.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return MPolyRing::make(std::move(vars));
}

template <class S>
struct ScalarCodec;

template <>
struct ScalarCodec<Rational> {
    static std::string to_string(const Rational& v) { return v.to_string(); }
    static Rational parse(const std::string& text, const Rational&) {
        return Rational::from_string(text);
    }
};

template <>
struct ScalarCodec<MPoly> {
    static std::string to_string(const MPoly& v) { return v.to_string(); }
    static MPoly parse(const std::string& text, const MPoly& proto) {
        return MPoly::parse(proto.ring(), text);
    }
};

// {"n_max": k, "ring": "...", "z": {"<partition>": "<scalar>"}}; omitted keys
// mean z = 0, and z(1_n) = 1 is implicit.
template <class S>
OJson semimult_to_json(const SemiMultFn<S>& g, const std::string& ring) {
    OJson j;
    j["n_max"] = g.n_max();
    j["ring"] = ring;
    OJson z = OJson::object();
    for (int k = 1; k <= g.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i) {
            if (i == lat.one_index()) continue;
            if (ScalarTraits<S>::is_zero(g.z(k, i))) continue;
            z[lat.part(i).to_string()] = ScalarCodec<S>::to_string(g.z(k, i));
        }
    }
    j["z"] = std::move(z);
    return j;
}

template <class S>
SemiMultFn<S> semimult_from_json(const OJson& j, const S& proto) {
    if (!j.contains("n_max") || !j["n_max"].is_number_integer())
        throw ParseError("semi-multiplicative function needs integer 'n_max'", 0);
    SemiMultFn<S> g(j["n_max"].get<int>(), proto);
    if (j.contains("z")) {
        for (const auto& [key, value] : j["z"].items()) {
            Partition p = Partition::parse(key);
            g.set_z(p, ScalarCodec<S>::parse(value.template get<std::string>(), proto));
        }
    }
    return g;
}

// {"ring": "...", "a": ["1", ...]} with a_1 first.
template <class S>
OJson momentseq_to_json(const MomentSeq<S>& m, const std::string& ring) {
    OJson j;
    j["ring"] = ring;
    OJson a = OJson::array();
    for (int k = 1; k <= m.n_max; ++k) a.push_back(ScalarCodec<S>::to_string(m.a[k]));
    j["a"] = std::move(a);
    return j;
}

template <class S>
MomentSeq<S> momentseq_from_json(const OJson& j, const S& proto) {
    if (!j.contains("a") || !j["a"].is_array() || j["a"].empty())
        throw ParseError("sequence needs a nonempty array 'a'", 0);
    std::vector<S> a;
    a.push_back(ScalarTraits<S>::zero_like(proto));
    for (const auto& entry : j["a"])
        a.push_back(ScalarCodec<S>::parse(entry.template get<std::string>(), proto));
    const int n_max = static_cast<int>(a.size()) - 1;
    return MomentSeq<S>(n_max, std::move(a));
}

inline std::string json_ring_of(const OJson& j) {
    if (!j.contains("ring") || !j["ring"].is_string())
        throw ParseError("input needs a string 'ring' field", 0);
    return j["ring"].get<std::string>();
}

// {"pi": ..., "method": ..., "terms": [{"coeff": "-1", "monomial": ["{1}{2}{3}"]}, ...]}
inline OJson antipode_to_json(const Partition& pi, const std::string& method, const TPoly& s) {
    OJson j;
    j["pi"] = pi.to_string();
    j["method"] = method;
    OJson terms = OJson::array();
    for (const auto& [mono, coeff] : s.terms) {
        OJson term;
        term["coeff"] = coeff.to_string();
        OJson m = OJson::array();
        for (const auto& [n, idx] : mono) m.push_back(NcLattice::of(n).part(idx).to_string());
        term["monomial"] = std::move(m);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace nck
