#pragma once

#include "nckernel/dual.hpp"
#include "nckernel/mpoly.hpp"
#include "nckernel/rational.hpp"

namespace nck {

// Uniform construction hooks so the engine can be generic over the scalar
// ring.  "like" arguments carry the ring context (needed by MPoly).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational from_rational_like(const Rational&, const Rational& r) { return r; }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
};

template <>
struct ScalarTraits<MPoly> {
    static MPoly zero_like(const MPoly& p) { return MPoly(p.ring()); }
    static MPoly one_like(const MPoly& p) { return MPoly::constant(p.ring(), Rational(1)); }
    static MPoly from_rational_like(const MPoly& p, const Rational& r) {
        return MPoly::constant(p.ring(), r);
    }
    static bool is_zero(const MPoly& v) { return v.is_zero(); }
};

template <class S>
struct ScalarTraits<Dual<S>> {
    static Dual<S> zero_like(const Dual<S>& d) {
        return {ScalarTraits<S>::zero_like(d.a), ScalarTraits<S>::zero_like(d.a)};
    }
    static Dual<S> one_like(const Dual<S>& d) {
        return {ScalarTraits<S>::one_like(d.a), ScalarTraits<S>::zero_like(d.a)};
    }
    static Dual<S> from_rational_like(const Dual<S>& d, const Rational& r) {
        return {ScalarTraits<S>::from_rational_like(d.a, r), ScalarTraits<S>::zero_like(d.a)};
    }
    static bool is_zero(const Dual<S>& v) {
        return ScalarTraits<S>::is_zero(v.a) && ScalarTraits<S>::is_zero(v.b);
    }
};

template <class S>
S scalar_pow(const S& base, uint32_t e) {
    S r = ScalarTraits<S>::one_like(base);
    for (uint32_t i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace nck
