#pragma once

#include <optional>
#include <vector>

#include "nckernel/semimult.hpp"

namespace nck {

// Univariate moment/cumulant sequence (a_1, ..., a_n_max) with a_1 = 1.
template <class S>
struct MomentSeq {
    int n_max;
    std::vector<S> a;  // a[0] unused

    MomentSeq(int nm, std::vector<S> vals) : n_max(nm), a(std::move(vals)) {
        if (static_cast<int>(a.size()) != n_max + 1)
            throw std::domain_error("MomentSeq: needs entries 1..n_max");
        if (!(a[1] == ScalarTraits<S>::one_like(a[1])))
            throw std::domain_error("MomentSeq: a_1 must be 1");
    }

    bool operator==(const MomentSeq& o) const { return n_max == o.n_max && a == o.a; }
    bool operator!=(const MomentSeq& o) const { return !(*this == o); }
};

// prod over blocks of a type (descending size multiset) of a[size]
template <class S>
S type_product(const std::vector<S>& a, const std::vector<int>& sizes) {
    S acc = ScalarTraits<S>::one_like(a[1]);
    for (int s : sizes) acc = acc * a[s];
    return acc;
}

// m_pi = prod over blocks V of pi of m_|V| (the product-over-blocks extension).
template <class S>
S extend_to_partition(const MomentSeq<S>& m, const Partition& pi) {
    S acc = ScalarTraits<S>::one_like(m.a[1]);
    for (const auto& b : pi.blocks()) acc = acc * m.a[static_cast<int>(b.size())];
    return acc;
}

// Right action: out_n = sum over pi in NC(n) of z_g(pi) * m_pi.  The products
// m_pi depend only on the block-size type, so the z-values are summed per
// type first and each product is formed once.
template <class S>
MomentSeq<S> act(const MomentSeq<S>& m, const SemiMultFn<S>& g) {
    if (m.n_max != g.n_max()) throw std::domain_error("act: mismatched n_max");
    std::vector<S> out(m.a.size(), ScalarTraits<S>::zero_like(m.a[1]));
    out[1] = ScalarTraits<S>::one_like(m.a[1]);
    for (int n = 2; n <= m.n_max; ++n) {
        const NcLattice& lat = NcLattice::of(n);
        std::vector<S> zsum(lat.num_types(), ScalarTraits<S>::zero_like(m.a[1]));
        for (int i = 0; i < lat.size(); ++i) zsum[lat.type_of(i)] += g.z(n, i);
        S acc = ScalarTraits<S>::zero_like(m.a[1]);
        for (int t = 0; t < lat.num_types(); ++t) {
            if (ScalarTraits<S>::is_zero(zsum[t])) continue;
            acc += zsum[t] * type_product(m.a, lat.type_sizes(t));
        }
        out[n] = std::move(acc);
    }
    return MomentSeq<S>(m.n_max, std::move(out));
}

// ---- cumulant brands -------------------------------------------------------

enum class BrandKind { Free, Boolean, TBoolean, Monotone };

template <class S>
struct Brand {
    BrandKind kind;
    std::optional<S> t;  // set iff kind == TBoolean

    static Brand free() { return {BrandKind::Free, std::nullopt}; }
    static Brand boolean() { return {BrandKind::Boolean, std::nullopt}; }
    static Brand t_boolean(S tval) { return {BrandKind::TBoolean, std::move(tval)}; }
    static Brand monotone() { return {BrandKind::Monotone, std::nullopt}; }
};

template <class S>
SemiMultFn<S> brand_fn(int n_max, const Brand<S>& b, const S& proto) {
    switch (b.kind) {
        case BrandKind::Free: return g_fc_m(n_max, proto);
        case BrandKind::Boolean: return g_bc_m(n_max, proto);
        case BrandKind::TBoolean: return g_bc_m_t(n_max, *b.t);
        case BrandKind::Monotone: return g_mc_m(n_max, proto);
    }
    throw std::logic_error("brand_fn: bad kind");
}

template <class S>
MomentSeq<S> cumulants_to_moments(const MomentSeq<S>& cumulants, const Brand<S>& b) {
    return act(cumulants, brand_fn(cumulants.n_max, b, cumulants.a[1]));
}

template <class S>
MomentSeq<S> moments_to_cumulants(const MomentSeq<S>& moments, const Brand<S>& b) {
    return act(moments, inverse(brand_fn(moments.n_max, b, moments.a[1])));
}

// Direct inter-cumulant transition through g_from * g_to^{-1}.
template <class S>
MomentSeq<S> transition(const MomentSeq<S>& cumulants, const Brand<S>& from, const Brand<S>& to) {
    const S& proto = cumulants.a[1];
    SemiMultFn<S> kernel = convolve(brand_fn(cumulants.n_max, from, proto),
                                    inverse(brand_fn(cumulants.n_max, to, proto)));
    return act(cumulants, kernel);
}

// Boolean cumulants from any cumulant-to-moment summation ("rule of thumb"):
// beta_n = sum over irreducible pi of c(pi) * m_pi.
template <class S>
MomentSeq<S> boolean_from_brand(const MomentSeq<S>& m, const SemiMultFn<S>& coeffs) {
    if (m.n_max != coeffs.n_max()) throw std::domain_error("boolean_from_brand: mismatched n_max");
    if (!is_c_to_m(coeffs))
        throw std::domain_error("boolean_from_brand: coefficients not cumulant-to-moment");
    std::vector<S> out(m.a.size(), ScalarTraits<S>::zero_like(m.a[1]));
    out[1] = ScalarTraits<S>::one_like(m.a[1]);
    for (int n = 2; n <= m.n_max; ++n) {
        const NcLattice& lat = NcLattice::of(n);
        std::vector<S> zsum(lat.num_types(), ScalarTraits<S>::zero_like(m.a[1]));
        for (int i = 0; i < lat.size(); ++i)
            if (lat.irreducible(i)) zsum[lat.type_of(i)] += coeffs.z(n, i);
        S acc = ScalarTraits<S>::zero_like(m.a[1]);
        for (int t = 0; t < lat.num_types(); ++t) {
            if (ScalarTraits<S>::is_zero(zsum[t])) continue;
            acc += zsum[t] * type_product(m.a, lat.type_sizes(t));
        }
        out[n] = std::move(acc);
    }
    return MomentSeq<S>(m.n_max, std::move(out));
}

// Kreweras-paired bilinear sum: out_n = sum over pi of x_pi * y_Kr(pi).
// This is the free multiplication formula on free-cumulant sequences, and
// the right-hand side of the t-Boolean multiplication identity.
template <class S>
MomentSeq<S> kreweras_convolution(const MomentSeq<S>& x, const MomentSeq<S>& y) {
    if (x.n_max != y.n_max) throw std::domain_error("kreweras_convolution: mismatched n_max");
    std::vector<S> out(x.a.size(), ScalarTraits<S>::zero_like(x.a[1]));
    out[1] = ScalarTraits<S>::one_like(x.a[1]);
    for (int n = 2; n <= x.n_max; ++n) {
        const NcLattice& lat = NcLattice::of(n);
        // multiplicity of each (type(pi), type(Kr pi)) pair
        std::vector<std::vector<long long>> mult(lat.num_types(),
                                                 std::vector<long long>(lat.num_types(), 0));
        for (int i = 0; i < lat.size(); ++i)
            ++mult[lat.type_of(i)][lat.type_of(lat.kreweras_of(i))];
        S acc = ScalarTraits<S>::zero_like(x.a[1]);
        for (int t1 = 0; t1 < lat.num_types(); ++t1) {
            std::optional<S> xprod;
            for (int t2 = 0; t2 < lat.num_types(); ++t2) {
                if (mult[t1][t2] == 0) continue;
                if (!xprod) xprod = type_product(x.a, lat.type_sizes(t1));
                S term = *xprod * type_product(y.a, lat.type_sizes(t2));
                acc += term * ScalarTraits<S>::from_rational_like(x.a[1], Rational(mult[t1][t2]));
            }
        }
        out[n] = std::move(acc);
    }
    return MomentSeq<S>(x.n_max, std::move(out));
}

// Free cumulants of a product of free elements, from the factors' free cumulants.
template <class S>
MomentSeq<S> free_multiply(const MomentSeq<S>& kx, const MomentSeq<S>& ky) {
    return kreweras_convolution(kx, ky);
}

// The t-Boolean description of free multiplication: the pipeline value of
// beta^(t)(xy) must equal the Kreweras-paired sum of the factor cumulants,
// for every n up to the cap.
template <class S>
bool t_boolean_multiply_check(const MomentSeq<S>& bx, const MomentSeq<S>& by, const S& t) {
    Brand<S> tb = Brand<S>::t_boolean(t);
    Brand<S> fr = Brand<S>::free();
    MomentSeq<S> kx = moments_to_cumulants(cumulants_to_moments(bx, tb), fr);
    MomentSeq<S> ky = moments_to_cumulants(cumulants_to_moments(by, tb), fr);
    MomentSeq<S> kxy = free_multiply(kx, ky);
    MomentSeq<S> bxy = moments_to_cumulants(cumulants_to_moments(kxy, fr), tb);
    return bxy == kreweras_convolution(bx, by);
}

// u_q-conjugation identity on the multiplicative function built from the
// t-Boolean cumulants of a normalized element y: the conjugate by u_q must
// be the multiplicative function of the (t-q)-Boolean cumulants of y.
template <class S>
bool u_conjugation_identity_check(const S& t, const S& q, const MomentSeq<S>& y_betas) {
    MultFn<S> f_t = mult_from_lambda(y_betas.a);
    MultFn<S> lhs = conjugate_by_u(f_t, q);
    MomentSeq<S> y_moments = cumulants_to_moments(y_betas, Brand<S>::t_boolean(t));
    MomentSeq<S> rhs = moments_to_cumulants(y_moments, Brand<S>::t_boolean(t - q));
    return lhs.lambdas() == rhs.a;
}

// Derived-sequence identity: with hat_n the NC(n)-sum and tilde_n the
// irreducible-NC(n)-sum of products of alpha over blocks, one has
// tilde_n = sum over interval partitions rho of (-1)^(|rho|+1) prod hat_|J|.
// alpha is a plain scalar sequence (alpha[0] unused; alpha_1 unconstrained).
template <class S>
bool tilde_alpha_identity_check(const std::vector<S>& alpha) {
    const int n_max = static_cast<int>(alpha.size()) - 1;
    if (n_max < 1) throw std::domain_error("tilde_alpha_identity_check: empty sequence");
    const S zero = ScalarTraits<S>::zero_like(alpha[1]);
    std::vector<S> hat(n_max + 1, zero), tilde(n_max + 1, zero);
    for (int n = 1; n <= n_max; ++n) {
        const NcLattice& lat = NcLattice::of(n);
        for (int i = 0; i < lat.size(); ++i) {
            S term = type_product(alpha, lat.type_sizes(lat.type_of(i)));
            hat[n] += term;
            if (lat.irreducible(i)) tilde[n] += term;
        }
    }
    for (int n = 1; n <= n_max; ++n) {
        // interval partitions of {1..n} are the compositions of n
        S rhs = zero;
        for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            S prod = ScalarTraits<S>::one_like(alpha[1]);
            int parts = 0, run = 1;
            for (int pos = 1; pos < n; ++pos) {
                if (mask & (1u << (pos - 1))) {
                    prod = prod * hat[run];
                    ++parts;
                    run = 1;
                } else {
                    ++run;
                }
            }
            prod = prod * hat[run];
            ++parts;
            if (parts % 2 == 0) prod = -prod;
            rhs += prod;
        }
        if (!(tilde[n] == rhs)) return false;
    }
    return true;
}

// Exact defect of the naive Kreweras-sum formula for monotone cumulants of a
// product of free elements, as a polynomial in rx2..rxn, ry2..ryn.
MPoly monotone_discrepancy(int n);
MPolyRingPtr monotone_discrepancy_ring(int n);

}  // namespace nck
