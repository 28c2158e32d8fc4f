#pragma once

#include <stdexcept>
#include <vector>

#include "nckernel/lattice.hpp"
#include "nckernel/scalar_traits.hpp"

namespace nck {

// A unitized semi-multiplicative function on NC pairs, truncated at n_max,
// stored by its determining values z(pi) = g(pi, 1_n).  Values on general
// pairs factor over the blocks of the upper partition, so they are computed
// on demand and never tabulated.
template <class S>
class SemiMultFn {
public:
    SemiMultFn(int n_max, const S& proto) : n_max_(n_max), z_(n_max + 1) {
        if (n_max < 1) throw std::domain_error("SemiMultFn: n_max must be >= 1");
        for (int k = 1; k <= n_max; ++k) {
            const NcLattice& lat = NcLattice::of(k);
            z_[k].assign(lat.size(), ScalarTraits<S>::zero_like(proto));
            z_[k][lat.one_index()] = ScalarTraits<S>::one_like(proto);
        }
    }

    int n_max() const { return n_max_; }

    const S& z(int k, int idx) const { return z_[k][idx]; }
    const S& z(const Partition& p) const {
        check_degree(p.n());
        return z_[p.n()][NcLattice::of(p.n()).index_of(p)];
    }
    void set_z(const Partition& p, S value) {
        check_degree(p.n());
        const NcLattice& lat = NcLattice::of(p.n());
        int idx = lat.index_of(p);
        if (idx == lat.one_index())
            throw std::domain_error("SemiMultFn: z(1_n) is fixed to 1");
        z_[p.n()][idx] = std::move(value);
    }
    void set_z_idx(int k, int idx, S value) { z_[k][idx] = std::move(value); }

    // g(p, s) = prod over blocks W of s of z(p restricted to W).
    S evaluate(const Partition& p, const Partition& s) const {
        if (p.n() != s.n()) throw std::domain_error("evaluate: mismatched ground sets");
        check_degree(p.n());
        if (!leq(p, s)) throw std::domain_error("evaluate: requires p <= s");
        const NcLattice& lat = NcLattice::of(p.n());
        return evaluate_idx(lat, lat.index_of(p), lat.index_of(s));
    }

    S evaluate_idx(const NcLattice& lat, int pi, int sigma) const {
        S acc = ScalarTraits<S>::one_like(z_[1][0]);
        for (auto [m, idx] : lat.interval_factors(pi, sigma)) acc = acc * z_[m][idx];
        return acc;
    }

    bool operator==(const SemiMultFn& o) const { return n_max_ == o.n_max_ && z_ == o.z_; }
    bool operator!=(const SemiMultFn& o) const { return !(*this == o); }

    const S& proto() const { return z_[1][0]; }  // the scalar 1; carries the ring

private:
    int n_max_;
    std::vector<std::vector<S>> z_;  // z_[k][idx], k = 1..n_max

    void check_degree(int k) const {
        if (k < 1 || k > n_max_) throw std::domain_error("SemiMultFn: degree out of range");
    }
};

template <class S>
void check_compatible(const SemiMultFn<S>& a, const SemiMultFn<S>& b) {
    if (a.n_max() != b.n_max()) throw std::domain_error("SemiMultFn: mismatched n_max");
}

// Incidence convolution restricted to the determining values:
// z_out(pi) = sum over sigma >= pi of g1(pi, sigma) * z_g2(sigma).
template <class S>
SemiMultFn<S> convolve(const SemiMultFn<S>& g1, const SemiMultFn<S>& g2) {
    check_compatible(g1, g2);
    SemiMultFn<S> out(g1.n_max(), g1.proto());
    for (int k = 1; k <= g1.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int pi = 0; pi < lat.size(); ++pi) {
            if (pi == lat.one_index()) continue;
            S acc = ScalarTraits<S>::zero_like(g1.proto());
            for (int sigma : lat.ups(pi)) acc += g1.evaluate_idx(lat, pi, sigma) * g2.z(k, sigma);
            out.set_z_idx(k, pi, std::move(acc));
        }
    }
    return out;
}

// Triangular inversion: z_inv(pi) = -sum over sigma > pi of g(pi,sigma) * z_inv(sigma),
// filled in by ascending block count (sigma > pi has fewer blocks).
template <class S>
SemiMultFn<S> inverse(const SemiMultFn<S>& g) {
    SemiMultFn<S> out(g.n_max(), g.proto());
    for (int k = 1; k <= g.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int pi : lat.by_block_count()) {
            if (pi == lat.one_index()) continue;
            S acc = ScalarTraits<S>::zero_like(g.proto());
            for (int sigma : lat.ups(pi)) {
                if (sigma == pi) continue;
                acc += g.evaluate_idx(lat, pi, sigma) * out.z(k, sigma);
            }
            out.set_z_idx(k, pi, -acc);
        }
    }
    return out;
}

// ---- named elements ------------------------------------------------------

template <class S>
SemiMultFn<S> unit_e(int n_max, const S& proto) {
    return SemiMultFn<S>(n_max, proto);  // z = 0 off the diagonal values z(1_k) = 1
}

// Free-cumulant-to-moment transition: constantly 1.
template <class S>
SemiMultFn<S> g_fc_m(int n_max, const S& proto) {
    SemiMultFn<S> g(n_max, proto);
    S one = ScalarTraits<S>::one_like(proto);
    for (int k = 1; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i) g.set_z_idx(k, i, one);
    }
    return g;
}

// Boolean-cumulant-to-moment transition: indicator of interval partitions.
template <class S>
SemiMultFn<S> g_bc_m(int n_max, const S& proto) {
    SemiMultFn<S> g(n_max, proto);
    S one = ScalarTraits<S>::one_like(proto);
    for (int k = 1; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i)
            if (lat.inner(i) == 0) g.set_z_idx(k, i, one);
    }
    return g;
}

// t-Boolean transition: z(pi) = t^inner(pi).
template <class S>
SemiMultFn<S> g_bc_m_t(int n_max, const S& t) {
    SemiMultFn<S> g(n_max, ScalarTraits<S>::one_like(t));
    for (int k = 1; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i)
            g.set_z_idx(k, i, scalar_pow(t, static_cast<uint32_t>(lat.inner(i))));
    }
    return g;
}

// Monotone-cumulant-to-moment transition: z(pi) = (#monotone orderings)/|pi|!.
template <class S>
SemiMultFn<S> g_mc_m(int n_max, const S& proto) {
    SemiMultFn<S> g(n_max, proto);
    for (int k = 1; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i) {
            long long cnt = monotone_order_count(lat.part(i));
            long long fact = 1;
            for (int b = 2; b <= lat.nblocks(i); ++b) fact *= b;
            g.set_z_idx(k, i,
                        ScalarTraits<S>::from_rational_like(proto, Rational(cnt, fact)));
        }
    }
    return g;
}

// One-parameter family u_q: z(pi) = q^(|pi|-1) on irreducibles, else 0.
template <class S>
SemiMultFn<S> u_fn(int n_max, const S& q) {
    SemiMultFn<S> g(n_max, ScalarTraits<S>::one_like(q));
    for (int k = 1; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i)
            if (lat.irreducible(i))
                g.set_z_idx(k, i, scalar_pow(q, static_cast<uint32_t>(lat.nblocks(i) - 1)));
    }
    return g;
}

// ---- multiplicative functions --------------------------------------------

// Element of the multiplicative subgroup, stored by lambda_n = g(0_n, 1_n).
template <class S>
class MultFn {
public:
    MultFn(int n_max, std::vector<S> lambda) : n_max_(n_max), lambda_(std::move(lambda)) {
        if (static_cast<int>(lambda_.size()) != n_max + 1)
            throw std::domain_error("MultFn: lambda must have entries 1..n_max");
        if (!(lambda_[1] == ScalarTraits<S>::one_like(lambda_[1])))
            throw std::domain_error("MultFn: lambda_1 must be 1");
    }

    int n_max() const { return n_max_; }
    const S& lambda(int k) const { return lambda_[k]; }
    const std::vector<S>& lambdas() const { return lambda_; }

    // z(pi) = prod over blocks W of Kr(pi) of lambda_|W|.
    SemiMultFn<S> to_semi() const {
        SemiMultFn<S> g(n_max_, ScalarTraits<S>::one_like(lambda_[1]));
        for (int k = 1; k <= n_max_; ++k) {
            const NcLattice& lat = NcLattice::of(k);
            for (int i = 0; i < lat.size(); ++i) {
                S acc = ScalarTraits<S>::one_like(lambda_[1]);
                for (int sz : lat.type_sizes(lat.type_of(lat.kreweras_of(i)))) acc = acc * lambda_[sz];
                g.set_z_idx(k, i, std::move(acc));
            }
        }
        return g;
    }

    bool operator==(const MultFn& o) const { return n_max_ == o.n_max_ && lambda_ == o.lambda_; }

private:
    int n_max_;
    std::vector<S> lambda_;  // lambda_[0] unused
};

template <class S>
MultFn<S> mult_from_lambda(std::vector<S> lambda) {
    const int n_max = static_cast<int>(lambda.size()) - 1;
    return MultFn<S>(n_max, std::move(lambda));
}

// ---- membership predicates (decision procedures at fixed n_max) ----------

template <class S>
bool is_multiplicative(const SemiMultFn<S>& g) {
    for (int k = 1; k <= g.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i) {
            S expect = ScalarTraits<S>::one_like(g.proto());
            for (int sz : lat.type_sizes(lat.type_of(lat.kreweras_of(i))))
                expect = expect * g.z(sz, NcLattice::of(sz).zero_index());
            if (!(g.z(k, i) == expect)) return false;
        }
    }
    return true;
}

template <class S>
bool is_c_to_m(const SemiMultFn<S>& g) {
    for (int k = 2; k <= g.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i) {
            if (lat.irreducible(i)) continue;
            S expect = ScalarTraits<S>::one_like(g.proto());
            for (auto [m, idx] : lat.concat_factors(i)) expect = expect * g.z(m, idx);
            if (!(g.z(k, i) == expect)) return false;
        }
    }
    return true;
}

template <class S>
bool is_c_to_c(const SemiMultFn<S>& g) {
    for (int k = 2; k <= g.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i)
            if (!lat.irreducible(i) && !ScalarTraits<S>::is_zero(g.z(k, i))) return false;
    }
    return true;
}

// ---- conjugation and coset structure --------------------------------------

// theta_n = sum over irreducible pi in NC(n) of q^(|pi|-1) prod_V lambda_|V|.
template <class S>
std::vector<S> conjugated_lambda_formula(const std::vector<S>& lambda, const S& q) {
    const int n_max = static_cast<int>(lambda.size()) - 1;
    std::vector<S> theta(lambda.size(), ScalarTraits<S>::zero_like(q));
    for (int n = 1; n <= n_max; ++n) {
        const NcLattice& lat = NcLattice::of(n);
        S acc = ScalarTraits<S>::zero_like(q);
        for (int i = 0; i < lat.size(); ++i) {
            if (!lat.irreducible(i)) continue;
            S term = scalar_pow(q, static_cast<uint32_t>(lat.nblocks(i) - 1));
            for (int sz : lat.type_sizes(lat.type_of(i))) term = term * lambda[sz];
            acc += term;
        }
        theta[n] = std::move(acc);
    }
    theta[0] = ScalarTraits<S>::zero_like(q);
    return theta;
}

// u_q^{-1} * f * u_q, which lands back in the multiplicative subgroup; the
// result is returned by its theta-sequence.  Multiplicativity of the
// conjugate and agreement with the closed theta formula are asserted: a
// failure would be an implementation bug, never expected input behaviour.
template <class S>
MultFn<S> conjugate_by_u(const MultFn<S>& f, const S& q) {
    SemiMultFn<S> c =
        convolve(convolve(u_fn(f.n_max(), -q), f.to_semi()), u_fn(f.n_max(), q));
    if (!is_multiplicative(c))
        throw std::logic_error("conjugate_by_u: conjugate failed multiplicativity");
    std::vector<S> theta(f.n_max() + 1, ScalarTraits<S>::zero_like(q));
    for (int k = 1; k <= f.n_max(); ++k) theta[k] = c.z(k, NcLattice::of(k).zero_index());
    if (!(theta == conjugated_lambda_formula(f.lambdas(), q)))
        throw std::logic_error("conjugate_by_u: theta formula mismatch");
    return MultFn<S>(f.n_max(), std::move(theta));
}

// The unique cumulant-to-cumulant g with g * g_bc_m = h: keep h's values on
// irreducibles, zero elsewhere.
template <class S>
SemiMultFn<S> right_coset_decompose(const SemiMultFn<S>& h) {
    if (!is_c_to_m(h)) throw std::domain_error("right_coset_decompose: h not cumulant-to-moment");
    SemiMultFn<S> g(h.n_max(), h.proto());
    for (int k = 1; k <= h.n_max(); ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i) {
            if (i == lat.one_index()) continue;
            if (lat.irreducible(i)) g.set_z_idx(k, i, h.z(k, i));
        }
    }
    return g;
}

}  // namespace nck
