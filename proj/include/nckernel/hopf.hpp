#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nckernel/lattice.hpp"
#include "nckernel/rational.hpp"
#include "nckernel/scalar_traits.hpp"
#include "nckernel/semimult.hpp"

namespace nck {

// Generator label: a partition with >= 2 blocks, addressed as (n, lattice index).
using GenKey = std::pair<int, int>;
// Monomial: sorted multiset of generator labels; empty = the unit.
using TMono = std::vector<GenKey>;

int mono_degree(const TMono& m);  // sum of (|pi| - 1)

// Polynomial in the generators X_pi with exact rational coefficients.
struct TPoly {
    std::map<TMono, Rational> terms;

    static TPoly zero() { return {}; }
    static TPoly unit();
    static TPoly generator(const Partition& pi);  // X_pi; X_{1_n} is the unit

    bool is_zero() const { return terms.empty(); }
    void add_term(TMono mono, const Rational& c);

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    TPoly& operator*=(const Rational& c);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
    friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }

    bool operator==(const TPoly& o) const { return terms == o.terms; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    std::string to_string() const;
};

// The interval monomial M_{pi,sigma} = prod over blocks W of sigma of X_{pi|W}.
TPoly interval_monomial(const NcLattice& lat, int pi, int sigma);
TMono interval_mono_key(const NcLattice& lat, int pi, int sigma);

struct TTensor {
    std::map<std::pair<TMono, TMono>, Rational> terms;

    static TTensor unit();
    void add_term(const TMono& l, const TMono& r, const Rational& c);
    TTensor& operator+=(const TTensor& o);
    TTensor& operator-=(const TTensor& o);
    TTensor& operator*=(const TTensor& o);
    friend TTensor operator+(TTensor a, const TTensor& b) { return a += b; }
    friend TTensor operator-(TTensor a, const TTensor& b) { return a -= b; }
    friend TTensor operator*(TTensor a, const TTensor& b) { return a *= b; }
    bool operator==(const TTensor& o) const { return terms == o.terms; }
};

TTensor tensor_of(const TPoly& left, const TPoly& right);

// Delta(X_pi) = sum over sigma >= pi of M_{pi,sigma} (x) X_sigma, extended as
// a unital algebra homomorphism.
TTensor comultiply(const TPoly& p);
Rational counit(const TPoly& p);
bool is_primitive(const TPoly& p);

enum class AntipodeMethod { BogoliubovLeft, BogoliubovRight, Chains, EfficientChains };

TPoly antipode_generator(const Partition& pi, AntipodeMethod method);
TPoly antipode(const TPoly& p, AntipodeMethod method);

// Raw signed summands of the chain formulas, before any collection:
// (-1)^length M_c over all chains, or (-1)^|Blocks+| M_c over efficient ones.
struct SignedMono {
    int sign;  // +1 / -1
    TMono mono;
};
std::vector<SignedMono> antipode_chain_summands(const Partition& pi, bool efficient);

// Generator-wise convolution of linear maps: (F * G)(X_pi) = sum over
// sigma >= pi of F(M_{pi,sigma}) * G(X_sigma).
TPoly conv_on_generator(const std::function<TPoly(const TPoly&)>& F,
                        const std::function<TPoly(const TPoly&)>& G, const Partition& pi);

// Character attached to g: multiplicative-linear evaluation X_pi -> z_g(pi).
template <class S>
S evaluate_character(const SemiMultFn<S>& g, const TPoly& p) {
    S acc = ScalarTraits<S>::zero_like(g.proto());
    for (const auto& [mono, coeff] : p.terms) {
        S term = ScalarTraits<S>::from_rational_like(g.proto(), coeff);
        for (const auto& [n, idx] : mono) term = term * g.z(n, idx);
        acc += term;
    }
    return acc;
}

// ---- the symmetric-function quotient --------------------------------------

// Monomial in the generators Y_k (k >= 2): descending multiset of k's.
using SymMono = std::vector<int>;

struct SymPoly {
    std::map<SymMono, Rational> terms;

    static SymPoly unit();
    static SymPoly Y(int n);                 // Y_1 = unit
    static SymPoly Y(const Partition& pi);   // product over blocks of Y_|V|
    void add_term(SymMono mono, const Rational& c);
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
    bool operator==(const SymPoly& o) const { return terms == o.terms; }
    std::string to_string() const;
};

struct SymTensor {
    std::map<std::pair<SymMono, SymMono>, Rational> terms;
    static SymTensor unit();
    void add_term(const SymMono& l, const SymMono& r, const Rational& c);
    SymTensor& operator+=(const SymTensor& o);
    SymTensor& operator*=(const SymTensor& o);
    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator*(SymTensor a, const SymTensor& b) { return a *= b; }
    bool operator==(const SymTensor& o) const { return terms == o.terms; }
};

SymTensor tensor_of_sym(const SymPoly& left, const SymPoly& right);

// Psi(X_pi) = Y_{Kr(pi)}, extended as an algebra homomorphism.
SymPoly psi_to_sym(const TPoly& p);

// Delta(Y_n) = sum over pi in NC(n) of Y_pi (x) Y_{Kr(pi)}, homomorphic extension.
SymTensor sym_comultiply(const SymPoly& p);

// Direct expansion Delta(Y_sigma) = sum over pi <= sigma of
// Y_pi (x) Y_{relative Kreweras}; equals the homomorphic route (test hook).
SymTensor sym_comultiply_relative(const Partition& sigma);

// ---- the irreducible truncation --------------------------------------------

// Z-polynomials reuse TMono keys, restricted to irreducible labels.
struct ZPoly {
    std::map<TMono, Rational> terms;
    static ZPoly unit();
    static ZPoly generator(const Partition& pi);  // requires irreducible pi
    void add_term(TMono mono, const Rational& c);
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator*(ZPoly a, const ZPoly& b) { return a *= b; }
    bool operator==(const ZPoly& o) const { return terms == o.terms; }
};

struct ZTensor {
    std::map<std::pair<TMono, TMono>, Rational> terms;
    static ZTensor unit();
    void add_term(const TMono& l, const TMono& r, const Rational& c);
    ZTensor& operator+=(const ZTensor& o);
    ZTensor& operator*=(const ZTensor& o);
    friend ZTensor operator+(ZTensor a, const ZTensor& b) { return a += b; }
    friend ZTensor operator*(ZTensor a, const ZTensor& b) { return a *= b; }
    bool operator==(const ZTensor& o) const { return terms == o.terms; }
};

// Phi(X_pi) = Z_pi for irreducible pi, 0 otherwise.
ZPoly phi_to_z(const TPoly& p);

// Delta_Z(Z_pi) = sum over sigma with pi << sigma of
// (prod over blocks W of Z_{pi|W}) (x) Z_sigma, homomorphic extension.
ZTensor z_comultiply(const ZPoly& p);

// ---- counting ---------------------------------------------------------------

// t_n = |EC(0_n, 1_n)| via 2 t_n = sum over NC(n) of prod t_|W|, evaluated
// with the per-type counts of NC(n), so it runs past the enumeration cap.
std::vector<long long> count_efficient_chains_0n(int n_limit);

// U(z U(z)) = (2-z) U(z) - 1 mod z^(n_limit+1), with U = 1 - z + 2 sum t_n z^n.
bool u_series_identity(int n_limit);

}  // namespace nck
