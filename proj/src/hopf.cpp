#include "nckernel/hopf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace nck {

namespace {

template <class K>
void accumulate(std::map<K, Rational>& terms, const K& key, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TMono merge_monos(const TMono& a, const TMono& b) {
    TMono out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SymMono merge_sym(const SymMono& a, const SymMono& b) {
    SymMono out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<int>());
    return out;
}

}  // namespace

int mono_degree(const TMono& m) {
    int d = 0;
    for (const auto& [n, idx] : m) d += NcLattice::of(n).nblocks(idx) - 1;
    return d;
}

// ---- TPoly -----------------------------------------------------------------

TPoly TPoly::unit() {
    TPoly p;
    p.terms.emplace(TMono{}, Rational(1));
    return p;
}

TPoly TPoly::generator(const Partition& pi) {
    if (pi.num_blocks() == 1) return unit();
    const NcLattice& lat = NcLattice::of(pi.n());
    TPoly p;
    p.terms.emplace(TMono{{pi.n(), lat.index_of(pi)}}, Rational(1));
    return p;
}

void TPoly::add_term(TMono mono, const Rational& c) { accumulate(terms, mono, c); }

TPoly TPoly::operator-() const {
    TPoly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, -c);
    return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
    TPoly r;
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) accumulate(r.terms, merge_monos(ma, mb), ca * cb);
    return *this = std::move(r);
}

TPoly& TPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

std::string TPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        out += c.to_string();
        for (const auto& [n, idx] : m) out += "*X" + NcLattice::of(n).part(idx).to_string();
    }
    return out;
}

TMono interval_mono_key(const NcLattice& lat, int pi, int sigma) {
    TMono mono(lat.interval_factors(pi, sigma).begin(), lat.interval_factors(pi, sigma).end());
    std::sort(mono.begin(), mono.end());
    return mono;
}

TPoly interval_monomial(const NcLattice& lat, int pi, int sigma) {
    TPoly p;
    p.terms.emplace(interval_mono_key(lat, pi, sigma), Rational(1));
    return p;
}

// ---- TTensor ----------------------------------------------------------------

TTensor TTensor::unit() {
    TTensor t;
    t.terms.emplace(std::make_pair(TMono{}, TMono{}), Rational(1));
    return t;
}

void TTensor::add_term(const TMono& l, const TMono& r, const Rational& c) {
    accumulate(terms, std::make_pair(l, r), c);
}

TTensor& TTensor::operator+=(const TTensor& o) {
    for (const auto& [k, c] : o.terms) accumulate(terms, k, c);
    return *this;
}

TTensor& TTensor::operator-=(const TTensor& o) {
    for (const auto& [k, c] : o.terms) accumulate(terms, k, -c);
    return *this;
}

TTensor& TTensor::operator*=(const TTensor& o) {
    TTensor r;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms)
            r.add_term(merge_monos(ka.first, kb.first), merge_monos(ka.second, kb.second), ca * cb);
    return *this = std::move(r);
}

TTensor tensor_of(const TPoly& left, const TPoly& right) {
    TTensor t;
    for (const auto& [ml, cl] : left.terms)
        for (const auto& [mr, cr] : right.terms) t.add_term(ml, mr, cl * cr);
    return t;
}

// ---- comultiplication --------------------------------------------------------

namespace {

// Delta(X_pi) as a list of (left monomial, right monomial) with coefficient 1.
const std::vector<std::pair<TMono, TMono>>& delta_generator(const GenKey& key) {
    static std::map<GenKey, std::vector<std::pair<TMono, TMono>>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const auto& [n, idx] = key;
    const NcLattice& lat = NcLattice::of(n);
    std::vector<std::pair<TMono, TMono>> out;
    for (int sigma : lat.ups(idx)) {
        TMono right;
        if (sigma != lat.one_index()) right.push_back({n, sigma});
        out.emplace_back(interval_mono_key(lat, idx, sigma), std::move(right));
    }
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

TTensor comultiply(const TPoly& p) {
    TTensor out;
    for (const auto& [mono, coeff] : p.terms) {
        TTensor prod = TTensor::unit();
        for (const auto& gen : mono) {
            TTensor dg;
            for (const auto& [l, r] : delta_generator(gen)) dg.add_term(l, r, Rational(1));
            prod *= dg;
        }
        for (const auto& [k, c] : prod.terms) out.add_term(k.first, k.second, c * coeff);
    }
    return out;
}

Rational counit(const TPoly& p) {
    auto it = p.terms.find(TMono{});
    return it == p.terms.end() ? Rational(0) : it->second;
}

bool is_primitive(const TPoly& p) {
    TTensor expect = tensor_of(p, TPoly::unit());
    expect += tensor_of(TPoly::unit(), p);
    return comultiply(p) == expect;
}

// ---- antipode ----------------------------------------------------------------

namespace {

TPoly antipode_gen_impl(const GenKey& key, AntipodeMethod method);

const TPoly& antipode_gen_cached(const GenKey& key, AntipodeMethod method) {
    static std::map<std::tuple<int, int, int>, TPoly> memo;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto mk = std::make_tuple(static_cast<int>(method), key.first, key.second);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;
    TPoly value = antipode_gen_impl(key, method);
    return memo.emplace(mk, std::move(value)).first->second;
}

// S applied to a monomial: product of antipodes of the generators.
TPoly antipode_mono(const TMono& mono, AntipodeMethod method) {
    TPoly acc = TPoly::unit();
    for (const auto& gen : mono) acc *= antipode_gen_cached(gen, method);
    return acc;
}

TPoly mono_as_poly(const TMono& m) {
    TPoly p;
    p.terms.emplace(m, Rational(1));
    return p;
}

TPoly antipode_gen_impl(const GenKey& key, AntipodeMethod method) {
    const auto& [n, idx] = key;
    const NcLattice& lat = NcLattice::of(n);
    const Partition& pi = lat.part(idx);

    switch (method) {
        case AntipodeMethod::BogoliubovLeft: {
            TPoly s = -mono_as_poly(TMono{{n, idx}});
            for (int sigma : lat.ups(idx)) {
                if (sigma == idx || sigma == lat.one_index()) continue;
                s -= interval_monomial(lat, idx, sigma) *
                     antipode_gen_cached({n, sigma}, method);
            }
            return s;
        }
        case AntipodeMethod::BogoliubovRight: {
            TPoly s = -mono_as_poly(TMono{{n, idx}});
            for (int sigma : lat.ups(idx)) {
                if (sigma == idx || sigma == lat.one_index()) continue;
                s -= antipode_mono(interval_mono_key(lat, idx, sigma), method) *
                     mono_as_poly(TMono{{n, sigma}});
            }
            return s;
        }
        case AntipodeMethod::Chains:
        case AntipodeMethod::EfficientChains: {
            TPoly s;
            for (const SignedMono& sm :
                 antipode_chain_summands(pi, method == AntipodeMethod::EfficientChains))
                s.add_term(sm.mono, Rational(sm.sign));
            return s;
        }
    }
    throw std::logic_error("antipode_gen_impl: bad method");
}

}  // namespace

TPoly antipode_generator(const Partition& pi, AntipodeMethod method) {
    if (pi.num_blocks() == 1) return TPoly::unit();
    const NcLattice& lat = NcLattice::of(pi.n());
    return antipode_gen_cached({pi.n(), lat.index_of(pi)}, method);
}

TPoly antipode(const TPoly& p, AntipodeMethod method) {
    TPoly out;
    for (const auto& [mono, coeff] : p.terms) out += antipode_mono(mono, method) * coeff;
    return out;
}

std::vector<SignedMono> antipode_chain_summands(const Partition& pi, bool efficient) {
    if (pi.num_blocks() == 1)
        throw std::domain_error("antipode_chain_summands: pi must differ from 1_n");
    const NcLattice& lat = NcLattice::of(pi.n());
    const std::vector<Chain>& chains =
        efficient ? efficient_chains_to_top(pi)
                  : chains_between(pi, Partition::one(pi.n()), false);
    std::vector<SignedMono> out;
    out.reserve(chains.size());
    for (const Chain& c : chains) {
        TMono mono;
        for (size_t i = 0; i + 1 < c.steps.size(); ++i) {
            TMono step = interval_mono_key(lat, lat.index_of(c.steps[i]), lat.index_of(c.steps[i + 1]));
            mono = merge_monos(mono, step);
        }
        int sign;
        if (efficient) {
            sign = c.blocks_plus().size() % 2 == 0 ? 1 : -1;
        } else {
            sign = c.length() % 2 == 0 ? 1 : -1;
        }
        out.push_back({sign, std::move(mono)});
    }
    return out;
}

TPoly conv_on_generator(const std::function<TPoly(const TPoly&)>& F,
                        const std::function<TPoly(const TPoly&)>& G, const Partition& pi) {
    if (pi.num_blocks() == 1) return F(TPoly::unit()) * G(TPoly::unit());
    const NcLattice& lat = NcLattice::of(pi.n());
    int idx = lat.index_of(pi);
    TPoly acc;
    for (int sigma : lat.ups(idx)) {
        TPoly right = sigma == lat.one_index() ? TPoly::unit() : mono_as_poly(TMono{{pi.n(), sigma}});
        acc += F(interval_monomial(lat, idx, sigma)) * G(right);
    }
    return acc;
}

// ---- Sym ---------------------------------------------------------------------

SymPoly SymPoly::unit() {
    SymPoly p;
    p.terms.emplace(SymMono{}, Rational(1));
    return p;
}

SymPoly SymPoly::Y(int n) {
    if (n < 1) throw std::domain_error("SymPoly::Y: n must be positive");
    if (n == 1) return unit();
    SymPoly p;
    p.terms.emplace(SymMono{n}, Rational(1));
    return p;
}

SymPoly SymPoly::Y(const Partition& pi) {
    SymMono mono;
    for (const auto& b : pi.blocks())
        if (b.size() >= 2) mono.push_back(static_cast<int>(b.size()));
    std::sort(mono.rbegin(), mono.rend());
    SymPoly p;
    p.terms.emplace(std::move(mono), Rational(1));
    return p;
}

void SymPoly::add_term(SymMono mono, const Rational& c) { accumulate(terms, mono, c); }

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) {
    SymPoly r;
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) accumulate(r.terms, merge_sym(ma, mb), ca * cb);
    return *this = std::move(r);
}

std::string SymPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        out += c.to_string();
        for (int k : m) out += "*Y" + std::to_string(k);
    }
    return out;
}

SymTensor SymTensor::unit() {
    SymTensor t;
    t.terms.emplace(std::make_pair(SymMono{}, SymMono{}), Rational(1));
    return t;
}

void SymTensor::add_term(const SymMono& l, const SymMono& r, const Rational& c) {
    accumulate(terms, std::make_pair(l, r), c);
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
    for (const auto& [k, c] : o.terms) accumulate(terms, k, c);
    return *this;
}

SymTensor& SymTensor::operator*=(const SymTensor& o) {
    SymTensor r;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms)
            r.add_term(merge_sym(ka.first, kb.first), merge_sym(ka.second, kb.second), ca * cb);
    return *this = std::move(r);
}

SymPoly psi_to_sym(const TPoly& p) {
    SymPoly out;
    for (const auto& [mono, coeff] : p.terms) {
        SymPoly prod = SymPoly::unit();
        for (const auto& [n, idx] : mono) {
            const NcLattice& lat = NcLattice::of(n);
            prod *= SymPoly::Y(lat.part(lat.kreweras_of(idx)));
        }
        for (const auto& [m, c] : prod.terms) out.add_term(m, c * coeff);
    }
    return out;
}

SymTensor tensor_of_sym(const SymPoly& left, const SymPoly& right) {
    SymTensor t;
    for (const auto& [ml, cl] : left.terms)
        for (const auto& [mr, cr] : right.terms) t.add_term(ml, mr, cl * cr);
    return t;
}

namespace {

const SymTensor& sym_delta_Y(int n) {
    static std::map<int, SymTensor> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    SymTensor t;
    const NcLattice& lat = NcLattice::of(n);
    for (int i = 0; i < lat.size(); ++i) {
        SymPoly left = SymPoly::Y(lat.part(i));
        SymPoly right = SymPoly::Y(lat.part(lat.kreweras_of(i)));
        t += tensor_of_sym(left, right);
    }
    return memo.emplace(n, std::move(t)).first->second;
}

}  // namespace

SymTensor sym_comultiply(const SymPoly& p) {
    SymTensor out;
    for (const auto& [mono, coeff] : p.terms) {
        SymTensor prod = SymTensor::unit();
        for (int k : mono) prod *= sym_delta_Y(k);
        for (const auto& [key, c] : prod.terms) out.add_term(key.first, key.second, c * coeff);
    }
    return out;
}

SymTensor sym_comultiply_relative(const Partition& sigma) {
    const NcLattice& lat = NcLattice::of(sigma.n());
    int sidx = lat.index_of(sigma);
    SymTensor out;
    for (int i = 0; i < lat.size(); ++i) {
        if (!lat.leq_idx(i, sidx)) continue;
        out += tensor_of_sym(SymPoly::Y(lat.part(i)),
                             SymPoly::Y(relative_kreweras(lat.part(i), sigma)));
    }
    return out;
}

// ---- Z -----------------------------------------------------------------------

ZPoly ZPoly::unit() {
    ZPoly p;
    p.terms.emplace(TMono{}, Rational(1));
    return p;
}

ZPoly ZPoly::generator(const Partition& pi) {
    if (!pi.is_irreducible())
        throw std::domain_error("ZPoly::generator: label must be irreducible");
    if (pi.num_blocks() == 1) return unit();
    const NcLattice& lat = NcLattice::of(pi.n());
    ZPoly p;
    p.terms.emplace(TMono{{pi.n(), lat.index_of(pi)}}, Rational(1));
    return p;
}

void ZPoly::add_term(TMono mono, const Rational& c) { accumulate(terms, mono, c); }

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, c);
    return *this;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
    ZPoly r;
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) accumulate(r.terms, merge_monos(ma, mb), ca * cb);
    return *this = std::move(r);
}

ZTensor ZTensor::unit() {
    ZTensor t;
    t.terms.emplace(std::make_pair(TMono{}, TMono{}), Rational(1));
    return t;
}

void ZTensor::add_term(const TMono& l, const TMono& r, const Rational& c) {
    accumulate(terms, std::make_pair(l, r), c);
}

ZTensor& ZTensor::operator+=(const ZTensor& o) {
    for (const auto& [k, c] : o.terms) accumulate(terms, k, c);
    return *this;
}

ZTensor& ZTensor::operator*=(const ZTensor& o) {
    ZTensor r;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms)
            r.add_term(merge_monos(ka.first, kb.first), merge_monos(ka.second, kb.second), ca * cb);
    return *this = std::move(r);
}

ZPoly phi_to_z(const TPoly& p) {
    ZPoly out;
    for (const auto& [mono, coeff] : p.terms) {
        bool kill = false;
        for (const auto& [n, idx] : mono)
            if (!NcLattice::of(n).irreducible(idx)) {
                kill = true;
                break;
            }
        if (!kill) out.add_term(mono, coeff);
    }
    return out;
}

ZTensor z_comultiply(const ZPoly& p) {
    ZTensor out;
    for (const auto& [mono, coeff] : p.terms) {
        ZTensor prod = ZTensor::unit();
        for (const auto& [n, idx] : mono) {
            const NcLattice& lat = NcLattice::of(n);
            ZTensor dg;
            for (int sigma : lat.ups(idx)) {
                if (!ll(lat.part(idx), lat.part(sigma))) continue;
                TMono right;
                if (sigma != lat.one_index()) right.push_back({n, sigma});
                dg.add_term(interval_mono_key(lat, idx, sigma), right, Rational(1));
            }
            prod *= dg;
        }
        for (const auto& [key, c] : prod.terms) out.add_term(key.first, key.second, c * coeff);
    }
    return out;
}

// ---- counting ------------------------------------------------------------------

std::vector<long long> count_efficient_chains_0n(int n_limit) {
    constexpr int kTnCap = 14;  // int64-safe
    if (n_limit < 1 || n_limit > kTnCap)
        throw std::domain_error("count_efficient_chains_0n: limit out of range 1..14");
    std::vector<long long> t(n_limit + 1, 0);
    t[1] = 1;
    for (int n = 2; n <= n_limit; ++n) {
        // t_n = sum over sigma in NC(n), sigma != 1_n, of prod t_|W|; grouped
        // by block-size type with Kreweras' count per type.
        long long total = 0;
        std::vector<int> parts;
        // enumerate integer partitions of n, parts descending
        std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
            if (remaining == 0) {
                int k = static_cast<int>(parts.size());
                if (k == 1) return;  // sigma = 1_n excluded
                // Kreweras: #partitions of this type = n(n-1)...(n-k+2) / prod m_j!
                long long num = 1;
                for (int i = 0; i < k - 1; ++i) num *= (n - i);
                long long den = 1;
                int run = 1;
                for (size_t i = 1; i <= parts.size(); ++i) {
                    if (i < parts.size() && parts[i] == parts[i - 1]) {
                        ++run;
                    } else {
                        for (int r = 2; r <= run; ++r) den *= r;
                        run = 1;
                    }
                }
                long long count = num / den;
                long long prod = 1;
                for (int p : parts) prod *= t[p];
                total += count * prod;
                return;
            }
            for (int p = std::min(remaining, maxpart); p >= 1; --p) {
                parts.push_back(p);
                rec(remaining - p, p);
                parts.pop_back();
            }
        };
        rec(n, n - 1);  // parts of size n would make sigma = 1_n
        t[n] = total;
    }
    return {t.begin() + 1, t.end()};
}

namespace {

using Series = std::vector<Rational>;  // coefficients 0..N

Series series_mul(const Series& a, const Series& b, int N) {
    Series r(N + 1, Rational(0));
    for (int i = 0; i <= N; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

bool u_series_identity(int n_limit) {
    const int N = n_limit;
    std::vector<long long> t = count_efficient_chains_0n(n_limit);
    Series U(N + 1, Rational(0));
    U[0] = Rational(1);
    if (N >= 1) U[1] = Rational(-1);
    for (int n = 1; n <= N; ++n) U[n] += Rational(2) * Rational(t[n - 1]);
    // W = z U(z)
    Series W(N + 1, Rational(0));
    for (int i = 0; i + 1 <= N; ++i) W[i + 1] = U[i];
    // U(W) via Horner on powers of W (W has zero constant term)
    Series lhs(N + 1, Rational(0));
    Series power(N + 1, Rational(0));
    power[0] = Rational(1);
    lhs[0] = U[0];
    for (int k = 1; k <= N; ++k) {
        power = series_mul(power, W, N);
        if (U[k].is_zero()) continue;
        for (int i = 0; i <= N; ++i) lhs[i] += U[k] * power[i];
    }
    // rhs = (2 - z) U(z) - 1
    Series rhs(N + 1, Rational(0));
    for (int i = 0; i <= N; ++i) rhs[i] += Rational(2) * U[i];
    for (int i = 0; i + 1 <= N; ++i) rhs[i + 1] -= U[i];
    rhs[0] -= Rational(1);
    return lhs == rhs;
}

}  // namespace nck
