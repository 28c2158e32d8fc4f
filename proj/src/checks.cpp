#include "nckernel/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "nckernel/hopf.hpp"
#include "nckernel/moments.hpp"
#include "nckernel/semimult.hpp"

namespace nck {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::string message;
};

#define NCK_REQUIRE(cond, msg)                          \
    do {                                                \
        if (!(cond)) throw Failure{msg};                \
    } while (0)

CheckResult run_timed(int id, const std::string& name, const std::function<void()>& body) {
    auto start = Clock::now();
    CheckResult r{id, name, true, "", 0.0};
    try {
        body();
    } catch (const Failure& f) {
        r.pass = false;
        r.detail = f.message;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

// ---- self-contained oracles --------------------------------------------------

bool owner_crossing(int n, const std::vector<int>& owner) {
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
                        return true;
    return false;
}

long long brute_force_nc_count(int n) {
    long long count = 0;
    std::vector<int> owner(n + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int maxused) {
        if (i > n) {
            if (!owner_crossing(n, owner)) ++count;
            return;
        }
        for (int b = 0; b <= maxused + 1; ++b) {
            owner[i] = b;
            rec(i + 1, std::max(maxused, b));
        }
    };
    rec(1, -1);
    return count;
}

SemiMultFn<Rational> random_rational_fn(int n_max, std::mt19937_64& rng) {
    SemiMultFn<Rational> g(n_max, Rational(1));
    for (int k = 1; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i)
            if (i != lat.one_index())
                g.set_z_idx(k, i,
                            Rational(static_cast<long long>(rng() % 9) - 4,
                                     static_cast<long long>(rng() % 3) + 1));
    }
    return g;
}

SemiMultFn<Rational> random_cc_fn(int n_max, std::mt19937_64& rng) {
    SemiMultFn<Rational> g(n_max, Rational(1));
    for (int k = 2; k <= n_max; ++k) {
        const NcLattice& lat = NcLattice::of(k);
        for (int i = 0; i < lat.size(); ++i)
            if (i != lat.one_index() && lat.irreducible(i))
                g.set_z_idx(k, i, Rational(static_cast<long long>(rng() % 9) - 4));
    }
    return g;
}

MomentSeq<MPoly> symbolic_seq(const MPolyRingPtr& ring, const std::string& prefix, int n_max) {
    std::vector<MPoly> a(n_max + 1, MPoly(ring));
    a[1] = MPoly::constant(ring, Rational(1));
    for (int k = 2; k <= n_max; ++k) a[k] = MPoly::variable(ring, prefix + std::to_string(k));
    return MomentSeq<MPoly>(n_max, std::move(a));
}

std::string appendix_expected(int n) {
    switch (n) {
        case 5:
            return "-1/12*rx2*ry2";
        case 6:
            return "-1/4*rx2^2*ry2-1/4*rx2*ry2^2-1/3*rx2*ry3-1/3*rx3*ry2";
        case 7:
            return "-rx3*ry3-4/3*rx2^2*ry2^2+7/180*rx2*ry2-19/12*rx2^2*ry3-19/12*rx3*ry2^2"
                   "-3/4*rx2*ry4-3/4*rx4*ry2-17/12*rx2*rx3*ry2-17/12*rx2*ry2*ry3"
                   "-1/6*rx2^3*ry2-1/6*rx2*ry2^3";
        case 8:
            return "7/30*rx2*ry3+7/30*rx3*ry2+43/180*rx2*ry2^2+43/180*rx2^2*ry2"
                   "-4/3*rx2*ry5-4/3*rx5*ry2-4/3*rx2*ry2^2*ry3-4/3*rx2^2*rx3*ry2"
                   "-4/3*rx2*ry3^2-4/3*rx3^2*ry2-32/3*rx2^2*ry2*ry3-32/3*rx2*rx3*ry2^2"
                   "-8/3*rx3*ry2^3-8/3*rx2^3*ry3-9/2*rx2^2*ry4-9/2*rx4*ry2^2"
                   "-20/3*rx3*ry2*ry3-20/3*rx2*rx3*ry3-2*rx2^2*ry2^3-2*rx2^3*ry2^2"
                   "-3*rx2*ry2*ry4-3*rx2*rx4*ry2-2*rx3*ry4-2*rx4*ry3";
        default:
            throw std::domain_error("appendix_expected: n out of range");
    }
}

}  // namespace

CheckResult check_lattice(const CheckConfig& cfg) {
    return run_timed(1, "lattice enumeration and Kreweras identities", [&] {
        for (int n = 1; n <= cfg.lattice_brute_cap; ++n) {
            long long expect = brute_force_nc_count(n);
            long long got = static_cast<long long>(enumerate_nc(n).size());
            NCK_REQUIRE(got == expect,
                        "|NC(" + std::to_string(n) + ")| = " + std::to_string(got) +
                            " but brute force gives " + std::to_string(expect));
        }
        for (int n = 1; n <= cfg.lattice_kr_cap; ++n) {
            const auto& parts = enumerate_nc(n);
            for (const Partition& p : parts)
                NCK_REQUIRE(p.num_blocks() + kreweras(p).num_blocks() == n + 1,
                            "|p| + |Kr p| != n+1 at " + p.to_string());
            for (const Partition& p : parts)
                for (const Partition& q : parts)
                    NCK_REQUIRE(leq(p, q) == leq(kreweras(q), kreweras(p)),
                                "Kreweras anti-automorphism fails at " + p.to_string() + ", " +
                                    q.to_string());
        }
    });
}

CheckResult check_group_laws(const CheckConfig& cfg) {
    return run_timed(2, "convolution group laws and the u one-parameter subgroup", [&] {
        std::mt19937_64 rng(20240521);
        std::vector<SemiMultFn<Rational>> fns;
        for (int i = 0; i < cfg.group_random_count; ++i)
            fns.push_back(random_rational_fn(cfg.group_nmax, rng));
        auto e = unit_e(cfg.group_nmax, Rational(1));
        for (size_t i = 0; i < fns.size(); ++i) {
            auto inv = inverse(fns[i]);
            NCK_REQUIRE(convolve(fns[i], inv) == e && convolve(inv, fns[i]) == e,
                        "two-sided inverse fails for random function " + std::to_string(i));
        }
        for (size_t i = 0; i + 2 < fns.size(); ++i)
            NCK_REQUIRE(convolve(convolve(fns[i], fns[i + 1]), fns[i + 2]) ==
                            convolve(fns[i], convolve(fns[i + 1], fns[i + 2])),
                        "associativity fails on random triple " + std::to_string(i));

        // the multiplicative subgroup commutes
        for (int iter = 0; iter < 8; ++iter) {
            std::vector<Rational> l1 = {Rational(0), Rational(1)};
            std::vector<Rational> l2 = {Rational(0), Rational(1)};
            for (int k = 2; k <= cfg.group_nmax; ++k) {
                l1.push_back(Rational(static_cast<long long>(rng() % 9) - 4));
                l2.push_back(Rational(static_cast<long long>(rng() % 9) - 4));
            }
            auto f1 = mult_from_lambda(l1).to_semi();
            auto f2 = mult_from_lambda(l2).to_semi();
            auto prod = convolve(f1, f2);
            NCK_REQUIRE(prod == convolve(f2, f1), "multiplicative subgroup does not commute");
            NCK_REQUIRE(is_multiplicative(prod), "multiplicative subgroup not closed");
        }

        auto ring = MPolyRing::make({"q1", "q2"});
        MPoly q1 = MPoly::variable(ring, "q1");
        MPoly q2 = MPoly::variable(ring, "q2");
        NCK_REQUIRE(convolve(u_fn(cfg.u_subgroup_nmax, q1), u_fn(cfg.u_subgroup_nmax, q2)) ==
                        u_fn(cfg.u_subgroup_nmax, q1 + q2),
                    "u_{q1} * u_{q2} != u_{q1+q2} in Q[q1,q2]");
    });
}

CheckResult check_counting(const CheckConfig& cfg) {
    return run_timed(3, "upper ideals of << over irreducible partitions", [&] {
        const int n = cfg.counting_n;
        const auto& parts = enumerate_nc(n);
        for (const Partition& pi : parts) {
            if (!pi.is_irreducible()) continue;
            long long total = 0;
            std::vector<long long> by_blocks(pi.num_blocks() + 1, 0);
            for (const Partition& s : parts)
                if (ll(pi, s)) {
                    ++total;
                    ++by_blocks[s.num_blocks()];
                }
            NCK_REQUIRE(total == (1LL << (pi.num_blocks() - 1)),
                        "|{sigma >> pi}| != 2^(|pi|-1) at " + pi.to_string());
            for (int k = 1; k <= pi.num_blocks(); ++k) {
                long long binom = 1;
                for (int i = 0; i < k - 1; ++i) binom = binom * (pi.num_blocks() - 1 - i) / (i + 1);
                NCK_REQUIRE(by_blocks[k] == binom,
                            "binomial refinement fails at " + pi.to_string() + " k=" +
                                std::to_string(k));
            }
        }
    });
}

CheckResult check_coset(const CheckConfig& cfg) {
    return run_timed(4, "cumulant-to-cumulant subgroup and the coset decomposition", [&] {
        const int N = cfg.coset_nmax;
        std::mt19937_64 rng(77);
        for (int iter = 0; iter < 5; ++iter) {
            auto g1 = random_cc_fn(N, rng);
            auto g2 = random_cc_fn(N, rng);
            NCK_REQUIRE(is_c_to_c(convolve(g1, g2)), "c-c set not closed under convolution");
            NCK_REQUIRE(is_c_to_c(inverse(g1)), "c-c set not closed under inversion");
        }
        auto bc = g_bc_m(N, Rational(1));
        for (const auto& h : {g_fc_m(N, Rational(1)), g_mc_m(N, Rational(1))}) {
            auto g = right_coset_decompose(h);
            NCK_REQUIRE(is_c_to_c(g), "coset factor is not cumulant-to-cumulant");
            NCK_REQUIRE(convolve(g, bc) == h, "coset decomposition does not reassemble");
        }
        auto ring = MPolyRing::make({"t"});
        MPoly t = MPoly::variable(ring, "t");
        auto ht = g_bc_m_t(N, t);
        auto gt = right_coset_decompose(ht);
        NCK_REQUIRE(gt == u_fn(N, t), "decomposition of the t-Boolean family is not u_t");
        NCK_REQUIRE(convolve(gt, g_bc_m(N, MPoly::constant(ring, Rational(1)))) == ht,
                    "t-Boolean coset decomposition does not reassemble");
    });
}

CheckResult check_normalizer(const CheckConfig& cfg) {
    return run_timed(5, "u-conjugation normalizes the multiplicative subgroup", [&] {
        const int N = cfg.normalizer_nmax;
        std::vector<std::string> vars = {"q"};
        for (int k = 2; k <= N; ++k) vars.push_back("l" + std::to_string(k));
        auto ring = MPolyRing::make(vars);
        MPoly q = MPoly::variable(ring, "q");
        std::vector<MPoly> lambda = {MPoly(ring), MPoly::constant(ring, Rational(1))};
        for (int k = 2; k <= N; ++k) lambda.push_back(MPoly::variable(ring, "l" + std::to_string(k)));
        // conjugate_by_u verifies multiplicativity and the closed theta
        // formula internally; a violation would throw
        MultFn<MPoly> conj = conjugate_by_u(mult_from_lambda(lambda), q);
        auto l = [&](int k) { return MPoly::variable(ring, "l" + std::to_string(k)); };
        NCK_REQUIRE(conj.lambda(3) == l(3) + q * l(2), "theta_3 != l3 + q l2");
        NCK_REQUIRE(conj.lambda(4) == l(4) + MPoly::constant(ring, Rational(2)) * q * l(3) +
                                          q * l(2) * l(2) + q * q * l(2),
                    "theta_4 != l4 + 2q l3 + q l2^2 + q^2 l2");
    });
}

CheckResult check_tboolean(const CheckConfig& cfg) {
    return run_timed(6, "t-Boolean description of free multiplication", [&] {
        const int N = cfg.tboolean_nmax;
        std::vector<std::string> vars = {"t"};
        for (int k = 2; k <= N; ++k) vars.push_back("x" + std::to_string(k));
        for (int k = 2; k <= N; ++k) vars.push_back("y" + std::to_string(k));
        auto ring = MPolyRing::make(vars);
        auto bx = symbolic_seq(ring, "x", N);
        auto by = symbolic_seq(ring, "y", N);
        NCK_REQUIRE(t_boolean_multiply_check(bx, by, MPoly::variable(ring, "t")),
                    "identity fails for symbolic t");
    });
}

CheckResult check_appendix(const CheckConfig&) {
    return run_timed(7, "monotone discrepancy polynomials", [&] {
        for (int n = 2; n <= 4; ++n)
            NCK_REQUIRE(monotone_discrepancy(n).is_zero(),
                        "discrepancy at n=" + std::to_string(n) + " is not zero");
        for (int n = 5; n <= 8; ++n) {
            MPoly got = monotone_discrepancy(n);
            MPoly expect = MPoly::parse(monotone_discrepancy_ring(n), appendix_expected(n));
            NCK_REQUIRE(got == expect, "discrepancy at n=" + std::to_string(n) +
                                           " differs; got " + got.to_string());
        }
    });
}

CheckResult check_hopf(const CheckConfig& cfg) {
    return run_timed(8, "antipode routes agree and satisfy the defining relation", [&] {
        const int N = cfg.hopf_nmax;
        auto identity = [](const TPoly& p) { return p; };
        auto s_left = [](const TPoly& p) { return antipode(p, AntipodeMethod::BogoliubovLeft); };
        for (int n = 2; n <= N; ++n) {
            for (const Partition& pi : enumerate_nc(n)) {
                if (pi.num_blocks() == 1) continue;
                TPoly a = antipode_generator(pi, AntipodeMethod::BogoliubovLeft);
                NCK_REQUIRE(a == antipode_generator(pi, AntipodeMethod::BogoliubovRight),
                            "left/right Bogoliubov disagree at " + pi.to_string());
                NCK_REQUIRE(a == antipode_generator(pi, AntipodeMethod::Chains),
                            "all-chains antipode disagrees at " + pi.to_string());
                NCK_REQUIRE(a == antipode_generator(pi, AntipodeMethod::EfficientChains),
                            "efficient-chains antipode disagrees at " + pi.to_string());
                NCK_REQUIRE(conv_on_generator(identity, s_left, pi).is_zero(),
                            "Id * S != unit-counit at " + pi.to_string());
            }
        }
        TPoly s04 = antipode_generator(Partition::zero(4), AntipodeMethod::BogoliubovLeft);
        NCK_REQUIRE(s04.terms.size() == 25,
                    "S(X_{0_4}) has " + std::to_string(s04.terms.size()) + " terms, expected 25");
        auto pre = antipode_chain_summands(Partition::zero(4), false);
        NCK_REQUIRE(pre.size() == 29, "all-chains sum for 0_4 has " + std::to_string(pre.size()) +
                                          " summands, expected 29");
    });
}

CheckResult check_tn(const CheckConfig&) {
    return run_timed(9, "efficient-chain counting sequence", [&] {
        const std::vector<long long> expect = {1, 1, 4, 25, 206, 2060, 23920, 314065, 4582300};
        auto got = count_efficient_chains_0n(9);
        NCK_REQUIRE(got == expect, "t_n sequence mismatch");
        for (int n = 2; n <= 6; ++n)
            NCK_REQUIRE(static_cast<long long>(
                            efficient_chains_to_top(Partition::zero(n)).size()) == expect[n - 1],
                        "direct efficient-chain count mismatch at n=" + std::to_string(n));
        NCK_REQUIRE(u_series_identity(9), "U(zU(z)) != (2-z)U(z) - 1 mod z^10");
    });
}

CheckResult check_morphisms(const CheckConfig& cfg) {
    return run_timed(10, "quotient morphisms and primitive elements", [&] {
        const int N = cfg.morphisms_nmax;
        for (int n = 2; n <= N; ++n) {
            for (const Partition& pi : enumerate_nc(n)) {
                if (pi.num_blocks() == 1) continue;
                TPoly x = TPoly::generator(pi);
                // Psi intertwines the coproducts
                SymTensor lhs = sym_comultiply(psi_to_sym(x));
                SymTensor rhs;
                for (const auto& [key, c] : comultiply(x).terms) {
                    TPoly lp, rp;
                    lp.add_term(key.first, Rational(1));
                    rp.add_term(key.second, Rational(1));
                    SymPoly l = psi_to_sym(lp), r = psi_to_sym(rp);
                    for (const auto& [lm, lc] : l.terms)
                        for (const auto& [rm, rc] : r.terms) rhs.add_term(lm, rm, c * lc * rc);
                }
                NCK_REQUIRE(lhs == rhs, "Psi does not intertwine coproducts at " + pi.to_string());
                // Phi intertwines the coproducts
                ZTensor zl = z_comultiply(phi_to_z(x));
                ZTensor zr;
                for (const auto& [key, c] : comultiply(x).terms) {
                    TPoly lp, rp;
                    lp.add_term(key.first, Rational(1));
                    rp.add_term(key.second, Rational(1));
                    ZPoly l = phi_to_z(lp), r = phi_to_z(rp);
                    for (const auto& [lm, lc] : l.terms)
                        for (const auto& [rm, rc] : r.terms) zr.add_term(lm, rm, c * lc * rc);
                }
                NCK_REQUIRE(zl == zr, "Phi does not intertwine coproducts at " + pi.to_string());
                NCK_REQUIRE(is_primitive(x) == (pi.num_blocks() == 2),
                            "primitivity misclassified at " + pi.to_string());
            }
        }
        // Delta(Y_3) = Y3 (x) 1 + 3 Y2 (x) Y2 + 1 (x) Y3
        SymTensor d3 = sym_comultiply(SymPoly::Y(3));
        SymTensor expect = tensor_of_sym(SymPoly::Y(3), SymPoly::unit()) +
                           tensor_of_sym(SymPoly::unit(), SymPoly::Y(3));
        expect.add_term(SymMono{2}, SymMono{2}, Rational(3));
        NCK_REQUIRE(d3 == expect, "Delta(Y_3) does not match the collected three-term form");
    });
}

CheckResult check_transitions(const CheckConfig& cfg) {
    return run_timed(11, "transition kernels and derived-sequence identity", [&] {
        const int N = cfg.transitions_nmax;
        {
            auto ring = MPolyRing::make({"s", "t"});
            MPoly s = MPoly::variable(ring, "s");
            MPoly t = MPoly::variable(ring, "t");
            auto kernel = convolve(g_bc_m_t(N, s), inverse(g_bc_m_t(N, t)));
            NCK_REQUIRE(kernel == u_fn(N, s - t),
                        "s->t Boolean kernel is not (s-t)^(|pi|-1) on irreducibles");
        }
        {
            std::vector<std::string> vars;
            for (int k = 2; k <= N; ++k) vars.push_back("g" + std::to_string(k));
            auto ring = MPolyRing::make(vars);
            auto gamma = symbolic_seq(ring, "g", N);
            MPoly one = MPoly::constant(ring, Rational(1));
            NCK_REQUIRE(boolean_from_brand(gamma, g_mc_m(N, one)) ==
                            transition(gamma, Brand<MPoly>::monotone(), Brand<MPoly>::boolean()),
                        "Boolean-from-monotone differs from the composite route");
        }
        {
            std::vector<std::string> vars;
            for (int k = 1; k <= N; ++k) vars.push_back("al" + std::to_string(k));
            auto ring = MPolyRing::make(vars);
            std::vector<MPoly> alpha(N + 1, MPoly(ring));
            for (int k = 1; k <= N; ++k)
                alpha[k] = MPoly::variable(ring, "al" + std::to_string(k));
            NCK_REQUIRE(tilde_alpha_identity_check(alpha),
                        "tilde-alpha interval-sum identity fails symbolically");
        }
    });
}

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_check(id, cfg));
    return out;
}

CheckResult run_check(int id, const CheckConfig& cfg) {
    switch (id) {
        case 1: return check_lattice(cfg);
        case 2: return check_group_laws(cfg);
        case 3: return check_counting(cfg);
        case 4: return check_coset(cfg);
        case 5: return check_normalizer(cfg);
        case 6: return check_tboolean(cfg);
        case 7: return check_appendix(cfg);
        case 8: return check_hopf(cfg);
        case 9: return check_tn(cfg);
        case 10: return check_morphisms(cfg);
        case 11: return check_transitions(cfg);
        default: throw std::domain_error("run_check: criterion id out of range");
    }
}

}  // namespace nck
