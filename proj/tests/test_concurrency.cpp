#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>
#include <vector>

#include "nckernel/hopf.hpp"
#include "nckernel/moments.hpp"

using namespace nck;

// The caches warm up lazily behind locks; concurrent first use from several
// threads must agree and not tear.
TEST_CASE("parallel warm-up of the lattice and engine caches") {
    constexpr int kThreads = 4;
    std::vector<size_t> counts(kThreads, 0);
    std::vector<MomentSeq<Rational>> cumulants;
    std::vector<TPoly> antipodes(kThreads);
    std::vector<long long> tn7(kThreads, 0);

    for (int rep = 0; rep < kThreads; ++rep) {
        std::vector<Rational> a = {Rational(0), Rational(1), Rational(2), Rational(-1),
                                   Rational(1, 2), Rational(3)};
        cumulants.emplace_back(5, a);
    }

    std::vector<std::thread> workers;
    for (int t = 0; t < kThreads; ++t) {
        workers.emplace_back([&, t] {
            counts[t] = enumerate_nc(7).size();
            auto m = cumulants[t];
            auto round = act(act(m, g_fc_m(5, Rational(1))), inverse(g_fc_m(5, Rational(1))));
            if (round == m) counts[t] += 1000000;
            antipodes[t] =
                antipode_generator(Partition::zero(4), AntipodeMethod::EfficientChains);
            tn7[t] = count_efficient_chains_0n(7).back();
        });
    }
    for (auto& w : workers) w.join();

    for (int t = 0; t < kThreads; ++t) {
        CHECK(counts[t] == 429 + 1000000);
        CHECK(antipodes[t] == antipodes[0]);
        CHECK(antipodes[t].terms.size() == 25);
        CHECK(tn7[t] == 23920);
    }
}
