#include "nckernel/moments.hpp"

namespace nck {

MPolyRingPtr monotone_discrepancy_ring(int n) {
    std::vector<std::string> vars;
    for (int k = 2; k <= n; ++k) vars.push_back("rx" + std::to_string(k));
    for (int k = 2; k <= n; ++k) vars.push_back("ry" + std::to_string(k));
    return MPolyRing::make(std::move(vars));
}

MPoly monotone_discrepancy(int n) {
    if (n < 2 || n > NcLattice::cap())
        throw std::domain_error("monotone_discrepancy: n out of range");
    MPolyRingPtr ring = monotone_discrepancy_ring(n);
    const MPoly one = MPoly::constant(ring, Rational(1));

    auto symbolic_seq = [&](const std::string& prefix) {
        std::vector<MPoly> a(n + 1, MPoly(ring));
        a[1] = one;
        for (int k = 2; k <= n; ++k) a[k] = MPoly::variable(ring, prefix + std::to_string(k));
        return MomentSeq<MPoly>(n, std::move(a));
    };

    Brand<MPoly> mono = Brand<MPoly>::monotone();
    Brand<MPoly> fr = Brand<MPoly>::free();

    MomentSeq<MPoly> rho_x = symbolic_seq("rx");
    MomentSeq<MPoly> rho_y = symbolic_seq("ry");
    MomentSeq<MPoly> kx = moments_to_cumulants(cumulants_to_moments(rho_x, mono), fr);
    MomentSeq<MPoly> ky = moments_to_cumulants(cumulants_to_moments(rho_y, mono), fr);
    MomentSeq<MPoly> moments_xy = cumulants_to_moments(free_multiply(kx, ky), fr);
    MomentSeq<MPoly> rho_xy = moments_to_cumulants(moments_xy, mono);
    MomentSeq<MPoly> kr_sum = kreweras_convolution(rho_x, rho_y);
    return rho_xy.a[n] - kr_sum.a[n];
}

}  // namespace nck
