#include "nckernel/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace nck {

namespace {

std::mutex g_registry_mutex;
std::atomic<int> g_cap{10};

// Raw block lists of NC(m) on {1..m}, enumeration by "block of 1" recursion.
// Stored in a deque so references stay valid as higher degrees are added.
const std::vector<std::vector<std::vector<int>>>& raw_nc(int m) {
    // memo[0] holds the single empty partition of the empty set
    static std::deque<std::vector<std::vector<std::vector<int>>>> memo{{{}}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (m < static_cast<int>(memo.size())) return memo[m];
    for (int k = static_cast<int>(memo.size()); k <= m; ++k) {
        std::vector<std::vector<std::vector<int>>> out;
        // choose the block of 1 as {1} plus any subset of {2..k}
        for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
            std::vector<int> B = {1};
            for (int e = 2; e <= k; ++e)
                if (mask & (1u << (e - 2))) B.push_back(e);
            // segments: gaps between consecutive B elements, then the tail
            std::vector<std::pair<int, int>> segments;  // [lo, hi] inclusive, may be empty
            for (size_t i = 0; i + 1 < B.size(); ++i) segments.push_back({B[i] + 1, B[i + 1] - 1});
            segments.push_back({B.back() + 1, k});
            std::vector<int> seglen;
            for (auto [lo, hi] : segments) seglen.push_back(hi - lo + 1);
            // odometer over the sub-partitions of each segment
            std::vector<size_t> pick(segments.size(), 0);
            while (true) {
                std::vector<std::vector<int>> blocks = {B};
                for (size_t s = 0; s < segments.size(); ++s) {
                    const auto& sub = memo[seglen[s]][pick[s]];
                    for (const auto& blk : sub) {
                        std::vector<int> shifted;
                        for (int e : blk) shifted.push_back(e + segments[s].first - 1);
                        blocks.push_back(std::move(shifted));
                    }
                }
                out.push_back(std::move(blocks));
                size_t s = 0;
                for (; s < segments.size(); ++s) {
                    if (++pick[s] < memo[seglen[s]].size()) break;
                    pick[s] = 0;
                }
                if (s == segments.size()) break;
            }
        }
        memo.push_back(std::move(out));
    }
    return memo[m];
}

uint64_t pair_key(int a, int b) { return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b); }

}  // namespace

struct NcLattice::Impl {
    mutable std::once_flag relations_once;
    mutable std::vector<uint64_t> leq_bits;          // size*size bits
    mutable std::vector<std::vector<int>> ups;
    mutable std::unordered_map<uint64_t, std::vector<std::pair<int, int>>> factor_memo;
    mutable std::mutex factor_mutex;
    mutable std::vector<std::vector<std::pair<int, int>>> concat_factors;
    mutable std::once_flag concat_once;
};

NcLattice::NcLattice(int n) : n_(n), impl_(new Impl) {
    const auto& raw = raw_nc(n);
    parts_.reserve(raw.size());
    for (const auto& blocks : raw) parts_.emplace_back(n, blocks);
    std::sort(parts_.begin(), parts_.end());

    std::map<std::vector<int>, int> type_ids;
    for (int i = 0; i < size(); ++i) {
        const Partition& p = parts_[i];
        nblocks_.push_back(p.num_blocks());
        inner_.push_back(p.inner_count());
        irred_.push_back(p.is_irreducible() ? 1 : 0);
        std::vector<int> sizes;
        for (const auto& b : p.blocks()) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        auto [it, fresh] = type_ids.emplace(sizes, static_cast<int>(type_sizes_.size()));
        if (fresh) type_sizes_.push_back(sizes);
        type_of_.push_back(it->second);
        if (p.num_blocks() == n) zero_idx_ = i;
        if (p.num_blocks() == 1) one_idx_ = i;
    }
    for (int i = 0; i < size(); ++i) kr_.push_back(index_of(kreweras(parts_[i])));
    by_blocks_.resize(size());
    for (int i = 0; i < size(); ++i) by_blocks_[i] = i;
    std::stable_sort(by_blocks_.begin(), by_blocks_.end(),
                     [this](int a, int b) { return nblocks_[a] < nblocks_[b]; });
}

const NcLattice& NcLattice::of(int n) {
    if (n < 1 || n > cap())
        throw std::domain_error("NcLattice: n out of range 1.." + std::to_string(cap()));
    static std::map<int, std::unique_ptr<NcLattice>> registry;
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = registry.find(n);
    if (it == registry.end())
        it = registry.emplace(n, std::unique_ptr<NcLattice>(new NcLattice(n))).first;
    return *it->second;
}

int NcLattice::cap() { return g_cap.load(); }
void NcLattice::set_cap(int c) { g_cap.store(c); }

int NcLattice::index_of(const Partition& p) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
    if (it == parts_.end() || !(*it == p))
        throw std::domain_error("NcLattice: partition not in NC(" + std::to_string(n_) + ")");
    return static_cast<int>(it - parts_.begin());
}

void NcLattice::ensure_relations() const {
    std::call_once(impl_->relations_once, [this] {
        const size_t sz = parts_.size();
        impl_->leq_bits.assign((sz * sz + 63) / 64, 0);
        impl_->ups.assign(sz, {});
        for (size_t a = 0; a < sz; ++a) {
            for (size_t b = 0; b < sz; ++b) {
                if (nblocks_[a] < nblocks_[b]) continue;
                if (leq(parts_[a], parts_[b])) {
                    size_t bit = a * sz + b;
                    impl_->leq_bits[bit >> 6] |= uint64_t{1} << (bit & 63);
                    impl_->ups[a].push_back(static_cast<int>(b));
                }
            }
        }
    });
}

bool NcLattice::leq_idx(int a, int b) const {
    ensure_relations();
    size_t bit = static_cast<size_t>(a) * parts_.size() + b;
    return (impl_->leq_bits[bit >> 6] >> (bit & 63)) & 1;
}

const std::vector<int>& NcLattice::ups(int idx) const {
    ensure_relations();
    return impl_->ups[idx];
}

const std::vector<std::pair<int, int>>& NcLattice::interval_factors(int pi, int sigma) const {
    std::lock_guard<std::mutex> lock(impl_->factor_mutex);
    auto key = pair_key(pi, sigma);
    auto it = impl_->factor_memo.find(key);
    if (it != impl_->factor_memo.end()) return it->second;
    const Partition& p = parts_[pi];
    const Partition& s = parts_[sigma];
    std::vector<std::pair<int, int>> factors;
    for (const auto& w : s.blocks()) {
        Partition r = restrict_to(p, w);
        if (r.num_blocks() == 1) continue;  // z(1_m) = 1, unit factor
        int m = r.n();
        factors.emplace_back(m, NcLattice::of(m).index_of(r));
    }
    return impl_->factor_memo.emplace(key, std::move(factors)).first->second;
}

const std::vector<std::pair<int, int>>& NcLattice::concat_factors(int idx) const {
    std::call_once(impl_->concat_once, [this] {
        impl_->concat_factors.resize(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) {
            for (const Partition& f : irreducible_factors(parts_[i])) {
                impl_->concat_factors[i].emplace_back(f.n(), NcLattice::of(f.n()).index_of(f));
            }
        }
    });
    return impl_->concat_factors[idx];
}

const std::vector<Partition>& enumerate_nc(int n) { return NcLattice::of(n).partitions(); }

Chain::Chain(std::vector<Partition> s) : steps(std::move(s)) {
    if (steps.size() < 2) throw std::domain_error("Chain: needs length >= 1");
    for (size_t i = 0; i + 1 < steps.size(); ++i)
        if (!(leq(steps[i], steps[i + 1]) && !(steps[i] == steps[i + 1])))
            throw std::domain_error("Chain: steps must strictly increase");
}

std::vector<std::vector<int>> Chain::all_blocks() const {
    std::set<std::vector<int>> acc;
    for (const auto& p : steps)
        for (const auto& b : p.blocks()) acc.insert(b);
    return {acc.begin(), acc.end()};
}

std::vector<std::vector<int>> Chain::blocks_plus() const {
    std::set<std::vector<int>> base(steps.front().blocks().begin(), steps.front().blocks().end());
    std::set<std::vector<int>> acc;
    for (size_t i = 1; i < steps.size(); ++i)
        for (const auto& b : steps[i].blocks())
            if (!base.count(b)) acc.insert(b);
    return {acc.begin(), acc.end()};
}

bool Chain::is_efficient() const {
    for (const auto& v : blocks_plus()) {
        int occurrences = 0;
        for (size_t i = 1; i < steps.size(); ++i) {
            const Partition& p = steps[i];
            int bo = p.block_of(v.front());
            if (p.blocks()[bo] == v) ++occurrences;
        }
        if (occurrences != 1) return false;
    }
    return true;
}

namespace {

void dfs_chains(const NcLattice& lat, int cur, int target, std::vector<int>& path,
                std::vector<Chain>& out) {
    if (cur == target) {
        std::vector<Partition> steps;
        for (int i : path) steps.push_back(lat.part(i));
        out.emplace_back(std::move(steps));
        return;
    }
    for (int nxt : lat.ups(cur)) {
        if (nxt == cur || !lat.leq_idx(nxt, target)) continue;
        path.push_back(nxt);
        dfs_chains(lat, nxt, target, path, out);
        path.pop_back();
    }
}

// Combine per-block partitions through the blocks of sigma.
Partition assemble(const Partition& sigma, const std::vector<const Partition*>& locals) {
    std::vector<std::vector<int>> blocks;
    for (size_t s = 0; s < locals.size(); ++s) {
        const auto& w = sigma.blocks()[s];
        for (const auto& b : locals[s]->blocks()) {
            std::vector<int> mapped;
            for (int e : b) mapped.push_back(w[e - 1]);
            blocks.push_back(std::move(mapped));
        }
    }
    return Partition(sigma.n(), std::move(blocks));
}

}  // namespace

const std::vector<Chain>& efficient_chains_to_top(const Partition& pi) {
    static std::map<Partition, std::vector<Chain>> memo;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = memo.find(pi);
    if (it != memo.end()) return it->second;

    const int n = pi.n();
    const Partition top = Partition::one(n);
    if (pi == top) throw std::domain_error("efficient_chains_to_top: pi must differ from 1_n");
    std::vector<Chain> out;
    out.push_back(Chain({pi, top}));

    const NcLattice& lat = NcLattice::of(n);
    int pi_idx = lat.index_of(pi);
    for (int sidx : lat.ups(pi_idx)) {
        if (sidx == pi_idx || sidx == lat.one_index()) continue;
        const Partition& sigma = lat.part(sidx);
        // options per block of sigma: efficient chains of the restriction,
        // or the trivial constant when the restriction is already full
        std::vector<std::vector<std::vector<Partition>>> options;  // per block: list of local chains
        for (const auto& w : sigma.blocks()) {
            Partition local = restrict_to(pi, w);
            std::vector<std::vector<Partition>> opts;
            if (local.num_blocks() == 1) {
                opts.push_back({local});
            } else {
                for (const Chain& c : efficient_chains_to_top(local)) opts.push_back(c.steps);
            }
            options.push_back(std::move(opts));
        }
        std::vector<size_t> pick(options.size(), 0);
        while (true) {
            // reconstruct global chain (pi, ..., sigma, 1_n), aligning the
            // per-block chains at the top and padding at the bottom
            int m = 0;
            for (size_t s = 0; s < options.size(); ++s)
                m = std::max(m, static_cast<int>(options[s][pick[s]].size()) - 1);
            std::vector<Partition> steps;
            for (int i = 0; i <= m; ++i) {
                std::vector<const Partition*> locals;
                for (size_t s = 0; s < options.size(); ++s) {
                    const auto& chain = options[s][pick[s]];
                    int L = static_cast<int>(chain.size()) - 1;
                    int idx = std::max(0, L - (m - i));
                    locals.push_back(&chain[idx]);
                }
                steps.push_back(assemble(sigma, locals));
            }
            steps.push_back(top);
            out.push_back(Chain(std::move(steps)));

            size_t s = 0;
            for (; s < options.size(); ++s) {
                if (++pick[s] < options[s].size()) break;
                pick[s] = 0;
            }
            if (s == options.size()) break;
        }
    }
    return memo.emplace(pi, std::move(out)).first->second;
}

std::vector<Chain> chains_between(const Partition& p, const Partition& q, bool efficient_only) {
    if (p.n() != q.n()) throw std::domain_error("chains_between: mismatched ground sets");
    if (!leq(p, q) || p == q) throw std::domain_error("chains_between: requires p < q");
    if (efficient_only && q == Partition::one(p.n())) return efficient_chains_to_top(p);
    const NcLattice& lat = NcLattice::of(p.n());
    std::vector<Chain> out;
    std::vector<int> path = {lat.index_of(p)};
    dfs_chains(lat, path[0], lat.index_of(q), path, out);
    if (efficient_only) {
        std::vector<Chain> filtered;
        for (auto& c : out)
            if (c.is_efficient()) filtered.push_back(std::move(c));
        return filtered;
    }
    return out;
}

}  // namespace nck
