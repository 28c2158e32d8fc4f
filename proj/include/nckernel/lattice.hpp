#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "nckernel/partition.hpp"

namespace nck {

// A strictly increasing tuple in (NC(n), <=), of length >= 1.
struct Chain {
    std::vector<Partition> steps;

    explicit Chain(std::vector<Partition> s);
    int n() const { return steps.front().n(); }
    int length() const { return static_cast<int>(steps.size()) - 1; }

    // Every distinct block appearing in some step / in some step past the first.
    std::vector<std::vector<int>> all_blocks() const;
    std::vector<std::vector<int>> blocks_plus() const;
    bool is_efficient() const;
};

// Memoized enumeration and order theory of a fixed NC(n).
class NcLattice {
public:
    // Registry access; throws std::domain_error for n < 1 or n > cap().
    static const NcLattice& of(int n);
    static int cap();
    static void set_cap(int c);

    int n() const { return n_; }
    int size() const { return static_cast<int>(parts_.size()); }
    const std::vector<Partition>& partitions() const { return parts_; }
    const Partition& part(int idx) const { return parts_[idx]; }
    int index_of(const Partition& p) const;

    int zero_index() const { return zero_idx_; }
    int one_index() const { return one_idx_; }
    int nblocks(int idx) const { return nblocks_[idx]; }
    int inner(int idx) const { return inner_[idx]; }
    bool irreducible(int idx) const { return irred_[idx]; }
    int kreweras_of(int idx) const { return kr_[idx]; }

    // Block-size multiset classes ("types"); sizes listed descending.
    int type_of(int idx) const { return type_of_[idx]; }
    int num_types() const { return static_cast<int>(type_sizes_.size()); }
    const std::vector<int>& type_sizes(int t) const { return type_sizes_[t]; }

    // Indices ordered by ascending block count (1_n first).
    const std::vector<int>& by_block_count() const { return by_blocks_; }

    bool leq_idx(int a, int b) const;
    const std::vector<int>& ups(int idx) const;  // {b : a <= b}, ascending, includes a

    // Non-unit relabeled restrictions {(m, idx_m)} of pi to the blocks of
    // sigma (pi <= sigma); memoized.
    const std::vector<std::pair<int, int>>& interval_factors(int pi, int sigma) const;

    // Irreducible concatenation factors as (m, idx in NC(m)).
    const std::vector<std::pair<int, int>>& concat_factors(int idx) const;

private:
    explicit NcLattice(int n);
    void ensure_relations() const;

    int n_;
    std::vector<Partition> parts_;
    std::vector<int> nblocks_, inner_, kr_, type_of_, by_blocks_;
    std::vector<char> irred_;
    std::vector<std::vector<int>> type_sizes_;
    int zero_idx_ = -1, one_idx_ = -1;

    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// All non-crossing partitions of {1..n}, canonical form, memoized per n.
const std::vector<Partition>& enumerate_nc(int n);

// All chains p = pi_0 < ... < pi_k = q (k >= 1); with efficient_only, only
// chains where each newly created block appears in exactly one step.
std::vector<Chain> chains_between(const Partition& p, const Partition& q, bool efficient_only);

// Efficient chains from pi up to 1_n via the block-wise product recursion
// (no all-chain filtering); memoized.
const std::vector<Chain>& efficient_chains_to_top(const Partition& pi);

}  // namespace nck
