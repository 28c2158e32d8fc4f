#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nck {

// Parse failure with the offending position in the input text.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// A non-crossing partition of {1..n} in canonical block form: blocks sorted
// by their minima, elements ascending.  Canonical form makes equality and
// ordering plain field comparisons.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    static Partition zero(int n);  // n singletons
    static Partition one(int n);   // single block

    // Text form "{1,2,5}{3,4}"; rejects crossing / non-partition input.
    static Partition parse(std::string_view text);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_of(int element) const { return block_of_[element]; }  // 1-based element

    bool is_irreducible() const;  // 1 and n in one block
    int inner_count() const;
    int outer_count() const { return num_blocks() - inner_count(); }
    bool is_interval_partition() const { return inner_count() == 0; }

    std::string to_string() const;

    bool operator==(const Partition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // index 1..n

    void canonicalize_and_validate();
};

// Reverse refinement: every block of q is a union of blocks of p.
bool leq(const Partition& p, const Partition& q);

// p << q : leq and min/max of every q-block lie in one common p-block.
bool ll(const Partition& p, const Partition& q);

// p ⊑ q : leq and each p-block sits in a contiguous run of its q-block.
bool sqsubseteq(const Partition& p, const Partition& q);

Partition kreweras(const Partition& p);
Partition relative_kreweras(const Partition& p, const Partition& s);

// Relabeled restriction to an ascending nonempty subset w of {1..p.n}.
Partition restrict_to(const Partition& p, const std::vector<int>& w);

Partition concat(const Partition& p, const Partition& q);

std::vector<Partition> irreducible_factors(const Partition& p);
Partition interval_cover(const Partition& p);   // the interval partition {J_1..J_k}
Partition irreducible_cover(const Partition& p);

// Number of monotone orderings of the blocks (nested block gets the larger
// label), by the forest hook-length formula |p|!/prod h(V).
long long monotone_order_count(const Partition& p);

bool blocks_are_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

}  // namespace nck
