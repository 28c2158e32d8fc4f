#include "nckernel/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace nck {

bool blocks_are_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(n + 1, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) owner[e] = static_cast<int>(b);
    // a<b<c<d with a,c in one block and b,d in another
    for (int a = 1; a <= n; ++a)
        for (int c = a + 2; c <= n; ++c) {
            if (owner[a] != owner[c]) continue;
            for (int b = a + 1; b < c; ++b) {
                if (owner[b] == owner[a]) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (owner[d] == owner[b]) return false;
            }
        }
    return true;
}

void Partition::canonicalize_and_validate() {
    if (n_ < 1) throw std::domain_error("Partition: n must be positive");
    for (auto& b : blocks_) {
        if (b.empty()) throw std::domain_error("Partition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(n_ + 1, -1);
    int count = 0;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        for (int e : blocks_[b]) {
            if (e < 1 || e > n_) throw std::domain_error("Partition: element out of range");
            if (block_of_[e] != -1) throw std::domain_error("Partition: duplicate element");
            block_of_[e] = static_cast<int>(b);
            ++count;
        }
    }
    if (count != n_) throw std::domain_error("Partition: not a partition of {1..n}");
    if (!blocks_are_noncrossing(n_, blocks_)) throw std::domain_error("Partition: crossing blocks");
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    canonicalize_and_validate();
}

Partition Partition::zero(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return Partition(n, std::move(blocks));
}

Partition Partition::one(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return Partition(n, {all});
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    size_t i = 0;
    if (text.empty()) throw ParseError("empty partition text", 0);
    int maxel = 0;
    while (i < text.size()) {
        if (text[i] != '{') throw ParseError("expected '{'", i);
        ++i;
        std::vector<int> block;
        while (true) {
            size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw ParseError("expected element", i);
            block.push_back(std::stoi(std::string(text.substr(start, i - start))));
            maxel = std::max(maxel, block.back());
            if (i >= text.size()) throw ParseError("unterminated block", i);
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == '}') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or '}'", i);
        }
        blocks.push_back(std::move(block));
    }
    try {
        return Partition(maxel, std::move(blocks));
    } catch (const std::domain_error& e) {
        throw ParseError(e.what(), 0);
    }
}

bool Partition::is_irreducible() const { return block_of_[1] == block_of_[n_]; }

int Partition::inner_count() const {
    // V is inner iff some other block's span strictly contains V's span.
    int inner = 0;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        int lo = blocks_[i].front(), hi = blocks_[i].back();
        for (size_t j = 0; j < blocks_.size(); ++j) {
            if (j == i) continue;
            if (blocks_[j].front() < lo && hi < blocks_[j].back()) {
                ++inner;
                break;
            }
        }
    }
    return inner;
}

std::string Partition::to_string() const {
    std::string out;
    for (const auto& b : blocks_) {
        out += "{";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(b[i]);
        }
        out += "}";
    }
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (n_ != o.n_) return n_ <=> o.n_;
    return blocks_ <=> o.blocks_;
}

bool leq(const Partition& p, const Partition& q) {
    if (p.n() != q.n()) throw std::domain_error("leq: mismatched ground sets");
    for (const auto& b : p.blocks()) {
        int target = q.block_of(b.front());
        for (int e : b)
            if (q.block_of(e) != target) return false;
    }
    return true;
}

bool ll(const Partition& p, const Partition& q) {
    if (!leq(p, q)) return false;
    for (const auto& w : q.blocks())
        if (p.block_of(w.front()) != p.block_of(w.back())) return false;
    return true;
}

bool sqsubseteq(const Partition& p, const Partition& q) {
    if (!leq(p, q)) return false;
    for (const auto& w : q.blocks()) {
        for (size_t i = 0; i + 2 <= w.size(); ++i) {
            // once we leave a p-block inside w, we may not re-enter it
            for (size_t j = i + 1; j < w.size(); ++j) {
                if (p.block_of(w[i]) == p.block_of(w[j])) {
                    for (size_t k = i + 1; k < j; ++k)
                        if (p.block_of(w[k]) != p.block_of(w[i])) return false;
                }
            }
        }
    }
    return true;
}

Partition kreweras(const Partition& p) {
    const int n = p.n();
    // i~j (i<j) directly iff {i+1..j} is a union of p-blocks; Kr(p) is the
    // transitive closure (the maximal bar-partition avoiding p in the
    // interleaved picture).
    std::vector<int> cls(n + 1);
    std::iota(cls.begin(), cls.end(), 0);
    auto find = [&](int x) {
        while (cls[x] != x) x = cls[x] = cls[cls[x]];
        return x;
    };
    // interval (i, j] is a union of blocks iff every block is fully in or out
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            bool unionOfBlocks = true;
            for (const auto& b : p.blocks()) {
                bool any = false, all = true;
                for (int e : b) {
                    bool in = (e > i && e <= j);
                    any |= in;
                    all &= in;
                }
                if (any && !all) {
                    unionOfBlocks = false;
                    break;
                }
            }
            if (unionOfBlocks) cls[find(i)] = find(j);
        }
    }
    std::vector<std::vector<int>> groups(n + 1);
    for (int i = 1; i <= n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return Partition(n, std::move(blocks));
}

Partition restrict_to(const Partition& p, const std::vector<int>& w) {
    if (w.empty()) throw std::domain_error("restrict_to: empty subset");
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > p.n()) throw std::domain_error("restrict_to: element out of range");
        if (i && w[i] <= w[i - 1]) throw std::domain_error("restrict_to: subset not ascending");
    }
    const int m = static_cast<int>(w.size());
    std::vector<std::vector<int>> byblock(p.num_blocks());
    for (int i = 0; i < m; ++i) byblock[p.block_of(w[i])].push_back(i + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& b : byblock)
        if (!b.empty()) blocks.push_back(std::move(b));
    return Partition(m, std::move(blocks));
}

Partition relative_kreweras(const Partition& p, const Partition& s) {
    if (!leq(p, s)) throw std::domain_error("relative_kreweras: p must refine s");
    std::vector<std::vector<int>> blocks;
    for (const auto& w : s.blocks()) {
        Partition local = kreweras(restrict_to(p, w));
        for (const auto& b : local.blocks()) {
            std::vector<int> mapped;
            for (int e : b) mapped.push_back(w[e - 1]);
            blocks.push_back(std::move(mapped));
        }
    }
    return Partition(p.n(), std::move(blocks));
}

Partition concat(const Partition& p, const Partition& q) {
    std::vector<std::vector<int>> blocks = p.blocks();
    for (const auto& b : q.blocks()) {
        std::vector<int> shifted;
        for (int e : b) shifted.push_back(e + p.n());
        blocks.push_back(std::move(shifted));
    }
    return Partition(p.n() + q.n(), std::move(blocks));
}

Partition interval_cover(const Partition& p) {
    std::vector<std::vector<int>> blocks;
    int start = 1;
    while (start <= p.n()) {
        int end = p.blocks()[p.block_of(start)].back();
        for (int e = start; e <= end; ++e)
            end = std::max(end, p.blocks()[p.block_of(e)].back());
        std::vector<int> J;
        for (int e = start; e <= end; ++e) J.push_back(e);
        blocks.push_back(std::move(J));
        start = end + 1;
    }
    return Partition(p.n(), std::move(blocks));
}

std::vector<Partition> irreducible_factors(const Partition& p) {
    std::vector<Partition> factors;
    const Partition cover = interval_cover(p);
    for (const auto& J : cover.blocks()) factors.push_back(restrict_to(p, J));
    return factors;
}

Partition irreducible_cover(const Partition& p) {
    if (p.is_irreducible()) return p;
    std::vector<std::vector<int>> blocks;
    std::vector<int> merged = p.blocks()[p.block_of(1)];
    const auto& right = p.blocks()[p.block_of(p.n())];
    merged.insert(merged.end(), right.begin(), right.end());
    blocks.push_back(std::move(merged));
    for (int b = 0; b < p.num_blocks(); ++b)
        if (b != p.block_of(1) && b != p.block_of(p.n())) blocks.push_back(p.blocks()[b]);
    return Partition(p.n(), std::move(blocks));
}

long long monotone_order_count(const Partition& p) {
    const int k = p.num_blocks();
    // h(V) = number of blocks nested weakly inside V (by span containment)
    std::vector<long long> hook(k, 0);
    for (int i = 0; i < k; ++i) {
        int lo = p.blocks()[i].front(), hi = p.blocks()[i].back();
        for (int j = 0; j < k; ++j)
            if (lo <= p.blocks()[j].front() && p.blocks()[j].back() <= hi) ++hook[i];
    }
    long long num = 1;
    for (int i = 2; i <= k; ++i) num *= i;
    long long den = 1;
    for (int i = 0; i < k; ++i) den *= hook[i];
    assert(num % den == 0);
    return num / den;
}

}  // namespace nck
