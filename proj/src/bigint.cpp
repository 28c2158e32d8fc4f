#include "nckernel/bigint.hpp"

#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace nck {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    uint64_t m = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
}

BigInt BigInt::from_u64(uint64_t v, int sign) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = sign;
    r.mag_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) r.mag_.push_back(static_cast<uint32_t>(v >> 32));
    return r;
}

uint64_t BigInt::to_u64() const {
    uint64_t v = 0;
    if (mag_.size() > 1) v = static_cast<uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return v;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() < b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) {
            mag_.clear();
            sign_ = 0;
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            sign_ = o.sign_;
        }
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        mag_.clear();
        sign_ = 0;
        return *this;
    }
    if (fits_u64() && o.fits_u64()) {
        uint64_t x = to_u64(), y = o.to_u64();
        // 64x64 -> 128 to stay exact.
        unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
        int s = sign_ * o.sign_;
        mag_.clear();
        sign_ = s;
        while (p) {
            mag_.push_back(static_cast<uint32_t>(p));
            p >>= 32;
        }
        return *this;
    }
    sign_ *= o.sign_;
    mag_ = mul_mag(mag_, o.mag_);
    return *this;
}

// Schoolbook bit-level long division on magnitudes; operand sizes in this
// library stay small enough that this is never a bottleneck.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        q.clear();
        return;
    }
    int bits = static_cast<int>(32 * (a.size() - 1)) + (32 - std::countl_zero(a.back()));
    for (int i = bits - 1; i >= 0; --i) {
        // r = (r << 1) | bit_i(a)
        uint32_t carry = (a[i / 32] >> (i % 32)) & 1u;
        for (size_t k = 0; k < r.size(); ++k) {
            uint32_t nxt = r[k] >> 31;
            r[k] = (r[k] << 1) | carry;
            carry = nxt;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[i / 32] |= 1u << (i % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    if (a.fits_u64() && b.fits_u64()) {
        uint64_t x = a.to_u64(), y = b.to_u64();
        q = from_u64(x / y, a.sign_ * b.sign_);
        r = from_u64(x % y, a.sign_);
        return;
    }
    BigInt qq, rr;
    divmod_mag(a.mag_, b.mag_, qq.mag_, rr.mag_);
    qq.sign_ = qq.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rr.sign_ = rr.mag_.empty() ? 0 : a.sign_;
    q = std::move(qq);
    r = std::move(rr);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    if (a.fits_u64() && b.fits_u64())
        return from_u64(std::gcd(a.to_u64(), b.to_u64()), 1);
    BigInt x = a, y = b;
    x.sign_ = x.mag_.empty() ? 0 : 1;
    y.sign_ = y.mag_.empty() ? 0 : 1;
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_) * sign_;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool BigInt::fits_longlong() const {
    if (mag_.size() > 2) return false;
    uint64_t v = to_u64();
    if (sign_ >= 0) return v <= static_cast<uint64_t>(INT64_MAX);
    return v <= static_cast<uint64_t>(INT64_MAX) + 1;
}

long long BigInt::to_longlong() const {
    assert(fits_longlong());
    uint64_t v = to_u64();
    return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    BigInt chunk_base(1000000000LL);
    while (i < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - i);
        long long chunk = 0;
        for (size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + (c - '0');
        }
        BigInt mult(1LL);
        for (size_t k = 0; k < take; ++k) mult *= BigInt(10LL);
        r *= mult;
        r += BigInt(chunk);
        i += take;
    }
    if (neg) r.sign_ = -r.sign_;
    (void)chunk_base;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    if (fits_longlong()) return std::to_string(to_longlong());
    std::string out;
    BigInt v = *this;
    v.sign_ = 1;
    BigInt base(1000000000LL);
    std::vector<uint32_t> chunks;
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, base, q, r);
        chunks.push_back(static_cast<uint32_t>(r.is_zero() ? 0 : r.to_u64()));
        v = std::move(q);
    }
    out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    if (sign_ < 0) out.insert(out.begin(), '-');
    return out;
}

}  // namespace nck
