#include "nckernel/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nck {

std::shared_ptr<const MPolyRing> MPolyRing::make(std::vector<std::string> vars) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("MPolyRing: duplicate variable");
    return std::shared_ptr<const MPolyRing>(new MPolyRing(std::move(vars)));
}

int MPolyRing::var_index(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool GradedLexDesc::operator()(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(MPolyRingPtr ring, Rational c) {
    MPoly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::vector<uint32_t>(p.ring_->nvars(), 0), std::move(c));
    return p;
}

MPoly MPoly::variable(const MPolyRingPtr& ring, std::string_view name) {
    int idx = ring->var_index(name);
    if (idx < 0) throw std::invalid_argument("MPoly: unknown variable " + std::string(name));
    MPoly p(ring);
    std::vector<uint32_t> e(ring->nvars(), 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    std::vector<uint32_t> zero(ring_->nvars(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

uint32_t MPoly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<uint32_t>(d, std::accumulate(e.begin(), e.end(), uint32_t{0}));
    return d;
}

void MPoly::check_ring(const MPoly& o) const {
    if (ring_ == o.ring_) return;
    if (ring_ && o.ring_ && ring_->vars() == o.ring_->vars()) return;
    throw std::domain_error("MPoly: mixed rings");
}

void MPoly::add_term(const std::vector<uint32_t>& expo, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    check_ring(o);
    MPoly r(ring_);
    std::vector<uint32_t> e(ring_->nvars());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return *this = std::move(r);
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(uint32_t e) const {
    MPoly r = constant(ring_, Rational(1));
    for (uint32_t i = 0; i < e; ++i) r *= *this;
    return r;
}

MPoly MPoly::substitute(size_t var, const Rational& value) const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        Rational cc = c;
        for (uint32_t k = 0; k < e[var]; ++k) cc *= value;
        std::vector<uint32_t> e2 = e;
        e2[var] = 0;
        r.add_term(e2, cc);
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    check_ring(o);
    return terms_ == o.terms_;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string coeff = mag.to_string();
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = mono;
        } else {
            term = coeff + "*" + mono;
        }
        if (first) {
            out += (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? "-" : "+") + term;
        }
    }
    return out;
}

namespace {

struct TermCursor {
    std::string_view s;
    size_t pos = 0;
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

bool is_num_char(char c) { return (c >= '0' && c <= '9'); }
bool is_var_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

MPoly MPoly::parse(const MPolyRingPtr& ring, std::string_view text) {
    MPoly out(ring);
    TermCursor cur{text};
    if (text == "0") return out;
    bool neg = false;
    if (!cur.eof() && (cur.peek() == '+' || cur.peek() == '-')) {
        neg = cur.peek() == '-';
        ++cur.pos;
    }
    while (!cur.eof()) {
        Rational coeff(1);
        std::vector<uint32_t> expo(ring->nvars(), 0);
        bool saw_factor = false;
        while (true) {
            if (cur.eof()) break;
            char c = cur.peek();
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++cur.pos;
                continue;
            }
            if (is_num_char(c)) {
                size_t start = cur.pos;
                while (!cur.eof() && is_num_char(cur.peek())) ++cur.pos;
                std::string num(text.substr(start, cur.pos - start));
                if (!cur.eof() && cur.peek() == '/') {
                    ++cur.pos;
                    size_t ds = cur.pos;
                    while (!cur.eof() && is_num_char(cur.peek())) ++cur.pos;
                    coeff *= Rational(BigInt::from_string(num),
                                      BigInt::from_string(std::string(text.substr(ds, cur.pos - ds))));
                } else {
                    coeff *= Rational(BigInt::from_string(num), BigInt(1));
                }
                saw_factor = true;
                continue;
            }
            // variable name: letters then var chars
            size_t start = cur.pos;
            while (!cur.eof() && is_var_char(cur.peek()) && cur.peek() != '^') ++cur.pos;
            std::string name(text.substr(start, cur.pos - start));
            int vi = ring->var_index(name);
            if (vi < 0) throw std::invalid_argument("MPoly::parse: unknown variable '" + name + "'");
            uint32_t e = 1;
            if (!cur.eof() && cur.peek() == '^') {
                ++cur.pos;
                size_t es = cur.pos;
                while (!cur.eof() && is_num_char(cur.peek())) ++cur.pos;
                e = static_cast<uint32_t>(std::stoul(std::string(text.substr(es, cur.pos - es))));
            }
            expo[vi] += e;
            saw_factor = true;
        }
        if (!saw_factor) throw std::invalid_argument("MPoly::parse: empty term");
        out.add_term(expo, neg ? -coeff : coeff);
        if (cur.eof()) break;
        neg = cur.peek() == '-';
        ++cur.pos;
    }
    return out;
}

}  // namespace nck
