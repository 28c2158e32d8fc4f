#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nckernel/rational.hpp"

namespace nck {

// Fixed variable alphabet shared by all polynomials of one ring.
class MPolyRing {
public:
    static std::shared_ptr<const MPolyRing> make(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    int var_index(std::string_view name) const;  // -1 if absent

private:
    explicit MPolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::vector<std::string> vars_;
};

using MPolyRingPtr = std::shared_ptr<const MPolyRing>;

// Descending graded-lexicographic monomial order (serialization order).
struct GradedLexDesc {
    bool operator()(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
};

// Sparse exact-coefficient multivariate polynomial; no zero terms stored.
class MPoly {
public:
    using TermMap = std::map<std::vector<uint32_t>, Rational, GradedLexDesc>;

    MPoly() = default;  // invalid until given a ring; only for containers
    explicit MPoly(MPolyRingPtr ring) : ring_(std::move(ring)) {}

    static MPoly constant(MPolyRingPtr ring, Rational c);
    static MPoly variable(const MPolyRingPtr& ring, std::string_view name);

    const MPolyRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 if zero, coeff of empty monomial otherwise
    uint32_t total_degree() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }

    MPoly pow(uint32_t e) const;
    MPoly substitute(size_t var, const Rational& value) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Canonical form, e.g. "q^2+2*q*t+t^2", "-1/12*rx2*ry2", "0".
    std::string to_string() const;
    static MPoly parse(const MPolyRingPtr& ring, std::string_view text);

    void add_term(const std::vector<uint32_t>& expo, const Rational& c);

private:
    MPolyRingPtr ring_;
    TermMap terms_;

    void check_ring(const MPoly& o) const;
};

}  // namespace nck
