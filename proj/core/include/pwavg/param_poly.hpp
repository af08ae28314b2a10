#ifndef PWAVG_PARAM_POLY_HPP
#define PWAVG_PARAM_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pwavg/rational.hpp"
#include "pwavg/symbol.hpp"

namespace pwavg {

/// Sparse multivariate monomial: factors sorted by symbol, exponents > 0.
struct Monomial {
    std::vector<std::pair<Symbol, uint32_t>> f;

    static Monomial one() { return {}; }
    static Monomial var(Symbol s, uint32_t e = 1) {
        Monomial m;
        if (e) m.f.push_back({s, e});
        return m;
    }

    bool is_one() const { return f.empty(); }
    uint32_t degree() const {
        uint32_t d = 0;
        for (auto& p : f) d += p.second;
        return d;
    }
    uint32_t degree_in(Symbol s) const {
        for (auto& p : f)
            if (p.first == s) return p.second;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.f.reserve(a.f.size() + b.f.size());
        size_t i = 0, j = 0;
        while (i < a.f.size() && j < b.f.size()) {
            if (a.f[i].first < b.f[j].first) r.f.push_back(a.f[i++]);
            else if (b.f[j].first < a.f[i].first) r.f.push_back(b.f[j++]);
            else {
                r.f.push_back({a.f[i].first, a.f[i].second + b.f[j].second});
                ++i, ++j;
            }
        }
        while (i < a.f.size()) r.f.push_back(a.f[i++]);
        while (j < b.f.size()) r.f.push_back(b.f[j++]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f == b.f; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        size_t n = std::min(a.f.size(), b.f.size());
        for (size_t i = 0; i < n; ++i) {
            if (a.f[i].first != b.f[i].first) return a.f[i].first < b.f[i].first;
            if (a.f[i].second != b.f[i].second) return a.f[i].second < b.f[i].second;
        }
        return a.f.size() < b.f.size();
    }
};

/// Exact multivariate polynomial over the rationals in parameter symbols,
/// with Pi carried as a formal transcendental symbol (never cancelled
/// against numeric values). Terms are kept sorted with no zero
/// coefficients; two polynomials are equal iff their term lists are.
class ParamPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    ParamPoly() = default;
    static ParamPoly constant(const Rat& c);
    static ParamPoly var(Symbol s, uint32_t e = 1);
    /// c * Pi^p * prod(sym_i)
    static ParamPoly term(const Rat& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// constant value; zero polynomial yields 0
    Rat constant_value() const;

    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    ParamPoly operator-() const;

    void scale(const Rat& c);
    friend ParamPoly operator*(const Rat& c, ParamPoly p) {
        p.scale(c);
        return p;
    }
    /// multiply by Pi^m
    void mul_pi_pow(uint32_t m);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// formal partial derivative
    ParamPoly partial(Symbol s) const;

    uint32_t degree_in(Symbol s) const;
    bool contains(Symbol s) const;
    std::vector<Symbol> symbols() const;

    /// coefficient split: p = lin * s + rest with rest free of s; only
    /// valid when degree_in(s) <= 1
    void split_linear(Symbol s, ParamPoly& lin, ParamPoly& rest) const;

    /// substitute s := value (polynomial value)
    ParamPoly subst(Symbol s, const ParamPoly& value) const;

    /// substitute s := num/den; returns numerator of the result over
    /// den^degree_in(s) (the denominator power is returned via denpow)
    ParamPoly subst_rational(Symbol s, const ParamPoly& num, const ParamPoly& den,
                             uint32_t& denpow) const;

    /// Evaluate over a commutative ring R. `assign` maps each symbol
    /// (including Pi) to an R value; missing assignments must throw.
    template <class R, class Assign>
    R eval(Assign&& assign) const {
        R acc = R();
        for (auto& [m, c] : terms_) {
            R t = R(c);
            for (auto& [s, e] : m.f) {
                R base = assign(s);
                for (uint32_t i = 0; i < e; ++i) t = t * base;
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Canonical text form: monomials in sorted order, rational
    /// coefficients as p or p/q, e.g. "-3/8*Pi*a16 + 2*B10".
    std::string str() const;

    /// Parses the canonical form plus general +,-,*,/,^,() arithmetic
    /// with integer/decimal literals; division only by constants.
    static ParamPoly parse(const std::string& text);

    void normalize(); // drop zero terms, re-sort (used by bulk builders)

private:
    std::vector<Term> terms_;
    friend class PolyBuilder;
};

/// Accumulates unsorted terms, then fuses them into a canonical polynomial.
class PolyBuilder {
public:
    void add(const Monomial& m, const Rat& c) { terms_.push_back({m, c}); }
    void add(Monomial&& m, Rat&& c) { terms_.push_back({std::move(m), std::move(c)}); }
    ParamPoly build();

private:
    std::vector<ParamPoly::Term> terms_;
};

} // namespace pwavg

#endif
