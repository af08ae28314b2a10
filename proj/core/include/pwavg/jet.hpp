#ifndef PWAVG_JET_HPP
#define PWAVG_JET_HPP

#include <utility>
#include <vector>

#include "pwavg/errors.hpp"
#include "pwavg/rational.hpp"
#include "pwavg/symbol.hpp"

namespace pwavg {

/// First-order jet: an exact value with its exact gradient over the seed
/// symbols. Arithmetic follows the product and chain rules; the gradient
/// of a constant is empty.
struct Jet {
    Rat v;
    std::vector<std::pair<Symbol, Rat>> g; // sorted by symbol, no zeros

    Jet() : v(0) {}
    Jet(const Rat& value) : v(value) {}
    Jet(long value) : v(value) {}
    static Jet seed(Symbol s, const Rat& value) {
        Jet j(value);
        j.g.push_back({s, Rat(1)});
        return j;
    }

    bool is_zero() const { return pwavg::is_zero(v) && g.empty(); }
    bool value_zero() const { return pwavg::is_zero(v); }

    Rat grad(Symbol s) const {
        for (auto& [sym, d] : g)
            if (sym == s) return d;
        return Rat(0);
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v + b.v;
        r.g = merge(a.g, Rat(1), b.g, Rat(1));
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v - b.v;
        r.g = merge(a.g, Rat(1), b.g, Rat(-1));
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v * b.v;
        r.g = merge(a.g, b.v, b.g, a.v);
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (pwavg::is_zero(b.v)) throw SingularSolveError("jet division by zero value");
        Jet r;
        r.v = a.v / b.v;
        // (a'b - ab') / b^2
        r.g = merge(a.g, Rat(1) / b.v, b.g, -a.v / (b.v * b.v));
        return r;
    }
    Jet operator-() const {
        Jet r = *this;
        r.v = -r.v;
        for (auto& [s, d] : r.g) d = -d;
        return r;
    }
    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    void scale(const Rat& c) {
        if (pwavg::is_zero(c)) {
            v = 0;
            g.clear();
            return;
        }
        v *= c;
        for (auto& [s, d] : g) d *= c;
    }

    friend bool operator==(const Jet& a, const Jet& b) { return a.v == b.v && a.g == b.g; }

private:
    static std::vector<std::pair<Symbol, Rat>> merge(const std::vector<std::pair<Symbol, Rat>>& a,
                                                     const Rat& ca,
                                                     const std::vector<std::pair<Symbol, Rat>>& b,
                                                     const Rat& cb) {
        std::vector<std::pair<Symbol, Rat>> out;
        if (pwavg::is_zero(ca)) {
            if (pwavg::is_zero(cb)) return out;
            out.reserve(b.size());
            for (auto& [s, d] : b) {
                Rat x = cb * d;
                if (!pwavg::is_zero(x)) out.push_back({s, x});
            }
            return out;
        }
        if (pwavg::is_zero(cb)) {
            out.reserve(a.size());
            for (auto& [s, d] : a) {
                Rat x = ca * d;
                if (!pwavg::is_zero(x)) out.push_back({s, x});
            }
            return out;
        }
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) {
                out.push_back({a[i].first, ca * a[i].second});
                ++i;
            } else if (b[j].first < a[i].first) {
                out.push_back({b[j].first, cb * b[j].second});
                ++j;
            } else {
                Rat x = ca * a[i].second + cb * b[j].second;
                if (!pwavg::is_zero(x)) out.push_back({a[i].first, x});
                ++i, ++j;
            }
        }
        while (i < a.size()) out.push_back({a[i].first, ca * a[i].second}), ++i;
        while (j < b.size()) out.push_back({b[j].first, cb * b[j].second}), ++j;
        return out;
    }
};

} // namespace pwavg

#endif
