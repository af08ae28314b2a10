#ifndef PWAVG_PI_RATIONAL_HPP
#define PWAVG_PI_RATIONAL_HPP

#include <string>
#include <vector>

#include "pwavg/rational.hpp"

namespace pwavg {

/// Dense univariate polynomial in Pi with rational coefficients.
struct PiPoly {
    std::vector<Rat> c; // c[k] multiplies Pi^k; trailing zeros trimmed

    static PiPoly zero() { return {}; }
    static PiPoly constant(const Rat& q);
    static PiPoly pi_pow(uint32_t k, const Rat& q = Rat(1));

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim();

    friend PiPoly operator+(const PiPoly& a, const PiPoly& b);
    friend PiPoly operator-(const PiPoly& a, const PiPoly& b);
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c == b.c; }

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    /// Exact sign at the transcendental point Pi, decided by interval
    /// refinement over nested rational enclosures of Pi. Throws
    /// SignIndeterminateError if the enclosure ladder is exhausted (for a
    /// nonzero polynomial this cannot happen unless Pi were algebraic).
    int sign_at_pi() const;
};

/// Element of the field Q(Pi): quotient of two Pi-polynomials, kept with a
/// nonzero denominator whose leading coefficient is positive and with
/// rational content reduced out of the pair.
class PiRational {
public:
    PiRational() : num_(PiPoly::zero()), den_(PiPoly::constant(1)) {}
    PiRational(const Rat& q) : num_(PiPoly::constant(q)), den_(PiPoly::constant(1)) {}
    PiRational(long n) : PiRational(Rat(n)) {}
    PiRational(const PiPoly& num, const PiPoly& den);

    static PiRational pi(uint32_t k = 1) { return PiRational(PiPoly::pi_pow(k), PiPoly::constant(1)); }

    const PiPoly& num() const { return num_; }
    const PiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rat rational_value() const;

    friend PiRational operator+(const PiRational& a, const PiRational& b);
    friend PiRational operator-(const PiRational& a, const PiRational& b);
    friend PiRational operator*(const PiRational& a, const PiRational& b);
    friend PiRational operator/(const PiRational& a, const PiRational& b);
    PiRational operator-() const;
    PiRational& operator+=(const PiRational& o) { return *this = *this + o; }
    PiRational& operator-=(const PiRational& o) { return *this = *this - o; }
    PiRational& operator*=(const PiRational& o) { return *this = *this * o; }

    friend bool operator==(const PiRational& a, const PiRational& b);
    friend bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }

    int sign() const; // exact sign of the value at Pi
    Rat eval(const Rat& pi_value) const;
    double eval_double() const; // at double precision Pi
    double eval_double(double pi_value) const;

    /// "p/q", "p/q*pi^k", "num/(den)" forms; readable back by parse()
    std::string str() const;
    static PiRational parse(const std::string& text);

private:
    PiPoly num_, den_;
    void normalize();
};

} // namespace pwavg

#endif
