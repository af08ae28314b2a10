#include "pwavg/pi_rational.hpp"

#include <cmath>
#include <sstream>

#include "expr_ast.hpp"
#include "pwavg/errors.hpp"

namespace pwavg {

PiPoly PiPoly::constant(const Rat& q) {
    PiPoly p;
    if (!pwavg::is_zero(q)) p.c.push_back(q);
    return p;
}

PiPoly PiPoly::pi_pow(uint32_t k, const Rat& q) {
    PiPoly p;
    if (pwavg::is_zero(q)) return p;
    p.c.assign(k + 1, Rat(0));
    p.c[k] = q;
    return p;
}

void PiPoly::trim() {
    while (!c.empty() && pwavg::is_zero(c.back())) c.pop_back();
}

PiPoly operator+(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

PiPoly operator-(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

Rat PiPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double PiPoly::eval_double(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + rat_double(c[i]);
    return acc;
}

namespace {

// Nested rational enclosures of Pi, coarse to fine.
const std::pair<const char*, const char*> kPiEnclosures[] = {
    {"314159/100000", "31416/10000"},
    {"3141592653/1000000000", "3141592654/1000000000"},
    {"3141592653589793/1000000000000000", "3141592653589794/1000000000000000"},
    {"3141592653589793238462643383279/1000000000000000000000000000000",
     "3141592653589793238462643383280/1000000000000000000000000000000"},
    {"314159265358979323846264338327950288419716939937510/"
     "100000000000000000000000000000000000000000000000000",
     "314159265358979323846264338327950288419716939937511/"
     "100000000000000000000000000000000000000000000000000"},
};

// Interval image of the polynomial over [lo, hi] by interval Horner.
void interval_eval(const PiPoly& p, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) {
    Rat alo = 0, ahi = 0;
    for (size_t i = p.c.size(); i-- > 0;) {
        // multiply [alo, ahi] by [lo, hi] (lo > 0 in all uses here)
        Rat cands[4] = {alo * lo, alo * hi, ahi * lo, ahi * hi};
        Rat mlo = cands[0], mhi = cands[0];
        for (int k = 1; k < 4; ++k) {
            if (cands[k] < mlo) mlo = cands[k];
            if (cands[k] > mhi) mhi = cands[k];
        }
        alo = mlo + p.c[i];
        ahi = mhi + p.c[i];
    }
    out_lo = alo;
    out_hi = ahi;
}

} // namespace

int PiPoly::sign_at_pi() const {
    if (is_zero()) return 0;
    if (degree() == 0) return sgn(c[0]);
    for (auto& [slo, shi] : kPiEnclosures) {
        Rat lo(slo), hi(shi), vlo, vhi;
        lo.canonicalize();
        hi.canonicalize();
        interval_eval(*this, lo, hi, vlo, vhi);
        if (sgn(vlo) > 0) return 1;
        if (sgn(vhi) < 0) return -1;
    }
    throw SignIndeterminateError("Pi enclosure ladder exhausted");
}

PiRational::PiRational(const PiPoly& num, const PiPoly& den) : num_(num), den_(den) {
    PWAVG_CHECK(!den_.is_zero(), "zero denominator in Q(Pi)");
    normalize();
}

void PiRational::normalize() {
    if (num_.is_zero()) {
        den_ = PiPoly::constant(1);
        return;
    }
    // strip common Pi^k factor
    size_t kn = 0, kd = 0;
    while (kn < num_.c.size() && pwavg::is_zero(num_.c[kn])) ++kn;
    while (kd < den_.c.size() && pwavg::is_zero(den_.c[kd])) ++kd;
    size_t k = std::min(kn, kd);
    if (k) {
        num_.c.erase(num_.c.begin(), num_.c.begin() + static_cast<long>(k));
        den_.c.erase(den_.c.begin(), den_.c.begin() + static_cast<long>(k));
    }
    // scale so den has positive leading coefficient and content 1
    Rat lead = den_.c.back();
    for (auto& q : num_.c) q /= lead;
    for (auto& q : den_.c) q /= lead;
}

Rat PiRational::rational_value() const {
    PWAVG_CHECK(is_rational(), "Q(Pi) value is not rational");
    if (num_.is_zero()) return Rat(0);
    return num_.c[0] / den_.c[0];
}

PiRational operator+(const PiRational& a, const PiRational& b) {
    return PiRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PiRational operator-(const PiRational& a, const PiRational& b) {
    return PiRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

PiRational operator*(const PiRational& a, const PiRational& b) {
    return PiRational(a.num_ * b.num_, a.den_ * b.den_);
}

PiRational operator/(const PiRational& a, const PiRational& b) {
    if (b.is_zero()) throw InternalError("division by zero in Q(Pi)");
    return PiRational(a.num_ * b.den_, a.den_ * b.num_);
}

PiRational PiRational::operator-() const {
    PiRational r = *this;
    for (auto& q : r.num_.c) q = -q;
    return r;
}

bool operator==(const PiRational& a, const PiRational& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
}

int PiRational::sign() const {
    if (num_.is_zero()) return 0;
    return num_.sign_at_pi() * den_.sign_at_pi();
}

Rat PiRational::eval(const Rat& pi_value) const {
    Rat d = den_.eval(pi_value);
    if (pwavg::is_zero(d)) throw InternalError("surrogate hits denominator root");
    return num_.eval(pi_value) / d;
}

double PiRational::eval_double() const { return eval_double(M_PI); }

double PiRational::eval_double(double pi_value) const {
    return num_.eval_double(pi_value) / den_.eval_double(pi_value);
}

namespace {

std::string pipoly_str(const PiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (pwavg::is_zero(p.c[k])) continue;
        Rat a = rat_abs(p.c[k]);
        bool neg = sgn(p.c[k]) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else os << (neg ? " - " : " + ");
        if (k == 0) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << "pi";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

bool pipoly_is_monomial(const PiPoly& p, size_t& k) {
    size_t found = 0, at = 0;
    for (size_t i = 0; i < p.c.size(); ++i)
        if (!pwavg::is_zero(p.c[i])) {
            ++found;
            at = i;
        }
    k = at;
    return found == 1;
}

} // namespace

std::string PiRational::str() const {
    if (num_.is_zero()) return "0";
    size_t kd = 0;
    bool den_mono = pipoly_is_monomial(den_, kd);
    bool den_one = den_mono && kd == 0 && den_.c[0] == 1;
    size_t kn = 0;
    bool num_mono = pipoly_is_monomial(num_, kn);
    if (den_one) {
        if (num_mono) return pipoly_str(num_);
        return "(" + pipoly_str(num_) + ")";
    }
    std::string n = num_mono ? pipoly_str(num_) : "(" + pipoly_str(num_) + ")";
    if (num_mono && n.find(' ') == std::string::npos && n.find('*') != std::string::npos)
        n = "(" + n + ")"; // keep a*pi / b readable as (a*pi)/(b)
    return n + "/(" + pipoly_str(den_) + ")";
}

namespace {

PiRational eval_pirat(const ast::Node& n) {
    using ast::Kind;
    switch (n.kind) {
        case Kind::Num: return PiRational(n.num);
        case Kind::Sym:
            if (n.name == "pi" || n.name == "Pi") return PiRational::pi();
            throw ParseError("unknown symbol '" + n.name + "' in Q(Pi) value");
        case Kind::Add: return eval_pirat(*n.a) + eval_pirat(*n.b);
        case Kind::Sub: return eval_pirat(*n.a) - eval_pirat(*n.b);
        case Kind::Mul: return eval_pirat(*n.a) * eval_pirat(*n.b);
        case Kind::Div: return eval_pirat(*n.a) / eval_pirat(*n.b);
        case Kind::Neg: return -eval_pirat(*n.a);
        case Kind::Pow: {
            PiRational b = eval_pirat(*n.a);
            PiRational r(Rat(1));
            int e = n.exp < 0 ? -n.exp : n.exp;
            for (int i = 0; i < e; ++i) r = r * b;
            if (n.exp < 0) r = PiRational(Rat(1)) / r;
            return r;
        }
    }
    throw ParseError("bad expression node");
}

} // namespace

PiRational PiRational::parse(const std::string& text) {
    return eval_pirat(*ast::parse_expression(text));
}

} // namespace pwavg
