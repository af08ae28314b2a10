#include "pwavg/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "pwavg/errors.hpp"

namespace pwavg {

ParamPoly ParamPoly::constant(const Rat& c) {
    ParamPoly p;
    if (!pwavg::is_zero(c)) p.terms_.push_back({Monomial::one(), c});
    return p;
}

ParamPoly ParamPoly::var(Symbol s, uint32_t e) {
    ParamPoly p;
    p.terms_.push_back({Monomial::var(s, e), Rat(1)});
    return p;
}

ParamPoly ParamPoly::term(const Rat& c, const Monomial& m) {
    ParamPoly p;
    if (!pwavg::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rat ParamPoly::constant_value() const {
    PWAVG_CHECK(is_constant(), "constant_value on non-constant polynomial");
    return terms_.empty() ? Rat(0) : terms_[0].second;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first < o.terms_[j].first) out.push_back(std::move(terms_[i++]));
        else if (o.terms_[j].first < terms_[i].first) out.push_back(o.terms_[j++]);
        else {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (!pwavg::is_zero(c)) out.push_back({std::move(terms_[i].first), std::move(c)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first < o.terms_[j].first) out.push_back(std::move(terms_[i++]));
        else if (o.terms_[j].first < terms_[i].first) {
            out.push_back({o.terms_[j].first, -o.terms_[j].second});
            ++j;
        } else {
            Rat c = terms_[i].second - o.terms_[j].second;
            if (!pwavg::is_zero(c)) out.push_back({std::move(terms_[i].first), std::move(c)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) {
        out.push_back({o.terms_[j].first, -o.terms_[j].second});
        ++j;
    }
    terms_ = std::move(out);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    PolyBuilder acc;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) acc.add(ma * mb, ca * cb);
    return acc.build();
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

void ParamPoly::scale(const Rat& c) {
    if (pwavg::is_zero(c)) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) t.second *= c;
}

void ParamPoly::mul_pi_pow(uint32_t m) {
    if (m == 0 || terms_.empty()) return;
    Monomial pim = Monomial::var(pi_symbol(), m);
    for (auto& t : terms_) t.first = t.first * pim;
    normalize();
}

ParamPoly ParamPoly::partial(Symbol s) const {
    PolyBuilder acc;
    for (auto& [m, c] : terms_) {
        for (size_t i = 0; i < m.f.size(); ++i) {
            if (m.f[i].first == s) {
                Monomial d = m;
                uint32_t e = d.f[i].second;
                if (e == 1) d.f.erase(d.f.begin() + static_cast<long>(i));
                else d.f[i].second = e - 1;
                acc.add(std::move(d), c * Rat(static_cast<long>(e)));
                break;
            }
        }
    }
    return acc.build();
}

uint32_t ParamPoly::degree_in(Symbol s) const {
    uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
    return d;
}

bool ParamPoly::contains(Symbol s) const {
    for (auto& [m, c] : terms_)
        if (m.degree_in(s)) return true;
    return false;
}

std::vector<Symbol> ParamPoly::symbols() const {
    std::vector<Symbol> out;
    for (auto& [m, c] : terms_)
        for (auto& [s, e] : m.f) out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void ParamPoly::split_linear(Symbol s, ParamPoly& lin, ParamPoly& rest) const {
    PWAVG_CHECK(degree_in(s) <= 1, "split_linear on nonlinear occurrence of " + sym_name(s));
    PolyBuilder bl, br;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.degree_in(s);
        if (e == 0) {
            br.add(m, c);
        } else {
            Monomial d = m;
            for (size_t i = 0; i < d.f.size(); ++i)
                if (d.f[i].first == s) {
                    d.f.erase(d.f.begin() + static_cast<long>(i));
                    break;
                }
            bl.add(std::move(d), c);
        }
    }
    lin = bl.build();
    rest = br.build();
}

ParamPoly ParamPoly::subst(Symbol s, const ParamPoly& value) const {
    uint32_t dmax = degree_in(s);
    if (dmax == 0) return *this;
    // power table for value^e
    std::vector<ParamPoly> pw(dmax + 1);
    pw[0] = ParamPoly::constant(1);
    for (uint32_t e = 1; e <= dmax; ++e) pw[e] = pw[e - 1] * value;
    ParamPoly out;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.degree_in(s);
        Monomial d = m;
        if (e) {
            for (size_t i = 0; i < d.f.size(); ++i)
                if (d.f[i].first == s) {
                    d.f.erase(d.f.begin() + static_cast<long>(i));
                    break;
                }
        }
        out += ParamPoly::term(c, d) * pw[e];
    }
    return out;
}

ParamPoly ParamPoly::subst_rational(Symbol s, const ParamPoly& num, const ParamPoly& den,
                                    uint32_t& denpow) const {
    uint32_t dmax = degree_in(s);
    denpow = dmax;
    if (dmax == 0) return *this;
    std::vector<ParamPoly> pn(dmax + 1), pd(dmax + 1);
    pn[0] = pd[0] = ParamPoly::constant(1);
    for (uint32_t e = 1; e <= dmax; ++e) {
        pn[e] = pn[e - 1] * num;
        pd[e] = pd[e - 1] * den;
    }
    ParamPoly out;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.degree_in(s);
        Monomial d = m;
        if (e) {
            for (size_t i = 0; i < d.f.size(); ++i)
                if (d.f[i].first == s) {
                    d.f.erase(d.f.begin() + static_cast<long>(i));
                    break;
                }
        }
        out += ParamPoly::term(c, d) * pn[e] * pd[dmax - e];
    }
    return out;
}

void ParamPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return pwavg::is_zero(t.second); }),
              out.end());
    terms_ = std::move(out);
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = rat_abs(c);
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (!unit || m.is_one()) os << rat_str(a);
        bool lead = unit && !m.is_one();
        for (auto& [s, e] : m.f) {
            if (!lead) os << "*";
            lead = false;
            os << sym_name(s);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

ParamPoly PolyBuilder::build() {
    ParamPoly p;
    p.terms_ = std::move(terms_);
    p.normalize();
    return p;
}

Rat rat_parse(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        try {
            Rat q(s);
            q.canonicalize();
            return q;
        } catch (const std::exception&) {
            throw ParseError("bad rational literal '" + s + "'");
        }
    }
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    for (char c : ip + fp)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad decimal literal '" + s + "'");
    Rat num(ip + fp);
    Rat den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    Rat q = num / den;
    q.canonicalize();
    return neg ? Rat(-q) : q;
}

} // namespace pwavg
