#ifndef PWAVG_SYMBOL_HPP
#define PWAVG_SYMBOL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pwavg {

/// Interned parameter name. Identity and ordering are by table id; the
/// standard parameter alphabet (Pi, the general perturbation coefficients
/// a/b/A/B with order 1..5 and slot 0..9, and the named family parameters)
/// is interned at startup in lexicographic name order, so for those symbols
/// id order coincides with name order. Symbols interned later sort after
/// the standard alphabet in registration order, which is deterministic for
/// a given run.
struct Symbol {
    uint32_t id = 0;
    friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
    friend bool operator!=(Symbol a, Symbol b) { return a.id != b.id; }
    friend bool operator<(Symbol a, Symbol b) { return a.id < b.id; }
};

class SymbolTable {
public:
    static SymbolTable& instance();

    Symbol intern(const std::string& name);
    bool known(const std::string& name) const;
    const std::string& name(Symbol s) const;
    size_t size() const { return names_.size(); }

private:
    SymbolTable();
    std::vector<std::string> names_;
    // flat name->id lookup, names are short and few
    std::vector<uint32_t> sorted_; // indices into names_, sorted by name
    int find(const std::string& name) const;
};

inline Symbol sym(const std::string& name) { return SymbolTable::instance().intern(name); }
inline const std::string& sym_name(Symbol s) { return SymbolTable::instance().name(s); }

/// The transcendental carrier; never evaluated except where a documented
/// rational surrogate or a numeric context supplies a value for it.
Symbol pi_symbol();

/// General perturbation coefficient symbols of the piecewise system:
/// table in {a,b,A,B}, order j in 1..5, slot i in 0..9 (monomial order
/// 1, x, y, x^2, xy, y^2, x^3, x^2 y, x y^2, y^3).
Symbol coeff_symbol(char table, int order, int slot);

} // namespace pwavg

#endif
