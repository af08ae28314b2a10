#include "pwavg/symbol.hpp"

#include <algorithm>

#include "pwavg/errors.hpp"

namespace pwavg {

SymbolTable& SymbolTable::instance() {
    static SymbolTable t;
    return t;
}

SymbolTable::SymbolTable() {
    std::vector<std::string> standard;
    standard.emplace_back("Pi");
    for (char t : {'a', 'b', 'A', 'B'})
        for (int j = 1; j <= 5; ++j)
            for (int i = 0; i <= 9; ++i)
                standard.push_back(std::string(1, t) + std::to_string(j) + std::to_string(i));
    // named parameters of the seven degenerate-perturbation families
    for (int f = 1; f <= 7; ++f)
        for (char c : {'a', 'b', 'c', 'd', 'A', 'B', 'C', 'D'})
            standard.push_back(std::string(1, c) + std::to_string(f));
    standard.emplace_back("eps");
    std::sort(standard.begin(), standard.end());
    standard.erase(std::unique(standard.begin(), standard.end()), standard.end());
    for (auto& s : standard) intern(s);
}

int SymbolTable::find(const std::string& name) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), name,
                               [&](uint32_t i, const std::string& n) { return names_[i] < n; });
    if (it != sorted_.end() && names_[*it] == name) return static_cast<int>(it - sorted_.begin());
    return -1;
}

bool SymbolTable::known(const std::string& name) const { return find(name) >= 0; }

Symbol SymbolTable::intern(const std::string& name) {
    int pos = find(name);
    if (pos >= 0) return Symbol{sorted_[static_cast<size_t>(pos)]};
    uint32_t id = static_cast<uint32_t>(names_.size());
    names_.push_back(name);
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), name,
                               [&](uint32_t i, const std::string& n) { return names_[i] < n; });
    sorted_.insert(it, id);
    return Symbol{id};
}

const std::string& SymbolTable::name(Symbol s) const {
    PWAVG_CHECK(s.id < names_.size(), "unknown symbol id");
    return names_[s.id];
}

Symbol pi_symbol() {
    static Symbol pi = sym("Pi");
    return pi;
}

Symbol coeff_symbol(char table, int order, int slot) {
    PWAVG_CHECK(order >= 1 && order <= 5 && slot >= 0 && slot <= 9, "coefficient index range");
    return sym(std::string(1, table) + std::to_string(order) + std::to_string(slot));
}

} // namespace pwavg
