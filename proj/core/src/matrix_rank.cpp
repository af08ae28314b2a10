#include "pwavg/matrix_rank.hpp"

#include <algorithm>

#include "pwavg/errors.hpp"

namespace pwavg {

int rank_exact(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

Jet poly_eval_jet(const ParamPoly& p, const std::vector<std::pair<Symbol, Rat>>& point,
                  const std::vector<Symbol>& seeds) {
    auto lookup = [&](Symbol s) -> const Rat& {
        auto it = std::lower_bound(point.begin(), point.end(), s,
                                   [](const auto& a, Symbol b) { return a.first < b; });
        if (it == point.end() || it->first != s)
            throw MissingAssignmentError("symbol " + sym_name(s));
        return it->second;
    };
    auto is_seed = [&](Symbol s) {
        return std::binary_search(seeds.begin(), seeds.end(), s);
    };

    Jet out;
    for (auto& [m, c] : p.terms()) {
        Rat val = c;
        for (auto& [s, e] : m.f) val *= rat_pow(lookup(s), e);
        out.v += val;
        for (auto& [s, e] : m.f) {
            if (!is_seed(s)) continue;
            const Rat& x = lookup(s);
            Rat d;
            if (is_zero(x)) {
                if (e != 1) continue;
                d = c;
                for (auto& [s2, e2] : m.f)
                    if (s2 != s) d *= rat_pow(lookup(s2), e2);
            } else {
                d = val * Rat(static_cast<long>(e)) / x;
            }
            if (is_zero(d)) continue;
            auto it = std::lower_bound(out.g.begin(), out.g.end(), s,
                                       [](const auto& a, Symbol b) { return a.first < b; });
            if (it != out.g.end() && it->first == s) it->second += d;
            else out.g.insert(it, {s, d});
        }
    }
    out.g.erase(std::remove_if(out.g.begin(), out.g.end(),
                               [](const auto& e) { return is_zero(e.second); }),
                out.g.end());
    return out;
}

int jet_rank(const std::vector<Jet>& rows, const std::vector<Symbol>& seeds) {
    std::vector<std::vector<Rat>> m(rows.size(), std::vector<Rat>(seeds.size(), Rat(0)));
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& [s, d] : rows[i].g) {
            auto it = std::lower_bound(seeds.begin(), seeds.end(), s);
            if (it != seeds.end() && *it == s)
                m[i][static_cast<size_t>(it - seeds.begin())] = d;
        }
    return rank_exact(std::move(m));
}

int rank_at_points(const std::vector<ParamPoly>& rows, const std::vector<Symbol>& seeds,
                   int trials, Rng& rng) {
    PWAVG_CHECK(trials >= 1, "rank trials >= 1");
    std::vector<Symbol> sorted_seeds = seeds;
    std::sort(sorted_seeds.begin(), sorted_seeds.end());

    std::vector<Symbol> all;
    for (auto& p : rows)
        for (Symbol s : p.symbols()) all.push_back(s);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    int best = 0;
    int cap = static_cast<int>(std::min(rows.size(), sorted_seeds.size()));
    for (int t = 0; t < trials && best < cap; ++t) {
        std::vector<std::pair<Symbol, Rat>> point;
        point.reserve(all.size());
        for (Symbol s : all)
            point.push_back({s, s == pi_symbol() ? rng.random_pi_surrogate()
                                                 : rng.random_rational()});
        std::vector<Jet> jets;
        jets.reserve(rows.size());
        for (auto& p : rows) jets.push_back(poly_eval_jet(p, point, sorted_seeds));
        best = std::max(best, jet_rank(jets, sorted_seeds));
    }
    return best;
}

} // namespace pwavg
