#include "blowup/linalg.hpp"

#include <algorithm>
#include <functional>

namespace blowup {

std::vector<Monomial> monomials_of_weighted_degree(const RingPtr& ring, uint32_t deg) {
    std::vector<Monomial> out;
    Monomial cur;
    size_t n = ring->nvars();
    std::function<void(size_t, uint32_t)> rec = [&](size_t i, uint32_t rem) {
        if (i == n) {
            if (rem == 0) { cur.deg = deg; out.push_back(cur); }
            return;
        }
        uint32_t w = ring->weight(i);
        for (uint32_t e = 0; e * w <= rem; ++e) {
            cur.e[i] = static_cast<uint16_t>(e);
            rec(i + 1, rem - e * w);
        }
        cur.e[i] = 0;
    };
    rec(0, deg);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->compare(a, b) == Cmp::Greater;
    });
    return out;
}

bool FpSpan::reduce(std::vector<uint32_t>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t c = v[pivots_[r]];
        if (!c) continue;
        const auto& row = rows_[r];
        for (size_t k = pivots_[r]; k < v.size(); ++k)
            if (row[k]) v[k] = F_.sub(v[k], F_.mul(c, row[k]));
    }
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

bool FpSpan::add(std::vector<uint32_t> v) {
    if (reduce(v)) return false;
    size_t p = 0;
    while (v[p] == 0) ++p;
    uint32_t inv = F_.inv(v[p]);
    for (auto& x : v) x = F_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool FpSpan::contains(std::vector<uint32_t> v) const { return reduce(v); }

std::vector<uint32_t> coeff_vector(const Polynomial& f, const std::vector<Monomial>& monos) {
    std::vector<uint32_t> v(monos.size(), 0);
    const PolyRing& R = *f.ring();
    for (const Term& t : f.terms()) {
        auto it = std::lower_bound(monos.begin(), monos.end(), t.m,
                                   [&](const Monomial& a, const Monomial& b) {
                                       return R.compare(a, b) == Cmp::Greater;
                                   });
        if (it == monos.end() || !(*it == t.m)) throw error("coeff_vector: monomial not in basis");
        v[static_cast<size_t>(it - monos.begin())] = t.c;
    }
    return v;
}

FpSpan degree_piece(const RingPtr& ring, const std::vector<Polynomial>& gens, uint32_t deg,
                    const std::vector<Monomial>& monos) {
    FpSpan span(ring->field());
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous()) throw error("degree_piece requires homogeneous generators");
        uint32_t dg = g.degree();
        if (dg > deg) continue;
        for (const Monomial& m : monomials_of_weighted_degree(ring, deg - dg))
            span.add(coeff_vector(mul_term(g, 1, m), monos));
    }
    return span;
}

size_t degree_piece_dim(const RingPtr& ring, const std::vector<Polynomial>& gens, uint32_t deg) {
    std::vector<Monomial> monos = monomials_of_weighted_degree(ring, deg);
    return degree_piece(ring, gens, deg, monos).rank();
}

std::optional<std::vector<uint32_t>> solve_combination(const PrimeField& F,
                                                       const std::vector<std::vector<uint32_t>>& rows,
                                                       const std::vector<uint32_t>& target) {
    size_t n = rows.size();
    if (n == 0) return std::nullopt;
    size_t len = target.size();
    // augmented system: columns are the row vectors, rhs is the target
    std::vector<std::vector<uint32_t>> m(len, std::vector<uint32_t>(n + 1, 0));
    for (size_t j = 0; j < n; ++j) {
        if (rows[j].size() != len) throw error("solve_combination: inconsistent lengths");
        for (size_t i = 0; i < len; ++i) m[i][j] = rows[j][i];
    }
    for (size_t i = 0; i < len; ++i) m[i][n] = target[i];

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < len; ++c) {
        size_t sel = r;
        while (sel < len && m[sel][c] == 0) ++sel;
        if (sel == len) continue;
        std::swap(m[sel], m[r]);
        uint32_t inv = F.inv(m[r][c]);
        for (size_t k = c; k <= n; ++k) m[r][k] = F.mul(m[r][k], inv);
        for (size_t i = 0; i < len; ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint32_t f = m[i][c];
            for (size_t k = c; k <= n; ++k) m[i][k] = F.sub(m[i][k], F.mul(f, m[r][k]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < len; ++i)
        if (m[i][n] != 0) return std::nullopt; // inconsistent
    std::vector<uint32_t> sol(n, 0);
    for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = m[i][n];
    return sol;
}

} // namespace blowup
