#include "blowup/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "blowup/linalg.hpp"

namespace blowup {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.ring() && !g.ring()->same_ring(*ring_)) throw ring_mismatch();
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    std::vector<Polynomial> g{Polynomial::constant(ring, 1)};
    return Ideal(std::move(ring), std::move(g));
}

Ideal Ideal::irrelevant(const RingPtr& ring) {
    std::vector<Polynomial> g;
    for (size_t i = 0; i < ring->nvars(); ++i) g.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(g));
}

const ReducedGB& Ideal::gb() const {
    std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, gens_); });
    return cache_->gb;
}

bool Ideal::homogeneous() const {
    for (const Polynomial& g : gens_)
        if (!g.homogeneous()) return false;
    return true;
}

bool Ideal::equigenerated() const {
    if (!homogeneous()) return false;
    for (const Polynomial& g : gens_)
        if (g.degree() != gens_.front().degree()) return false;
    return true;
}

Polynomial nf(const Polynomial& f, const Ideal& A) { return normal_form(f, A.gb().basis); }

bool contains(const Ideal& A, const Polynomial& f) { return nf(f, A).is_zero(); }

bool contains(const Ideal& A, const Ideal& B) {
    for (const Polynomial& g : B.gens())
        if (!contains(A, g)) return false;
    return true;
}

bool equals(const Ideal& A, const Ideal& B) { return A.gb() == B.gb(); }

Ideal sum(const Ideal& A, const Ideal& B) {
    std::vector<Polynomial> g = A.gens();
    g.insert(g.end(), B.gens().begin(), B.gens().end());
    return Ideal(A.ring(), std::move(g));
}

Ideal product(const Ideal& A, const Ideal& B) {
    std::vector<Polynomial> g;
    g.reserve(A.gens().size() * B.gens().size());
    for (const Polynomial& a : A.gens())
        for (const Polynomial& b : B.gens()) g.push_back(mul(a, b));
    return Ideal(A.ring(), std::move(g));
}

Ideal power(const Ideal& A, uint32_t n) {
    if (n == 0) return Ideal::unit(A.ring());
    Ideal r = A;
    for (uint32_t k = 1; k < n; ++k) r = product(r, A);
    return r;
}

// ---------------------------------------------------------------------------
// elimination-based operations
// ---------------------------------------------------------------------------

namespace {

/// fresh internal variable name that the parser cannot produce
std::string fresh_var(const PolyRing& R, const std::string& stem) {
    std::string name = stem + "!";
    while (R.var_index(name) != static_cast<size_t>(-1)) name += "!";
    return name;
}

/// extension ring with one new variable in a dominant elimination block
RingPtr extend_front(const RingPtr& R, const std::string& stem, uint32_t weight = 1) {
    std::vector<std::string> vars{fresh_var(*R, stem)};
    std::vector<uint32_t> weights{weight};
    for (size_t i = 0; i < R->nvars(); ++i) {
        vars.push_back(R->var_name(i));
        weights.push_back(R->weight(i));
    }
    return derived_ring(*R, std::move(vars), std::move(weights), Order::Block, 1);
}

} // namespace

Ideal eliminate(const Ideal& A, const std::vector<size_t>& front_vars) {
    const RingPtr& R = A.ring();
    std::vector<bool> is_front(R->nvars(), false);
    for (size_t v : front_vars) is_front[v] = true;

    // rebase into a block order with the eliminated variables in front
    std::vector<std::string> vars;
    std::vector<uint32_t> weights;
    for (size_t i = 0; i < R->nvars(); ++i)
        if (is_front[i]) { vars.push_back(R->var_name(i)); weights.push_back(R->weight(i)); }
    std::vector<std::string> back_vars;
    std::vector<uint32_t> back_weights;
    for (size_t i = 0; i < R->nvars(); ++i)
        if (!is_front[i]) { vars.push_back(R->var_name(i)); weights.push_back(R->weight(i));
                            back_vars.push_back(R->var_name(i)); back_weights.push_back(R->weight(i)); }
    if (back_vars.empty()) throw error("eliminate: would remove every variable");

    RingPtr E = derived_ring(*R, vars, weights, Order::Block, static_cast<uint32_t>(front_vars.size()));
    RingPtr S = derived_ring(*R, back_vars, back_weights,
                             R->order() == Order::Block ? Order::GrevLex : R->order(),
                             0);

    std::vector<Polynomial> lifted;
    for (const Polynomial& g : A.gens()) lifted.push_back(rename_into(g, E));
    ReducedGB gb = buchberger(E, lifted);

    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.basis) {
        bool uses_front = false;
        for (const Term& t : g.terms())
            for (size_t i = 0; i < front_vars.size() && !uses_front; ++i)
                if (t.m.e[E->var_index(R->var_name(front_vars[i]))]) uses_front = true;
        if (!uses_front) kept.push_back(rename_into(g, S));
    }
    return Ideal(S, std::move(kept));
}

Ideal rename_into(const Ideal& A, const RingPtr& target) {
    std::vector<Polynomial> g;
    for (const Polynomial& f : A.gens()) g.push_back(rename_into(f, target));
    return Ideal(target, std::move(g));
}

Ideal intersect(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same_ring(*B.ring())) throw ring_mismatch();
    const RingPtr& R = A.ring();
    RingPtr E = extend_front(R, "u");
    Polynomial u = Polynomial::variable(E, 0);
    Polynomial one_minus_u = sub(Polynomial::constant(E, 1), u);
    std::vector<Polynomial> gens;
    for (const Polynomial& a : A.gens()) gens.push_back(mul(u, rename_into(a, E)));
    for (const Polynomial& b : B.gens()) gens.push_back(mul(one_minus_u, rename_into(b, E)));
    Ideal big(E, std::move(gens));
    Ideal elim = eliminate(big, {0});
    return rename_into(elim, R);
}

Ideal colon(const Ideal& A, const Polynomial& b) {
    if (b.is_zero()) throw error("colon by zero element");
    Ideal Ab = intersect(A, Ideal(A.ring(), {b}));
    std::vector<Polynomial> g;
    for (const Polynomial& f : Ab.gens()) g.push_back(exact_divide(f, b));
    return Ideal(A.ring(), std::move(g));
}

Ideal colon(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same_ring(*B.ring())) throw ring_mismatch();
    if (!B.has_generators()) throw error("colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const Polynomial& b : B.gens()) {
        Ideal part = colon(A, b);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& A, const Ideal& B, uint32_t iteration_cap) {
    Ideal cur = A;
    for (uint32_t k = 0; k < iteration_cap; ++k) {
        Ideal next = colon(cur, B);
        if (equals(next, cur)) return cur;
        cur = next;
    }
    throw budget_error("saturation did not stabilize within " + std::to_string(iteration_cap) +
                       " iterations");
}

// ---------------------------------------------------------------------------
// minimal generators
// ---------------------------------------------------------------------------

std::vector<Polynomial> min_gens(const Ideal& A) {
    if (!A.homogeneous()) throw error("min_gens requires a homogeneous ideal");
    std::vector<Polynomial> sorted = A.gens();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    // graded Nakayama degree by degree: g is redundant iff it lies in the
    // span of (kept) + m*A in its own degree, which is plain linear algebra
    std::vector<Polynomial> mA = product(Ideal::irrelevant(A.ring()), A).gens();
    std::vector<Polynomial> kept;
    size_t i = 0;
    while (i < sorted.size()) {
        uint32_t d = sorted[i].degree();
        std::vector<Monomial> monos = monomials_of_weighted_degree(A.ring(), d);
        std::vector<Polynomial> src = kept;
        src.insert(src.end(), mA.begin(), mA.end());
        FpSpan span = degree_piece(A.ring(), src, d, monos);
        for (; i < sorted.size() && sorted[i].degree() == d; ++i) {
            if (span.add(coeff_vector(sorted[i], monos))) kept.push_back(sorted[i]);
        }
    }
    return kept;
}

uint32_t mu(const Ideal& A) { return static_cast<uint32_t>(min_gens(A).size()); }

// ---------------------------------------------------------------------------
// syzygies / Fitting ideals
// ---------------------------------------------------------------------------

SyzygyMatrix syzygies(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    ModuleCtx target{ring, 1, 0, {}};
    std::vector<VecPoly> cols;
    std::vector<uint32_t> shifts;
    for (const Polynomial& g : gens) {
        cols.push_back(vp_from_poly(g, 0));
        shifts.push_back(g.degree());
    }
    KernelResult ker = kernel_of_columns(target, cols, shifts);
    SyzygyMatrix S;
    S.ring = ring;
    S.rows = gens.size();
    S.row_degrees = shifts;
    ModuleCtx syz_ctx{ring, static_cast<uint32_t>(gens.size()), 0, shifts};
    for (size_t c = 0; c < ker.syzygies.size(); ++c) {
        std::vector<Polynomial> col;
        for (size_t r = 0; r < gens.size(); ++r)
            col.push_back(vp_component(syz_ctx, ker.syzygies[c], static_cast<uint32_t>(r)));
        S.cols.push_back(std::move(col));
        S.col_degrees.push_back(ker.col_degrees[c]);
    }
    return S;
}

Polynomial poly_det(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& m) {
    size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, 1);
    // memoized Laplace expansion along the first available row
    std::map<std::vector<uint8_t>, Polynomial> memo;
    std::vector<uint8_t> all(n, 1);
    std::function<Polynomial(size_t, std::vector<uint8_t>&)> rec =
        [&](size_t row, std::vector<uint8_t>& colmask) -> Polynomial {
        if (row == n) return Polynomial::constant(ring, 1);
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        Polynomial acc = Polynomial::zero(ring);
        int sign = 1;
        for (size_t c = 0; c < n; ++c) {
            if (!colmask[c]) continue;
            if (!m[row][c].is_zero()) {
                colmask[c] = 0;
                Polynomial sub_det = rec(row + 1, colmask);
                colmask[c] = 1;
                Polynomial term = mul(m[row][c], sub_det);
                acc = sign > 0 ? add(acc, term) : sub(acc, term);
            }
            sign = -sign;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    return rec(0, all);
}

Ideal minors_ideal(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& m, uint32_t k) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    if (k == 0) return Ideal::unit(ring);
    if (k > rows || k > cols) return Ideal::zero(ring);

    std::vector<Polynomial> gens;
    std::vector<size_t> rsel(k), csel(k);
    std::function<void(size_t, size_t)> pick_rows = [&](size_t start, size_t depth) {
        if (depth == k) {
            std::function<void(size_t, size_t)> pick_cols = [&](size_t cstart, size_t cdepth) {
                if (cdepth == k) {
                    std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k));
                    for (size_t i = 0; i < k; ++i)
                        for (size_t j = 0; j < k; ++j) sub[i][j] = m[rsel[i]][csel[j]];
                    Polynomial d = poly_det(ring, sub);
                    if (!d.is_zero()) gens.push_back(std::move(d));
                    return;
                }
                for (size_t c = cstart; c < cols; ++c) {
                    csel[cdepth] = c;
                    pick_cols(c + 1, cdepth + 1);
                }
            };
            pick_cols(0, 0);
            return;
        }
        for (size_t r = start; r < rows; ++r) {
            rsel[depth] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return Ideal(ring, std::move(gens));
}

Ideal fitting_ideal(const Ideal& A, uint32_t i) {
    if (!A.homogeneous()) throw error("fitting_ideal requires a homogeneous ideal");
    std::vector<Polynomial> mg = min_gens(A);
    uint32_t n = static_cast<uint32_t>(mg.size());
    if (i >= n) return Ideal::unit(A.ring());
    SyzygyMatrix S = syzygies(A.ring(), mg);
    // rows of the matrix = generators; Fitt_i = (n-i)-minors
    std::vector<std::vector<Polynomial>> m(S.rows, std::vector<Polynomial>(S.cols.size()));
    for (size_t c = 0; c < S.cols.size(); ++c)
        for (size_t r = 0; r < S.rows; ++r) m[r][c] = S.cols[c][r];
    return minors_ideal(A.ring(), m, n - i);
}

} // namespace blowup
