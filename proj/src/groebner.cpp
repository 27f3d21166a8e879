#include "blowup/groebner.hpp"

#include <algorithm>
#include <iostream>
#include <map>

namespace blowup {

// ---------------------------------------------------------------------------
// module term order and arithmetic
// ---------------------------------------------------------------------------

Cmp ModuleCtx::compare(const MTerm& a, const MTerm& b) const {
    bool atop = a.comp < split, btop = b.comp < split;
    if (atop != btop) return atop ? Cmp::Greater : Cmp::Less;
    Cmp c = ring->compare(a.m, b.m);
    if (c != Cmp::Equal) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? Cmp::Greater : Cmp::Less;
    return Cmp::Equal;
}

void ModuleCtx::sort_terms(VecPoly& v) const {
    std::sort(v.terms.begin(), v.terms.end(),
              [this](const MTerm& a, const MTerm& b) { return compare(a, b) == Cmp::Greater; });
}

bool ModuleCtx::homogeneous(const VecPoly& v) const {
    if (v.is_zero()) return true;
    uint32_t d = term_degree(v.terms.front());
    for (const MTerm& t : v.terms)
        if (term_degree(t) != d) return false;
    return true;
}

uint32_t ModuleCtx::degree(const VecPoly& v) const {
    return v.is_zero() ? 0 : term_degree(v.lead());
}

std::string ModuleCtx::to_string(const VecPoly& v) const {
    if (v.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < v.terms.size(); ++i) {
        const MTerm& t = v.terms[i];
        if (i) s += " + ";
        s += std::to_string(t.c) + "*" + ring->mono_to_string(t.m) + "*e" + std::to_string(t.comp);
    }
    return s;
}

VecPoly vp_from_poly(const Polynomial& f, uint32_t comp) {
    VecPoly v;
    v.terms.reserve(f.size());
    for (const Term& t : f.terms()) v.terms.push_back({t.c, t.m, comp});
    return v;
}

Polynomial vp_component(const ModuleCtx& M, const VecPoly& v, uint32_t comp) {
    std::vector<Term> ts;
    for (const MTerm& t : v.terms)
        if (t.comp == comp) ts.push_back({t.c, t.m});
    return normalize_terms(M.ring, std::move(ts));
}

VecPoly vp_add(const ModuleCtx& M, const VecPoly& a, const VecPoly& b) {
    const PrimeField& F = M.ring->field();
    VecPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        Cmp c = M.compare(a.terms[i], b.terms[j]);
        if (c == Cmp::Greater) r.terms.push_back(a.terms[i++]);
        else if (c == Cmp::Less) r.terms.push_back(b.terms[j++]);
        else {
            uint32_t s = F.add(a.terms[i].c, b.terms[j].c);
            if (s) r.terms.push_back({s, a.terms[i].m, a.terms[i].comp});
            ++i; ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

VecPoly vp_neg(const ModuleCtx& M, const VecPoly& a) {
    VecPoly r = a;
    for (MTerm& t : r.terms) t.c = M.ring->field().neg(t.c);
    return r;
}

VecPoly vp_scale(const ModuleCtx& M, const VecPoly& a, uint32_t c) {
    const PrimeField& F = M.ring->field();
    VecPoly r;
    if (!c) return r;
    r.terms.reserve(a.terms.size());
    for (const MTerm& t : a.terms) {
        uint32_t cc = F.mul(t.c, c);
        if (cc) r.terms.push_back({cc, t.m, t.comp});
    }
    return r;
}

VecPoly vp_mul_term(const ModuleCtx& M, const VecPoly& a, uint32_t c, const Monomial& m) {
    const PrimeField& F = M.ring->field();
    VecPoly r;
    if (!c) return r;
    r.terms.reserve(a.terms.size());
    for (const MTerm& t : a.terms) {
        uint32_t cc = F.mul(t.c, c);
        if (cc) r.terms.push_back({cc, M.ring->mul(t.m, m), t.comp});
    }
    return r;
}

VecPoly vp_monic(const ModuleCtx& M, const VecPoly& a) {
    if (a.is_zero()) return a;
    return vp_scale(M, a, M.ring->field().inv(a.lead().c));
}

/// a - c * m * b, single merge pass
static VecPoly vp_sub_scaled(const ModuleCtx& M, const VecPoly& a, uint32_t c, const Monomial& m,
                             const VecPoly& b) {
    return vp_add(M, a, vp_mul_term(M, b, M.ring->field().neg(c), m));
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

static int find_reducer(const ModuleCtx& M, const MTerm& t, const std::vector<VecPoly>& G) {
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        const MTerm& lt = G[i].lead();
        if (lt.comp == t.comp && M.ring->divides(lt.m, t.m)) return static_cast<int>(i);
    }
    return -1;
}

VecPoly module_nf(const ModuleCtx& M, VecPoly v, const std::vector<VecPoly>& gb,
                  std::vector<Polynomial>* lift) {
    if (lift) lift->assign(gb.size(), Polynomial::zero(M.ring));
    std::vector<MTerm> out;
    while (!v.is_zero()) {
        int r = find_reducer(M, v.lead(), gb);
        if (r < 0) {
            out.push_back(v.lead());
            v.terms.erase(v.terms.begin());
            continue;
        }
        const VecPoly& g = gb[r];
        uint32_t c = M.ring->field().div(v.lead().c, g.lead().c);
        Monomial q = M.ring->div(v.lead().m, g.lead().m);
        v = vp_sub_scaled(M, v, c, q, g);
        if (lift)
            (*lift)[r] = add((*lift)[r], Polynomial::from_term(M.ring, c, q));
    }
    VecPoly res;
    res.terms = std::move(out);
    return res;
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace {

struct Pair {
    uint32_t i, j;
    Monomial lcm;
    uint32_t deg; // shifted degree of the S-pair
};

struct PairLess {
    const ModuleCtx* M;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        Cmp c = M->ring->compare(a.lcm, b.lcm);
        if (c != Cmp::Equal) return c == Cmp::Less;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

} // namespace

namespace gb_audit {
static bool g_enabled = false;
static std::vector<ReducedGB> g_recorded;
void enable(bool on) { g_enabled = on; }
bool enabled() { return g_enabled; }
std::vector<ReducedGB>& recorded() { return g_recorded; }
void clear() { g_recorded.clear(); }
} // namespace gb_audit

std::vector<VecPoly> module_gb(const ModuleCtx& M, std::vector<VecPoly> gens,
                               const GBOptions& opts) {
    const PolyRing& R = *M.ring;
    std::vector<VecPoly> basis;
    std::vector<Pair> pairs;
    PairLess less{&M};

    auto mk_pair = [&](uint32_t i, uint32_t j) {
        const MTerm& a = basis[i].lead();
        const MTerm& b = basis[j].lead();
        Monomial l = R.lcm(a.m, b.m);
        return Pair{i, j, l, l.deg + M.shift(a.comp)};
    };

    auto add_element = [&](VecPoly h) {
        h = vp_monic(M, h);
        uint32_t t = static_cast<uint32_t>(basis.size());
        basis.push_back(std::move(h));
        const MTerm& lt = basis[t].lead();

        // candidate new pairs, then Gebauer-Moeller filtering
        std::vector<Pair> cand;
        for (uint32_t i = 0; i < t; ++i)
            if (!basis[i].is_zero() && basis[i].lead().comp == lt.comp)
                cand.push_back(mk_pair(i, t));

        // M criterion: drop a pair whose lcm is a proper multiple of
        // another candidate's lcm
        std::vector<bool> drop(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (!(cand[b].lcm == cand[a].lcm) && R.divides(cand[b].lcm, cand[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // F criterion: one representative per lcm; with the product
        // criterion on, a coprime pair kills its whole lcm class
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            bool coprime_class = false;
            if (opts.product_criterion)
                for (size_t b = 0; b < cand.size(); ++b)
                    if (!drop[b] && cand[b].lcm == cand[a].lcm &&
                        R.coprime(basis[cand[b].i].lead().m, lt.m)) {
                        coprime_class = true;
                        break;
                    }
            bool first = true;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (drop[b] || !(cand[b].lcm == cand[a].lcm)) continue;
                if (coprime_class) drop[b] = true;
                else if (first) first = false;
                else drop[b] = true;
            }
        }
        // B criterion on surviving old pairs
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (const Pair& p : pairs) {
            const MTerm& li = basis[p.i].lead();
            if (li.comp == lt.comp && R.divides(lt.m, p.lcm)) {
                Monomial lit = R.lcm(basis[p.i].lead().m, lt.m);
                Monomial ljt = R.lcm(basis[p.j].lead().m, lt.m);
                if (!(lit == p.lcm) && !(ljt == p.lcm)) continue;
            }
            kept.push_back(p);
        }
        pairs = std::move(kept);
        for (size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs.push_back(cand[a]);
    };

    for (VecPoly& g : gens) {
        M.sort_terms(g);
        if (!g.is_zero()) add_element(std::move(g));
    }

    size_t processed = 0, nonzero = 0;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), less);
        Pair p = *it;
        pairs.erase(it);
        if (p.deg > R.degree_cap())
            throw budget_error("degree budget exceeded: S-pair of degree " + std::to_string(p.deg));

        const VecPoly& f = basis[p.i];
        const VecPoly& g = basis[p.j];
        Monomial mf = R.div(p.lcm, f.lead().m);
        Monomial mg = R.div(p.lcm, g.lead().m);
        VecPoly s = vp_sub_scaled(M, vp_mul_term(M, f, 1, mf), 1, mg, g);
        s = module_nf(M, std::move(s), basis);
        ++processed;
        if (!s.is_zero()) {
            ++nonzero;
            add_element(std::move(s));
        }
        if (opts.trace && processed % 64 == 0)
            std::cerr << "[gb] pairs=" << pairs.size() << " basis=" << basis.size()
                      << " deg=" << p.deg << "\n";
    }
    if (opts.trace)
        std::cerr << "[gb] done: spairs=" << processed << " new=" << nonzero
                  << " basis=" << basis.size() << "\n";

    // minimal GB: drop elements whose lead is divisible by another kept lead
    std::vector<bool> redundant(basis.size(), false);
    for (size_t a = 0; a < basis.size(); ++a) {
        if (basis[a].is_zero()) { redundant[a] = true; continue; }
        const MTerm& la = basis[a].lead();
        for (size_t b = 0; b < basis.size(); ++b) {
            if (a == b || redundant[b] || basis[b].is_zero()) continue;
            const MTerm& lb = basis[b].lead();
            if (la.comp != lb.comp || !R.divides(lb.m, la.m)) continue;
            if (la.m == lb.m && a < b) continue; // equal leads: keep the earlier one
            redundant[a] = true;
            break;
        }
    }
    std::vector<VecPoly> kept;
    for (size_t a = 0; a < basis.size(); ++a)
        if (!redundant[a]) kept.push_back(std::move(basis[a]));

    // tail-reduce; a term below the lead is never divisible by the own
    // lead in a global order, so the full list can serve as reducers
    std::vector<VecPoly> reduced;
    for (size_t a = 0; a < kept.size(); ++a) {
        VecPoly tail;
        tail.terms.assign(kept[a].terms.begin() + 1, kept[a].terms.end());
        VecPoly nf_tail = module_nf(M, std::move(tail), kept);
        VecPoly r;
        r.terms.reserve(1 + nf_tail.terms.size());
        r.terms.push_back(kept[a].lead());
        for (MTerm& t : nf_tail.terms) r.terms.push_back(std::move(t));
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&M](const VecPoly& a, const VecPoly& b) {
        return M.compare(a.lead(), b.lead()) == Cmp::Less;
    });
    return reduced;
}

// ---------------------------------------------------------------------------
// ideal-level interface
// ---------------------------------------------------------------------------

ReducedGB buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                     const GBOptions& opts) {
    ModuleCtx M{ring, 1, 0, {}};
    std::vector<VecPoly> vgens;
    for (const Polynomial& g : gens) {
        if (g.ring() && !g.ring()->same_ring(*ring)) throw ring_mismatch();
        if (!g.is_zero()) vgens.push_back(vp_from_poly(g, 0));
    }
    GBOptions o = opts;
    o.product_criterion = true;
    std::vector<VecPoly> vb = module_gb(M, std::move(vgens), o);
    ReducedGB gb;
    gb.ring = ring;
    for (const VecPoly& v : vb) gb.basis.push_back(vp_component(M, v, 0));
    if (gb_audit::g_enabled) gb_audit::g_recorded.push_back(gb);
    return gb;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G) {
    const RingPtr& ring = f.ring();
    DivisionResult res;
    res.quotients.assign(G.size(), Polynomial::zero(ring));
    std::vector<std::vector<Term>> q(G.size());
    std::vector<Term> rem;
    Polynomial h = f;
    while (!h.is_zero()) {
        int idx = -1;
        for (size_t i = 0; i < G.size(); ++i) {
            if (G[i].is_zero()) continue;
            if (ring->divides(G[i].lead_mono(), h.lead_mono())) { idx = static_cast<int>(i); break; }
        }
        if (idx < 0) {
            rem.push_back(h.lead());
            h.terms_mut().erase(h.terms_mut().begin());
            continue;
        }
        uint32_t c = ring->field().div(h.lead_coeff(), G[idx].lead_coeff());
        Monomial m = ring->div(h.lead_mono(), G[idx].lead_mono());
        q[idx].push_back({c, m});
        sub_scaled(h, c, m, G[idx]);
    }
    for (size_t i = 0; i < G.size(); ++i) res.quotients[i] = normalize_terms(ring, std::move(q[i]));
    res.remainder = normalize_terms(ring, std::move(rem));
    return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    return divide(f, G).remainder;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw error("division by zero polynomial");
    DivisionResult d = divide(f, {g});
    if (!d.remainder.is_zero()) throw error("exact_divide: not divisible");
    return d.quotients[0];
}

bool certify_gb(const ReducedGB& gb) {
    const RingPtr& ring = gb.ring;
    const auto& B = gb.basis;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j) {
            Monomial l = ring->lcm(B[i].lead_mono(), B[j].lead_mono());
            Polynomial s = sub(mul_term(B[i], ring->field().inv(B[i].lead_coeff()), ring->div(l, B[i].lead_mono())),
                               mul_term(B[j], ring->field().inv(B[j].lead_coeff()), ring->div(l, B[j].lead_mono())));
            if (!normal_form(s, B).is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// graph-module kernels
// ---------------------------------------------------------------------------

static ModuleCtx graph_ctx(const ModuleCtx& target, size_t ncols,
                           const std::vector<uint32_t>& col_shifts) {
    ModuleCtx G;
    G.ring = target.ring;
    G.rank = target.rank + static_cast<uint32_t>(ncols);
    G.split = target.rank;
    G.shifts.assign(target.rank, 0);
    for (uint32_t c = 0; c < target.rank; ++c) G.shifts[c] = target.shift(c);
    for (size_t c = 0; c < ncols; ++c)
        G.shifts.push_back(col_shifts.empty() ? 0 : col_shifts[c]);
    return G;
}

static std::vector<VecPoly> graph_gens(const ModuleCtx& G, const ModuleCtx& target,
                                       const std::vector<VecPoly>& cols) {
    std::vector<VecPoly> gens;
    gens.reserve(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        VecPoly w = cols[c];
        w.terms.push_back({1, G.ring->one(), target.rank + static_cast<uint32_t>(c)});
        G.sort_terms(w);
        gens.push_back(std::move(w));
    }
    return gens;
}

KernelResult kernel_of_columns(const ModuleCtx& target, const std::vector<VecPoly>& cols,
                               const std::vector<uint32_t>& col_shifts, const GBOptions& opts) {
    ModuleCtx G = graph_ctx(target, cols.size(), col_shifts);
    std::vector<VecPoly> gb = module_gb(G, graph_gens(G, target, cols), opts);
    KernelResult res;
    for (const VecPoly& v : gb) {
        if (v.is_zero() || v.lead().comp < target.rank) continue;
        VecPoly s;
        s.terms.reserve(v.terms.size());
        for (const MTerm& t : v.terms) s.terms.push_back({t.c, t.m, t.comp - target.rank});
        res.col_degrees.push_back(G.term_degree(v.lead()));
        res.syzygies.push_back(std::move(s));
    }
    return res;
}

static std::optional<std::vector<Polynomial>>
lift_via_graph(const ModuleCtx& G, const std::vector<VecPoly>& gb, uint32_t split,
               size_t ncols, const VecPoly& v) {
    VecPoly r = module_nf(G, v, gb);
    std::vector<Polynomial> q(ncols, Polynomial::zero(G.ring));
    for (const MTerm& t : r.terms) {
        if (t.comp < split) return std::nullopt; // not in the span
        q[t.comp - split] =
            add(q[t.comp - split], Polynomial::from_term(G.ring, G.ring->field().neg(t.c), t.m));
    }
    return q;
}

std::optional<std::vector<Polynomial>> lift_through_columns(const ModuleCtx& target,
                                                            const std::vector<VecPoly>& cols,
                                                            const std::vector<uint32_t>& col_shifts,
                                                            const VecPoly& v) {
    ModuleCtx G = graph_ctx(target, cols.size(), col_shifts);
    std::vector<VecPoly> gb = module_gb(G, graph_gens(G, target, cols), {});
    VecPoly vv = v;
    G.sort_terms(vv);
    return lift_via_graph(G, gb, target.rank, cols.size(), vv);
}

std::optional<std::vector<std::vector<Polynomial>>>
lift_columns(const ModuleCtx& target, const std::vector<VecPoly>& cols,
             const std::vector<uint32_t>& col_shifts, const std::vector<VecPoly>& vs) {
    ModuleCtx G = graph_ctx(target, cols.size(), col_shifts);
    std::vector<VecPoly> gb = module_gb(G, graph_gens(G, target, cols), {});
    std::vector<std::vector<Polynomial>> out;
    out.reserve(vs.size());
    for (const VecPoly& v : vs) {
        VecPoly vv = v;
        G.sort_terms(vv);
        auto q = lift_via_graph(G, gb, target.rank, cols.size(), vv);
        if (!q) return std::nullopt;
        out.push_back(std::move(*q));
    }
    return out;
}

std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& f,
                                                       const std::vector<Polynomial>& gens) {
    ModuleCtx target{f.ring(), 1, 0, {}};
    std::vector<VecPoly> cols;
    for (const Polynomial& g : gens) cols.push_back(vp_from_poly(g, 0));
    std::vector<uint32_t> shifts(gens.size(), 0);
    return lift_through_columns(target, cols, shifts, vp_from_poly(f, 0));
}

} // namespace blowup
