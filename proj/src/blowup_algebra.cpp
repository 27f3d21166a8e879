#include "blowup/blowup_algebra.hpp"

#include <algorithm>

#include "blowup/linalg.hpp"

namespace blowup {

namespace {

std::string unique_name(const PolyRing& R, std::string stem) {
    while (R.var_index(stem) != static_cast<size_t>(-1)) stem += "_";
    return stem;
}

Polynomial combine(const RingPtr& R, const std::vector<Polynomial>& gens,
                   const std::vector<uint32_t>& coeffs) {
    Polynomial x = Polynomial::zero(R);
    for (size_t i = 0; i < gens.size(); ++i) x = add(x, scale(gens[i], coeffs[i]));
    return x;
}

std::vector<uint32_t> draw_coeffs(Rng& rng, const PrimeField& F, size_t n) {
    std::vector<uint32_t> c(n);
    for (auto& v : c) v = rng.field_element(F);
    return c;
}

} // namespace

// ---------------------------------------------------------------------------
// presentations
// ---------------------------------------------------------------------------

BlowupPresentation rees_presentation(const Ideal& I) {
    const RingPtr& R = I.ring();
    if (!I.homogeneous()) throw error("rees_presentation requires a homogeneous ideal");
    BlowupPresentation pres;
    pres.base = R;
    pres.f = min_gens(I);
    size_t n = pres.f.size();
    if (n == 0) throw error("rees_presentation of the zero ideal");

    // elimination ring k[t, x, T] with deg t = 1, deg T_j = deg f_j + 1
    std::vector<std::string> evars{unique_name(*R, "t")};
    std::vector<uint32_t> eweights{1};
    for (size_t i = 0; i < R->nvars(); ++i) {
        evars.push_back(R->var_name(i));
        eweights.push_back(R->weight(i));
    }
    std::vector<std::string> Tnames;
    for (size_t j = 0; j < n; ++j) {
        Tnames.push_back(unique_name(*R, "T" + std::to_string(j + 1)));
        evars.push_back(Tnames.back());
        eweights.push_back(pres.f[j].degree() + 1);
    }
    RingPtr E = derived_ring(*R, evars, eweights, Order::Block, 1);

    Polynomial t = Polynomial::variable(E, 0);
    std::vector<Polynomial> gens;
    for (size_t j = 0; j < n; ++j) {
        Polynomial Tj = Polynomial::variable(E, E->var_index(Tnames[j]));
        gens.push_back(sub(Tj, mul(rename_into(pres.f[j], E), t)));
    }
    Ideal graph(E, std::move(gens));
    Ideal L = eliminate(graph, {0});
    pres.ambient = L.ring();
    pres.rees_ideal = L;
    pres.agr_ideal = sum(L, rename_into(I, pres.ambient));

    // fiber: substitute x -> 0 in generators of L, standard grading on k[T]
    pres.fiber_ring = derived_ring(*R, Tnames, std::vector<uint32_t>(n, 1), Order::GrevLex, 0);
    std::vector<Polynomial> fib;
    for (const Polynomial& g : L.gens()) {
        std::vector<Term> ts;
        for (const Term& term : g.terms()) {
            bool has_x = false;
            for (size_t i = 0; i < R->nvars(); ++i)
                if (term.m.e[pres.ambient->var_index(R->var_name(i))]) { has_x = true; break; }
            if (has_x) continue;
            Monomial m;
            uint32_t d = 0;
            for (size_t j = 0; j < n; ++j) {
                uint16_t e = term.m.e[pres.ambient->var_index(Tnames[j])];
                m.e[j] = e;
                d += e;
            }
            m.deg = d;
            ts.push_back({term.c, m});
        }
        Polynomial p = normalize_terms(pres.fiber_ring, std::move(ts));
        if (!p.is_zero()) fib.push_back(p);
    }
    pres.fiber_ideal = Ideal(pres.fiber_ring, std::move(fib));
    return pres;
}

uint32_t analytic_spread(const BlowupPresentation& pres) {
    int d = dimension(pres.fiber_ideal);
    if (d < 0) throw error("fiber cone collapsed (internal error)");
    return static_cast<uint32_t>(d);
}

uint32_t analytic_spread(const Ideal& I) { return analytic_spread(rees_presentation(I)); }

HilbertSeries fiber_hilbert_series(const BlowupPresentation& pres) {
    return hilbert_series_of_quotient(pres.fiber_ideal);
}

// ---------------------------------------------------------------------------
// reductions
// ---------------------------------------------------------------------------

bool is_reduction(const BlowupPresentation& pres, const Ideal& J) {
    const RingPtr& R = pres.base;
    if (!contains(Ideal(R, pres.f), J))
        return false;
    uint32_t e = pres.f.front().degree();
    for (const Polynomial& g : pres.f)
        if (g.degree() != e) throw error("is_reduction requires an equigenerated ideal");

    // degree-e generators of J give linear forms in the T's
    auto monos = monomials_of_weighted_degree(R, e);
    std::vector<std::vector<uint32_t>> rows;
    for (const Polynomial& f : pres.f) rows.push_back(coeff_vector(f, monos));
    std::vector<Polynomial> cut = pres.fiber_ideal.gens();
    for (const Polynomial& g : J.gens()) {
        if (g.degree() != e) continue;
        auto combo = solve_combination(R->field(), rows, coeff_vector(g, monos));
        if (!combo) continue; // inside I m, image zero
        Polynomial lin = Polynomial::zero(pres.fiber_ring);
        for (size_t j = 0; j < combo->size(); ++j)
            lin = add(lin, scale(Polynomial::variable(pres.fiber_ring, j), (*combo)[j]));
        if (!lin.is_zero()) cut.push_back(lin);
    }
    return dimension(Ideal(pres.fiber_ring, cut)) == 0;
}

uint32_t reduction_number(const Ideal& I, const Ideal& J, uint32_t cap) {
    if (!contains(I, J)) throw error("reduction_number: J is not contained in I");
    Ideal In = Ideal::unit(I.ring()); // I^0
    for (uint32_t n = 0; n <= cap; ++n) {
        Ideal In1 = Ideal(I.ring(), min_gens(product(I, In))); // I^{n+1}
        Ideal JIn = product(J, In);
        if (contains(JIn, In1)) return n; // the reverse inclusion is automatic
        In = In1;
    }
    throw budget_error("reduction_number cap exceeded (J is likely not a reduction)");
}

uint32_t tau_number(const Ideal& I, const Ideal& J, uint32_t cap) {
    if (!contains(I, J)) throw error("tau_number: J is not contained in I");
    const Ideal m = Ideal::irrelevant(I.ring());
    Ideal In_1 = Ideal::unit(I.ring()); // I^{n-1}, starting at I^{-1} m = R
    Ideal Inm = m;                      // I^n m for n = 0
    for (uint32_t n = 0; n <= cap; ++n) {
        Ideal rhs = n == 0 ? J : product(product(J, In_1), m);
        if (contains(rhs, Inm)) return n;
        if (n > 0) In_1 = Ideal(I.ring(), min_gens(product(I, In_1)));
        Inm = Ideal(I.ring(), min_gens(product(Inm, I)));
    }
    throw budget_error("tau cap exceeded (J is likely not a reduction)");
}

ReductionData random_minimal_reduction(const Ideal& I, const BlowupPresentation& pres,
                                       uint64_t seed, uint32_t reduction_cap,
                                       uint32_t attempts) {
    const RingPtr& R = I.ring();
    if (!I.equigenerated()) throw error("random_minimal_reduction requires an equigenerated ideal");
    uint32_t ell = analytic_spread(pres);
    Rng rng(seed * 0x517cc1b727220a95ULL + 3);
    std::string diag;
    for (uint32_t a = 0; a < attempts; ++a) {
        ReductionData rd;
        rd.seed = seed;
        for (uint32_t i = 0; i < ell; ++i)
            rd.coefficients.push_back(draw_coeffs(rng, R->field(), pres.f.size()));
        std::vector<Polynomial> gens;
        for (const auto& c : rd.coefficients) gens.push_back(combine(R, pres.f, c));
        rd.J = Ideal(R, gens);
        if (mu(rd.J) != ell) { diag = "degenerate coefficient matrix"; continue; }
        rd.is_minimal = true;
        if (!is_reduction(pres, rd.J)) { diag = "draw was not a reduction"; continue; }
        rd.r_J = reduction_number(I, rd.J, reduction_cap);
        return rd;
    }
    throw error("random_minimal_reduction: no reduction found in " + std::to_string(attempts) +
                " attempts (" + diag + "); is l(I) equal to the analytic spread?");
}

// ---------------------------------------------------------------------------
// one-dimensional reduction and j-multiplicity
// ---------------------------------------------------------------------------

Dim1Reduction dim1_reduction(const Ideal& I, uint64_t seed, uint32_t attempts) {
    const RingPtr& R = I.ring();
    if (!I.equigenerated()) throw error("dim1_reduction requires an equigenerated ideal");
    std::vector<Polynomial> f = min_gens(I);
    size_t d = R->nvars();
    Rng rng(seed * 0x2545F4914F6CDD1DULL + 29);
    for (uint32_t a = 0; a < attempts; ++a) {
        Dim1Reduction out;
        out.seed = seed;
        for (size_t i = 0; i < d; ++i) out.xs.push_back(combine(R, f, draw_coeffs(rng, R->field(), f.size())));
        std::vector<Polynomial> front(out.xs.begin(), out.xs.end() - 1);
        out.Q = saturate(Ideal(R, front), I);
        if (dimension(out.Q) != 1) continue;
        if (dimension(sum(I, out.Q)) != 0) continue; // Ibar must be primary
        return out;
    }
    throw error("dim1_reduction: R/Q never had dimension one (are l(I) and dim R equal?)");
}

namespace {

struct JDraw {
    uint64_t j;
    uint64_t lens[5];
    bool ok;
};

JDraw j_draw(const Ideal& I, uint64_t seed) {
    JDraw out{};
    const RingPtr& R = I.ring();
    Dim1Reduction d1 = dim1_reduction(I, seed);
    const Ideal& Q = d1.Q;
    const Polynomial& xd = d1.xs.back();
    Ideal m = Ideal::irrelevant(R);
    Ideal Im = product(I, m);

    Ideal A_I = sum(I, Q);
    Ideal A_Im = sum(Im, Q);
    Ideal A_xI = sum(product(Ideal(R, {xd}), I), Q);
    Ideal A_I2 = sum(power(I, 2), Q);
    Ideal A_xm = sum(product(Ideal(R, {xd}), m), Q);
    Ideal A_xd = sum(Ideal(R, {xd}), Q);

    LengthValue j = length_of_ring_quotient(A_xd);
    LengthValue l0 = length_of_quotient(A_I, A_Im);
    LengthValue l1 = length_of_ring_quotient(A_I);
    LengthValue l2 = length_of_quotient(A_Im, A_xI);
    LengthValue l3 = length_of_quotient(A_I2, A_xI);
    LengthValue l4 = length_of_quotient(A_Im, A_xm);
    if (!j.finite || !l0.finite || !l1.finite || !l2.finite || !l3.finite || !l4.finite) {
        out.ok = false;
        return out;
    }
    out.j = j.value;
    out.lens[0] = l0.value;
    out.lens[1] = l1.value;
    out.lens[2] = l2.value;
    out.lens[3] = l3.value;
    out.lens[4] = l4.value;
    out.ok = true;
    return out;
}

} // namespace

JMultReport j_multiplicity(const Ideal& I, uint64_t seed, uint32_t max_trials) {
    const RingPtr& R = I.ring();
    JMultReport rep;
    BlowupPresentation pres = rees_presentation(I);
    uint32_t ell = analytic_spread(pres);
    if (ell < R->nvars()) {
        rep.spread_deficient = true;
        rep.j = 0;
        return rep;
    }
    if (!I.equigenerated()) throw error("j_multiplicity requires an equigenerated ideal");

    std::vector<JDraw> draws;
    for (uint32_t t = 0; t < max_trials; ++t) {
        uint64_t s = seed + t;
        JDraw d = j_draw(I, s);
        if (!d.ok) continue;
        rep.seeds_used.push_back(s);
        for (const JDraw& prev : draws) {
            bool same = prev.j == d.j;
            for (int k = 0; k < 5 && same; ++k) same = prev.lens[k] == d.lens[k];
            if (!same) continue;
            rep.agreement = 2;
            rep.j = d.j;
            rep.len_I_mod_Im = d.lens[0];
            rep.len_R_mod_I = d.lens[1];
            rep.len_Im_mod_xI = d.lens[2];
            rep.len_I2_mod_xI = d.lens[3];
            rep.len_Im_mod_xm = d.lens[4];
            rep.minimal_j = rep.len_I2_mod_xI == 0;
            rep.almost_minimal_j = rep.len_I2_mod_xI == 1;
            rep.goto_minimal_j = rep.len_Im_mod_xm == 0;
            rep.almost_goto_minimal_j = rep.len_Im_mod_xm == 1;
            // the length decomposition of j, in both equivalent forms
            rep.additive_identity_ok =
                (rep.j == rep.len_I_mod_Im + rep.len_Im_mod_xI) &&
                (rep.j + 1 == rep.len_I_mod_Im + rep.len_R_mod_I + rep.len_Im_mod_xm);
            return rep;
        }
        draws.push_back(d);
    }
    throw error("j_multiplicity: seeds never agreed within the trial cap");
}

// ---------------------------------------------------------------------------
// classification with an explicit reduction
// ---------------------------------------------------------------------------

ClassifyReport classify_with_reduction(const Ideal& I, const Ideal& J, uint32_t cap) {
    const RingPtr& R = I.ring();
    if (!contains(I, J)) throw error("classify_with_reduction: J not contained in I");
    ClassifyReport rep;
    BlowupPresentation pres = rees_presentation(I);
    rep.spread = analytic_spread(pres);
    if (I.equigenerated() && !is_reduction(pres, J))
        throw error("classify_with_reduction: J is not a reduction of I");
    rep.mu_J = mu(J);
    rep.is_minimal_reduction = rep.mu_J == rep.spread;
    Ideal m = Ideal::irrelevant(R);
    Ideal Im = product(I, m);
    Ideal Jm = product(J, m);
    rep.goto_minimal = equals(Im, Jm);
    rep.len_Im_mod_Jm = length_of_quotient(Im, Jm);
    rep.i2m_eq_JIm = equals(product(power(I, 2), m), product(product(J, I), m));
    rep.r_J = reduction_number(I, J, cap);
    rep.tau_J = tau_number(I, J, cap);
    return rep;
}

// ---------------------------------------------------------------------------
// G_s, residual chains, core probe
// ---------------------------------------------------------------------------

bool check_Gs(const Ideal& I, uint32_t s) {
    for (uint32_t i = 1; i <= s; ++i) {
        Ideal Fi = fitting_ideal(I, i - 1);
        if (Fi.is_unit()) continue;
        if (height(sum(Fi, I)) < static_cast<int>(i)) return false;
    }
    return true;
}

std::vector<ResidualStep> residual_chain(const Ideal& I, const std::vector<Polynomial>& xs) {
    const RingPtr& R = I.ring();
    for (const Polynomial& x : xs)
        if (!contains(I, x)) throw error("residual_chain: xs must lie in I");
    std::vector<ResidualStep> out;
    for (size_t i = 0; i <= xs.size(); ++i) {
        ResidualStep st;
        st.i = static_cast<uint32_t>(i);
        std::vector<Polynomial> front(xs.begin(), xs.begin() + i);
        st.K = colon(Ideal(R, front), I);
        st.height_K = height(st.K);
        st.dim_K = dimension(st.K);
        st.height_ge_i = st.height_K >= static_cast<int>(i);
        st.height_sum_ge_i_plus_1 = height(sum(I, st.K)) >= static_cast<int>(i) + 1;
        out.push_back(std::move(st));
    }
    return out;
}

CoreProbe core_probe(const Ideal& I, uint32_t trials, uint64_t seed, uint32_t round_cap) {
    BlowupPresentation pres = rees_presentation(I);
    CoreProbe out;
    Rng rng(seed + 101);
    uint32_t batch = trials;
    bool have = false;
    Ideal current;
    for (uint32_t round = 0; round < round_cap; ++round) {
        Ideal next = current;
        for (uint32_t t = 0; t < batch; ++t) {
            ReductionData rd = random_minimal_reduction(I, pres, rng.next());
            ++out.reductions_used;
            next = have ? intersect(next, rd.J) : rd.J;
            have = true;
        }
        ++out.rounds;
        if (round > 0 && equals(next, current)) {
            out.probe = next;
            out.stabilized = true;
            Ideal Im = product(I, Ideal::irrelevant(I.ring()));
            if (equals(next, I)) out.verdict = CoreProbe::Verdict::EqualsI;
            else if (equals(next, Im)) out.verdict = CoreProbe::Verdict::EqualsIm;
            else out.verdict = CoreProbe::Verdict::Other;
            return out;
        }
        current = next;
        batch *= 2;
    }
    out.probe = current;
    out.stabilized = false;
    return out;
}

// ---------------------------------------------------------------------------
// a-invariants
// ---------------------------------------------------------------------------

int a_invariant_F(const BlowupPresentation& pres, uint32_t r, bool F_is_CM) {
    if (!F_is_CM) throw error("a_invariant_F: formula requires a Cohen-Macaulay fiber cone");
    int s = static_cast<int>(analytic_spread(pres));
    int a = static_cast<int>(r) - s;
    // cross-check against the fiber Hilbert series: cancel all (1-t)
    // factors, then a = deg(numerator) - dim
    HilbertSeries hs = fiber_hilbert_series(pres);
    ZPoly n = hs.numerator;
    uint32_t cancelled = 0;
    for (;;) {
        auto q = zp_exact_div(n, zp_one_minus_tw(1));
        if (!q) break;
        n = *q;
        ++cancelled;
    }
    uint32_t nT = static_cast<uint32_t>(pres.nT());
    if (cancelled != nT - static_cast<uint32_t>(s))
        throw error("a_invariant_F: fiber dimension mismatch");
    if (n.degree() - s != a)
        throw error("a_invariant_F: Hilbert series cross-check failed (got " +
                    std::to_string(n.degree() - s) + ", formula says " + std::to_string(a) + ")");
    return a;
}

int a_invariant_G(int g, int r, int s, bool G_is_CM, bool Gs_holds) {
    if (!G_is_CM || !Gs_holds)
        throw error("a_invariant_G: hypotheses (G_s and G(I) Cohen-Macaulay) not certified");
    return std::max(-g, r - s);
}

// ---------------------------------------------------------------------------
// Valabrega-Valla and Ratliff-Rush
// ---------------------------------------------------------------------------

VVReport valabrega_valla_check(const Ideal& I, const std::vector<Polynomial>& xs, uint32_t h,
                               Filtration filt, uint32_t N) {
    const RingPtr& R = I.ring();
    if (h > xs.size()) throw error("valabrega_valla_check: h exceeds the sequence length");
    Ideal X(R, std::vector<Polynomial>(xs.begin(), xs.begin() + h));
    Ideal m = Ideal::irrelevant(R);
    VVReport rep;
    Ideal In_1 = filt == Filtration::Adic ? Ideal::unit(R) : m; // I_0
    for (uint32_t n = 1; n <= N; ++n) {
        Ideal In = filt == Filtration::Adic ? Ideal(R, min_gens(power(I, n)))
                                            : Ideal(R, min_gens(product(power(I, n), m)));
        if (!equals(intersect(X, In), product(X, In_1))) {
            rep.holds = false;
            rep.first_failure = static_cast<int>(n);
            return rep;
        }
        In_1 = In;
    }
    return rep;
}

RatliffRush ratliff_rush(const Ideal& I, uint32_t j, uint32_t cutoff) {
    const RingPtr& R = I.ring();
    if (I.is_zero()) throw error("ratliff_rush requires positive grade");
    Ideal m = Ideal::irrelevant(R);
    RatliffRush out;
    Ideal It = I; // I^t
    Ideal prev = colon(Ideal(R, min_gens(product(power(I, j + 1), m))), It);
    out.steps = 1;
    for (uint32_t t = 2; t <= cutoff; ++t) {
        It = Ideal(R, min_gens(product(It, I)));
        Ideal cur = colon(Ideal(R, min_gens(product(power(I, j + t), m))), It);
        ++out.steps;
        if (equals(cur, prev)) {
            out.ideal = cur;
            out.stabilized = true;
            return out;
        }
        prev = cur;
    }
    out.ideal = prev;
    out.stabilized = false;
    return out;
}

// ---------------------------------------------------------------------------
// depths of the blowup algebras
// ---------------------------------------------------------------------------

BlowupDepths blowup_depths(const BlowupPresentation& pres) {
    BlowupDepths out;
    out.depth_rees = depth_of_quotient(pres.rees_ideal);
    out.dim_rees = static_cast<uint32_t>(dimension(pres.rees_ideal));
    out.rees_cm = out.depth_rees == out.dim_rees;
    out.depth_agr = depth_of_quotient(pres.agr_ideal);
    out.dim_agr = static_cast<uint32_t>(dimension(pres.agr_ideal));
    out.agr_cm = out.depth_agr == out.dim_agr;
    out.depth_fiber = depth_of_quotient(pres.fiber_ideal);
    out.dim_fiber = static_cast<uint32_t>(dimension(pres.fiber_ideal));
    out.fiber_cm = out.depth_fiber == out.dim_fiber;
    return out;
}

uint32_t depth_fiber_only(const BlowupPresentation& pres) {
    return depth_of_quotient(pres.fiber_ideal);
}

} // namespace blowup
