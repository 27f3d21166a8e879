#ifndef BLOWUP_BLOWUP_ALGEBRA_HPP
#define BLOWUP_BLOWUP_ALGEBRA_HPP

#include "blowup/resolution.hpp"

namespace blowup {

/// Presentations of the Rees algebra R(I) = k[x,T]/L, the associated
/// graded ring G(I) = k[x,T]/(L + I) and the fiber cone F(I) = k[T]/Lf.
/// The ambient k[x,T] carries weights deg T_j = deg f_j + 1 so that L is
/// homogeneous; the fiber ring k[T] is standard graded.
struct BlowupPresentation {
    RingPtr base;
    std::vector<Polynomial> f; // minimal generators presented by the T_j
    RingPtr ambient;
    Ideal rees_ideal;
    Ideal agr_ideal;
    RingPtr fiber_ring;
    Ideal fiber_ideal;

    size_t nx() const { return base->nvars(); }
    size_t nT() const { return f.size(); }
};

BlowupPresentation rees_presentation(const Ideal& I);

uint32_t analytic_spread(const BlowupPresentation& pres);
uint32_t analytic_spread(const Ideal& I);

/// J subseteq I is a reduction iff F(I) modulo the degree-one images of
/// J's generators is Artinian. Generators of degree above the generator
/// degree of I contribute nothing.
bool is_reduction(const BlowupPresentation& pres, const Ideal& J);

uint32_t reduction_number(const Ideal& I, const Ideal& J, uint32_t cap = 30);
/// reduction number in the filtration {I^n m}
uint32_t tau_number(const Ideal& I, const Ideal& J, uint32_t cap = 30);

struct ReductionData {
    Ideal J;
    std::vector<std::vector<uint32_t>> coefficients; // spread x mu(I)
    uint64_t seed = 0;
    uint32_t r_J = 0;
    bool is_minimal = false; // mu(J) == l(I)
};

/// J generated by l(I) random coefficient combinations of min_gens(I);
/// redrawn until it is a verified reduction with finite r_J
ReductionData random_minimal_reduction(const Ideal& I, const BlowupPresentation& pres,
                                       uint64_t seed, uint32_t reduction_cap = 30,
                                       uint32_t attempts = 8);

struct Dim1Reduction {
    std::vector<Polynomial> xs; // d general elements of I
    Ideal Q;                    // (x_1..x_{d-1}) : I^infty
    uint64_t seed = 0;
};

/// the one-dimensional general reduction R -> R/Q with Ibar primary
Dim1Reduction dim1_reduction(const Ideal& I, uint64_t seed, uint32_t attempts = 8);

struct JMultReport {
    uint64_t j = 0;
    bool spread_deficient = false; // l(I) < d forces j = 0
    uint64_t len_I_mod_Im = 0;     // lambda(Ibar / Ibar mbar)
    uint64_t len_R_mod_I = 0;      // lambda(Rbar / Ibar)
    uint64_t len_Im_mod_xI = 0;    // lambda(Ibar mbar / x_d Ibar)
    uint64_t len_I2_mod_xI = 0;    // lambda(Ibar^2 / x_d Ibar)
    uint64_t len_Im_mod_xm = 0;    // lambda(Ibar mbar / x_d mbar)
    bool minimal_j = false;        // len_I2_mod_xI == 0
    bool almost_minimal_j = false; // len_I2_mod_xI == 1
    bool goto_minimal_j = false;   // len_Im_mod_xm == 0
    bool almost_goto_minimal_j = false;
    bool additive_identity_ok = false;
    std::vector<uint64_t> seeds_used;
    uint32_t agreement = 0;
};

JMultReport j_multiplicity(const Ideal& I, uint64_t seed = 0, uint32_t max_trials = 6);

struct ClassifyReport {
    uint32_t spread = 0;
    uint32_t mu_J = 0;
    bool is_minimal_reduction = false;
    bool goto_minimal = false;       // I m == J m
    LengthValue len_Im_mod_Jm;       // == 1 marks almost-Goto under G_d + AN
    bool i2m_eq_JIm = false;         // I^2 m == J I m
    uint32_t r_J = 0;
    uint32_t tau_J = 0;
};

ClassifyReport classify_with_reduction(const Ideal& I, const Ideal& J, uint32_t cap = 30);

/// G_s via Fitting-ideal heights: ht(Fitt_{i-1}(I) + I) >= i for i <= s
bool check_Gs(const Ideal& I, uint32_t s);

struct ResidualStep {
    uint32_t i = 0;
    Ideal K; // (x_1..x_i) : I
    int height_K = 0;
    int dim_K = 0;
    bool height_ge_i = false;
    bool height_sum_ge_i_plus_1 = false; // ht(I + K_i) >= i + 1
};

std::vector<ResidualStep> residual_chain(const Ideal& I, const std::vector<Polynomial>& xs);

struct CoreProbe {
    Ideal probe;
    bool stabilized = false;
    uint32_t rounds = 0;
    uint32_t reductions_used = 0;
    enum class Verdict { EqualsI, EqualsIm, Other } verdict = Verdict::Other;
};

/// HEURISTIC: intersection of random minimal reductions, doubling the
/// batch until two consecutive rounds agree
CoreProbe core_probe(const Ideal& I, uint32_t trials = 4, uint64_t seed = 0,
                     uint32_t round_cap = 5);

/// a(F(I)) = r - s for Cohen-Macaulay F(I); cross-checked against the
/// fiber Hilbert series numerator
int a_invariant_F(const BlowupPresentation& pres, uint32_t r, bool F_is_CM);

/// a(G(I)) = max{-g, r-s} under G_s and G(I) Cohen-Macaulay
int a_invariant_G(int g, int r, int s, bool G_is_CM, bool Gs_holds);

enum class Filtration { Adic, MAdic };

struct VVReport {
    bool holds = true;
    int first_failure = -1; // n of the first failing colon equality
};

/// Valabrega-Valla colon conditions (x_1..x_h) cap I_n = (x_1..x_h) I_{n-1}
/// for 1 <= n <= N, with I_n = I^n or I^n m
VVReport valabrega_valla_check(const Ideal& I, const std::vector<Polynomial>& xs, uint32_t h,
                               Filtration filt, uint32_t N);

struct RatliffRush {
    Ideal ideal;
    bool stabilized = false;
    uint32_t steps = 0;
};

/// the stable union cup_t (I^{j+t} m : I^t)
RatliffRush ratliff_rush(const Ideal& I, uint32_t j, uint32_t cutoff = 10);

// depths of the three blowup algebras (via minimal free resolutions over
// their ambient rings)
struct BlowupDepths {
    uint32_t depth_rees = 0, dim_rees = 0;
    uint32_t depth_agr = 0, dim_agr = 0;
    uint32_t depth_fiber = 0, dim_fiber = 0;
    bool rees_cm = false, agr_cm = false, fiber_cm = false;
};

BlowupDepths blowup_depths(const BlowupPresentation& pres);

uint32_t depth_fiber_only(const BlowupPresentation& pres);

HilbertSeries fiber_hilbert_series(const BlowupPresentation& pres);

} // namespace blowup

#endif
