#ifndef BLOWUP_GROEBNER_HPP
#define BLOWUP_GROEBNER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "blowup/poly.hpp"

namespace blowup {

// ---------------------------------------------------------------------------
// module elements
// ---------------------------------------------------------------------------

struct MTerm {
    uint32_t c;
    Monomial m;
    uint32_t comp;
};

/// Element of a free module R^rank: terms strictly decreasing in the
/// module order of the owning ModuleCtx.
struct VecPoly {
    std::vector<MTerm> terms;
    bool is_zero() const { return terms.empty(); }
    const MTerm& lead() const { return terms.front(); }
};

/// Order data for a free module R^rank. Components below `split` form a
/// dominant block (any term there beats every term in the tail block);
/// within a block terms compare by ring order, then by component.
/// `shifts` are the generator degrees used for graded bookkeeping.
struct ModuleCtx {
    RingPtr ring;
    uint32_t rank = 1;
    uint32_t split = 0;
    std::vector<uint32_t> shifts; // size rank (empty means all 0)

    uint32_t shift(uint32_t comp) const { return shifts.empty() ? 0 : shifts[comp]; }
    uint32_t term_degree(const MTerm& t) const { return t.m.deg + shift(t.comp); }

    Cmp compare(const MTerm& a, const MTerm& b) const;
    void sort_terms(VecPoly& v) const;
    bool homogeneous(const VecPoly& v) const;
    uint32_t degree(const VecPoly& v) const; // degree of lead (shifted)
    std::string to_string(const VecPoly& v) const;
};

VecPoly vp_add(const ModuleCtx& M, const VecPoly& a, const VecPoly& b);
VecPoly vp_neg(const ModuleCtx& M, const VecPoly& a);
VecPoly vp_scale(const ModuleCtx& M, const VecPoly& a, uint32_t c);
VecPoly vp_mul_term(const ModuleCtx& M, const VecPoly& a, uint32_t c, const Monomial& m);
VecPoly vp_monic(const ModuleCtx& M, const VecPoly& a);
VecPoly vp_from_poly(const Polynomial& f, uint32_t comp);
Polynomial vp_component(const ModuleCtx& M, const VecPoly& v, uint32_t comp);

struct GBOptions {
    bool trace = false;
    /// apply Buchberger's product criterion (valid for ideals, not modules)
    bool product_criterion = false;
};

/// Buchberger with Gebauer-Moeller pair handling. Returns a minimal,
/// tail-reduced, monic GB, canonically sorted.
std::vector<VecPoly> module_gb(const ModuleCtx& M, std::vector<VecPoly> gens,
                               const GBOptions& opts = {});

/// full normal form; if `lift` is non-null it accumulates the reduction
/// coefficients: v = sum lift[i] * gb[i] + result
VecPoly module_nf(const ModuleCtx& M, VecPoly v, const std::vector<VecPoly>& gb,
                  std::vector<Polynomial>* lift = nullptr);

// ---------------------------------------------------------------------------
// ideal-level interface
// ---------------------------------------------------------------------------

struct ReducedGB {
    RingPtr ring;
    std::vector<Polynomial> basis; // monic, self-reduced, sorted by ascending lead

    bool is_zero() const { return basis.empty(); }
    bool contains_unit() const {
        return basis.size() == 1 && basis[0].size() == 1 && basis[0].lead_mono().is_one();
    }
    bool operator==(const ReducedGB& o) const { return basis == o.basis; }
};

ReducedGB buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                     const GBOptions& opts = {});

/// remainder of full division of f by the list G (any list, not
/// necessarily a GB)
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/// division with quotients: f = sum q[i] g[i] + r
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G);

/// exact division by a single polynomial; throws if not divisible
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// checks the full Buchberger certificate: every S-polynomial of basis
/// pairs reduces to zero (no criteria applied)
bool certify_gb(const ReducedGB& gb);

/// membership with witness: f = sum q[i] gens[i]; nullopt if f not in (gens)
std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& f,
                                                       const std::vector<Polynomial>& gens);

// ---------------------------------------------------------------------------
// kernels / syzygies
// ---------------------------------------------------------------------------

/// Generators of the syzygy module of the given columns of R^rank
/// (shifts = generator degrees of R^rank). Each returned vector s (length
/// = #cols, as VecPoly over R^#cols) satisfies sum_j s_j * col_j = 0, and
/// together they generate all such relations.
struct KernelResult {
    std::vector<VecPoly> syzygies;     // elements of R^{#cols}
    std::vector<uint32_t> col_degrees; // shifted degrees of the syzygies
};
KernelResult kernel_of_columns(const ModuleCtx& target, const std::vector<VecPoly>& cols,
                               const std::vector<uint32_t>& col_shifts,
                               const GBOptions& opts = {});

/// Express v in terms of the given columns: v = sum q[j] cols[j].
/// nullopt if v is not in the column span.
std::optional<std::vector<Polynomial>> lift_through_columns(const ModuleCtx& target,
                                                            const std::vector<VecPoly>& cols,
                                                            const std::vector<uint32_t>& col_shifts,
                                                            const VecPoly& v);

/// Batched variant: one graph GB, many lifts. result[k][j] is the
/// coefficient of cols[j] in vs[k]; nullopt if any vector fails.
std::optional<std::vector<std::vector<Polynomial>>>
lift_columns(const ModuleCtx& target, const std::vector<VecPoly>& cols,
             const std::vector<uint32_t>& col_shifts, const std::vector<VecPoly>& vs);

/// audit registry used by the certification test suite
namespace gb_audit {
void enable(bool on);
bool enabled();
std::vector<ReducedGB>& recorded();
void clear();
} // namespace gb_audit

} // namespace blowup

#endif
