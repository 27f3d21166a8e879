#ifndef BLOWUP_RESOLUTION_HPP
#define BLOWUP_RESOLUTION_HPP

#include "blowup/hilbert.hpp"

namespace blowup {

/// Graded matrix over a polynomial ring: map F_col -> F_row between free
/// modules with the given generator degrees. entry(r, c) is homogeneous of
/// degree col_degrees[c] - row_degrees[r].
struct GradedMatrix {
    RingPtr ring;
    std::vector<uint32_t> row_degrees;
    std::vector<uint32_t> col_degrees;
    std::vector<std::vector<Polynomial>> a; // a[r][c]

    size_t rows() const { return row_degrees.size(); }
    size_t cols() const { return col_degrees.size(); }
    const Polynomial& at(size_t r, size_t c) const { return a[r][c]; }
};

/// column c as a module element of R^rows
VecPoly matrix_column(const GradedMatrix& m, size_t c);
/// product is zero (composability certificate)
bool matrix_product_is_zero(const GradedMatrix& a, const GradedMatrix& b);

/// Presented graded module F_0 / im(P).
struct PresentedModule {
    RingPtr ring;
    std::vector<uint32_t> gen_degrees;
    GradedMatrix relations; // rows match gen_degrees

    static PresentedModule of_ring_quotient(const Ideal& A);
    static PresentedModule of_cokernel(GradedMatrix P);
    bool is_zero_module() const { return gen_degrees.empty(); }
};

/// Minimal graded free resolution: matrices[0] presents the module,
/// matrices[k] the k-th syzygies. No matrix contains a nonzero constant
/// entry. Empty list means the module is free (or zero).
struct FreeResolution {
    RingPtr ring;
    std::vector<uint32_t> module_degrees; // degrees of F_0 generators
    std::vector<GradedMatrix> matrices;

    size_t length() const { return matrices.size(); } // projective dimension
    std::vector<size_t> betti() const;                // ranks F_0, F_1, ...
};

FreeResolution free_resolution(const PresentedModule& M);
FreeResolution free_resolution(const Ideal& A); // resolution of R/A

uint32_t projective_dimension(const PresentedModule& M);

/// depth via Auslander-Buchsbaum: nvars - pd. For the zero module the
/// optional is empty (depth is +infinity by convention).
std::optional<uint32_t> depth_of_module(const PresentedModule& M);
uint32_t depth_of_quotient(const Ideal& A); // depth of R/A
bool is_cohen_macaulay(const Ideal& A);     // R/A CM

/// Krull dimension of a presented module (via its Hilbert series);
/// -1 for the zero module
int module_dimension(const PresentedModule& M);
bool module_is_cm(const PresentedModule& M);

struct KoszulHomology {
    uint32_t index = 0;
    bool zero = true;
    PresentedModule presentation;
};

/// H_i of the Koszul complex on the given elements
KoszulHomology koszul_homology(const RingPtr& ring, const std::vector<Polynomial>& gens,
                               uint32_t i);

struct DepthConditionReport {
    bool holds = true;
    std::vector<std::string> detail; // one line per homology module
};

/// sliding depth: depth H_i >= d - n + i for 0 <= i <= n - g
DepthConditionReport sliding_depth_check(const Ideal& A);
/// strongly Cohen-Macaulay: every nonvanishing H_i is CM
DepthConditionReport strongly_cm_check(const Ideal& A);

} // namespace blowup

#endif
