#include "blowup/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace blowup {

VecPoly matrix_column(const GradedMatrix& m, size_t c) {
    VecPoly v;
    for (size_t r = 0; r < m.rows(); ++r)
        for (const Term& t : m.a[r][c].terms())
            v.terms.push_back({t.c, t.m, static_cast<uint32_t>(r)});
    ModuleCtx ctx{m.ring, static_cast<uint32_t>(m.rows()), 0, m.row_degrees};
    ctx.sort_terms(v);
    return v;
}

bool matrix_product_is_zero(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.cols() != b.rows()) return false;
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) {
            Polynomial s = Polynomial::zero(a.ring);
            for (size_t k = 0; k < a.cols(); ++k) s = add(s, mul(a.a[r][k], b.a[k][c]));
            if (!s.is_zero()) return false;
        }
    return true;
}

PresentedModule PresentedModule::of_ring_quotient(const Ideal& A) {
    PresentedModule M;
    M.ring = A.ring();
    M.gen_degrees = {0};
    GradedMatrix P;
    P.ring = A.ring();
    P.row_degrees = {0};
    std::vector<Polynomial> row;
    for (const Polynomial& g : A.gens()) {
        if (!g.homogeneous()) throw error("resolution requires homogeneous input");
        row.push_back(g);
        P.col_degrees.push_back(g.degree());
    }
    P.a = {row};
    M.relations = std::move(P);
    return M;
}

PresentedModule PresentedModule::of_cokernel(GradedMatrix P) {
    PresentedModule M;
    M.ring = P.ring;
    M.gen_degrees = P.row_degrees;
    M.relations = std::move(P);
    return M;
}

// ---------------------------------------------------------------------------
// pruning
// ---------------------------------------------------------------------------

namespace {

bool is_unit_entry(const Polynomial& p) {
    return p.size() == 1 && p.lead_mono().is_one();
}

void delete_row(GradedMatrix& m, size_t r) {
    m.a.erase(m.a.begin() + r);
    m.row_degrees.erase(m.row_degrees.begin() + r);
}

void delete_col(GradedMatrix& m, size_t c) {
    for (auto& row : m.a) row.erase(row.begin() + c);
    m.col_degrees.erase(m.col_degrees.begin() + c);
}

/// Cancel unit entries of `cur`. Deleting row r of `cur` deletes column r
/// of `prev` (when given) or generator r of `gen_degrees` (first matrix).
void prune_matrix(GradedMatrix& cur, GradedMatrix* prev, std::vector<uint32_t>* gen_degrees) {
    const RingPtr& ring = cur.ring;
    for (;;) {
        size_t ur = cur.rows(), uc = cur.cols();
        for (size_t r = 0; r < cur.rows() && ur == cur.rows(); ++r)
            for (size_t c = 0; c < cur.cols(); ++c)
                if (is_unit_entry(cur.a[r][c])) { ur = r; uc = c; break; }
        if (ur == cur.rows()) return;

        uint32_t u = cur.a[ur][uc].lead_coeff();
        uint32_t uinv = ring->field().inv(u);
        // column operations clear the pivot row
        for (size_t c = 0; c < cur.cols(); ++c) {
            if (c == uc || cur.a[ur][c].is_zero()) continue;
            Polynomial f = scale(cur.a[ur][c], uinv);
            for (size_t r = 0; r < cur.rows(); ++r)
                cur.a[r][c] = sub(cur.a[r][c], mul(f, cur.a[r][uc]));
        }
        delete_col(cur, uc);
        delete_row(cur, ur);
        if (prev) delete_col(*prev, ur);
        if (gen_degrees) gen_degrees->erase(gen_degrees->begin() + ur);
    }
}

GradedMatrix syzygy_matrix(const GradedMatrix& A) {
    ModuleCtx target{A.ring, static_cast<uint32_t>(A.rows()), 0, A.row_degrees};
    std::vector<VecPoly> cols;
    for (size_t c = 0; c < A.cols(); ++c) cols.push_back(matrix_column(A, c));
    KernelResult ker = kernel_of_columns(target, cols, A.col_degrees);
    GradedMatrix S;
    S.ring = A.ring;
    S.row_degrees = A.col_degrees;
    S.col_degrees = ker.col_degrees;
    S.a.assign(A.cols(), std::vector<Polynomial>(ker.syzygies.size(), Polynomial::zero(A.ring)));
    ModuleCtx sctx{A.ring, static_cast<uint32_t>(A.cols()), 0, A.col_degrees};
    for (size_t c = 0; c < ker.syzygies.size(); ++c)
        for (size_t r = 0; r < A.cols(); ++r)
            S.a[r][c] = vp_component(sctx, ker.syzygies[c], static_cast<uint32_t>(r));
    return S;
}

} // namespace

FreeResolution free_resolution(const PresentedModule& Min) {
    PresentedModule M = Min;
    FreeResolution res;
    res.ring = M.ring;
    prune_matrix(M.relations, nullptr, &M.gen_degrees);
    res.module_degrees = M.gen_degrees;
    if (M.gen_degrees.empty() || M.relations.cols() == 0) return res; // zero or free

    res.matrices.push_back(M.relations);
    size_t guard = M.ring->nvars() + 2;
    while (res.matrices.size() <= guard) {
        GradedMatrix S = syzygy_matrix(res.matrices.back());
        prune_matrix(S, &res.matrices.back(), nullptr);
        if (res.matrices.back().cols() == 0) {
            // the previous step became trivial after pruning
            res.matrices.pop_back();
            if (res.matrices.empty()) return res;
            continue;
        }
        if (S.cols() == 0) return res;
        res.matrices.push_back(std::move(S));
    }
    throw error("free_resolution exceeded the Hilbert syzygy bound (internal error)");
}

FreeResolution free_resolution(const Ideal& A) {
    return free_resolution(PresentedModule::of_ring_quotient(A));
}

std::vector<size_t> FreeResolution::betti() const {
    std::vector<size_t> b{module_degrees.size()};
    for (const GradedMatrix& m : matrices) b.push_back(m.cols());
    return b;
}

uint32_t projective_dimension(const PresentedModule& M) {
    return static_cast<uint32_t>(free_resolution(M).length());
}

std::optional<uint32_t> depth_of_module(const PresentedModule& M) {
    FreeResolution r = free_resolution(M);
    if (r.module_degrees.empty()) return std::nullopt; // zero module
    return static_cast<uint32_t>(M.ring->nvars()) - static_cast<uint32_t>(r.length());
}

uint32_t depth_of_quotient(const Ideal& A) {
    auto d = depth_of_module(PresentedModule::of_ring_quotient(A));
    return d ? *d : static_cast<uint32_t>(A.ring()->nvars());
}

bool is_cohen_macaulay(const Ideal& A) {
    if (A.is_unit()) return true; // zero ring, vacuous
    return static_cast<int>(depth_of_quotient(A)) == dimension(A);
}

int module_dimension(const PresentedModule& M) {
    if (M.is_zero_module()) return -1;
    ModuleCtx F{M.ring, static_cast<uint32_t>(M.gen_degrees.size()), 0, M.gen_degrees};
    std::vector<VecPoly> cols;
    for (size_t c = 0; c < M.relations.cols(); ++c) cols.push_back(matrix_column(M.relations, c));
    HilbertSeries hs = hilbert_series_of_module(F, cols);
    if (hs.numerator.is_zero()) return -1;
    return static_cast<int>(hs.pole_order());
}

bool module_is_cm(const PresentedModule& M) {
    int dim = module_dimension(M);
    if (dim < 0) return true; // zero module
    auto depth = depth_of_module(M);
    return depth && static_cast<int>(*depth) == dim;
}

// ---------------------------------------------------------------------------
// Koszul homology
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<uint32_t>> subsets_of_size(uint32_t n, uint32_t k) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur;
    std::function<void(uint32_t)> rec = [&](uint32_t start) {
        if (cur.size() == k) { out.push_back(cur); return; }
        for (uint32_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

size_t subset_index(const std::vector<std::vector<uint32_t>>& basis,
                    const std::vector<uint32_t>& s) {
    auto it = std::lower_bound(basis.begin(), basis.end(), s);
    return static_cast<size_t>(it - basis.begin());
}

/// differential Lambda^k -> Lambda^{k-1} of the Koszul complex
GradedMatrix koszul_differential(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                 uint32_t k) {
    uint32_t n = static_cast<uint32_t>(gens.size());
    auto dom = subsets_of_size(n, k);
    auto cod = subsets_of_size(n, k - 1);
    auto deg_of = [&](const std::vector<uint32_t>& s) {
        uint32_t d = 0;
        for (uint32_t i : s) d += gens[i].degree();
        return d;
    };
    GradedMatrix D;
    D.ring = ring;
    for (const auto& s : cod) D.row_degrees.push_back(deg_of(s));
    for (const auto& s : dom) D.col_degrees.push_back(deg_of(s));
    D.a.assign(cod.size(), std::vector<Polynomial>(dom.size(), Polynomial::zero(ring)));
    for (size_t c = 0; c < dom.size(); ++c) {
        const auto& s = dom[c];
        for (size_t pos = 0; pos < s.size(); ++pos) {
            std::vector<uint32_t> t = s;
            t.erase(t.begin() + pos);
            size_t r = subset_index(cod, t);
            Polynomial entry = gens[s[pos]];
            if (pos % 2) entry = neg(entry);
            D.a[r][c] = entry;
        }
    }
    return D;
}

} // namespace

KoszulHomology koszul_homology(const RingPtr& ring, const std::vector<Polynomial>& gens,
                               uint32_t i) {
    uint32_t n = static_cast<uint32_t>(gens.size());
    if (n > 8) throw budget_error("koszul_homology limited to at most 8 generators");
    if (i > n) throw error("koszul_homology: index out of range");

    KoszulHomology H;
    H.index = i;

    // kernel of d_i (for i = 0 the whole of Lambda^0 = R)
    std::vector<VecPoly> ker_gens;
    std::vector<uint32_t> ker_degs;
    auto dom = subsets_of_size(n, i);
    std::vector<uint32_t> dom_degs;
    for (const auto& s : dom) {
        uint32_t d = 0;
        for (uint32_t v : s) d += gens[v].degree();
        dom_degs.push_back(d);
    }
    if (i == 0) {
        VecPoly e0;
        e0.terms.push_back({1, ring->one(), 0});
        ker_gens.push_back(e0);
        ker_degs.push_back(0);
    } else {
        GradedMatrix Di = koszul_differential(ring, gens, i);
        ModuleCtx target{ring, static_cast<uint32_t>(Di.rows()), 0, Di.row_degrees};
        std::vector<VecPoly> cols;
        for (size_t c = 0; c < Di.cols(); ++c) cols.push_back(matrix_column(Di, c));
        KernelResult ker = kernel_of_columns(target, cols, Di.col_degrees);
        ker_gens = std::move(ker.syzygies);
        ker_degs = std::move(ker.col_degrees);
    }
    if (ker_gens.empty()) { H.zero = true; return H; }

    // image of d_{i+1}, expressed in the kernel generators
    GradedMatrix Q;
    Q.ring = ring;
    Q.row_degrees = ker_degs;
    Q.a.assign(ker_gens.size(), {});
    if (i < n) {
        GradedMatrix Dnext = koszul_differential(ring, gens, i + 1);
        ModuleCtx target{ring, static_cast<uint32_t>(dom.size()), 0, dom_degs};
        std::vector<VecPoly> img;
        for (size_t c = 0; c < Dnext.cols(); ++c) img.push_back(matrix_column(Dnext, c));
        auto lifts = lift_columns(target, ker_gens, ker_degs, img);
        if (!lifts) throw error("koszul_homology: image not inside kernel (internal error)");
        Q.col_degrees = Dnext.col_degrees;
        for (size_t r = 0; r < ker_gens.size(); ++r) {
            Q.a[r].resize(img.size(), Polynomial::zero(ring));
            for (size_t c = 0; c < img.size(); ++c) Q.a[r][c] = (*lifts)[c][r];
        }
    }
    H.presentation = PresentedModule::of_cokernel(std::move(Q));
    H.presentation.ring = ring;
    H.zero = module_dimension(H.presentation) < 0;
    return H;
}

// ---------------------------------------------------------------------------
// sliding depth / strongly CM
// ---------------------------------------------------------------------------

namespace {

DepthConditionReport homology_depth_scan(const Ideal& A, bool strongly) {
    const RingPtr& R = A.ring();
    uint32_t d = static_cast<uint32_t>(R->nvars());
    std::vector<Polynomial> gens = min_gens(A);
    uint32_t n = static_cast<uint32_t>(gens.size());
    int g = height(A);
    DepthConditionReport rep;
    for (uint32_t i = 0; i + g <= n; ++i) {
        KoszulHomology H = koszul_homology(R, gens, i);
        std::ostringstream line;
        line << "H_" << i << ": ";
        if (H.zero) {
            line << "zero";
        } else if (strongly) {
            bool cm = module_is_cm(H.presentation);
            line << (cm ? "CM" : "not CM");
            if (!cm) rep.holds = false;
        } else {
            auto depth = depth_of_module(H.presentation);
            int need = static_cast<int>(d) - static_cast<int>(n) + static_cast<int>(i);
            int have = depth ? static_cast<int>(*depth) : static_cast<int>(d);
            line << "depth " << have << " (need >= " << need << ")";
            if (have < need) rep.holds = false;
        }
        rep.detail.push_back(line.str());
    }
    return rep;
}

} // namespace

DepthConditionReport sliding_depth_check(const Ideal& A) { return homology_depth_scan(A, false); }

DepthConditionReport strongly_cm_check(const Ideal& A) { return homology_depth_scan(A, true); }

} // namespace blowup
