#ifndef BLOWUP_HILBERT_HPP
#define BLOWUP_HILBERT_HPP

#include <optional>

#include "blowup/ideal.hpp"

namespace blowup {

/// Integer polynomial in one variable t, dense coefficient list.
struct ZPoly {
    std::vector<int64_t> c; // c[i] is the coefficient of t^i

    static ZPoly zero() { return {}; }
    static ZPoly one() { return {{1}}; }
    static ZPoly t_power(uint32_t k) {
        ZPoly p;
        p.c.assign(k + 1, 0);
        p.c[k] = 1;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int64_t at(size_t i) const { return i < c.size() ? c[i] : 0; }
    int64_t eval1() const; // value at t = 1
    bool operator==(const ZPoly& o) const { return c == o.c; }
    std::string to_string() const;
};

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
/// quotient if b divides a exactly, else nullopt
std::optional<ZPoly> zp_exact_div(const ZPoly& a, const ZPoly& b);
/// 1 - t^w
ZPoly zp_one_minus_tw(uint32_t w);

/// Hilbert series of a graded quotient (or shifted module), kept as
/// numerator / prod (1 - t^w) over the ring's variable weights.
struct HilbertSeries {
    ZPoly numerator;
    std::vector<uint32_t> denom_weights;

    /// power-series coefficients up to degree `upto` inclusive
    std::vector<int64_t> coeffs(uint32_t upto) const;
    /// order of the pole at t = 1 (dimension); 0 for the zero module... the
    /// zero module is signalled by a zero numerator
    uint32_t pole_order() const;
    bool operator==(const HilbertSeries& o) const;
};

HilbertSeries hs_sub(const HilbertSeries& a, const HilbertSeries& b);

/// HS of R/A from the leading-term ideal of A (A homogeneous)
HilbertSeries hilbert_series_of_quotient(const Ideal& A);

/// HS of the graded module F/N where F = R^rank with the given shifts and
/// N is generated by the columns; computed from a module GB
HilbertSeries hilbert_series_of_module(const ModuleCtx& F, const std::vector<VecPoly>& gens);

/// Krull dimension of R/A (dimension of the empty ring R/(1) is reported
/// as -1)
int dimension(const Ideal& A);
/// height = dim R - dim R/A; for the unit ideal returns nvars + 1 as an
/// "infinite" sentinel
int height(const Ideal& A);

struct LengthValue {
    bool finite = false;
    uint64_t value = 0;
    bool operator==(const LengthValue& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
};

/// lambda(A/B) for B subseteq A (checked), via Hilbert series difference
LengthValue length_of_quotient(const Ideal& A, const Ideal& B);

/// lambda(R/A), infinite unless dim R/A = 0
LengthValue length_of_ring_quotient(const Ideal& A);

/// per-degree Hilbert function values of A/B up to the point the length
/// is exhausted; only valid when the length is finite
std::vector<uint64_t> hf_of_finite_quotient(const Ideal& A, const Ideal& B);

/// Hilbert-Samuel multiplicity of an m-primary ideal via a general
/// parameter reduction, certified by agreement across seeds
uint64_t hs_multiplicity(const Ideal& A, uint64_t seed = 0, uint32_t max_trials = 6);

} // namespace blowup

#endif
