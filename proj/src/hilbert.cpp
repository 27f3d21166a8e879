#include "blowup/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace blowup {

// ---------------------------------------------------------------------------
// ZPoly
// ---------------------------------------------------------------------------

int64_t ZPoly::eval1() const {
    int64_t s = 0;
    for (int64_t v : c) s += v;
    return s;
}

std::string ZPoly::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        int64_t a = c[i] > 0 ? c[i] : -c[i];
        if (a != 1 || i == 0) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
    r.trim();
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    r.trim();
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly::zero();
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

std::optional<ZPoly> zp_exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw error("ZPoly division by zero");
    if (a.is_zero()) return ZPoly::zero();
    if (a.c.size() < b.c.size()) return std::nullopt;
    ZPoly rem = a, q;
    q.c.assign(a.c.size() - b.c.size() + 1, 0);
    int64_t lead = b.c.back();
    for (int i = static_cast<int>(rem.c.size()) - 1; i >= static_cast<int>(b.c.size()) - 1; --i) {
        int64_t v = rem.c[i];
        if (v == 0) continue;
        if (v % lead != 0) return std::nullopt;
        int64_t f = v / lead;
        size_t shift = i - (b.c.size() - 1);
        q.c[shift] = f;
        for (size_t j = 0; j < b.c.size(); ++j) rem.c[shift + j] -= f * b.c[j];
    }
    rem.trim();
    if (!rem.is_zero()) return std::nullopt;
    q.trim();
    return q;
}

ZPoly zp_one_minus_tw(uint32_t w) {
    ZPoly p;
    p.c.assign(w + 1, 0);
    p.c[0] = 1;
    p.c[w] = -1;
    return p;
}

// ---------------------------------------------------------------------------
// HilbertSeries
// ---------------------------------------------------------------------------

std::vector<int64_t> HilbertSeries::coeffs(uint32_t upto) const {
    std::vector<int64_t> s(upto + 1, 0);
    for (size_t i = 0; i < numerator.c.size() && i <= upto; ++i) s[i] = numerator.c[i];
    // multiply by each geometric series 1/(1 - t^w)
    for (uint32_t w : denom_weights)
        for (uint32_t i = w; i <= upto; ++i) s[i] += s[i - w];
    return s;
}

uint32_t HilbertSeries::pole_order() const {
    if (numerator.is_zero()) return 0;
    ZPoly n = numerator;
    uint32_t ord1 = 0;
    ZPoly one_minus_t = zp_one_minus_tw(1);
    for (;;) {
        auto q = zp_exact_div(n, one_minus_t);
        if (!q) break;
        n = *q;
        ++ord1;
    }
    uint32_t d = static_cast<uint32_t>(denom_weights.size());
    return ord1 >= d ? 0 : d - ord1;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    // equality as rational functions with the same denominator shape
    if (denom_weights == o.denom_weights) return numerator == o.numerator;
    ZPoly lhs = numerator, rhs = o.numerator;
    for (uint32_t w : o.denom_weights) lhs = zp_mul(lhs, zp_one_minus_tw(w));
    for (uint32_t w : denom_weights) rhs = zp_mul(rhs, zp_one_minus_tw(w));
    return lhs == rhs;
}

HilbertSeries hs_sub(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.denom_weights != b.denom_weights) throw error("hs_sub: different denominators");
    return {zp_sub(a.numerator, b.numerator), a.denom_weights};
}

// ---------------------------------------------------------------------------
// numerator of a monomial ideal (pivot splitting)
// ---------------------------------------------------------------------------

namespace {

std::vector<Monomial> minimalize_monomials(const PolyRing& R, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& k : out)
            if (R.divides(k, m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    return out;
}

ZPoly monomial_numerator(const PolyRing& R, std::vector<Monomial> gens) {
    gens = minimalize_monomials(R, std::move(gens));
    if (gens.empty()) return ZPoly::one();
    for (const Monomial& m : gens)
        if (m.is_one()) return ZPoly::zero();

    // count support sizes; find a generator that is not a pure power
    int pivot_var = -1;
    for (const Monomial& m : gens) {
        int support = 0, var = -1;
        for (size_t i = 0; i < R.nvars(); ++i)
            if (m.e[i]) { ++support; var = static_cast<int>(i); }
        if (support > 1) { pivot_var = var; break; }
    }
    if (pivot_var < 0) {
        // pure powers of distinct variables
        ZPoly n = ZPoly::one();
        for (const Monomial& m : gens) n = zp_mul(n, zp_one_minus_tw(m.deg));
        return n;
    }
    size_t v = static_cast<size_t>(pivot_var);
    // split along the pivot x_v:
    //   HS(R/M) = HS(R/(M + x_v)) + t^w * HS(R/(M : x_v))
    std::vector<Monomial> plus, quot;
    for (const Monomial& m : gens) {
        if (m.e[v]) {
            Monomial q = m;
            q.e[v] -= 1;
            q.deg -= R.weight(v);
            quot.push_back(q);
        } else {
            plus.push_back(m);
            quot.push_back(m);
        }
    }
    Monomial xv;
    xv.e[v] = 1;
    xv.deg = R.weight(v);
    plus.push_back(xv);
    ZPoly a = monomial_numerator(R, std::move(plus));
    ZPoly b = monomial_numerator(R, std::move(quot));
    ZPoly tb = zp_mul(ZPoly::t_power(R.weight(v)), b);
    return zp_add(a, tb);
}

} // namespace

HilbertSeries hilbert_series_of_quotient(const Ideal& A) {
    if (!A.homogeneous()) throw error("Hilbert series requires a homogeneous ideal");
    const RingPtr& R = A.ring();
    std::vector<Monomial> leads;
    for (const Polynomial& g : A.gb().basis) leads.push_back(g.lead_mono());
    HilbertSeries hs;
    hs.numerator = monomial_numerator(*R, std::move(leads));
    hs.denom_weights = R->weights();
    return hs;
}

HilbertSeries hilbert_series_of_module(const ModuleCtx& F, const std::vector<VecPoly>& gens) {
    std::vector<VecPoly> gb = module_gb(F, gens);
    HilbertSeries hs;
    hs.numerator = ZPoly::zero();
    hs.denom_weights = F.ring->weights();
    for (uint32_t c = 0; c < F.rank; ++c) {
        std::vector<Monomial> leads;
        for (const VecPoly& v : gb)
            if (!v.is_zero() && v.lead().comp == c) leads.push_back(v.lead().m);
        ZPoly n = monomial_numerator(*F.ring, std::move(leads));
        hs.numerator = zp_add(hs.numerator, zp_mul(ZPoly::t_power(F.shift(c)), n));
    }
    return hs;
}

int dimension(const Ideal& A) {
    if (A.is_unit()) return -1;
    return static_cast<int>(hilbert_series_of_quotient(A).pole_order());
}

int height(const Ideal& A) {
    int n = static_cast<int>(A.ring()->nvars());
    if (A.is_unit()) return n + 1; // "infinite"
    return n - dimension(A);
}

// ---------------------------------------------------------------------------
// lengths
// ---------------------------------------------------------------------------

namespace {

std::optional<ZPoly> finite_part(const HilbertSeries& hs) {
    ZPoly d = ZPoly::one();
    for (uint32_t w : hs.denom_weights) d = zp_mul(d, zp_one_minus_tw(w));
    return zp_exact_div(hs.numerator, d);
}

} // namespace

LengthValue length_of_quotient(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same_ring(*B.ring())) throw ring_mismatch();
    if (!contains(A, B)) throw error("length_of_quotient: second ideal not contained in first");
    HilbertSeries diff = hs_sub(hilbert_series_of_quotient(B), hilbert_series_of_quotient(A));
    auto q = finite_part(diff);
    if (!q) return {false, 0};
    int64_t v = q->eval1();
    if (v < 0) throw error("length_of_quotient: negative length (internal inconsistency)");
    return {true, static_cast<uint64_t>(v)};
}

LengthValue length_of_ring_quotient(const Ideal& A) {
    auto q = finite_part(hilbert_series_of_quotient(A));
    if (!q) return {false, 0};
    return {true, static_cast<uint64_t>(q->eval1())};
}

std::vector<uint64_t> hf_of_finite_quotient(const Ideal& A, const Ideal& B) {
    if (!contains(A, B)) throw error("hf_of_finite_quotient: containment violated");
    HilbertSeries diff = hs_sub(hilbert_series_of_quotient(B), hilbert_series_of_quotient(A));
    auto q = finite_part(diff);
    if (!q) throw error("hf_of_finite_quotient: length is infinite");
    std::vector<uint64_t> out;
    for (int64_t v : q->c) {
        if (v < 0) throw error("hf_of_finite_quotient: negative value");
        out.push_back(static_cast<uint64_t>(v));
    }
    return out;
}

uint64_t hs_multiplicity(const Ideal& A, uint64_t seed, uint32_t max_trials) {
    const RingPtr& R = A.ring();
    if (dimension(A) != 0) throw error("hs_multiplicity requires an m-primary ideal");
    if (!A.equigenerated())
        throw error("hs_multiplicity: general combinations need an equigenerated ideal");
    std::vector<Polynomial> gens = min_gens(A);
    size_t d = R->nvars();
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 17);
    std::vector<uint64_t> seen;
    for (uint32_t trial = 0; trial < max_trials; ++trial) {
        std::vector<Polynomial> combos;
        for (size_t i = 0; i < d; ++i) {
            Polynomial x = Polynomial::zero(R);
            for (const Polynomial& g : gens)
                x = add(x, scale(g, rng.field_element(R->field())));
            combos.push_back(x);
        }
        LengthValue lv = length_of_ring_quotient(Ideal(R, combos));
        if (!lv.finite) continue; // degenerate draw
        for (uint64_t prev : seen)
            if (prev == lv.value) return lv.value;
        seen.push_back(lv.value);
    }
    throw error("hs_multiplicity: no two seeds agreed within the trial cap");
}

} // namespace blowup
