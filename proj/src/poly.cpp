#include "blowup/poly.hpp"

#include <algorithm>
#include <sstream>

namespace blowup {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_ring(*b.ring())) throw ring_mismatch();
}

Polynomial Polynomial::constant(RingPtr ring, int64_t v) {
    Polynomial p(ring);
    uint32_t c = ring->field().reduce(v);
    if (c) p.terms_.push_back({c, ring->one()});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t i, uint16_t exp) {
    Polynomial p(ring);
    if (exp > 0) p.terms_.push_back({1, ring->var_mono(i, exp)});
    else p.terms_.push_back({1, ring->one()});
    return p;
}

Polynomial Polynomial::from_term(RingPtr ring, uint32_t c, const Monomial& m) {
    Polynomial p(ring);
    if (c % ring->field().characteristic())
        p.terms_.push_back({c % ring->field().characteristic(), m});
    return p;
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.m.deg);
    return d;
}

bool Polynomial::homogeneous() const {
    for (const Term& t : terms_)
        if (t.m.deg != terms_.front().m.deg) return false;
    return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].c != o.terms_[i].c || !(terms_[i].m == o.terms_[i].m)) return false;
    return true;
}

Polynomial normalize_terms(RingPtr ring, std::vector<Term> terms) {
    const PolyRing& R = *ring;
    std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
        return R.compare(a.m, b.m) == Cmp::Greater;
    });
    Polynomial p(ring);
    p.terms_.reserve(terms.size());
    for (const Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c = R.field().add(p.terms_.back().c, t.c);
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else if (t.c) {
            p.terms_.push_back(t);
        }
    }
    return p;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    const PolyRing& R = *a.ring();
    Polynomial r(a.ring());
    r.terms_.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Cmp c = R.compare(a.terms_[i].m, b.terms_[j].m);
        if (c == Cmp::Greater) r.terms_.push_back(a.terms_[i++]);
        else if (c == Cmp::Less) r.terms_.push_back(b.terms_[j++]);
        else {
            uint32_t s = R.field().add(a.terms_[i].c, b.terms_[j].c);
            if (s) r.terms_.push_back({s, a.terms_[i].m});
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial neg(const Polynomial& a) {
    Polynomial r = a;
    for (Term& t : r.terms_mut()) t.c = a.ring()->field().neg(t.c);
    return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) { return add(a, neg(b)); }

Polynomial mul_term(const Polynomial& a, uint32_t c, const Monomial& m) {
    const PolyRing& R = *a.ring();
    Polynomial r(a.ring());
    if (c == 0) return r;
    r.terms_.reserve(a.size());
    for (const Term& t : a.terms_) {
        uint32_t cc = R.field().mul(t.c, c);
        if (cc) r.terms_.push_back({cc, R.mul(t.m, m)});
    }
    return r;
}

Polynomial scale(const Polynomial& a, uint32_t c) {
    return mul_term(a, c, a.ring()->one());
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring());
    std::vector<Term> acc;
    acc.reserve(a.size() * b.size());
    const PolyRing& R = *a.ring();
    for (const Term& s : a.terms())
        for (const Term& t : b.terms())
            acc.push_back({R.field().mul(s.c, t.c), R.mul(s.m, t.m)});
    return normalize_terms(a.ring(), std::move(acc));
}

Polynomial pow(const Polynomial& a, uint32_t n) {
    Polynomial r = Polynomial::constant(a.ring(), 1);
    for (uint32_t k = 0; k < n; ++k) r = mul(r, a);
    return r;
}

Polynomial monic(const Polynomial& a) {
    if (a.is_zero()) return a;
    return scale(a, a.ring()->field().inv(a.lead_coeff()));
}

void sub_scaled(Polynomial& f, uint32_t c, const Monomial& m, const Polynomial& g) {
    Polynomial prod = mul_term(g, c, m);
    f = sub(f, prod);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const PrimeField& F = ring_->field();
    uint32_t p = F.characteristic();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        // symmetric representative keeps printed polynomials readable
        bool negative = t.c > p / 2;
        uint32_t mag = negative ? p - t.c : t.c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (t.m.is_one()) os << mag;
        else {
            if (mag != 1) os << mag << "*";
            os << ring_->mono_to_string(t.m);
        }
        first = false;
    }
    return os.str();
}

Polynomial rename_into(const Polynomial& f, const RingPtr& target) {
    if (f.ring()->field().characteristic() != target->field().characteristic())
        throw ring_mismatch();
    const PolyRing& S = *f.ring();
    std::vector<size_t> where(S.nvars());
    for (size_t i = 0; i < S.nvars(); ++i)
        where[i] = target->var_index(S.var_name(i));
    std::vector<Term> out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) {
        Monomial m;
        uint32_t d = 0;
        for (size_t i = 0; i < S.nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (where[i] == static_cast<size_t>(-1))
                throw error("variable " + S.var_name(i) + " not present in target ring");
            m.e[where[i]] = t.m.e[i];
            d += target->weight(where[i]) * t.m.e[i];
        }
        m.deg = d;
        out.push_back({t.c, m});
    }
    return normalize_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
    const PolyRing& S = *f.ring();
    if (images.size() != S.nvars()) throw error("substitute: one image per variable required");
    Polynomial acc = Polynomial::zero(target);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (size_t i = 0; i < S.nvars(); ++i)
            if (t.m.e[i]) prod = mul(prod, pow(images[i], t.m.e[i]));
        acc = add(acc, prod);
    }
    return acc;
}

} // namespace blowup
