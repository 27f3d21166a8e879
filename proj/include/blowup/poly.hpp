#ifndef BLOWUP_POLY_HPP
#define BLOWUP_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "blowup/ring.hpp"

namespace blowup {

struct Term {
    uint32_t c; // in [1, p)
    Monomial m;
};

/// Exact multivariate polynomial: terms strictly decreasing in the ring
/// order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, int64_t v);
    static Polynomial variable(RingPtr ring, size_t i, uint16_t exp = 1);
    static Polynomial from_term(RingPtr ring, uint32_t c, const Monomial& m);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::vector<Term>& terms_mut() { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& lead() const { return terms_.front(); }
    const Monomial& lead_mono() const { return terms_.front().m; }
    uint32_t lead_coeff() const { return terms_.front().c; }

    /// weighted degree of the leading term (0 for the zero polynomial)
    uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().m.deg; }

    /// largest weighted term degree; equals degree() for homogeneous input
    uint32_t total_degree() const;

    bool homogeneous() const;

    bool operator==(const Polynomial& o) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    friend Polynomial add(const Polynomial&, const Polynomial&);
    friend Polynomial sub(const Polynomial&, const Polynomial&);
    friend Polynomial mul(const Polynomial&, const Polynomial&);
    friend Polynomial mul_term(const Polynomial&, uint32_t, const Monomial&);
    friend Polynomial scale(const Polynomial&, uint32_t);
    friend Polynomial normalize_terms(RingPtr, std::vector<Term>);
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

/// sort terms, merge duplicates, drop zeros
Polynomial normalize_terms(RingPtr ring, std::vector<Term> terms);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial mul_term(const Polynomial& a, uint32_t c, const Monomial& m);
Polynomial scale(const Polynomial& a, uint32_t c);
Polynomial neg(const Polynomial& a);
Polynomial pow(const Polynomial& a, uint32_t n);
Polynomial monic(const Polynomial& a);

/// f -= c * m * g (in place); returns number of touched terms
void sub_scaled(Polynomial& f, uint32_t c, const Monomial& m, const Polynomial& g);

/// Map a polynomial into another ring by variable-name lookup. Every
/// variable of f that occurs must exist in `target`.
Polynomial rename_into(const Polynomial& f, const RingPtr& target);

/// Substitute each variable by the given image polynomial (all in the
/// target ring).
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images);

struct ParseError : error {
    ParseError(const std::string& msg, size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

/// Text grammar: sums/differences of products of integer constants,
/// variables with optional "^" powers, and parenthesized subexpressions;
/// "*" is optional between factors.
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring);

} // namespace blowup

#endif
