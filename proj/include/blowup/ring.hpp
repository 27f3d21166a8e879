#ifndef BLOWUP_RING_HPP
#define BLOWUP_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "blowup/field.hpp"

namespace blowup {

constexpr size_t kMaxVars = 16;

enum class Order { GrevLex, Lex, Block };

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// Exponent vector with cached weighted degree. Always interpreted
/// relative to an owning PolyRing (which fixes nvars and weights).
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0; // weighted total degree

    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const {
        return deg == o.deg && e == o.e;
    }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Variable names, weights, monomial order and coefficient field.
/// Immutable after construction; shared by pointer everywhere.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(std::vector<std::string> vars, PrimeField field = PrimeField(),
                        Order order = Order::GrevLex, std::vector<uint32_t> weights = {},
                        uint32_t block = 0, uint32_t degree_cap = 64);

    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(size_t i) const { return vars_[i]; }
    uint32_t weight(size_t i) const { return weights_[i]; }
    const std::vector<uint32_t>& weights() const { return weights_; }
    Order order() const { return order_; }
    uint32_t block() const { return block_; }
    const PrimeField& field() const { return F_; }
    uint32_t degree_cap() const { return degree_cap_; }
    bool standard_graded() const { return standard_; }

    /// index of a variable name, or npos
    size_t var_index(const std::string& name) const;

    Monomial one() const { return Monomial{}; }

    Monomial var_mono(size_t i, uint16_t exp = 1) const {
        Monomial m;
        m.e[i] = exp;
        m.deg = weights_[i] * exp;
        return m;
    }

    uint32_t mono_degree(const Monomial& m) const { return m.deg; }

    Monomial mul(const Monomial& a, const Monomial& b) const {
        Monomial r;
        for (size_t i = 0; i < nvars(); ++i) {
            uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
            if (s > UINT16_MAX) throw budget_error("exponent overflow");
            r.e[i] = static_cast<uint16_t>(s);
        }
        r.deg = a.deg + b.deg;
        if (r.deg > degree_cap_)
            throw budget_error("degree budget exceeded: monomial of degree " + std::to_string(r.deg));
        return r;
    }

    bool divides(const Monomial& a, const Monomial& b) const { // a | b
        if (a.deg > b.deg) return false;
        for (size_t i = 0; i < nvars(); ++i)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }

    Monomial div(const Monomial& b, const Monomial& a) const { // b / a, assumes a | b
        Monomial r;
        for (size_t i = 0; i < nvars(); ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
        r.deg = b.deg - a.deg;
        return r;
    }

    Monomial lcm(const Monomial& a, const Monomial& b) const {
        Monomial r;
        uint32_t d = 0;
        for (size_t i = 0; i < nvars(); ++i) {
            r.e[i] = std::max(a.e[i], b.e[i]);
            d += weights_[i] * r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Monomial& a, const Monomial& b) const {
        for (size_t i = 0; i < nvars(); ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    Cmp compare(const Monomial& a, const Monomial& b) const;

    bool same_ring(const PolyRing& o) const;

    std::string mono_to_string(const Monomial& m) const;

private:
    PolyRing(std::vector<std::string> vars, PrimeField field, Order order,
             std::vector<uint32_t> weights, uint32_t block, uint32_t degree_cap);

    Cmp grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) const;

    std::vector<std::string> vars_;
    std::vector<uint32_t> weights_;
    Order order_;
    uint32_t block_;
    PrimeField F_;
    uint32_t degree_cap_;
    bool standard_;
};

/// Ring with the same field/cap, derived from `base` by listing variable
/// names and weights explicitly. Helper for elimination/extension rings.
RingPtr derived_ring(const PolyRing& base, std::vector<std::string> vars,
                     std::vector<uint32_t> weights, Order order, uint32_t block);

} // namespace blowup

#endif
