#include "blowup/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace blowup {

PolyRing::PolyRing(std::vector<std::string> vars, PrimeField field, Order order,
                   std::vector<uint32_t> weights, uint32_t block, uint32_t degree_cap)
    : vars_(std::move(vars)), weights_(std::move(weights)), order_(order), block_(block),
      F_(field), degree_cap_(degree_cap) {
    if (vars_.empty() || vars_.size() > kMaxVars)
        throw error("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size()) throw error("one weight per variable required");
    for (uint32_t w : weights_)
        if (w == 0) throw error("weights must be positive");
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw error("variable names must be distinct");
    if (order_ == Order::Block) {
        if (block_ == 0 || block_ > vars_.size())
            throw error("block size must be in [1, nvars]");
    }
    standard_ = std::all_of(weights_.begin(), weights_.end(), [](uint32_t w) { return w == 1; });
}

RingPtr PolyRing::make(std::vector<std::string> vars, PrimeField field, Order order,
                       std::vector<uint32_t> weights, uint32_t block, uint32_t degree_cap) {
    return RingPtr(new PolyRing(std::move(vars), field, order, std::move(weights), block, degree_cap));
}

RingPtr derived_ring(const PolyRing& base, std::vector<std::string> vars,
                     std::vector<uint32_t> weights, Order order, uint32_t block) {
    return PolyRing::make(std::move(vars), base.field(), order, std::move(weights), block,
                          base.degree_cap());
}

size_t PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return static_cast<size_t>(-1);
}

bool PolyRing::same_ring(const PolyRing& o) const {
    if (this == &o) return true;
    return vars_ == o.vars_ && weights_ == o.weights_ && order_ == o.order_ &&
           block_ == o.block_ && F_ == o.F_;
}

// graded reverse lex on the variable range [lo, hi): higher weighted degree
// wins; on ties the monomial with the smaller exponent in the last
// differing position is the larger one.
Cmp PolyRing::grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) const {
    uint32_t da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += weights_[i] * a.e[i];
        db += weights_[i] * b.e[i];
    }
    if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::Less : Cmp::Greater;
    }
    return Cmp::Equal;
}

Cmp PolyRing::compare(const Monomial& a, const Monomial& b) const {
    switch (order_) {
    case Order::GrevLex:
        return grevlex_range(a, b, 0, nvars());
    case Order::Lex:
        for (size_t i = 0; i < nvars(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::Less : Cmp::Greater;
        return Cmp::Equal;
    case Order::Block: {
        Cmp front = grevlex_range(a, b, 0, block_);
        if (front != Cmp::Equal) return front;
        return grevlex_range(a, b, block_, nvars());
    }
    }
    return Cmp::Equal;
}

std::string PolyRing::mono_to_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!first) os << "*";
        os << vars_[i];
        if (m.e[i] > 1) os << "^" << m.e[i];
        first = false;
    }
    return os.str();
}

} // namespace blowup
