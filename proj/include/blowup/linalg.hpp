#ifndef BLOWUP_LINALG_HPP
#define BLOWUP_LINALG_HPP

#include <optional>
#include <vector>

#include "blowup/poly.hpp"

namespace blowup {

/// all monomials of the given weighted degree, in decreasing ring order
std::vector<Monomial> monomials_of_weighted_degree(const RingPtr& ring, uint32_t deg);

/// Incremental row-echelon span over F_p.
class FpSpan {
public:
    explicit FpSpan(PrimeField F) : F_(F) {}

    /// reduce v against the current span; returns true if v was
    /// independent (and absorbs it)
    bool add(std::vector<uint32_t> v);

    /// true iff v lies in the span (v untouched)
    bool contains(std::vector<uint32_t> v) const;

    size_t rank() const { return rows_.size(); }

private:
    bool reduce(std::vector<uint32_t>& v) const; // true if reduced to zero
    PrimeField F_;
    std::vector<std::vector<uint32_t>> rows_; // echelon rows
    std::vector<size_t> pivots_;
};

/// coefficient vector of f on the given monomial list (monomials sorted
/// decreasing in ring order); terms outside the list are an error
std::vector<uint32_t> coeff_vector(const Polynomial& f, const std::vector<Monomial>& monos);

/// The degree-d piece of the ideal generated by `gens` (homogeneous), as
/// a span inside the monomial basis of that degree.
FpSpan degree_piece(const RingPtr& ring, const std::vector<Polynomial>& gens, uint32_t deg,
                    const std::vector<Monomial>& monos);

/// dimension of the degree-d piece of (gens)
size_t degree_piece_dim(const RingPtr& ring, const std::vector<Polynomial>& gens, uint32_t deg);

/// solve sum_i c_i rows[i] = target over F_p; nullopt if unsolvable
std::optional<std::vector<uint32_t>> solve_combination(const PrimeField& F,
                                                       const std::vector<std::vector<uint32_t>>& rows,
                                                       const std::vector<uint32_t>& target);

} // namespace blowup

#endif
