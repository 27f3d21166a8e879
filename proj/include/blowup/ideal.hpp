#ifndef BLOWUP_IDEAL_HPP
#define BLOWUP_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "blowup/groebner.hpp"

namespace blowup {

/// Ideal of a polynomial ring: generator list plus a lazily computed,
/// shared reduced Groebner basis. Copies share the cache.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);
    /// the irrelevant maximal ideal (all variables)
    static Ideal irrelevant(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    const ReducedGB& gb() const;
    bool is_zero() const { return gb().is_zero(); }
    bool is_unit() const { return gb().contains_unit(); }
    bool homogeneous() const;

    /// all generators share one weighted degree
    bool equigenerated() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::once_flag once;
        ReducedGB gb;
    };
    std::shared_ptr<Cache> cache_;
};

Polynomial nf(const Polynomial& f, const Ideal& A);
bool contains(const Ideal& A, const Polynomial& f);
bool contains(const Ideal& A, const Ideal& B); // B subset of A
bool equals(const Ideal& A, const Ideal& B);

Ideal sum(const Ideal& A, const Ideal& B);
Ideal product(const Ideal& A, const Ideal& B);
Ideal power(const Ideal& A, uint32_t n);
Ideal intersect(const Ideal& A, const Ideal& B);
Ideal colon(const Ideal& A, const Ideal& B);
Ideal colon(const Ideal& A, const Polynomial& b);
Ideal saturate(const Ideal& A, const Ideal& B, uint32_t iteration_cap = 64);

/// generators of A not involving the given variables (A intersected with
/// the subring); result lives in the ring without those variables
Ideal eliminate(const Ideal& A, const std::vector<size_t>& front_vars);

/// graded Nakayama minimalization (requires homogeneous A)
std::vector<Polynomial> min_gens(const Ideal& A);
uint32_t mu(const Ideal& A);

struct SyzygyMatrix {
    RingPtr ring;
    size_t rows = 0; // one row per generator
    std::vector<std::vector<Polynomial>> cols;
    std::vector<uint32_t> col_degrees;
    std::vector<uint32_t> row_degrees;
};

/// generators of the first syzygy module of the given polynomials
SyzygyMatrix syzygies(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// i-th Fitting ideal of A viewed as an R-module, from a minimal
/// presentation
Ideal fitting_ideal(const Ideal& A, uint32_t i);

/// determinant of a square matrix of polynomials (Laplace expansion)
Polynomial poly_det(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& m);

/// ideal of all k x k minors of the matrix (rows x cols of polynomials)
Ideal minors_ideal(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& m, uint32_t k);

/// map an ideal into a ring containing (a superset of) its variables
Ideal rename_into(const Ideal& A, const RingPtr& target);

} // namespace blowup

#endif
