#ifndef BLOWUP_FIELD_HPP
#define BLOWUP_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blowup {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

struct ring_mismatch : error {
    ring_mismatch() : error("operands live in different rings") {}
};

/// Arithmetic in Z/p for a prime p < 2^31. Elements are canonical
/// representatives in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint32_t p = 32003) : p_(p) {
        if (p < 2 || !is_prime(p)) throw error("characteristic must be prime: " + std::to_string(p));
    }

    uint32_t characteristic() const { return p_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw error("inverse of zero");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<uint32_t>(t);
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t p_;
};

/// Deterministic RNG for "general element" draws. mt19937_64 with
/// rejection sampling so the stream is identical on every platform
/// (uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        // xorshift* keeps us independent of libstdc++ internals
        uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    /// uniform value in [0, n)
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    uint32_t field_element(const PrimeField& F) {
        return static_cast<uint32_t>(below(F.characteristic()));
    }

    /// derive an independent stream, e.g. for per-trial seeds
    Rng fork(uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 1)); }

private:
    uint64_t state_;
};

} // namespace blowup

#endif
