#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "blowup/groebner.hpp"

using namespace blowup;

namespace {

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(s, R); }

std::vector<Polynomial> PV(const RingPtr& R, std::initializer_list<const char*> ss) {
    std::vector<Polynomial> v;
    for (const char* s : ss) v.push_back(P(R, s));
    return v;
}

std::string dump(const ReducedGB& gb) {
    std::ostringstream os;
    for (const auto& g : gb.basis) os << g.to_string() << ";";
    return os.str();
}

// Example 6.2 of the write-up: 2-minors of [[x,y,z,w],[w,x,y,z]]
std::vector<Polynomial> scroll_minors(const RingPtr& R) {
    return PV(R, {"x^2-y*w", "x*y-z*w", "x*z-w^2", "y^2-x*z", "y*z-w*x", "z^2-w*y"});
}

} // namespace

TEST_CASE("normal form basics") {
    auto R = PolyRing::make({"x", "y"});
    CHECK(normal_form(P(R, "x^2"), PV(R, {"x"})).is_zero());
    CHECK(normal_form(P(R, "y"), PV(R, {"x"})) == P(R, "y"));
}

TEST_CASE("buchberger golden cases") {
    auto R = PolyRing::make({"x", "y", "z"});

    SUBCASE("monomial ideals are their own basis after pruning divisible gens") {
        ReducedGB gb = buchberger(R, PV(R, {"x^2", "x^2*y", "y^3", "z*y^3"}));
        CHECK(gb.basis.size() == 2);
        CHECK(normal_form(P(R, "x^2"), gb.basis).is_zero());
        CHECK(normal_form(P(R, "y^3"), gb.basis).is_zero());
    }

    SUBCASE("{x, x+y} reduces to {x, y}") {
        ReducedGB gb = buchberger(R, PV(R, {"x", "x+y"}));
        REQUIRE(gb.basis.size() == 2);
        // ascending lead order: y < x in grevlex
        CHECK(gb.basis[0] == P(R, "y"));
        CHECK(gb.basis[1] == P(R, "x"));
    }

    SUBCASE("unit ideal") {
        ReducedGB gb = buchberger(R, PV(R, {"x", "x+1"}));
        CHECK(gb.contains_unit());
    }

    SUBCASE("zero ideal") {
        CHECK(buchberger(R, {}).is_zero());
    }
}

TEST_CASE("scroll ideal: membership of generators and certificate") {
    auto R = PolyRing::make({"x", "y", "z", "w"});
    auto gens = scroll_minors(R);
    ReducedGB gb = buchberger(R, gens);
    for (const auto& g : gens) CHECK(normal_form(g, gb.basis).is_zero());
    CHECK(certify_gb(gb));
    // both inclusions, with explicit witnesses for GB elements
    for (const auto& b : gb.basis) {
        auto lift = lift_membership(b, gens);
        REQUIRE(lift.has_value());
        Polynomial s = Polynomial::zero(R);
        for (size_t i = 0; i < gens.size(); ++i) s = add(s, mul((*lift)[i], gens[i]));
        CHECK(s == b);
    }
}

TEST_CASE("determinism: same input, bit-identical basis") {
    auto R = PolyRing::make({"x", "y", "z", "w"});
    ReducedGB a = buchberger(R, scroll_minors(R));
    ReducedGB b = buchberger(R, scroll_minors(R));
    CHECK(dump(a) == dump(b));
    // permuted input generates the same reduced GB
    auto gens = scroll_minors(R);
    std::rotate(gens.begin(), gens.begin() + 3, gens.end());
    ReducedGB c = buchberger(R, gens);
    CHECK(dump(a) == dump(c));
}

TEST_CASE("random ideals: full S-pair certificate") {
    auto R = PolyRing::make({"x", "y", "z"});
    Rng rng(3);
    for (int t = 0; t < 12; ++t) {
        std::vector<Polynomial> gens;
        int k = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < k; ++i) {
            std::vector<Term> ts;
            for (int j = 0; j < 3; ++j) {
                Monomial m;
                uint32_t d = 0;
                for (size_t v = 0; v < 3; ++v) {
                    m.e[v] = static_cast<uint16_t>(rng.below(3));
                    d += m.e[v];
                }
                m.deg = d;
                ts.push_back({rng.field_element(R->field()), m});
            }
            gens.push_back(normalize_terms(R, std::move(ts)));
        }
        ReducedGB gb = buchberger(R, gens);
        CHECK(certify_gb(gb));
        for (const auto& g : gens) CHECK(normal_form(g, gb.basis).is_zero());
    }
}

TEST_CASE("syzygies") {
    auto R = PolyRing::make({"x", "y"});

    SUBCASE("Koszul syzygy of {x, y}") {
        ModuleCtx target{R, 1, 0, {}};
        std::vector<VecPoly> cols{vp_from_poly(P(R, "x"), 0), vp_from_poly(P(R, "y"), 0)};
        KernelResult ker = kernel_of_columns(target, cols, {1, 1});
        REQUIRE(ker.syzygies.size() == 1);
        ModuleCtx sctx{R, 2, 0, {1, 1}};
        Polynomial s0 = vp_component(sctx, ker.syzygies[0], 0);
        Polynomial s1 = vp_component(sctx, ker.syzygies[0], 1);
        CHECK(add(mul(s0, P(R, "x")), mul(s1, P(R, "y"))).is_zero());
        CHECK_FALSE(s0.is_zero());
    }

    SUBCASE("single regular element has no syzygies") {
        ModuleCtx target{R, 1, 0, {}};
        KernelResult ker = kernel_of_columns(target, {vp_from_poly(P(R, "x^2+y^2"), 0)}, {2});
        CHECK(ker.syzygies.empty());
    }
}

TEST_CASE("module GB with elimination split computes lifts") {
    auto R = PolyRing::make({"x", "y"});
    ModuleCtx target{R, 1, 0, {}};
    std::vector<VecPoly> cols{vp_from_poly(P(R, "x^2"), 0), vp_from_poly(P(R, "y"), 0)};
    auto lift = lift_through_columns(target, cols, {2, 1}, vp_from_poly(P(R, "x^2*y + y^2"), 0));
    REQUIRE(lift.has_value());
    Polynomial got = add(mul((*lift)[0], P(R, "x^2")), mul((*lift)[1], P(R, "y")));
    CHECK(got == P(R, "x^2*y + y^2"));
    CHECK_FALSE(lift_through_columns(target, cols, {2, 1}, vp_from_poly(P(R, "x"), 0)).has_value());
}

TEST_CASE("budget errors carry the S-pair degree") {
    auto R = PolyRing::make({"x", "y"}, PrimeField(), Order::GrevLex, {}, 0, 6);
    CHECK_THROWS_AS(buchberger(R, PV(R, {"x^4+y^3", "x^3*y^3"})), budget_error);
}
