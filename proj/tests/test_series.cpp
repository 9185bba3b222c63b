#include <doctest.h>

#include "brauerkit/series.hpp"

using namespace brauerkit;

namespace {

RingPtr Q() { return Ring::rationals(); }

TruncSeries var(const RingPtr& R, std::vector<std::string> vars, int N, const std::string& v) {
    return TruncSeries::monomial(R, std::move(vars), N, v, 1, RingElement::one(R));
}

TruncSeries geometric(const RingPtr& R, int N) {
    TruncSeries s = TruncSeries::zero(R, {"x"}, N);
    for (int m = 0; m < N; ++m) {
        ExpVec e(1);
        e.set(0, m);
        s.set_coefficient(e, RingElement::one(R));
    }
    return s;
}

}  // namespace

TEST_CASE("series_mul basics") {
    RingPtr R = Q();
    TruncSeries x = var(R, {"x", "y"}, 3, "x");
    TruncSeries y = var(R, {"x", "y"}, 3, "y");
    TruncSeries sq = series_mul(x + y, x + y);
    CHECK(sq.to_string() == "x^2 + 2*x*y + y^2 + O(3)");

    // geometric series times (1 - x) telescopes to 1
    TruncSeries g = geometric(R, 8);
    TruncSeries one = TruncSeries::zero(R, {"x"}, 8);
    one.set_coefficient(ExpVec(1), RingElement::one(R));
    TruncSeries xone = var(R, {"x"}, 8, "x");
    CHECK(series_mul(g, one - xone) == one);

    // truncation discards the degree-N cross terms
    int N = 6;
    TruncSeries xh = TruncSeries::monomial(R, {"x", "y"}, N, "x", N - 1, RingElement::one(R));
    TruncSeries yv = var(R, {"x", "y"}, N, "y");
    CHECK(series_mul(xh, yv).is_zero());
}

TEST_CASE("series_substitute") {
    RingPtr R = Q();
    const int N = 9;
    // identity: f = t applied to any argument returns it
    TruncSeries t = var(R, {"t"}, N, "t");
    TruncSeries g = TruncSeries::zero(R, {"t"}, N);
    for (int m = 1; m < N; ++m) {
        ExpVec e(1);
        e.set(0, m);
        g.set_coefficient(e, RingElement::from_rat(R, Rat(m % 3 - 1, 1)));
    }
    ExpVec e1(1);
    e1.set(0, 1);
    g.set_coefficient(e1, RingElement::one(R));
    CHECK(series_substitute(t, {g}) == g);

    // log into exp is the identity
    TruncSeries L = TruncSeries::zero(R, {"t"}, N);
    for (int m = 1; m < N; ++m) {
        ExpVec e(1);
        e.set(0, m);
        L.set_coefficient(e, RingElement::from_rat(R, Rat(1, m)));
    }
    TruncSeries E = series_reversion(L);
    CHECK(series_substitute(E, {L}) == t);
    CHECK(series_substitute(L, {E}) == t);

    // f = t^2 at x + y
    TruncSeries t2 = TruncSeries::monomial(R, {"t"}, 3, "t", 2, RingElement::one(R));
    TruncSeries xy = var(R, {"x", "y"}, 3, "x") + var(R, {"x", "y"}, 3, "y");
    CHECK(series_substitute(t2, {xy}).to_string() == "x^2 + 2*x*y + y^2 + O(3)");

    // nonzero constant term is rejected
    TruncSeries c = TruncSeries::zero(R, {"x", "y"}, 3);
    c.set_coefficient(ExpVec(2), RingElement::one(R));
    CHECK_THROWS_AS(series_substitute(t2, {c}), PreconditionError);
}

TEST_CASE("series_reversion") {
    RingPtr R = Q();
    TruncSeries t = var(R, {"t"}, 9, "t");
    CHECK(series_reversion(t) == t);

    // the multiplicative pair: reversion of sum t^m/m is 1 - e^(-t)
    // (the m! denominators are forced by f(g(t)) = t)
    TruncSeries L = TruncSeries::zero(R, {"t"}, 9);
    for (int m = 1; m < 9; ++m) {
        ExpVec e(1);
        e.set(0, m);
        L.set_coefficient(e, RingElement::from_rat(R, Rat(1, m)));
    }
    TruncSeries E = series_reversion(L);
    Int fact(1);
    for (int m = 2; m < 9; ++m) {
        fact *= m;
        Rat expect(m % 2 == 0 ? -1 : 1);
        expect /= Rat(fact);
        CHECK(E.coefficient(m) == RingElement::from_rat(R, expect));
    }

    // non-unit linear coefficient is rejected
    TruncSeries bad = TruncSeries::monomial(Ring::integers(), {"t"}, 5, "t", 1,
                                            RingElement::from_int(Ring::integers(), Int(2)));
    CHECK_THROWS_AS(series_reversion(bad), PreconditionError);
    CHECK_THROWS_AS(series_reversion(series_mul(t, t)), PreconditionError);
}

TEST_CASE("series_exact_divide") {
    RingPtr R = Q();
    const int N = 6;
    TruncSeries x = var(R, {"x", "y"}, N, "x");
    TruncSeries y = var(R, {"x", "y"}, N, "y");
    CHECK(series_exact_divide(series_mul(x + y, x - y), x - y) == x + y);

    // unit constant term: ordinary inversion
    TruncSeries one = TruncSeries::zero(R, {"x"}, 5);
    one.set_coefficient(ExpVec(1), RingElement::one(R));
    TruncSeries xx = var(R, {"x"}, 5, "x");
    CHECK(series_exact_divide(one, one - xx) == geometric(R, 5));

    // inexact division is detected
    CHECK_THROWS_AS(series_exact_divide(series_mul(x, x) + y, x), InexactDivisionError);
}

TEST_CASE("divided difference of the w-expansion has leading block z1^2 + z1 z2 + z2^2") {
    // w(z) = z^3 - a1 z^4 + O(z^5) from one pass of the Weierstrass recursion
    RingPtr A = Ring::poly(Ring::integers(), {"a1", "a2", "a3", "a4", "a6"});
    const int N = 5;
    TruncSeries w = TruncSeries::zero(A, {"z"}, N);
    ExpVec e3(1), e4(1);
    e3.set(0, 3);
    e4.set(0, 4);
    w.set_coefficient(e3, RingElement::one(A));
    w.set_coefficient(e4, -RingElement(MultiPoly::variable(A, 0)));
    // embed w(z1), w(z2) and divide by z2 - z1
    TruncSeries w1 = w.embedded({"z1", "z2"}, {0});
    TruncSeries w2 = w.embedded({"z1", "z2"}, {1});
    TruncSeries z1 = var(A, {"z1", "z2"}, N, "z1");
    TruncSeries z2 = var(A, {"z1", "z2"}, N, "z2");
    TruncSeries lam = series_exact_divide(w2 - w1, z2 - z1);
    CHECK(lam.coefficient(2, 0) == RingElement::one(A));
    CHECK(lam.coefficient(1, 1) == RingElement::one(A));
    CHECK(lam.coefficient(0, 2) == RingElement::one(A));
    CHECK(lam.min_degree() == 2);
}

TEST_CASE("truncation coherence") {
    RingPtr R = Q();
    TruncSeries a = geometric(R, 10);
    TruncSeries b = series_mul(a, a);
    // computing at order 10 then truncating to 6 equals computing at order 6
    CHECK(series_mul(a.truncated(6), a.truncated(6)) == b.truncated(6));
    CHECK_THROWS_AS(a.truncated(12), PreconditionError);
}

TEST_CASE("series over Laurent coefficient rings") {
    RingPtr Rt = Ring::poly(Ring::prime_field(5), {"t"}, 0);
    TruncSeries s = TruncSeries::zero(Rt, {"x", "y"}, 4);
    ExpVec e(2);
    e.set(0, 1);
    s.set_coefficient(e, RingElement(MultiPoly::variable(Rt, 0, -1)));
    CHECK(s.to_string() == "t^-1*x + O(4)");
    TruncSeries sq = series_mul(s, s);
    ExpVec e2(2);
    e2.set(0, 2);
    CHECK(sq.coefficient(e2) == RingElement(MultiPoly::variable(Rt, 0, -2)));
}

TEST_CASE("canonical series rendering") {
    RingPtr R = Q();
    TruncSeries s = TruncSeries::zero(R, {"x", "y"}, 6);
    auto key = [](int i, int j) {
        ExpVec e(2);
        e.set(0, i);
        e.set(1, j);
        return e;
    };
    s.set_coefficient(key(0, 1), RingElement::one(R));
    s.set_coefficient(key(1, 0), RingElement::one(R));
    s.set_coefficient(key(1, 4), -RingElement::from_int(R, Int(24)));
    s.set_coefficient(key(4, 1), -RingElement::from_int(R, Int(24)));
    s.set_coefficient(key(2, 3), -RingElement::from_int(R, Int(48)));
    s.set_coefficient(key(3, 2), -RingElement::from_int(R, Int(48)));
    CHECK(s.to_string() ==
          "x + y - 24*x^4*y - 48*x^3*y^2 - 48*x^2*y^3 - 24*x*y^4 + O(6)");
    CHECK(TruncSeries::zero(R, {"t"}, 3).to_string() == "0 + O(3)");
}
