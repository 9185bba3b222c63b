#include <doctest.h>

#include "properties_core.hpp"

using namespace brauerkit;

TEST_CASE("log/exp round-trip (200 cases)") { CHECK(props::log_exp_roundtrip(200) == 0); }

TEST_CASE("exp(p log t) equals the p-series (200 cases)") {
    CHECK(props::exp_plog_equals_pseries(200) == 0);
}

TEST_CASE("every produced law passes three-variable associativity (200 cases)") {
    CHECK(props::associativity_of_produced_laws(200) == 0);
}

TEST_CASE("height is invariant under coordinate change (200 cases)") {
    CHECK(props::height_coordinate_invariance(200) == 0);
}

TEST_CASE("(p, v1..vn) is coordinate-independent at the ideal level (200 cases)") {
    CHECK(props::ideal_coordinate_independence(200) == 0);
}

TEST_CASE("series reversion round-trip (200 cases)") {
    CHECK(props::reversion_roundtrip(200) == 0);
}

TEST_CASE("series multiplication is associative and commutative (200 cases)") {
    CHECK(props::series_mul_axioms(200) == 0);
}

TEST_CASE("exact division undoes multiplication (200 cases)") {
    CHECK(props::divide_after_mul(200) == 0);
}

TEST_CASE("zero-divisor test agrees with exhaustive monomial witnesses (400 cases)") {
    CHECK(props::zero_divisor_oracle(400) == 0);
}

TEST_CASE("ring axioms hold on random triples in every ring kind (250 cases)") {
    CHECK(props::ring_axioms(250) == 0);
}

TEST_CASE("product coefficients equal the convolution oracle (200 cases)") {
    CHECK(props::convolution_oracle(200) == 0);
}

TEST_CASE("truncation coherence (200 cases)") { CHECK(props::truncation_coherence(200) == 0); }
