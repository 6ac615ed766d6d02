#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratcalc/fock.hpp"

#include <random>

using namespace ratcalc;

namespace {

LadderWord lw(const std::string& s) { return parse_ladder_word(s); }

// double factorial (2m-1)!! with the empty product at m = 0
long long double_factorial_odd(long long m) {
    long long r = 1;
    for (long long j = 1; j <= 2 * m - 1; j += 2) r *= j;
    return r;
}

WeightSystem random_weights(std::mt19937_64& rng) {
    std::vector<Rational> alpha, beta;
    for (int i = 0; i < 6; ++i) {
        alpha.emplace_back(1 + static_cast<long long>(rng() % 5),
                           1 + static_cast<long long>(rng() % 3));
        beta.emplace_back(1 + static_cast<long long>(rng() % 5),
                          1 + static_cast<long long>(rng() % 3));
    }
    WeightSystem::Tail t; // constant 1 beyond the head
    return WeightSystem::custom(std::move(alpha), t, std::move(beta), t, "random");
}

} // namespace

TEST_CASE("excess and prefix minimum") {
    CHECK(excess(lw("_")) == 0);
    CHECK(excess(lw("++-")) == 1);
    CHECK(excess(lw("--")) == -2);
    CHECK(min_prefix_excess(lw("_")) == 0);
    CHECK(min_prefix_excess(lw("+--+")) == -1);
    CHECK_THROWS_AS(parse_ladder_word("+x"), ParseError);
    CHECK(format_ladder_word(lw("+-")) == "+-");
    CHECK(format_ladder_word(LadderWord{}) == "_");
}

TEST_CASE("transporter membership") {
    CHECK(in_transporter(lw("+-"), 0, 0));
    CHECK_FALSE(in_transporter(lw("-+"), 0, 0)); // prefix dips to -1
    CHECK(in_transporter(lw("-+"), 1, 1));
    CHECK(in_transporter(lw("+"), 0, 1));
    CHECK_FALSE(in_transporter(lw("+"), 0, 0)); // wrong excess
}

TEST_CASE("transporter enumeration") {
    auto got = enumerate_transporter(0, 0, 2);
    REQUIRE(got.size() == 1);
    CHECK(format_ladder_word(got[0]) == "+-");

    got = enumerate_transporter(0, 0, 4);
    REQUIRE(got.size() == 2);
    CHECK(format_ladder_word(got[0]) == "+-+-");
    CHECK(format_ladder_word(got[1]) == "++--");

    got = enumerate_transporter(0, 1, 1);
    REQUIRE(got.size() == 1);
    CHECK(format_ladder_word(got[0]) == "+");

    // Catalan counts at level 0
    const size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (size_t m = 0; m <= 6; ++m)
        CHECK(enumerate_transporter(0, 0, 2 * m).size() == catalan[m]);

    // odd lengths cannot return to the same level
    CHECK(enumerate_transporter(0, 0, 3).empty());
}

TEST_CASE("brute force omega") {
    WeightSystem unit = WeightSystem::unit();
    CHECK(brute_force_omega(0, 0, 2, unit) == Rational(1));

    WeightSystem boson = WeightSystem::boson();
    CHECK(boson.alpha(3) == Rational(3));
    CHECK(boson.beta(7) == Rational(1));
    // omega_{0->0}^{(2m)} = (2m-1)!! for the boson weights
    for (long long m = 0; m <= 4; ++m)
        CHECK(brute_force_omega(0, 0, 2 * static_cast<size_t>(m), boson) ==
              Rational(double_factorial_odd(m)));

    // a zero weight kills the only surviving word but membership stays
    WeightSystem::Tail one;
    WeightSystem beta1_zero = WeightSystem::custom({}, one, {Rational(0)}, one, "beta1=0");
    CHECK(in_transporter(lw("+-"), 0, 0));
    CHECK(brute_force_omega(0, 0, 2, beta1_zero) == Rational(0));
    CHECK(nonzero_weight_words(0, 0, 2, beta1_zero).empty());
}

TEST_CASE("dyck families") {
    DyckFamily dplus = dyck_enumerate(DyckTag::plus(), 4);
    REQUIRE(dplus.members.size() == 2);
    CHECK(format_ladder_word(dplus.members[0]) == "+-");
    CHECK(format_ladder_word(dplus.members[1]) == "++--");

    CHECK(dyck_enumerate(DyckTag::minus(0), 8).members.empty()); // D-(0) is empty
    DyckFamily dm1 = dyck_enumerate(DyckTag::minus(1), 2);
    REQUIRE(dm1.members.size() == 1);
    CHECK(format_ladder_word(dm1.members[0]) == "-+");

    // D splits into the positive and negative families
    DyckFamily d = dyck_enumerate(DyckTag::d(), 6);
    DyckFamily dp6 = dyck_enumerate(DyckTag::plus(), 6);
    DyckFamily dm6 = dyck_enumerate(DyckTag::minus(6), 6);
    CHECK(d.members.size() == dp6.members.size() + dm6.members.size());

    // deeper families nest
    auto dm2 = dyck_enumerate(DyckTag::minus(2), 6).members;
    for (const auto& w : dm1.members)
        CHECK(std::find(dm2.begin(), dm2.end(), w) != dm2.end());
}

TEST_CASE("self-reproducing equations hold on enumeration") {
    CHECK(check_dyck_fixpoint(DyckTag::plus(), 10));
    for (size_t n = 0; n <= 3; ++n) CHECK(check_dyck_fixpoint(DyckTag::minus(n), 10));
    CHECK(check_dyck_fixpoint(DyckTag::d(), 8));
}

TEST_CASE("factorizations match the transporter") {
    CHECK(check_factorization(0, 0, 8));
    CHECK(check_factorization(2, 1, 8));
    CHECK(check_factorization(1, -1, 8));
    for (size_t n = 0; n <= 2; ++n) {
        for (long long k = -2; k <= 2; ++k) {
            if (static_cast<long long>(n) + k < 0) continue;
            CAPTURE(n);
            CAPTURE(k);
            CHECK(check_factorization(n, k, 7));
        }
    }
    CHECK_THROWS_AS(check_factorization(0, -1, 6), Error);
}

TEST_CASE("transfer series windows are strict") {
    TransferSeries t(4);
    CHECK(t.order() == 4);
    CHECK_THROWS_AS(t.coeff(5), OutOfWindowError);
    CHECK_THROWS_AS(ts_geometric(ts_one(4)), NotProperError);
}

TEST_CASE("continued fractions: Catalan and double factorials") {
    WeightSystem unit = WeightSystem::unit();
    TransferSeries fplus = cf_F(0, CfPart::plus, unit, 8);
    const long long catalan[] = {1, 1, 2, 5, 14};
    for (size_t m = 0; m <= 4; ++m) {
        CHECK(fplus.coeff(2 * m) == Rational(catalan[m]));
        if (2 * m + 1 <= 8) CHECK(fplus.coeff(2 * m + 1) == Rational(0));
    }

    // F-_0 vanishes so F_0 = F+_0
    CHECK(cf_F(0, CfPart::minus, unit, 8) == ts_one(8));
    CHECK(cf_F(0, CfPart::full, unit, 8) == fplus);

    WeightSystem boson = WeightSystem::boson();
    TransferSeries fb = cf_F(0, CfPart::plus, boson, 8);
    for (long long m = 0; m <= 4; ++m)
        CHECK(fb.coeff(2 * static_cast<size_t>(m)) == Rational(double_factorial_odd(m)));
}

TEST_CASE("transfer series golden values") {
    WeightSystem unit = WeightSystem::unit();
    TransferSeries t00 = transfer_series(0, 0, unit, 8);
    const long long catalan[] = {1, 1, 2, 5, 14};
    for (size_t m = 0; m <= 4; ++m) {
        CHECK(t00.coeff(2 * m) == Rational(catalan[m]));
        if (2 * m + 1 <= 8) CHECK(t00.coeff(2 * m + 1) == Rational(0));
    }

    TransferSeries t01 = transfer_series(0, 1, unit, 3);
    CHECK(t01.coeff(1) == Rational(1));
    CHECK(t01.coeff(3) == Rational(2));
    CHECK(t01.coeff(0) == Rational(0));
    CHECK(t01.coeff(2) == Rational(0)); // parity: i - k odd gives zero

    CHECK_THROWS_AS(transfer_series(0, -1, unit, 5), Error); // level underflow
    CHECK_THROWS_AS(transfer_series(0, 3, unit, 2), Error);  // order below |k|
}

TEST_CASE("both product forms agree and match brute force") {
    std::mt19937_64 rng(127);
    WeightSystem systems[3] = {WeightSystem::unit(), WeightSystem::boson(), random_weights(rng)};
    for (const WeightSystem& ws : systems) {
        for (size_t n = 0; n <= 2; ++n) {
            for (long long k = -2; k <= 2; ++k) {
                if (static_cast<long long>(n) + k < 0) continue;
                const size_t order = 7;
                TransferSeries t = transfer_series(n, k, ws, order);
                const size_t m = static_cast<size_t>(static_cast<long long>(n) + k);
                for (size_t i = 0; i <= order; ++i) {
                    CAPTURE(ws.name());
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(i);
                    CHECK(t.coeff(i) == brute_force_omega(n, m, i, ws));
                }
            }
        }
    }
}

TEST_CASE("verify_transfer reports matches and support") {
    WeightSystem unit = WeightSystem::unit();
    TransferReport r = verify_transfer(0, 0, unit, 8);
    CHECK(r.rows.size() == 9);
    CHECK(r.coefficients_match);
    CHECK(r.support_always_subset);
    CHECK(r.support_always_equal); // all weights nonzero

    WeightSystem boson = WeightSystem::boson();
    TransferReport rb = verify_transfer(1, -1, boson, 7);
    CHECK(rb.coefficients_match);
    CHECK(rb.support_always_equal);

    // beta_1 = 0: support strictly contained in the transporter
    WeightSystem::Tail one;
    WeightSystem beta1_zero = WeightSystem::custom({}, one, {Rational(0)}, one, "beta1=0");
    TransferReport rz = verify_transfer(0, 0, beta1_zero, 4);
    CHECK(rz.coefficients_match);
    CHECK(rz.support_always_subset);
    CHECK_FALSE(rz.support_always_equal);
}

TEST_CASE("support equals the transporter exactly when weights stay nonzero") {
    std::mt19937_64 rng(131);
    WeightSystem ws = random_weights(rng); // strictly positive rationals
    for (size_t n = 0; n <= 2; ++n) {
        for (size_t m = 0; m <= 3; ++m) {
            for (size_t i = 0; i <= 6; ++i) {
                CHECK(nonzero_weight_words(n, m, i, ws) == enumerate_transporter(n, m, i));
            }
        }
    }
}
