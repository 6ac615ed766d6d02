#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratcalc/errors.hpp"
#include "ratcalc/semiring.hpp"

#include <random>
#include <vector>

using namespace ratcalc;

namespace {

// random sample of carrier elements per instance, infinities included
std::vector<Value> sample_values(const Semiring& k, std::mt19937_64& rng, size_t count) {
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    std::vector<Value> out;
    while (out.size() < count) {
        switch (k.id()) {
            case SemiringId::boolean:
                out.push_back(k.from_bool(rng() & 1));
                break;
            case SemiringId::natural:
                out.push_back(k.from_int(std::abs(num(rng))));
                break;
            case SemiringId::integer:
                out.push_back(k.from_int(num(rng)));
                break;
            case SemiringId::rational:
                out.push_back(k.from_rational(Rational(num(rng), den(rng))));
                break;
            case SemiringId::max_plus:
                if (rng() % 5 == 0)
                    out.push_back(k.neg_infinity());
                else
                    out.push_back(k.from_rational(Rational(num(rng), den(rng))));
                break;
            case SemiringId::completed_positive:
                if (rng() % 5 == 0)
                    out.push_back(k.pos_infinity());
                else
                    out.push_back(k.from_rational(Rational(std::abs(num(rng)), den(rng))));
                break;
        }
    }
    return out;
}

const SemiringId all_ids[] = {SemiringId::boolean,  SemiringId::natural,
                              SemiringId::integer,  SemiringId::rational,
                              SemiringId::max_plus, SemiringId::completed_positive};

} // namespace

TEST_CASE("semiring axioms hold on every instance") {
    std::mt19937_64 rng(2024);
    for (SemiringId id : all_ids) {
        const Semiring& k = Semiring::get(id);
        CAPTURE(k.name());
        auto vals = sample_values(k, rng, id == SemiringId::boolean ? 2 : 40);
        if (id == SemiringId::boolean) vals = {k.from_bool(false), k.from_bool(true)};
        for (const Value& a : vals) {
            CHECK(k.add(a, k.zero()) == a);
            CHECK(k.add(k.zero(), a) == a);
            CHECK(k.mul(a, k.one()) == a);
            CHECK(k.mul(k.one(), a) == a);
            CHECK(k.mul(a, k.zero()) == k.zero());
            CHECK(k.mul(k.zero(), a) == k.zero());
            for (const Value& b : vals) {
                CHECK(k.add(a, b) == k.add(b, a));
                for (const Value& c : vals) {
                    CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
                    CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
                    CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
                    CHECK(k.mul(k.add(a, b), c) == k.add(k.mul(a, c), k.mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("boolean laws are x+y-xy and xy") {
    const Semiring& b = Semiring::get(SemiringId::boolean);
    CHECK(b.add(b.one(), b.one()) == b.one()); // 1+1-1.1 = 1
    CHECK(b.mul(b.one(), b.one()) == b.one());
    CHECK(b.add(b.zero(), b.one()) == b.one());
    CHECK(b.mul(b.zero(), b.one()) == b.zero());
}

TEST_CASE("neutral elements and annihilation across instances") {
    const Semiring& n = Semiring::get(SemiringId::natural);
    CHECK(n.add(n.zero(), n.from_int(7)) == n.from_int(7));
    const Semiring& mp = Semiring::get(SemiringId::max_plus);
    CHECK(mp.add(mp.neg_infinity(), mp.from_int(3)) == mp.from_int(3));
    CHECK(mp.mul(mp.from_int(2), mp.from_int(3)) == mp.from_int(5));
    const Semiring& q = Semiring::get(SemiringId::rational);
    CHECK(q.mul(q.zero(), q.from_rational(Rational(3, 2))) == q.zero());
}

TEST_CASE("mixed-handle operands are rejected") {
    const Semiring& n = Semiring::get(SemiringId::natural);
    const Semiring& z = Semiring::get(SemiringId::integer);
    CHECK_THROWS_AS(n.add(n.one(), z.one()), DomainMismatchError);
    CHECK_THROWS_AS(z.mul(n.one(), z.one()), DomainMismatchError);
    CHECK_THROWS_AS(n.star(z.zero()), DomainMismatchError);
}

TEST_CASE("star solves both self-reproducing equations when defined") {
    std::mt19937_64 rng(7);
    for (SemiringId id : all_ids) {
        const Semiring& k = Semiring::get(id);
        CAPTURE(k.name());
        for (const Value& a : sample_values(k, rng, 60)) {
            if (!k.is_starrable(a)) {
                CHECK_THROWS_AS(k.star(a), NotStarrableError);
                continue;
            }
            Value y = k.star(a);
            CHECK(y == k.add(k.one(), k.mul(a, y)));
            CHECK(y == k.add(k.one(), k.mul(y, a)));
        }
    }
}

TEST_CASE("star values from the per-instance table") {
    for (SemiringId id : all_ids) {
        const Semiring& k = Semiring::get(id);
        CHECK(k.star(k.zero()) == k.one());
    }
    const Semiring& b = Semiring::get(SemiringId::boolean);
    CHECK(b.star(b.one()) == b.one()); // 1 = 1 + 1.1 in B

    const Semiring& q = Semiring::get(SemiringId::rational);
    CHECK(q.star(q.from_rational(Rational(1, 2))) == q.from_int(2));
    CHECK(q.star(q.from_int(2)) == q.from_int(-1)); // unique solution of y = 1 + 2y
    CHECK_THROWS_AS(q.star(q.one()), NotStarrableError);

    const Semiring& n = Semiring::get(SemiringId::natural);
    CHECK_THROWS_AS(n.star(n.one()), NotStarrableError);

    const Semiring& c = Semiring::get(SemiringId::completed_positive);
    CHECK(c.star(c.from_rational(Rational(1, 3))) == c.from_rational(Rational(3, 2)));
    CHECK(c.star(c.one()) == c.pos_infinity());
    CHECK(c.star(c.from_int(5)) == c.pos_infinity());
    CHECK(c.star(c.pos_infinity()) == c.pos_infinity());
    CHECK(c.has_total_star());

    const Semiring& mp = Semiring::get(SemiringId::max_plus);
    CHECK(mp.star(mp.from_rational(Rational(-1, 2))) == mp.one());
    CHECK(mp.star(mp.neg_infinity()) == mp.one());
    CHECK_THROWS_AS(mp.star(mp.from_int(1)), NotStarrableError);
}

TEST_CASE("value literals parse and print per instance") {
    const Semiring& q = Semiring::get(SemiringId::rational);
    CHECK(q.to_string(q.parse("3/2")) == "3/2");
    CHECK(q.to_string(q.parse("-7")) == "-7");
    const Semiring& b = Semiring::get(SemiringId::boolean);
    CHECK(b.to_string(b.parse("true")) == "1");
    CHECK_THROWS_AS(b.parse("2"), ParseError);
    const Semiring& mp = Semiring::get(SemiringId::max_plus);
    CHECK(mp.to_string(mp.parse("-inf")) == "-inf");
    const Semiring& c = Semiring::get(SemiringId::completed_positive);
    CHECK(c.to_string(c.parse("inf")) == "inf");
    CHECK_THROWS_AS(c.parse("-1"), DomainMismatchError);
    CHECK(Semiring::by_name("nat").id() == SemiringId::natural);
    CHECK_THROWS_AS(Semiring::by_name("weird"), ParseError);
}

TEST_CASE("carrier invariants are enforced") {
    const Semiring& n = Semiring::get(SemiringId::natural);
    CHECK_THROWS_AS(n.from_int(-1), DomainMismatchError);
    CHECK_THROWS_AS(n.from_rational(Rational(1, 2)), DomainMismatchError);
    const Semiring& z = Semiring::get(SemiringId::integer);
    CHECK_THROWS_AS(z.from_rational(Rational(1, 2)), DomainMismatchError);
    CHECK(z.from_int(-3) == z.parse("-3"));
}
