#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ratcalc/json_io.hpp"

using namespace ratcalc;

namespace {
const Semiring& rat = Semiring::get(SemiringId::rational);
}

TEST_CASE("series JSON round trip preserves every coefficient") {
    std::mt19937_64 rng(211);
    auto ab = make_alphabet({"a", "b"});
    for (const char* name : {"rat", "nat", "maxplus"}) {
        const Semiring& k = Semiring::by_name(name);
        TruncatedSeries s = oracle::random_proper_series(rng, k, ab, 4);
        s.set_coeff(Word(), oracle::random_scalar(rng, k));
        TruncatedSeries back = series_from_json(series_to_json(s));
        CHECK(back.max_len() == s.max_len());
        CHECK(back.ring().id() == k.id());
        CHECK(window_equal(back, s));
    }
}

TEST_CASE("series JSON is deterministic and length-lex ordered") {
    auto ab = make_alphabet({"a", "b"});
    TruncatedSeries s(rat, ab, 3);
    s.set_coeff(parse_word(ab, "ba"), rat.from_int(2));
    s.set_coeff(parse_word(ab, "a"), rat.from_rational(Rational(3, 2)));
    std::string j = series_to_json(s);
    CHECK(j == series_to_json(series_from_json(j)));
    CHECK(j.find("\"a\"") < j.find("\"ba\""));
    CHECK(j.find("3/2") != std::string::npos);
}

TEST_CASE("rep JSON round trip preserves the function") {
    std::mt19937_64 rng(223);
    auto ab = make_alphabet({"a", "b"});
    for (const char* name : {"rat", "bool", "nat"}) {
        const Semiring& k = Semiring::by_name(name);
        LinRep r = oracle::random_rep(rng, k, ab, 3);
        LinRep back = rep_from_json(rep_to_json(r));
        CHECK(back.dim() == r.dim());
        for (const Word& w : words_up_to(ab, 4)) CHECK(eval_word(back, w) == eval_word(r, w));
        CHECK(rep_to_json(back) == rep_to_json(r));
    }
}

TEST_CASE("malformed JSON is rejected with parse errors") {
    CHECK_THROWS_AS(series_from_json("{"), ParseError);
    CHECK_THROWS_AS(series_from_json("{}"), ParseError);
    CHECK_THROWS_AS(series_from_json(R"({"semiring":"rat","alphabet":["a"]})"), ParseError);
    CHECK_THROWS_AS(rep_from_json(R"({"semiring":"rat","alphabet":["a"],"dim":2,"lambda":["1"]})"),
                    ParseError);
    CHECK_THROWS_AS(series_from_json(R"({"semiring":"weird","alphabet":["a"],"maxlen":2})"),
                    ParseError);
}

TEST_CASE("weight systems from JSON") {
    WeightSystem w = weights_from_json(R"({"alpha": ["1","1/2"], "alpha_tail": "n", "beta": ["3"]})");
    CHECK(w.alpha(1) == Rational(1));
    CHECK(w.alpha(2) == Rational(1, 2));
    CHECK(w.alpha(5) == Rational(5));   // "n" tail
    CHECK(w.beta(1) == Rational(3));
    CHECK(w.beta(4) == Rational(1));    // default constant tail

    WeightSystem unit = weights_from_json(R"({"name": "unit"})");
    CHECK(unit.alpha(9) == Rational(1));
    WeightSystem boson = weights_from_json(R"({"name": "boson"})");
    CHECK(boson.alpha(9) == Rational(9));
    CHECK_THROWS_AS(weights_from_json(R"({"name": "nope"})"), ParseError);
}

TEST_CASE("transfer and report JSON shapes") {
    WeightSystem unit = WeightSystem::unit();
    std::string t = transfer_to_json(transfer_series(0, 0, unit, 4));
    CHECK(t == R"({"coefficients":["1","0","1","0","2"]})");
    std::string rep = report_to_json(verify_transfer(0, 0, unit, 2));
    CHECK(rep.find("\"coefficients_match\":true") != std::string::npos);
    CHECK(rep.find("\"support_always_equal\":true") != std::string::npos);
}
