"""Smoke tests for the _ratcalc extension module."""

import json
import sys

import _ratcalc as rc


def check(cond, what):
    if not cond:
        print(f"FAIL: {what}")
        sys.exit(1)
    print(f"ok: {what}")


def main():
    check(rc.eval_coeff("nat", "(a*)(a*)", "aaa", 8) == "4", "eval_coeff convolution")
    check(rc.eval_coeff("rat", "(a+b)*", "abab", 8) == "1", "eval_coeff over rat")
    check(rc.const_term("rat", "0*") == "1", "const of the starred null expression")
    check(rc.is_rational("nat", "(a+b)*"), "rationality of (a+b)*")
    check(not rc.is_rational("nat", "a*", "a=1"), "star at constant term 1 is not rational")

    series = json.loads(rc.eval_series("nat", "a*", 4))
    check(series["maxlen"] == 4, "series window")
    check({"word": "aa", "coeff": "1"} in series["terms"], "series terms")

    rep = rc.compile_expr("rat", "(a*)(a*)", "a=0")
    check(rc.rep_eval(rep, "aaaa") == "5", "compiled representation evaluates")
    check(rc.hankel_rank(rep, 4) == 2, "hankel rank of (a*)^2")
    reduced = rc.reduce(rep)
    check(json.loads(reduced)["dim"] == 2, "reduction reaches the rank")
    check(rc.equivalent(rep, reduced), "reduction preserves the series")

    back = rc.decompile_rep(reduced)
    rep2 = rc.compile_expr("rat", back)
    check(rc.equivalent(rep, rep2), "decompile/compile round trip")

    shifted = rc.shift(rep, "a", "prefix")
    check(rc.rep_eval(shifted, "aaa") == "5", "prefix shift")

    h = rc.product(rep, rep, "hadamard")
    check(rc.rep_eval(h, "aaa") == "16", "hadamard product")

    a = rc.compile_expr("nat", "a", "a=0,b=0")
    b = rc.compile_expr("nat", "b", "a=0,b=0")
    sh = rc.product(a, b, "shuffle")
    check(rc.rep_eval(sh, "ab") == "1" and rc.rep_eval(sh, "ba") == "1", "shuffle of letters")

    check(rc.fock_transfer(0, 0, "unit", 4) == ["1", "0", "1", "0", "2"], "transfer coefficients")
    check(rc.fock_brute_omega(0, 0, 4, "boson") == "3", "brute force omega")
    report = json.loads(rc.fock_verify(0, 0, "unit", 6))
    check(report["coefficients_match"], "verify matches")
    check(rc.fock_dyck("Dminus:1", 4) == ["-+"], "dyck family")
    check(rc.fock_words(0, 0, 4) == ["+-+-", "++--"], "transporter words")

    try:
        rc.const_term("rat", "a*", "a=1")
        check(False, "undefined const must raise")
    except rc.RatcalcError:
        check(True, "undefined const raises RatcalcError")

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
