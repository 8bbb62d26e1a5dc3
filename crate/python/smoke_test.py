#!/usr/bin/env python3
"""Smoke test for the pycychad extension module.

Builds nothing itself: it locates the compiled cdylib under target/ (release
preferred), stages it under an importable name, and exercises every exported
operation once. Run after `cargo build -p pycychad --release`.
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module() -> None:
    candidates = [
        REPO / "target" / "release" / "libpycychad.so",
        REPO / "target" / "debug" / "libpycychad.so",
        REPO / "target" / "release" / "libpycychad.dylib",
        REPO / "target" / "debug" / "libpycychad.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("error: build the extension first: cargo build -p pycychad --release")
    stage = Path(tempfile.mkdtemp(prefix="pycychad-"))
    shutil.copy2(built, stage / "pycychad.so")
    sys.path.insert(0, str(stage))


checks = 0


def ok(label: str, condition: bool) -> None:
    global checks
    if not condition:
        sys.exit(f"FAIL - {label}")
    checks += 1
    print(f"ok - {label}")


def main() -> None:
    stage_module()
    import pycychad as cy

    # polynomial arithmetic
    a = cy.Poly("x0 + u")
    b = cy.Poly("x0 - u")
    ok("difference of squares", str(a * b) == "x0^2 - u^2")
    ok("parse/str round trip", cy.Poly(str(a * b)) == a * b)
    q = cy.Poly("u^4 - u^3")
    ok("eval returns Fraction", q.eval({"x0": 0, "x1": 0, "x2": 0, "x3": 0, "u": 2}) == Fraction(8))
    half = cy.Poly("1/2*x", ["x"])
    ok("rational coefficients", half.eval({"x": Fraction(1, 2)}) == Fraction(1, 4))
    ok("substitute", q.substitute({"u": 1}).is_zero())

    # basis engine
    gens = [cy.Poly("x^2 + y", ["x", "y"]), cy.Poly("x*y + 1", ["x", "y"])]
    s = cy.s_polynomial(gens[0], gens[1])
    ok("s-polynomial", str(s) == "y^2 - x" or str(s) == "-x + y^2")
    basis = cy.groebner_basis([cy.Poly("x^2 - 1", ["x"]), cy.Poly("x - 1", ["x"])])
    ok("reduced basis", [str(g) for g in basis] == ["x - 1"])
    ok("normal form", str(cy.normal_form(cy.Poly("x^2", ["x"]), [cy.Poly("x - 1", ["x"])])) == "1")

    # the quartic system and its claim
    system = cy.menon_system()
    ok("nine system polynomials", len(system) == 9)
    ok("duplicate tail polynomial", system[1] == system[8])
    target = cy.Poly("u^4 - u^3")
    ok("ideal membership (lex)", cy.ideal_member(target, system[:8]))
    ok("ideal membership (grevlex)", cy.ideal_member(target, system[:8], order="grevlex"))
    claim = cy.verify_groebner_claim()
    ok("claim certificate", claim["certificate_holds"])
    ok("claim basis leads with the pure-u element", claim["reduced_basis_lex"][0] == "u^4 - u^3")
    points = cy.enumerate_solutions(0, 4)
    ok(
        "integer solutions for u <= 4",
        points
        == [(0, 0, 0, 0, 0), (0, 0, 0, 1, 1), (0, 0, 1, 0, 1), (0, 1, 0, 0, 1), (1, 0, 0, 0, 1)],
    )
    coords = cy.lemma7_coefficients()
    ok("root-of-unity constant coordinate", str(coords[0]) == "x0^2 + x1^2 + x2^2 + x3^2")
    ok("root-of-unity vanishing coordinate", coords[2].is_zero())
    zeta = [cy.Poly("0"), cy.Poly("1"), cy.Poly("0"), cy.Poly("0")]
    zeta3 = [cy.Poly("0"), cy.Poly("0"), cy.Poly("0"), cy.Poly("1")]
    ok("cyclotomic reduction z*z^3 = -1", str(cy.cyclotomic_mul(zeta, zeta3)[0]) == "-1")
    ok("params (minus)", cy.menon_params(1, "minus") == (4, 1, 0, 1))

    # difference sets
    ok("certify (7, {0,1,2,5})", cy.verify_difference_set(7, [0, 1, 2, 5]) == (7, 4, 2, 2))
    ok("reject non-difference set", cy.verify_difference_set(5, [0, 1]) is None)
    comp_set, comp_params = cy.complement(4, [3])
    ok("complement", comp_set == [0, 1, 2] and comp_params == (4, 3, 2, 1))
    ok("residue counts", cy.residue_counts(7, [0, 1, 2, 5], 7) == [1, 1, 1, 0, 0, 1, 0])
    ok("theta", str(cy.theta(7, [0, 1, 2, 5])) == "X^5 + X^2 + X + 1")
    ok("product congruence", cy.check_lemma5(7, [0, 1, 2, 5], 7))
    ok("residue-count system", cy.check_lemma6((7, 4, 2, 2), 7, [1, 1, 1, 0, 0, 1, 0]))

    # sequences and circulants
    ok("aperiodic C(2)", cy.aperiodic_autocorrelation([1, 1, 1, -1], 2) == 0)
    ok("periodic R(1)", cy.periodic_autocorrelation([1, 1, 1, -1], 1) == 0)
    ok("Barker check", cy.is_barker([1, 1, 1, -1, 1]))
    ok("Barker search v=13", len(cy.search_barker(13)) > 0)
    ok("Barker search v=6 empty", cy.search_barker(6) == [])
    ok("characteristic sequence", cy.ds_to_sequence(4, [0, 1, 2]) == [1, 1, 1, -1])
    ok("circulant Hadamard check", cy.is_circulant_hadamard([1, 1, 1, -1]))
    census = cy.search_circulant_hadamard(8)
    ok("circulant census n<=8", [n for n, rows in census.items() if rows] == [1, 4])
    det = cy.determinant_bound_check([1, 1, 1, -1])
    ok("determinant bound", det["det_abs"] == 16 and det["attains_bound"])

    # error mapping
    try:
        cy.search_barker(30, max_work=1024)
        sys.exit("FAIL - budget error not raised")
    except RuntimeError:
        ok("budget errors raise RuntimeError", True)
    try:
        cy.verify_difference_set(5, [9])
        sys.exit("FAIL - usage error not raised")
    except ValueError:
        ok("usage errors raise ValueError", True)

    print(f"all {checks} smoke checks passed")


if __name__ == "__main__":
    main()
