"""Acceptance gate: every headline result, one test (and one line) each.

Each criterion is verified end to end against frozen oracle values or by
cross-checking independent engines.  `pytest -v tests/test_acceptance.py`
prints one pass/fail line per criterion.
"""

import math
from fractions import Fraction

from secant_census import census, chains, iecf, macdonald, plucker, reference
from secant_census.algebra import binom

FROZEN_STRATA = {
    2: (4,),
    3: (40, 24),
    4: (364, 784, 148),
    5: (3264, 16920, 11664, 920),
    6: (29260, 308044, 501908, 155012, 5776),
}

FROZEN_R1 = {
    1: (0, 4, 12, 24, 40),
    2: (0, 40, 184, 496, 1040),
    3: (0, 364, 2604, 9528, 25240),
}

FROZEN_RS1 = {
    2: (0, 13, 174, 780, 2290, 5325),
    3: (0, 41, 2900, 30010, 157300, 571515),
}


def _r1_params(t: int, u: int) -> macdonald.SecantParams:
    return macdonald.SecantParams(
        g=(2 * t + 1) * u, s=2 * t, m=2 * t * (u + 1), d=t + 1, r=1
    )


def _rs1_params(r: int, u: int) -> macdonald.SecantParams:
    return macdonald.SecantParams(
        g=(r + 2) * u, s=r + 1, m=(r + 1) * (u + 1), d=2 * r, r=r
    )


def test_criterion_01_stratified_tuple_table():
    """The stratified tuple counts match the frozen table exactly."""
    for d in range(2, 7):
        strata = census.enumerate_W(2 * d - 2, d)
        assert strata[: d - 1] == FROZEN_STRATA[d], f"d={d}"
        assert all(x == 0 for x in strata[d - 1 :]), f"d={d}"
        assert sum(strata) == (2 * d - 2) ** d, f"d={d}"
    print("ACCEPTANCE 1 stratified-tuple-table: PASS")


def test_criterion_02_central_identity():
    """Stratified expansion equals the alternating binomial sum,
    for d = 2..6 and u = 1..25."""
    for d in range(2, 7):
        strata = census.enumerate_W(2 * d - 2, d)
        for u in range(1, 26):
            lhs = sum(
                strata[k] * binom(d + u - 2 - k, d) for k in range(d - 1)
            )
            rhs = sum(
                (-1) ** i * binom(u, i) * binom((2 * d - 1) * u, d - i)
                for i in range(d + 1)
            )
            assert lhs == rhs, f"d={d}, u={u}: {lhs} != {rhs}"
    print("ACCEPTANCE 2 central-identity: PASS")


def test_criterion_03_count_polynomials():
    """The five closed-form counting polynomials reproduce the stratified
    counts, in exact rational arithmetic, for u = 1..10."""
    assert sorted(reference.POLYNOMIALS) == [2, 3, 4, 5, 6]
    for d, coeffs in reference.POLYNOMIALS.items():
        assert len(coeffs) == d + 1
        assert coeffs[0] == 0
        for u in range(1, 11):
            combinatorial = Fraction(census.count_r1(d - 1, u))
            closed = reference.polynomial_value(d, u)
            assert combinatorial == closed, f"d={d}, u={u}"
    print("ACCEPTANCE 3 count-polynomials: PASS")


def test_criterion_04_four_engines_agree_for_pencils():
    """Exhaustive, dynamic-programming, stratified, and closed-form engines
    agree on the pencil family for t = 1..3, u = 1..5."""
    for t in (1, 2, 3):
        for u in range(1, 6):
            expected = FROZEN_R1[t][u - 1]
            params = _r1_params(t, u)
            values = {
                "brute": census.count_set_S(t, u),
                "dp": census.count_traversals_dp(census.r1_grid(t, u)),
                "stratified": census.count_r1(t, u),
                "closed": macdonald.macdonald_r1(params.d, params.g, params.m),
            }
            assert set(values.values()) == {expected}, f"t={t}, u={u}: {values}"
    print("ACCEPTANCE 4 pencil-engines-agree: PASS")


def test_criterion_05_chain_degeneration_matches_extraction():
    """Chain-summed traversal counts equal the coefficient-extraction count
    for r in {2, 3}, u = 1..6; the 5 maximal chains for r = 3 start with
    the fully worked one, whose u = 2 count is carried entirely by the
    lowest stratum."""
    for r in (2, 3):
        for u in range(1, 7):
            expected = FROZEN_RS1[r][u - 1]
            values = {
                "chains_dp": plucker.count_rs1(r, u),
                "chains_stratified": plucker.count_rs1_stratified(r, u),
                "extraction": macdonald.macdonald_rs1(r, u),
            }
            assert set(values.values()) == {expected}, f"r={r}, u={u}: {values}"

    five_chains = plucker.maximal_chains(5)
    assert len(five_chains) == 5
    worked = five_chains[0]
    assert plucker.prohibition_of_chain(worked).labels == (1, 3, 2, 4, 3, 5)

    d = worked.edges
    grid = census.GridSpec(10, 5, plucker.prohibition_of_chain(worked))
    total = census.count_traversals_dp(grid)
    strata = plucker.chain_strata(worked)
    tail = sum(strata[k] * binom(2 + d - 2 - k, d) for k in range(1, d - 1))
    assert total - tail == 4
    print("ACCEPTANCE 5 chain-degeneration-vs-extraction: PASS")


def test_criterion_06_extraction_versions_agree_and_are_integral():
    """Both generating-function forms give the same integer on every
    parameter point of both families."""
    for t in (1, 2, 3):
        for u in range(1, 6):
            params = _r1_params(t, u)
            one = macdonald.macdonald_general(params, "one")
            two = macdonald.macdonald_general(params, "two")
            assert one == two, f"t={t}, u={u}"
            assert isinstance(one, int) and isinstance(two, int)
    for r in (2, 3):
        for u in range(1, 7):
            params = _rs1_params(r, u)
            one = macdonald.macdonald_general(params, "one")
            two = macdonald.macdonald_general(params, "two")
            assert one == two, f"r={r}, u={u}"
            assert isinstance(one, int) and isinstance(two, int)
    print("ACCEPTANCE 6 extraction-versions: PASS")


def test_criterion_07_shift_bounds_hold_exhaustively():
    """Neither shift-bound verifier finds a non-vacuous violation anywhere
    on the sweep s = 2..6, m = 1..3s+6, distinguished index 2..s,
    M = 2..4, sstar = 0..s."""
    for verifier in (chains.verify_claim_A, chains.verify_claim_B):
        instances = 0
        for s in range(2, 7):
            for m in range(1, 3 * s + 7):
                for i0 in range(2, s + 1):
                    for M in (2, 3, 4):
                        for sstar in range(0, s + 1):
                            instances += 1
                            report = verifier(s, m, i0, M, sstar)
                            assert report.holds in (None, True), report
        assert instances == 5310, instances
    print("ACCEPTANCE 7 shift-bounds: PASS")


def test_criterion_08_vanishing_table_fixtures():
    """The packaged ambient table is node-compatible at full degree 10, the
    included table at degree 7, and a one-unit perturbation is caught."""
    ambient = chains.load_packaged_table(chains.AMBIENT_TABLE_FIXTURE)
    included = chains.load_packaged_table(chains.INCLUDED_TABLE_FIXTURE)
    assert chains.eh_compatible(ambient, 10)
    assert chains.eh_compatible(included, 7)

    incoming, outgoing = ambient[0]
    ambient[0] = (incoming, (outgoing[0] - 1,) + outgoing[1:])
    assert not chains.eh_compatible(ambient, 10)
    print("ACCEPTANCE 8 vanishing-table-fixtures: PASS")


def test_criterion_09_tableau_census():
    """Maximal chains are counted by the same Catalan numbers as two-row
    rectangular tableaux, and the closed-form series count equals the
    tableau count on every rectangle with at most 16 cells."""
    for n in range(3, 9):
        k = n - 2
        catalan = math.comb(2 * k, k) // (k + 1)
        assert len(plucker.maximal_chains(n)) == catalan, f"n={n}"
        assert len(chains.enumerate_tableaux(2, k)) == catalan, f"n={n}"

    for a in range(1, 9):
        for b in range(2, 17):
            if a * b > 16:
                continue
            g, s = a * b, b - 1
            m = g + s - a
            assert macdonald.rho(g, s, m) == 0
            assert macdonald.eta(g, s, m) == len(
                chains.enumerate_tableaux(a, b)
            ), f"{a}x{b}"
    print("ACCEPTANCE 9 tableau-census: PASS")
