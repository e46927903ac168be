import pytest
from hypothesis import given, settings, strategies as st

from overcolored import congruences as cg
from overcolored.oracle import count_overcolored
from overcolored.qseries import overcolored_spec, EtaQuotientSpec


# -- classification -----------------------------------------------------------

def brute_reps(n):
    return sum(1 for k in range(1, n + 1) for l in range(1, n + 1) if k * k + 2 * l * l == n)


def test_classify_examples():
    c9 = cg.classify_n(9)
    assert c9.is_square and c9.square == 3 and not c9.is_twice_square and c9.rep_count == 1
    c3 = cg.classify_n(3)
    assert c3.rep_count == 1 and c3.reps == ((1, 1),)
    assert not (c3.is_square or c3.is_twice_square or c3.is_4_times_square)
    c7 = cg.classify_n(7)
    assert c7.rep_count == 0 and not any(
        [c7.is_square, c7.is_twice_square, c7.is_4_times_square,
         c7.is_2_times_even_square, c7.is_2_times_odd_square])


def test_classify_witnesses():
    c = cg.classify_n(8)
    assert c.twice_square == 2 and c.two_even_square == 1
    c = cg.classify_n(18)
    assert c.two_odd_square == 2  # 18 = 2 * (2*2 - 1)^2
    c = cg.classify_n(36)
    assert c.four_square == 3 and c.square == 6


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3000))
def test_classify_consistent(n):
    c = cg.classify_n(n)
    if c.is_4_times_square:
        assert c.is_square
    assert (c.is_2_times_even_square or c.is_2_times_odd_square) == c.is_twice_square
    if c.is_square:
        assert c.square ** 2 == n
    if c.is_twice_square:
        assert 2 * c.twice_square ** 2 == n
    for k, l in c.reps:
        assert k * k + 2 * l * l == n
    assert c.rep_count == brute_reps(n) if n < 400 else True


def test_rep_counts_table():
    table = cg.square_rep_counts(400)
    assert table == [brute_reps(n) for n in range(400)]
    assert max(table) >= 2


# -- Legendre / inverse -------------------------------------------------------

def test_legendre_examples():
    assert cg.legendre(2, 3) == -1
    for p in (3, 5, 7, 11, 13):
        assert cg.legendre(1, p) == 1
        assert cg.legendre(p, p) == 0
    residues = {k * k % 11 for k in range(1, 11)}
    assert [cg.legendre(a, 11) for a in range(1, 11)] == [1 if a in residues else -1 for a in range(1, 11)]


def test_legendre_needs_odd_prime():
    with pytest.raises(ValueError):
        cg.legendre(1, 9)
    with pytest.raises(ValueError):
        cg.legendre(1, 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6), st.sampled_from([3, 5, 7, 11, 13, 101]))
def test_legendre_multiplicative(a, b, p):
    if a % p and b % p:
        assert cg.legendre(a * b, p) == cg.legendre(a, p) * cg.legendre(b, p)


def test_mod_inverse():
    assert cg.mod_inverse(2, 5) == 3
    for p in (3, 7, 11):
        for a in range(1, p):
            assert a * cg.mod_inverse(a, p) % p == 1
    with pytest.raises(ValueError):
        cg.mod_inverse(5, 5)


def test_qnr_residues():
    assert cg.qnr_residues(3, 1) == [2]
    assert sorted(cg.qnr_residues(5, 2)) == [1, 4]


# -- families -----------------------------------------------------------------

def test_family_resolution():
    assert (cg.FamilyParams.pow2(1, 1, 1, "A").r, cg.FamilyParams.pow2(1, 1, 1, "A").s) == (5, 3)
    assert (cg.FamilyParams.pow2(1, 1, 1, "B").r, cg.FamilyParams.pow2(1, 1, 1, "B").s) == (6, 2)
    f = cg.FamilyParams.modp(3, 0, 0, 1)
    assert (f.r, f.s) == (2, 4)
    f = cg.FamilyParams.mod3(0, 0, "A")
    assert (f.r, f.s) == (3, 6)


def test_family_side_conditions():
    with pytest.raises(ValueError):
        cg.FamilyParams.mod3(1, 2, "A")
    with pytest.raises(ValueError):
        cg.FamilyParams.modp(9, 1, 0, 1)
    with pytest.raises(ValueError):
        cg.FamilyParams.direct(0, 3)
    with pytest.raises(ValueError):
        cg.FamilyParams.pow2(0, 1, 1, "A")


def test_claim_validation():
    with pytest.raises(ValueError):
        cg.CongruenceClaim("x", cg.FamilyParams.direct(1, 1), 4, 4, 4)


# -- verify_claim -------------------------------------------------------------

def claim(r, s, step, res, M, **kw):
    return cg.CongruenceClaim("t", cg.FamilyParams.direct(r, s), step, res, M, **kw)


def test_overpartitions_even():
    values = count_overcolored((1, 1), 501)
    assert all(v % 2 == 0 for v in values[1:])
    rep = cg.verify_claim(claim(1, 1, 1, 0, 2), 500)
    assert rep.status == "verified"
    assert rep.n_checked == 500 and rep.n_range == (1, 500)


def test_4n_plus_2_mod_4():
    assert cg.verify_claim(claim(1, 1, 4, 2, 4), 500).status == "verified"


def test_negative_control_fails():
    assert count_overcolored((1, 2), 3)[2] % 4 == 2
    rep = cg.verify_claim(claim(1, 2, 4, 2, 4, expect_violation=True), 50)
    assert rep.status == "violated" and rep.as_expected
    assert rep.counterexamples[0] == (2, 2)


def test_suite_examples():
    assert cg.verify_claim(claim(1, 2, 3, 1, 4), 300).status == "verified"
    assert cg.verify_claim(claim(3, 2, 9, 3, 8), 100).status == "verified"
    assert cg.verify_claim(claim(2, 3, 4, 3, 4), 300).status == "verified"
    assert cg.verify_claim(claim(1, 2, 2, 1, 4), 300).status == "verified"
    assert cg.verify_claim(claim(6, 2, 4, 3, 8), 300).status == "verified"
    assert cg.verify_claim(claim(5, 3, 8, 5, 8), 300).status == "verified"
    assert cg.verify_claim(claim(3, 6, 3, 1, 3), 300).status == "verified"
    assert cg.verify_claim(claim(2, 4, 3, 2, 3), 300).status == "verified"


def test_routes_agree():
    claims = cg.small_modulus_claims(3, 1, 1, negative_controls=True)
    a = cg.run_claims(claims, 60, route="residue")
    b = cg.run_claims(claims, 60, route="exact")
    assert [(r.label, r.params, r.counterexamples) for r in a] == \
        [(r.label, r.params, r.counterexamples) for r in b]


def test_parallel_matches_serial():
    claims = cg.power_of_two_claims(2, 1, 1, 2)
    a = cg.run_claims(claims, 80, jobs=1)
    b = cg.run_claims(claims, 80, jobs=4)
    assert [r.to_dict() | {"wall_time": 0} for r in a] == [r.to_dict() | {"wall_time": 0} for r in b]


def test_cache_truncates():
    cg.clear_cache()
    long = cg.overcolored_mod(2, 3, 8, 200)
    short = cg.overcolored_mod(2, 3, 8, 50)
    assert short.order == 50 and short == long


# -- profiles -----------------------------------------------------------------

def test_mod4_profile_points():
    pbar = count_overcolored((1, 1), 5)
    assert cg.mod4_prediction(1, 1, 5)[1] == 2 == pbar[1] % 4
    assert cg.mod4_prediction(1, 1, 5)[3] == 0 == pbar[3] % 4
    assert cg.mod4_profile((2, 3), 500).status == "verified"


def test_mod8_profile_points():
    pbar = count_overcolored((1, 1), 5)
    assert pbar[4] == 14
    assert cg.mod8_prediction(1, 1, 5)[4] == 6 == pbar[4] % 8
    assert cg.mod8_table(1, 1, 4) is None  # square and 4 * square at once
    assert cg.mod8_profile((2, 2), 500).status == "verified"


def test_mod8_counts_each_representation():
    # 27 = 5^2 + 2*1^2 = 3^2 + 2*3^2; with r even and s odd one copy of
    # 4s(r+s) would be 4 mod 8, two copies cancel
    assert cg.classify_n(27).rep_count == 2
    value = count_overcolored((2, 1), 28)[27] % 8
    assert value == 0
    assert cg.mod8_prediction(2, 1, 28)[27] == 0
    assert cg.mod8_table(2, 1, 27) is None
    assert cg.mod8_table(2, 1, 3) == 4 == count_overcolored((2, 1), 4)[3] % 8


def test_profile_grid_small():
    for rs in [(1, 1), (3, 4), (6, 5)]:
        assert cg.mod4_profile(rs, 300).status == "verified"
        assert cg.mod8_profile(rs, 300).status == "verified"


def test_profile_detects_wrong_prediction():
    rep = cg._profile("bad", 1, 1, 50, 4, [1] + [0] * 49, cg.mod4_table)
    assert rep.status == "violated" and rep.counterexamples[0][0] == 1


def test_even_colored_tables():
    pbar = count_overcolored((1, 1), 3)
    assert cg.even_colored_mod4_table(1, 1) == 2 == pbar[1] % 4
    assert cg.even_colored_mod4_table(1, 2) == 0 == pbar[2] % 4
    reports = cg.s_equals_one_suite(3, 300)
    assert all(r.status == "verified" for r in reports)


# -- mod 3 / mod p ------------------------------------------------------------

def test_mod3_as_printed_fails_at_first_term():
    # abar_{5,1}(1) = 2s = 2, so a(3n+1) = 0 mod 3 already fails at n = 0
    assert count_overcolored((5, 1), 2)[1] == 2
    reports = cg.mod3_suite(1, 100)
    printed = [r for r in reports if r.label == "3n+1 mod 3, (3(k-j)+5, 3k+1)"]
    derived = [r for r in reports if r.label == "3n+2 mod 3, (3(k-j)+5, 3k+1)"]
    assert printed and all(r.status == "violated" for r in printed)
    assert derived and all(r.status == "verified" for r in derived)


def test_mod3_first_family():
    reports = cg.mod3_suite(2, 300)
    assert all(r.status == "verified" for r in reports if "3k+6" in r.label)


def test_mod_p_small():
    reports = cg.mod_p_suite((3, 5), 1, 200)
    assert all(r.status == "verified" for r in reports if not r.informational)
    assert any(r.informational for r in reports)


# -- transfer -----------------------------------------------------------------

def test_transfer_examples():
    base = overcolored_spec(3, 6)
    rep = cg.transfer_check(base, [(2, 1)], 3, 1, 1, 200)
    assert rep.status == "verified" and rep.notes == "premise holds"
    rep = cg.transfer_check(base, [], 3, 1, 1, 100)
    assert rep.status == "verified"
    rep = cg.transfer_check(overcolored_spec(5, 1), [(2, 1), (1, -1)], 3, 1, 2, 200)
    assert rep.status == "verified" and rep.notes == "premise holds"


def test_transfer_vacuous_when_premise_fails():
    rep = cg.transfer_check(overcolored_spec(1, 1), [(1, 1)], 3, 1, 1, 50)
    assert rep.status == "verified" and "vacuous" in rep.notes


def test_transfer_arguments():
    with pytest.raises(ValueError):
        cg.transfer_check(EtaQuotientSpec(), [], 3, 1, 3, 10)
    with pytest.raises(ValueError):
        cg.transfer_check(EtaQuotientSpec(), [], 4, 1, 1, 10)


def test_perturbation_between():
    pert = cg.perturbation_between(overcolored_spec(3, 6), overcolored_spec(6, 9), 3)
    assert EtaQuotientSpec(list(overcolored_spec(3, 6).factors) + [(m, 3 * a) for m, a in pert]) \
        == overcolored_spec(6, 9)
    with pytest.raises(ValueError):
        cg.perturbation_between(overcolored_spec(3, 6), overcolored_spec(4, 6), 3)


# -- conjecture ---------------------------------------------------------------

def test_conjecture_first_case():
    pbar = count_overcolored((1, 1), 6)
    assert pbar[2] == 4 and pbar[5] == 24
    rep = cg.verify_claim(cg.CongruenceClaim("c", cg.FamilyParams.conjecture(1, 0, 0), 3, 2, 4), 300)
    assert rep.status == "verified" and rep.n_range[0] == 2


def test_conjecture_scan_small():
    assert cg.conjecture_scan(0) == []
    reports = cg.conjecture_scan(1, 1, 1, 100)
    assert len(reports) == 12 and all(r.status == "verified" for r in reports)
