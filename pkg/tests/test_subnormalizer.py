import pytest

import oracles
from sylowlab.constructions import catalog_group
from sylowlab.perm import parse_permutation
from sylowlab.subnormalizer import (
    BudgetExceeded,
    NotPSolvable,
    is_subnormal,
    subnormalizer,
    subnormalizer_brute,
    subnormalizer_size_a,
    subnormalizer_size_b,
)
from sylowlab.subgroups import normalizer
from sylowlab.sylow import cyclic_subgroup, sylow_data
from sylowlab.util import prime_factors


def perm(text, n):
    return parse_permutation(text, n)


def test_is_subnormal_examples():
    S3 = catalog_group("S3")
    A3 = S3.subgroup([perm("(1 2 3)", 3)])
    assert is_subnormal(A3, S3)
    assert not is_subnormal(S3.subgroup([perm("(1 2)", 3)]), S3)
    S4 = catalog_group("S4")
    x = perm("(1 2)(3 4)", 4)
    P = next(S for S in sylow_data(S4, 2).all_sylows if x in S.elset)
    assert is_subnormal(S4.subgroup([x]), P)
    assert is_subnormal(S4.subgroup([x]), P, p=2)


def test_brute_examples():
    S3 = catalog_group("S3")
    got = subnormalizer_brute(S3, S3.subgroup([perm("(1 2)", 3)]))
    assert set(got) == {perm("()", 3), perm("(1 2)", 3)}
    A4 = catalog_group("A4")
    assert len(subnormalizer_brute(A4, A4.subgroup([perm("(1 2 3)", 4)]))) == 3


@pytest.mark.parametrize("name", ["S3", "A4", "S4", "D12", "SL(2,3)", "A5"])
def test_brute_against_oracle(name):
    G = catalog_group(name)
    for p in prime_factors(len(G)):
        sd = sylow_data(G, p)
        seen = set()
        for x in sd.P.elements:
            H = cyclic_subgroup(G, x)
            if H.elset in seen:
                continue
            seen.add(H.elset)
            assert set(subnormalizer_brute(G, H)) == oracles.subnormalizer(G.elset, H.elset, G.degree)


@pytest.mark.parametrize("name", ["S4", "S3 wr C2", "A5", "PSL(2,7)"])
def test_sylow_subnormalizer_is_normalizer(name):
    G = catalog_group(name)
    for p in prime_factors(len(G)):
        P = sylow_data(G, p).P
        assert set(subnormalizer_brute(G, P)) == normalizer(G, P).elset


def test_size_a_examples():
    S4 = catalog_group("S4")
    sd = sylow_data(S4, 2)
    assert subnormalizer_size_a(S4, sd, S4.subgroup([perm("(1 2)", 4)])) == 8
    assert subnormalizer_size_a(S4, sd, S4.trivial_subgroup()) == 24
    A4 = catalog_group("A4")
    assert subnormalizer_size_a(A4, sylow_data(A4, 3), A4.subgroup([perm("(1 2 3)", 4)])) == 3


def test_size_b_examples():
    S4 = catalog_group("S4")
    assert subnormalizer_size_b(S4, 2, perm("(1 2)", 4)) == 8
    assert subnormalizer_size_b(S4, 2, S4.identity) == 24
    S3 = catalog_group("S3")
    assert subnormalizer_size_b(S3, 2, perm("(1 2)", 3)) == 2


def test_size_b_needs_p_solvable():
    A5 = catalog_group("A5")
    with pytest.raises(NotPSolvable):
        subnormalizer_size_b(A5, 2, A5.identity)


def test_budget():
    S5 = catalog_group("S5")
    with pytest.raises(BudgetExceeded):
        subnormalizer_brute(S5, S5.trivial_subgroup(), budget=100)


def test_combined_result():
    S4 = catalog_group("S4")
    sd = sylow_data(S4, 2)
    res = subnormalizer(S4, sd, S4.subgroup([perm("(1 2)", 4)]))
    assert (res.brute_size, res.formula_a_size, res.formula_b_size) == (8, 8, 8)
    assert res.consistent()
    A5 = catalog_group("A5")
    res5 = subnormalizer(A5, sylow_data(A5, 2), A5.trivial_subgroup())
    assert res5.formula_b_size is None and res5.brute_size == 60
