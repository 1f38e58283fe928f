import pytest

import oracles
from sylowlab.constructions import catalog_group
from sylowlab.perm import parse_permutation
from sylowlab.subgroups import (
    NotNormalError,
    centralizer,
    fixed_coset_count,
    intersection,
    is_normal,
    normal_closure,
    normalizer,
    p_core,
    p_prime_core,
    quotient,
    upper_p_series,
)
from sylowlab.sylow import sylow_data


def perm(text, n):
    return parse_permutation(text, n)


def test_centralizer_in_s3():
    G = catalog_group("S3")
    C = centralizer(G, perm("(1 2)", 3))
    assert C.elset == {perm("()", 3), perm("(1 2)", 3)}


def test_centralizer_in_abelian_is_everything():
    G = catalog_group("C3^2")
    assert all(centralizer(G, x) == G for x in G)


def test_centralizer_in_s4():
    G = catalog_group("S4")
    C = centralizer(G, perm("(1 2)", 4))
    assert C.elset == {perm(t, 4) for t in ["()", "(1 2)", "(3 4)", "(1 2)(3 4)"]}


def test_centralizer_rejects_outsider():
    with pytest.raises(ValueError):
        centralizer(catalog_group("A4"), perm("(1 2)", 4))


@pytest.mark.parametrize("name", ["S4", "A5", "D12", "SL(2,3)"])
def test_centralizer_against_oracle(name):
    G = catalog_group(name)
    for cls in G.conjugacy_classes:
        x = cls[0]
        assert centralizer(G, x).elset == oracles.centralizer(G.elset, x)


def test_normalizer_examples():
    S3 = catalog_group("S3")
    H = S3.subgroup([perm("(1 2)", 3)])
    assert len(normalizer(S3, H)) == 2
    A3 = S3.subgroup([perm("(1 2 3)", 3)])
    assert normalizer(S3, A3) == S3
    S4 = catalog_group("S4")
    P = sylow_data(S4, 2).P
    assert len(normalizer(S4, P)) == 8
    assert normalizer(S4, P).elset == oracles.normalizer(S4.elset, P.elset)


def test_normal_closure_examples():
    S3 = catalog_group("S3")
    A3 = S3.subgroup([perm("(1 2 3)", 3)])
    assert normal_closure(S3, A3) == A3
    assert normal_closure(S3, S3.subgroup([perm("(1 2)", 3)])) == S3
    S4 = catalog_group("S4")
    V = normal_closure(S4, S4.subgroup([perm("(1 2)(3 4)", 4)]))
    assert len(V) == 4
    assert V.elset == oracles.normal_closure(S4.elset, {perm("()", 4), perm("(1 2)(3 4)", 4)})


def test_quotient_s4_by_v4():
    S4 = catalog_group("S4")
    V = normal_closure(S4, S4.subgroup([perm("(1 2)(3 4)", 4)]))
    Q = quotient(S4, V)
    assert Q.order == 6
    assert sorted(Q.group.orders[x] for x in Q.group) == [1, 2, 2, 2, 3, 3]
    # projection is a homomorphism
    a, b = perm("(1 2)", 4), perm("(2 3 4)", 4)
    assert Q.project(oracles.compose(a, b)) == oracles.compose(Q.project(a), Q.project(b))


def test_quotient_trivial_and_index_two():
    S4 = catalog_group("S4")
    assert quotient(S4, S4.trivial_subgroup()).order == 24
    A4 = S4.subgroup([perm("(1 2 3)", 4), perm("(1 2)(3 4)", 4)])
    assert quotient(S4, A4).order == 2


def test_quotient_rejects_non_normal():
    S3 = catalog_group("S3")
    with pytest.raises(NotNormalError):
        quotient(S3, S3.subgroup([perm("(1 2)", 3)]))


def test_p_core_examples():
    S4 = catalog_group("S4")
    core = p_core(S4, 2)
    assert len(core) == 4
    assert core.elset == frozenset.intersection(*oracles.sylow_subgroups(S4.elset, 2, 4))
    assert len(p_core(catalog_group("A5"), 2)) == 1
    D8 = catalog_group("D8")
    assert p_core(D8, 2) == D8


def test_p_prime_core_examples():
    assert len(p_prime_core(catalog_group("S4"), 2)) == 1
    assert len(p_prime_core(catalog_group("S3"), 2)) == 3
    assert len(p_prime_core(catalog_group("G_n(2,1,3)"), 2)) == 3


def test_upper_p_series_s4():
    s = upper_p_series(catalog_group("S4"), 2)
    assert [len(T) for T in s.terms] == [1, 4, 12, 24]
    assert s.kinds == ("p", "p'", "p")
    assert [(len(U), len(V)) for U, V in s.p_prime_factors] == [(12, 4)]
    assert s.p_solvable


@pytest.mark.parametrize("p", [2, 3, 5])
def test_a5_not_p_solvable(p):
    assert not upper_p_series(catalog_group("A5"), p).p_solvable


@pytest.mark.parametrize("name", ["G_n(2,1,3)", "G_n(2,2,3)", "G_n(3,1,7)"])
def test_gn_series_has_one_p_prime_factor(name):
    G = catalog_group(name)
    p = 3 if name == "G_n(3,1,7)" else 2
    s = upper_p_series(G, p)
    assert s.p_solvable
    assert len(s.p_prime_factors) == 1
    U, V = s.p_prime_factors[0]
    assert len(V) == 1 and len(G) // len(U) == sylow_data(G, p).sylow_order


def test_fixed_coset_count_against_definition():
    S4 = catalog_group("S4")
    s = upper_p_series(S4, 2)
    U, V = s.p_prime_factors[0]
    for x in S4.elements:
        naive = {frozenset(oracles.compose(v, u) for v in V.elset) for u in U.elset
                 if oracles.compose(oracles.compose(oracles.inverse(u), oracles.inverse(x)), oracles.compose(u, x)) in V.elset}
        assert fixed_coset_count(U, V, [x]) == len(naive)


def test_intersection_and_normality():
    S4 = catalog_group("S4")
    sd = sylow_data(S4, 2)
    core = intersection(S4, sd.all_sylows)
    assert is_normal(core, S4)
    assert not is_normal(sd.P, S4)
