import pytest

import oracles
from sylowlab.constructions import (
    CATALOG,
    ConstructionError,
    GnParams,
    build_gn,
    catalog_direct_power,
    catalog_group,
    cyclic,
    direct_power_with_swap,
    gn_components,
    semidirect_by_blocks,
    smallest_unit_of_order,
    symmetric,
)
from sylowlab.perm import CapExceeded
from sylowlab.subgroups import normalizer, p_prime_core, upper_p_series
from sylowlab.sylow import p_elements, sylow_data


@pytest.mark.parametrize("entry", [e for e in CATALOG if e.order <= 1000], ids=lambda e: e.name)
def test_catalog_orders(entry):
    G = catalog_group(entry.name)
    assert len(G) == entry.order
    assert G.name == entry.name


def test_catalog_examples():
    assert len(catalog_group("A5")) == 60
    psl = catalog_group("PSL(2,7)")
    assert len(psl) == 168 and psl.degree == 8
    assert sylow_data(psl, 7).n_p == 8
    sl = catalog_group("SL(2,3)")
    assert len(sl) == 24 and len(p_elements(sl, 3)) == 9


def test_catalog_covers_required_families():
    names = {e.name for e in CATALOG}
    for need in ["S3", "S4", "S5", "S6", "A4", "A5", "A6", "SL(2,3)", "PSL(2,7)", "S3 wr C2", "C7:C3", "D8", "C2^3"]:
        assert need in names


def test_semidirect_examples():
    G = semidirect_by_blocks([7], [[2]], name="F21")
    assert len(G) == 21
    assert len(semidirect_by_blocks([3], [[2]])) == 6


def test_semidirect_trivial_action_is_direct_product():
    G = semidirect_by_blocks([3, 5], [])
    assert len(G) == 15
    assert G.is_abelian()


def test_semidirect_rejects_non_unit():
    with pytest.raises(ConstructionError):
        semidirect_by_blocks([9], [[3]])


def test_smallest_unit():
    assert smallest_unit_of_order(2, 3) == 2
    assert smallest_unit_of_order(3, 7) == 2
    with pytest.raises(ConstructionError):
        smallest_unit_of_order(3, 5)


def test_gn_params_validation():
    with pytest.raises(ConstructionError):
        GnParams(2, 1, 4)
    with pytest.raises(ConstructionError):
        GnParams(3, 1, 5)
    with pytest.raises(ConstructionError):
        GnParams(2, 0, 3)


@pytest.mark.parametrize(
    "p,n,q,order,degree,n_p",
    [(2, 1, 3, 6, 3, 3), (2, 2, 3, 108, 9, 27), (3, 1, 7, 21, 7, 7), (2, 1, 5, 10, 5, 5)],
)
def test_build_gn(p, n, q, order, degree, n_p):
    params = GnParams(p, n, q)
    G = build_gn(params)
    assert (len(G), G.degree) == (order, degree)
    assert (params.order, params.degree) == (order, degree)
    sd = sylow_data(G, p)
    assert sd.n_p == n_p == params.predicted_n_p()
    assert normalizer(G, sd.P) == sd.P
    N, P = gn_components(G, params)
    assert p_prime_core(G, p).elset == N.elset
    assert len(N) == q ** params.num_blocks
    assert len(upper_p_series(G, p).p_prime_factors) == 1


def test_gn_lambda_equals_centralizer_in_n():
    params = GnParams(2, 2, 3)
    G = build_gn(params)
    N, _ = gn_components(G, params)
    sd = sylow_data(G, 2)
    for x in sd.P.elements:
        if x != G.identity:
            assert sd.lambda_table[x] == len(oracles.centralizer(N.elset, x))


def test_gn_cap():
    with pytest.raises(CapExceeded):
        build_gn(GnParams(2, 2, 3), cap=100)


def test_direct_power_examples():
    dp = direct_power_with_swap(symmetric(3), 2, 2)
    assert len(dp.group) == 72
    assert len(dp.base) == 36 and dp.k == 2
    assert len(direct_power_with_swap(symmetric(3), 2, 1).group) == 36
    assert len(direct_power_with_swap(cyclic(3), 2, 2).group) == 18
    assert dp.factor_permutation(dp.actor) == (1, 0)
    with pytest.raises(ConstructionError):
        direct_power_with_swap(cyclic(3), 3, 2)


def test_catalog_direct_power():
    dp = catalog_direct_power("S3 wr C3")
    assert dp.k == 3 and len(dp.group) == 648
    assert catalog_direct_power("A5") is None
