from fractions import Fraction

import pytest

from wreathstab.characters import (
    ClassFunction,
    character_table,
    decompose,
    induce_class_function,
    inner_product,
    irrep_dimension,
    irrep_labels,
    irreducible_character,
    pieri_decompose_MT,
    regular_character,
    restricted_inner_product,
    trivial_character,
    validate_label,
)
from wreathstab.partitions import binomial, enumerate_partitions, murnaghan_nakayama
from wreathstab.wreath import (
    all_types,
    class_size,
    element_list,
    group_order,
    identity,
    multiply,
    inverse,
    type_of,
)

SMALL = [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)]


def sign_of_pi(k, n):
    def sgn(t):
        # a cycle of length m contributes (-1)^(m-1)
        s = 1
        for (_, m), a in t.entries:
            s *= (-1) ** ((m - 1) * a)
        return s

    return ClassFunction.from_callable(k, n, sgn)


def test_trivial_label_is_constant_one():
    for k, n in SMALL:
        triv = ((n,),) + ((),) * (len(irrep_labels(k, 1)) - 1)
        assert irreducible_character(k, n, triv) == trivial_character(k, n)
        assert irrep_dimension(k, triv) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_k1_matches_murnaghan_nakayama(n):
    for lam in enumerate_partitions(n):
        chi = irreducible_character(1, n, (lam,))
        for t in all_types(1, n):
            mu = tuple(sorted((m for (_, m), a in t.entries for _ in range(a)), reverse=True))
            assert chi(t) == murnaghan_nakayama(lam, mu)


@pytest.mark.parametrize("k,n", SMALL)
def test_tables_are_orthonormal_and_complete(k, n):
    table = character_table(k, n)
    labels = list(table)
    assert len(labels) == len(all_types(k, n))
    for a in labels:
        assert table[a].is_integral()
        assert table[a].degree == irrep_dimension(k, a)
        for b in labels:
            assert inner_product(table[a], table[b]) == (a == b)
    assert sum(irrep_dimension(k, a) ** 2 for a in labels) == group_order(k, n)


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (3, 2)])
def test_column_orthogonality(k, n):
    table = character_table(k, n)
    types = all_types(k, n)
    for s in types:
        for t in types:
            total = sum(chi(s) * chi(t) for chi in table.values())
            assert total == (group_order(k, n) // class_size(s) if s == t else 0)


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (3, 2)])
def test_trivial_orthogonal_to_sign_of_pi(k, n):
    sgn = sign_of_pi(k, n)
    assert inner_product(trivial_character(k, n), sgn) == 0
    assert inner_product(sgn, sgn) == 1


def test_inner_product_is_nonnegative_on_itself():
    f = regular_character(2, 2) - trivial_character(2, 2) * 3
    assert inner_product(f, f) >= 0


@pytest.mark.parametrize("k,d,n", [(2, 1, 2), (2, 1, 3), (1, 2, 4), (3, 1, 2)])
def test_induced_trivial_has_binomial_degree(k, d, n):
    ind = induce_class_function(trivial_character(k, d), n)
    assert ind.degree == binomial(n, d)


def test_induced_permutation_character_matches_coset_action():
    # cosets of S_2 wr S_1 x S_2 wr S_1 in S_2 wr S_2 <-> which coordinate holds the first block
    k, d, n = 2, 1, 2
    ind = induce_class_function(trivial_character(k, d), n)
    G = element_list(k, n)
    H = [h for h in G if h.pi == (0, 1)]
    cosets = []
    for g in G:
        coset = frozenset(multiply(g, h) for h in H)
        if coset not in cosets:
            cosets.append(coset)
    for g in G:
        fixed = sum(1 for c in cosets if multiply(inverse(next(iter(c))), multiply(g, next(iter(c)))) in H)
        assert ind(type_of(g)) == fixed


@pytest.mark.parametrize("k,d,n", [(2, 1, 3), (2, 2, 3), (1, 2, 4), (3, 1, 2)])
def test_frobenius_reciprocity(k, d, n):
    for delta in irrep_labels(k, d):
        f = irreducible_character(k, d, delta)
        ind = induce_class_function(f, n)
        for lam, chi in character_table(k, n).items():
            assert inner_product(ind, chi) == restricted_inner_product(chi, f)


@pytest.mark.parametrize("k,n", [(2, 2), (1, 4), (3, 2)])
def test_regular_character_decomposition(k, n):
    got = decompose(regular_character(k, n))
    assert got == {lab: irrep_dimension(k, lab) for lab in irrep_labels(k, n)}


def test_decompose_irreducible_is_single():
    for lab in irrep_labels(2, 3):
        assert decompose(irreducible_character(2, 3, lab)) == {lab: 1}


def test_decompose_rejects_non_character():
    with pytest.raises(ValueError):
        decompose(trivial_character(2, 2) * Fraction(1, 2))
    with pytest.raises(ValueError):
        decompose(trivial_character(2, 2) - regular_character(2, 2))


def test_pieri_examples():
    k = 2
    assert pieri_decompose_MT(k, 1, [[1], []], 3) == [((3,), ()), ((2, 1), ())]
    assert sum(irrep_dimension(k, lab) for lab in pieri_decompose_MT(k, 1, [[1], []], 3)) == binomial(3, 1)
    for delta in irrep_labels(2, 2):
        assert pieri_decompose_MT(2, 2, delta, 2) == [delta]
    for d, n in [(2, 5), (3, 5), (1, 4)]:
        got = {lab[0] for lab in pieri_decompose_MT(3, d, [[d], [], []], n)}
        want = {tuple(x for x in (n - j, j) if x) for j in range(min(d, n - d) + 1)}
        assert got == want


def test_pieri_against_bruteforce_m_triv_s2_wr_s1():
    f = irreducible_character(2, 1, ((1,), ()))
    got = decompose(induce_class_function(f, 2))
    assert got == {lab: 1 for lab in pieri_decompose_MT(2, 1, ((1,), ()), 2)}
    assert set(got) == {((2,), ()), ((1, 1), ())}


def test_dimension_sum_of_pieri_is_rank_of_mt():
    for k, d, n in [(2, 2, 5), (3, 2, 4), (2, 3, 6)]:
        for delta in irrep_labels(k, d):
            total = sum(irrep_dimension(k, lab) for lab in pieri_decompose_MT(k, d, delta, n))
            assert total == binomial(n, d) * irrep_dimension(k, delta)


def test_validate_label_errors():
    with pytest.raises(ValueError):
        validate_label(2, [[1]])
    with pytest.raises(ValueError):
        validate_label(2, [[1, 2], []])
    with pytest.raises(ValueError):
        validate_label(2, [[1], []], n=2)


def test_class_function_must_be_total():
    with pytest.raises(ValueError):
        ClassFunction(2, 2, {all_types(2, 2)[0]: 1})


def test_identity_element_has_identity_type():
    assert type_of(identity(2, 3)) == all_types(2, 3)[0]
