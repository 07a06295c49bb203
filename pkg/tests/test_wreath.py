import json
from math import factorial
from itertools import product, permutations

import pytest
from hypothesis import given, settings, strategies as st

from wreathstab.partitions import class_order, enumerate_partitions, partition_count
from wreathstab.rays import CapExceededError
from wreathstab.wreath import (
    TypeMatrix,
    WreathElement,
    all_types,
    centralizer_order,
    centralizer_order_bruteforce,
    check_group_cap,
    class_count_formula,
    class_size,
    conjugacy_classes_bruteforce,
    conjugate,
    cycle_products,
    element_list,
    group_order,
    identity,
    inverse,
    multiply,
    realize,
    type_of,
)


def as_permutation(x: WreathElement):
    """Action on [n] x [k]: (i, a) -> (pi(i), alpha(pi(i))(a)), flattened."""
    k, n = x.k, x.n
    out = [0] * (k * n)
    for i in range(n):
        j = x.pi[i]
        for a in range(k):
            out[i * k + a] = j * k + x.alpha[j][a]
    return tuple(out)


def perm_mul(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def elements_strategy(k, n):
    sk = list(permutations(range(k)))
    return st.builds(
        lambda alpha, pi: WreathElement(tuple(alpha), tuple(pi)),
        st.lists(st.sampled_from(sk), min_size=n, max_size=n),
        st.permutations(list(range(n))),
    )


S22 = element_list(2, 2)


def test_group_axioms_exhaustive_s2_wr_s2():
    e = identity(2, 2)
    assert len(S22) == 8
    for x in S22:
        assert multiply(e, x) == x == multiply(x, e)
        assert multiply(x, inverse(x)) == e == multiply(inverse(x), x)
        assert sum(1 for y in S22 if multiply(x, y) == e) == 1
    for x, y, z in product(S22, repeat=3):
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_inverse_single_coordinate():
    g = (1, 2, 0)
    assert inverse(WreathElement((g,), (0,))) == WreathElement(((2, 0, 1),), (0,))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_faithful_action_on_kn_points(data):
    # multiplication agrees with composing the induced permutations of [n] x [k]
    k, n = data.draw(st.sampled_from([(2, 3), (3, 2), (3, 3), (1, 4)]))
    x = data.draw(elements_strategy(k, n))
    y = data.draw(elements_strategy(k, n))
    assert as_permutation(multiply(x, y)) == perm_mul(as_permutation(x), as_permutation(y))


def test_cycle_products_examples():
    e = identity(3, 3)
    assert cycle_products(e) == [(1, (0, 1, 2))] * 3
    a, b = (1, 2, 0), (0, 2, 1)
    x = WreathElement((a, b), (1, 0))
    assert cycle_products(x) == [(2, tuple(a[b[i]] for i in range(3)))]


def test_type_examples():
    assert type_of(identity(2, 2)).as_dict() == {((1, 1), 1): 2}
    t = (1, 0)
    x = WreathElement((t, (0, 1)), (0, 1))
    assert type_of(x).as_dict() == {((2,), 1): 1, ((1, 1), 1): 1}
    assert type_of(identity(3, 0), k=3).n == 0


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_type_is_conjugation_invariant(data):
    k, n = data.draw(st.sampled_from([(2, 3), (3, 2), (2, 4), (3, 3)]))
    x = data.draw(elements_strategy(k, n))
    g = data.draw(elements_strategy(k, n))
    assert type_of(conjugate(g, x)) == type_of(x)


@pytest.mark.parametrize("k,n,count", [(2, 2, 5), (2, 3, 10), (1, 3, 3), (1, 4, 5), (3, 2, 9)])
def test_class_count_bruteforce(k, n, count):
    classes = conjugacy_classes_bruteforce(k, n)
    assert len(classes) == count == len(all_types(k, n))
    assert len({c.type for c in classes}) == count
    assert sum(c.size for c in classes) == group_order(k, n)
    for c in classes:
        assert c.size == class_size(c.type)


def test_class_count_formula():
    assert class_count_formula(2, 2) == 5
    assert class_count_formula(3, 2) == 9
    assert all(class_count_formula(1, n) == partition_count(n) for n in range(12))
    for k in (1, 2, 3, 4):
        for n in range(5):
            assert class_count_formula(len(class_order(k)), n) == len(all_types(k, n))


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (1, 3), (3, 2)])
def test_centralizer_formula_against_bruteforce(k, n):
    for t in all_types(k, n):
        x = realize(t)
        assert type_of(x) == t
        assert centralizer_order(t) == centralizer_order_bruteforce(x)


def test_centralizer_identity_is_group_order():
    for k, n in [(1, 5), (2, 4), (3, 3), (4, 2)]:
        ident = all_types(k, n)[0]
        assert ident == type_of(identity(k, n))
        assert centralizer_order(ident) == group_order(k, n)


def test_symmetric_group_centralizers():
    for mu in enumerate_partitions(3):
        t = TypeMatrix.from_counts(1, {((1,), m): mu.count(m) for m in set(mu)})
        expected = 1
        for m in set(mu):
            expected *= m ** mu.count(m) * factorial(mu.count(m))
        assert centralizer_order(t) == expected


def test_type_matrix_json_round_trip():
    for t in all_types(3, 3):
        back = TypeMatrix.from_json(3, json.loads(json.dumps(t.to_json())))
        assert back == t


def test_type_matrix_rejects_wrong_size():
    with pytest.raises(ValueError):
        TypeMatrix.from_counts(2, {((2, 1), 1): 1})


def test_group_cap(monkeypatch):
    with pytest.raises(CapExceededError):
        check_group_cap(3, 8)
    monkeypatch.setenv("WREATHSTAB_MAX_GROUP_ORDER", "7")
    with pytest.raises(CapExceededError):
        check_group_cap(2, 2)
