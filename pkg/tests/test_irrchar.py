from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathgelfand.exactnum import Cyclotomic
from wreathgelfand.irrchar import (
    char_bipartite,
    char_wreath,
    character,
    character_table,
    degree,
    mn_group_ring,
    restriction_decomposition,
    rim_hooks,
)
from wreathgelfand.shapes import (
    SkewShape,
    border_strip_height,
    gather,
    kpartite_partitions,
    parse_shape,
    subpartitions,
)
from wreathgelfand.wreath import class_size, enumerate_group, group_order, type_of


def oracle(lam, rho):
    """Strip border strips found by brute-force subdiagram search."""
    k = len(lam)

    def go(shape, parts):
        if not parts:
            return [1] + [0] * (k - 1)
        (r, c), rest = parts[0], parts[1:]
        acc = [0] * k
        for f, comp in enumerate(shape):
            for inner in subpartitions(comp, sum(comp) - r) if sum(comp) >= r else []:
                h = border_strip_height(SkewShape(comp, inner))
                if h is None:
                    continue
                sub = go(shape[:f] + (inner,) + shape[f + 1:], rest)
                for e, v in enumerate(sub):
                    acc[(e + f * c) % k] += (-1) ** h * v
        return acc

    return Cyclotomic(k, go(lam, gather(rho)))


def hook_length_count(p):
    n = sum(p)
    conj = [sum(1 for x in p if x > j) for j in range(p[0])] if p else []
    hooks = prod(p[i] - j + conj[j] - i - 1 for i in range(len(p)) for j in range(p[i]))
    return factorial(n) // hooks


def test_rim_hooks():
    assert sorted(rim_hooks((5, 4, 2, 1, 1), 9)) == [((3, 1), 4)]
    assert list(rim_hooks((2, 1), 2)) == []
    assert sorted(rim_hooks((2, 1), 3)) == [((), 1)]
    assert list(rim_hooks((2, 2), 3)) == [((1,), 1)]
    assert sorted(rim_hooks((3,), 1)) == [((2,), 0)]


@pytest.mark.parametrize("k,n", [(1, 5), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_matches_strip_oracle(k, n):
    shapes = kpartite_partitions(n, k)
    for lam in shapes:
        for rho in shapes:
            assert char_wreath(lam, rho) == oracle(lam, rho)


def test_bipartite_examples():
    assert char_bipartite(((1, 1), (1,)), ((1, 1), (1,))) == 1
    assert char_bipartite(((1, 1), (1,)), ((), (1, 1, 1))) == -3
    assert char_bipartite(((1, 1), (2, 2)), ((2,), (2, 2))) == 2


@settings(max_examples=40)
@given(st.sampled_from(kpartite_partitions(5, 2)), st.sampled_from(kpartite_partitions(5, 2)), st.randoms())
def test_strip_order_irrelevant(lam, rho, rnd):
    parts = gather(rho)
    rnd.shuffle(parts)
    assert mn_group_ring(lam, rho, parts) == mn_group_ring(lam, rho)


def test_bad_order_rejected():
    with pytest.raises(ValueError):
        mn_group_ring(((2,), ()), ((2,), ()), [(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        char_wreath(((2,), ()), ((1,), ()))


@pytest.mark.parametrize("k,n", [(1, 4), (2, 3), (2, 4), (3, 3)])
def test_row_orthogonality(k, n):
    t = character_table(n, k)
    for i, a in enumerate(t.values):
        for j, b in enumerate(t.values):
            s = sum((x * y.conjugate() * o for x, y, o in zip(a, b, t.class_orders)), Cyclotomic(k))
            assert s == (group_order(n, k) if i == j else 0)


@pytest.mark.parametrize("k,n", [(2, 3), (3, 2)])
def test_column_orthogonality(k, n):
    t = character_table(n, k)
    for j, c in enumerate(t.col_labels):
        col = t.column(c)
        s = sum((v * v.conjugate() for v in col), Cyclotomic(k))
        assert s == group_order(n, k) // class_size(c)


@pytest.mark.parametrize("k,n", [(1, 5), (2, 4), (3, 3)])
def test_degrees(k, n):
    total = 0
    for lam in kpartite_partitions(n, k):
        d = degree(lam)
        sizes = [sum(p) for p in lam]
        expect = factorial(n) // prod(factorial(s) for s in sizes) * prod(hook_length_count(p) for p in lam if p)
        assert d == expect
        total += d * d
    assert total == group_order(n, k)


def test_h3_degree_sum():
    assert sum(degree(lam) ** 2 for lam in kpartite_partitions(3, 2)) == 48


def test_cyclic_group_table():
    t = character_table(1, 3)
    z = Cyclotomic(3, [0, 1])
    for lam in t.row_labels:
        f = next(i for i, p in enumerate(lam) if p)
        for rho in t.col_labels:
            c = next(i for i, p in enumerate(rho) if p)
            assert t.value(lam, rho) == z ** (f * c)


def test_character_on_elements_is_class_function():
    lam = parse_shape("1|1")
    for x in enumerate_group(2, 2):
        assert character(lam, x) == char_wreath(lam, type_of(x))


def test_restriction_numerically():
    for lam in kpartite_partitions(3, 2):
        below = restriction_decomposition(lam)
        for h in enumerate_group(2, 2):
            lhs = character(lam, h.embed(3))
            assert lhs == sum((character(mu, h) for mu in below), Cyclotomic(2))
    with pytest.raises(ValueError):
        restriction_decomposition(((), ()))


def test_table_accessors():
    t = character_table(2, 2)
    assert len(t.row_labels) == 5
    assert t.row(((2,), ())) == [Cyclotomic(2, [1])] * 5
    assert t.value(((), (2,)), ((), (2,))) == Fraction(-1)
