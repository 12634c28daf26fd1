import random

from macvogan.cuspidal import CuspidalDatum
from macvogan.partitions import Partition, PartitionFn, twist_fn
from macvogan.zelevinsky import (
    Multisegment,
    Segment,
    constituent_lower_set,
    hp_gl,
    lambda_of,
    pointwise_dominance_down_set,
    random_multisegment,
    twist_multisegment,
)


def triv(q):
    return CuspidalDatum.trivial(q)


def shapes(fns, q):
    return sorted(M(triv(q)).parts for M in fns)


def test_lambda_collects_lengths():
    q = 5
    t1 = CuspidalDatum.from_index(3, q, 1)
    ms = Multisegment(q, [Segment(triv(q), 2), Segment(triv(q), 1), Segment(t1, 1)])
    lam = lambda_of(ms)
    assert lam(triv(q)) == Partition((2, 1))
    assert lam(t1) == Partition((1,))
    assert lam.degree == ms.degree == 4
    assert hp_gl(ms) == lam


def test_constituent_set_uses_reverse_dominance():
    # the GL_2 principal series with trivial inertia (lengths 1,1) has both
    # the trivial and Steinberg-type labels below it
    q = 3
    one_one = PartitionFn(q, {triv(q): (1, 1)})
    two = PartitionFn(q, {triv(q): (2,)})
    assert shapes(constituent_lower_set(one_one), q) == [(1, 1), (2,)]
    assert shapes(constituent_lower_set(two), q) == [(2,)]
    assert len(constituent_lower_set(PartitionFn(q, {triv(q): (1, 1, 1)}))) == 3
    assert shapes(constituent_lower_set(PartitionFn(q, {triv(q): (3,)})), q) == [(3,)]


def test_standard_down_set_is_exposed_separately():
    q = 3
    two = PartitionFn(q, {triv(q): (2,)})
    assert shapes(pointwise_dominance_down_set(two), q) == [(1, 1), (2,)]


def test_hp_commutes_with_twist():
    rng = random.Random(7)
    for q in (3, 5, 7):
        for _ in range(100):
            ms = random_multisegment(q, rng.randint(1, 6), rng)
            b = rng.randrange(q - 1)
            assert hp_gl(twist_multisegment(ms, b)) == twist_fn(hp_gl(ms), b)


def test_random_multisegment_degree_and_json():
    rng = random.Random(3)
    for N in range(1, 7):
        ms = random_multisegment(4, N, rng)
        assert ms.degree == N
        assert Multisegment.from_json_obj(ms.to_json_obj()) == ms
