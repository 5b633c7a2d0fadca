# -*- coding=utf-8
import itertools

import pytest

from factorable import FactorClientError, FactorStructureError
from factorable.fixtures import free_abelian
from factorable.indexseq import is_leftmost, is_rightmost, is_reduced, leftmost_reduced, rightmost_reduced, \
    j_blocks, is_small, is_small_oracle, enumerate_small, segment_I, segment_J, D_sequence, evaluate_f, \
    check_absorption_D, xi_involution


def _xi(seq):
    # 序列中值为2的位置不稳定, 其余稳定
    seq = tuple(seq)
    return xi_involution(seq, lambda s: False, lambda t: seq[len(seq) - t] != 2)


def test_leftmost_rightmost():
    assert is_rightmost((1, 3, 2))
    assert not is_rightmost((3, 1, 2))
    assert is_leftmost((3, 1, 2))
    assert is_reduced((1, 2, 1))
    assert not is_reduced((1, 1))
    with pytest.raises(FactorClientError):
        is_rightmost((0, 1))


def test_reduced_representatives():
    """交换可交换的相邻项并收缩平方"""
    assert rightmost_reduced((3, 1, 2)) == (1, 3, 2)
    assert leftmost_reduced((1, 3, 2)) == (3, 1, 2)
    assert rightmost_reduced((3, 1, 3)) == (1, 3)
    assert rightmost_reduced((2, 2, 1, 1)) == (2, 1)
    assert rightmost_reduced(()) == ()


def test_j_blocks():
    assert j_blocks((1, 3, 2, 1)) == [(1, 1), (1, 3)]
    assert j_blocks((2, 1, 2)) == [(1, 2), (2, 2)]
    with pytest.raises(FactorClientError):
        j_blocks((3, 1))


def test_segments_and_D():
    assert segment_I(2, 4) == (2, 3, 4)
    assert segment_J(2, 4) == (4, 3, 2)
    assert D_sequence(1) == (1,)
    assert D_sequence(3) == (3, 2, 3, 1, 2, 3)
    with pytest.raises(FactorClientError):
        segment_I(3, 2)


def test_enumerate_small_counts():
    """Λ_1有2个序列, Λ_2有6个序列"""
    assert enumerate_small(0) == [()]
    assert enumerate_small(1) == [(), (1,)]
    assert enumerate_small(2) == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
    assert len(enumerate_small(2, include_empty=False)) == 5
    for seq in enumerate_small(3):
        assert is_rightmost(seq) and is_reduced(seq) and is_small(seq)


def test_small_sequences():
    """含(k+1, k, k+1)因子的序列不是小序列"""
    assert is_small((1, 2, 1))
    assert is_small((2, 3, 2))
    assert not is_small((2, 1, 2))
    assert not is_small((3, 1, 2, 3))
    assert not is_small((2, 1, 2, 1))


def test_small_oracle_agrees():
    """F_3中长度至多6的全部序列上两种判定一致"""
    count = 0
    for length in range(0, 7):
        for seq in itertools.product((1, 2, 3), repeat=length):
            assert is_small(seq) == is_small_oracle(seq, 1), seq
            count += 1
    assert count == 1093


def test_lambda3_contains_xi_example():
    xi_example = {(3, 2, 1), (1, 3, 2, 1), (2, 1, 3, 2, 1), (1, 2, 1, 3, 2, 1), (2, 3, 2, 1), (1, 2, 3, 2, 1)}
    assert xi_example <= set(enumerate_small(3))


def test_xi_pairs():
    """ξ把成对的序列互换"""
    pairs = [
        ((3, 2, 1), (2, 3, 2, 1)),
        ((1, 3, 2, 1), (1, 2, 3, 2, 1)),
        ((2, 1, 3, 2, 1), (1, 2, 1, 3, 2, 1)),
    ]
    for x, y in pairs:
        assert _xi(x) == y
        assert _xi(y) == x


def test_xi_fixes_zero():
    seq = (2, 1)
    assert xi_involution(seq, lambda s: True, lambda t: False) == seq
    with pytest.raises(FactorStructureError):
        xi_involution(seq, lambda s: False, lambda t: False)


def test_evaluate_f():
    handle = free_abelian()
    a, b = (u'a',), (u'b',)
    assert evaluate_f(handle, (1,), (a, b)) == (b, a)
    assert evaluate_f(handle, (2, 1), (a, a, b)) == (b, a, a)
    with pytest.raises(FactorClientError):
        evaluate_f(handle, (2,), (a, b))


def test_absorption_D():
    """D_2吸收任意f序列"""
    handle = free_abelian()
    a, b = (u'a',), (u'b',)
    samples = list(itertools.product((a, b), repeat=3))
    report = check_absorption_D(handle, 2, samples)
    assert report.passed()
    assert report.checked(u'power of I') == 8
