# -*- coding=utf-8
import itertools
import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from factorable import FactorClientError, MorseMatchingError, ChainComplexError
from factorable.fixtures import z2, cyclic, free_abelian, braid_positive, s3_transpositions, appendix_monoid
from factorable.morse import FormalChain, MorseMatching, IntegerChainComplex, HomologyResult, face, \
    bar_differential, height, classify, matching_mu, redundant_chain, visy_basis, visy_differential_lambda, \
    visy_differential_coherent, morse_differential_generic, theta_reduce, prp_residual, homology, visy_complex, \
    bar_complex_truncated, is_coherent, f_cell, xi_cell, ESSENTIAL, COLLAPSIBLE, REDUNDANT, METHODS
from factorable.indexseq import enumerate_small, is_rightmost, is_reduced, is_small
from factorable.snf import SparseMatrix, elementary_divisors, rank

A, B = (u'a',), (u'b',)
AB = (u'b', u'a')
AA = (u'a', u'a')


def _sparse(dense):
    matrix = SparseMatrix(len(dense), len(dense[0]) if dense else 0)
    for r, row in enumerate(dense):
        for c, v in enumerate(row):
            matrix.add(r, c, v)
    return matrix


def _sympy_divisors(dense):
    snf = smith_normal_form(Matrix(dense), domain=ZZ)
    return sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)


def test_elementary_divisors():
    """Smith正规形的对角线"""
    assert elementary_divisors(_sparse([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])) == [2, 6, 12]
    assert elementary_divisors(_sparse([[2, 0], [0, 3]])) == [1, 6]
    assert elementary_divisors(SparseMatrix(3, 2)) == []
    assert rank(_sparse([[1, 2], [2, 4]])) == 1


def test_elementary_divisors_against_sympy():
    """与sympy的smith_normal_form比较"""
    rnd = random.Random(20)
    for _ in range(30):
        nrows, ncols = rnd.randint(1, 5), rnd.randint(1, 5)
        dense = [[rnd.randint(-6, 6) for _ in range(ncols)] for _ in range(nrows)]
        if not any(any(row) for row in dense):
            continue
        assert elementary_divisors(_sparse(dense)) == _sympy_divisors(dense), dense


def test_sparse_matrix():
    m = SparseMatrix(2, 2)
    m.add(0, 1, 3)
    m.add(0, 1, -3)
    assert m.is_zero()
    with pytest.raises(FactorClientError):
        m.add(2, 0, 1)
    p = _sparse([[1, 1]]).multiply(_sparse([[1], [-1]]))
    assert p.is_zero()


def test_formal_chain():
    chain = FormalChain({(A,): 2})
    chain.add((A,), -2)
    assert chain.is_zero()
    chain.add_chain(FormalChain({(B,): 1}), factor=3)
    assert chain.coefficient((B,)) == 3


def test_faces_and_bar_differential():
    """d_0去掉最右, d_n去掉最左, 中间的面相乘"""
    handle = free_abelian()
    cell = (A, B)
    assert face(handle, cell, 0) == (A,)
    assert face(handle, cell, 1) == (AB,)
    assert face(handle, cell, 2) == (B,)
    d = bar_differential(handle, cell)
    assert d == FormalChain({(A,): 1, (AB,): -1, (B,): 1})
    assert face(z2(), (u't', u't'), 1) is None


def test_classify_cells():
    """本质, 可坍缩与冗余胞腔"""
    handle = free_abelian()
    assert classify(handle, (A, B)) == (ESSENTIAL, 2)
    assert classify(handle, (B, A)) == (COLLAPSIBLE, 1)
    assert classify(handle, (AB,)) == (REDUNDANT, 0)
    assert classify(handle, (AA, B)) == (REDUNDANT, 1)
    assert height(handle, (AA, B)) == 1
    with pytest.raises(FactorClientError):
        classify(z2(), (u'1',))


def test_matching_mu_pairs_cells():
    handle = free_abelian()
    assert matching_mu(handle, (B, A)) == (AB,)
    assert matching_mu(handle, (AB,)) == (B, A)
    assert matching_mu(handle, (AA, B)) == (A, A, B)
    with pytest.raises(MorseMatchingError):
        matching_mu(handle, (A, B))


def test_partner_boundary_and_theta():
    """θ把冗余胞腔换成本质胞腔的组合"""
    handle = free_abelian()
    matching = MorseMatching(handle)
    chain, epsilon = matching.partner_boundary((AB,))
    assert epsilon == -1
    assert chain.coefficient((A,)) == 1
    reduced = theta_reduce(matching, FormalChain({(AB,): 1}))
    assert reduced == FormalChain({(A,): 1, (B,): 1})


def test_redundant_chain():
    """范数和不变的链上记录的高度序列是小序列"""
    handle = free_abelian()
    cert = redundant_chain(handle, (AA, B))
    assert cert.cells == [(AA, B), (A, AB)]
    assert cert.longest == 2
    assert cert.sequences == [(1,)]
    with pytest.raises(FactorClientError):
        redundant_chain(handle, (A, B))


def test_visy_basis():
    assert visy_basis(free_abelian(), 0) == [()]
    assert visy_basis(free_abelian(), 2) == [(A, B)]
    assert visy_basis(free_abelian(), 3) == []
    assert visy_basis(z2(), 3) == [(u't', u't', u't')]
    assert len(visy_basis(braid_positive(), 1)) == 5


def _fixture_handles():
    return [z2(), cyclic(3), free_abelian(), braid_positive(), appendix_monoid(), s3_transpositions()]


def test_visy_differentials_agree():
    """三种微分在3维以下的本质胞腔上一致"""
    for handle in _fixture_handles():
        matching = MorseMatching(handle)
        for degree in (1, 2, 3):
            for cell in visy_basis(handle, degree):
                expected = visy_differential_lambda(handle, cell, matching)
                assert visy_differential_coherent(handle, cell, matching) == expected, cell
                assert morse_differential_generic(matching, cell) == expected, cell


def test_generic_differential_free_abelian():
    """[a|b]经过冗余面[ab]的zigzag后微分为零"""
    handle = free_abelian()
    matching = MorseMatching(handle)
    assert morse_differential_generic(matching, (A, B)).is_zero()
    result = homology(visy_complex(handle, 3, method=u'generic'))
    assert result.to_lines() == [u'H_0 = Z', u'H_1 = Z^2', u'H_2 = Z']


def test_z2_differential():
    handle = z2()
    t = u't'
    assert visy_differential_lambda(handle, (t, t)) == FormalChain({(t,): 2})
    assert visy_differential_lambda(handle, (t, t, t)).is_zero()


def test_prp_residual_vanishes():
    """Λ∖F_x上的交错和在4维以下的本质胞腔上为零"""
    for handle in _fixture_handles():
        for degree in (1, 2, 3, 4):
            for cell in visy_basis(handle, degree):
                assert prp_residual(handle, cell).is_zero(), cell


def test_square_zero_through_degree_5():
    for handle in _fixture_handles():
        assert visy_complex(handle, 5).check_square_zero()


def test_homology_z2():
    """Z/2的同调: Z, Z/2, 0, Z/2, 0, Z/2"""
    result = homology(visy_complex(z2(), 6))
    assert result.to_lines() == [
        u'H_0 = Z', u'H_1 = Z/2', u'H_2 = 0', u'H_3 = Z/2', u'H_4 = 0', u'H_5 = Z/2',
    ]


def test_homology_methods_and_threads():
    handle = z2()
    results = [homology(visy_complex(handle, 4, method)) for method in METHODS]
    assert results[0] == results[1] == results[2]
    single = visy_complex(free_abelian(), 3)
    threaded = visy_complex(free_abelian(), 3, num_threads=3)
    for k in (1, 2, 3):
        assert single.differential(k) == threaded.differential(k)


def test_homology_free_abelian():
    """N²的同调与环面相同"""
    result = homology(visy_complex(free_abelian(), 3))
    assert result.to_lines() == [u'H_0 = Z', u'H_1 = Z^2', u'H_2 = Z']


def test_homology_braid_monoid():
    """B_3⁺的同调: Z, Z, 0"""
    result = homology(visy_complex(braid_positive(), 3))
    assert [result.group_text(k) for k in range(3)] == [u'Z', u'Z', u'0']


def test_homology_s3_against_bar():
    """S_3: Visy复形与约化bar复形给出相同的同调"""
    handle = s3_transpositions()
    visy = homology(visy_complex(handle, 4))
    bar = homology(bar_complex_truncated(handle, 4))
    assert visy == bar
    assert visy.to_lines() == [u'H_0 = Z', u'H_1 = Z/2', u'H_2 = 0', u'H_3 = Z/6']


def test_z2_bar_complex_against_sympy():
    complex = bar_complex_truncated(z2(), 3)
    for k in (1, 2, 3):
        dense = complex.differential(k).to_dense()
        if any(any(row) for row in dense):
            assert elementary_divisors(complex.differential(k)) == _sympy_divisors(dense)


def test_homology_needs_next_degree():
    complex = visy_complex(z2(), 2)
    with pytest.raises(FactorClientError):
        homology(complex, max_degree=2)


def test_chain_complex_square_zero():
    one = SparseMatrix(1, 1, {(0, 0): 1})
    complex = IntegerChainComplex([[u'x'], [u'y'], [u'z']], {1: one, 2: one})
    with pytest.raises(ChainComplexError):
        complex.check_square_zero()


def test_homology_result_text():
    result = HomologyResult([(1, []), (0, [2]), (0, []), (2, [3])])
    assert result.to_lines() == [u'H_0 = Z', u'H_1 = Z/2', u'H_2 = 0', u'H_3 = Z^2 (+) Z/3']
    assert result.to_dict()[3] == {'degree': 3, 'rank': 2, 'torsion': [3]}


def test_complex_arguments():
    with pytest.raises(FactorClientError):
        visy_complex(z2(), 2, method=u'fast')
    with pytest.raises(FactorClientError):
        bar_complex_truncated(free_abelian(), 2)


def test_xi_cell_is_an_involution():
    """ξ² = id, 不动点处f_I(x)为零, 其余处#I的奇偶性改变且f_I(x)不变"""
    for handle in (braid_positive(), z2(), s3_transpositions()):
        for degree in (2, 3):
            for cell in visy_basis(handle, degree):
                for seq in enumerate_small(degree - 1):
                    if is_coherent(handle, cell, seq):
                        continue
                    image = xi_cell(handle, cell, seq)
                    if image == seq:
                        assert f_cell(handle, cell, seq) is None
                        continue
                    assert xi_cell(handle, cell, image) == seq
                    assert abs(len(image) - len(seq)) == 1
                    assert f_cell(handle, cell, image) == f_cell(handle, cell, seq)


def test_appendix_redundant_chains_terminate():
    """附录幺半群: 生成元元组的冗余面出发的链都终止, 记录的序列是右极, 约化的小序列"""
    handle = appendix_monoid()
    matching = MorseMatching(handle)
    letters = handle.generators()
    columns = [[g for g in letters if g[0][0] == c] for c in u'abcd']
    tuples = list(itertools.product(letters, repeat=2)) + list(itertools.product(letters, repeat=3)) + \
        list(itertools.product(*columns))
    starts = set()
    for tup in tuples:
        for i in range(1, len(tup)):
            d = face(handle, tup, i)
            if d is not None and matching.classify(d).kind == REDUNDANT:
                starts.add(d)
    assert starts
    for start in sorted(starts, key=repr):
        cert = redundant_chain(handle, start, matching=matching)
        assert cert.longest >= 1 and cert.cells[0] == start
        for seq in cert.sequences:
            assert is_rightmost(seq) and is_reduced(seq) and is_small(seq), (start, seq)
