# -*- coding=utf-8
import itertools
import random

import pytest

from factorable import FactorClientError, GarsideError
from factorable.fixtures import a2_matrix, braid_positive, free_abelian, planted_collision, z2, \
    right_cancellativity_probe
from factorable.garside import CoxeterMatrix, CoxeterGroup, ArtinMonoid, GarsideStructure, GarsideGroup, \
    GroupElement, braid_relations, same_element, square_free_elements, greedy_nf, eta_gaussian, is_e_normal, \
    right_divisors, incremental_prefix_lemma_check, validate_gaussian_hypotheses, garside_structure, \
    computation_rules_check, group_nf, eta_garside_group, norm_explicit_check, _greedy_letters
from factorable.foundation import ball, validate_handle
from factorable.factorability import induced_rewriting_system, check_strong_conditions, \
    longest_effective_sequence, check_recognition_principle, check_graded_equality
from factorable.rewriting import reduce, is_strongly_minimal, check_confluence_on_peaks, effective_sequence_bound, \
    IRREDUCIBLE

A, B, AB, BA, ABA = (u'a',), (u'b',), (u'ab',), (u'ba',), (u'aba',)


def _b2_matrix():
    return CoxeterMatrix([u'a', u'b'], {(u'a', u'b'): 4})


def _a3_matrix():
    return CoxeterMatrix([u'a', u'b', u'c'], {(u'a', u'b'): 3, (u'b', u'c'): 3, (u'a', u'c'): 2})


def _b3_group():
    return GarsideGroup(garside_structure(braid_positive()))


def test_coxeter_matrix():
    """m值对称, 缺省为∞"""
    matrix = a2_matrix()
    assert matrix.order(u'a', u'b') == matrix.order(u'b', u'a') == 3
    assert matrix.order(u'a', u'a') == 1
    assert matrix.to_dict() == {'generators': [u'a', u'b'], 'm': [[u'a', u'b', 3]]}
    assert CoxeterMatrix([u'a', u'b']).order(u'a', u'b') is None
    assert CoxeterMatrix([u'a', u'b'], {(u'a', u'b'): u'inf'}).order(u'a', u'b') is None
    assert braid_relations(matrix) == [((u'a', u'b', u'a'), (u'b', u'a', u'b'))]
    assert matrix.parse_positive(u'abab') == (u'a', u'b', u'a', u'b')


def test_coxeter_matrix_rejects_bad_orders():
    for orders in ({(u'a', u'b'): 1}, {(u'a', u'b'): u'x'}, {(u'a', u'b'): 3, (u'b', u'a'): 4}, {(u'a', u'a'): 2}):
        with pytest.raises(FactorClientError):
            CoxeterMatrix([u'a', u'b'], orders)


def test_coxeter_group_orders():
    """A_2, B_2, A_3的阶与最长元素的长度"""
    for matrix, order, top in ((a2_matrix(), 6, 3), (_b2_matrix(), 8, 4), (_a3_matrix(), 24, 6)):
        group = CoxeterGroup(matrix)
        assert group.order == order
        assert group.length(group.longest()) == top
        w0 = group.longest()
        assert group.inverse(w0) == w0


def test_coxeter_group_infinite():
    with pytest.raises(GarsideError):
        CoxeterGroup(CoxeterMatrix([u'a', u'b']), max_order=50)


def test_same_element():
    """辫关系下的字问题"""
    matrix = a2_matrix()
    assert same_element(matrix, u'aba', u'bab')
    assert same_element(matrix, u'abab', u'aaba')
    assert same_element(matrix, u'abab', u'baba') is False
    assert same_element(matrix, u'ab', u'ba') is False
    assert same_element(CoxeterMatrix([u'a', u'b']), u'ab', u'ba') is False
    assert same_element(matrix, u'a bab', u'aab a')


def test_square_free_counts():
    """无平方元素的个数: A_1为1, A_2为5, B_2为7"""
    assert square_free_elements(CoxeterMatrix([u'a'])) == [(u'a',)]
    words = square_free_elements(a2_matrix())
    assert len(words) == 5
    assert words[-1] == (u'a', u'b', u'a')
    assert len(square_free_elements(_b2_matrix())) == 7


def test_artin_simples():
    monoid = braid_positive()
    assert monoid.simple_names() == [u'a', u'b', u'ab', u'ba', u'aba']
    assert monoid.delta == ABA
    assert len(monoid.generators()) == 5


def test_artin_lcm_and_complements():
    """最小公倍元与补"""
    monoid = braid_positive()
    assert monoid.llcm(u'a', u'b') == u'aba'
    assert monoid.rlcm(u'a', u'b') == u'aba'
    assert monoid.rlcm(u'a', u'ab') == u'ab'
    assert monoid.right_complement(u'a', u'b') == u'ba'
    assert monoid.left_complement(u'a', u'b') == u'ba'
    assert monoid.simple_rgcd(u'ab', u'b') == u'b'
    assert monoid.simple_rgcd(u'ab', u'ba') == u'1'
    assert monoid.rgcd(ABA, AB) == AB
    assert monoid.right_divides(AB, ABA)
    assert not monoid.right_divides(BA, AB)


def test_greedy_normal_form():
    """abab的右贪婪正规形是 a·aba"""
    monoid = braid_positive()
    assert greedy_nf(monoid, u'abab') == (u'a', u'aba')
    assert greedy_nf(monoid, u'a b') == (u'ab',)
    assert greedy_nf(monoid, u'aba aba') == (u'aba', u'aba')
    assert monoid.parse_element(u'bab') == ABA
    assert greedy_nf(z2(), u't') == (u't',)


def test_greedy_normal_form_a3():
    monoid = ArtinMonoid(_a3_matrix())
    assert len(monoid.simple_names()) == 23
    x = monoid.parse_element(u'a c')
    assert x == monoid.parse_element(u'c a')
    assert len(x) == 1


def test_eta_gaussian_and_normality():
    monoid = braid_positive()
    x = monoid.parse_element(u'abab')
    assert eta_gaussian(monoid, x) == (A, ABA)
    assert eta_gaussian(monoid, monoid.one) == ((), ())
    assert is_e_normal(monoid, A, ABA)
    assert not is_e_normal(monoid, A, B)
    assert set(right_divisors(monoid, AB)) == {B, AB}


def test_gaussian_hypotheses():
    monoid = braid_positive()
    assert validate_gaussian_hypotheses(monoid, 3).passed()
    assert incremental_prefix_lemma_check(monoid, radius=2).passed()
    assert right_cancellativity_probe(monoid, 2).passed()


def test_right_cancellativity_finds_planted_collision():
    """右零乘法不满足右消去律"""
    report = right_cancellativity_probe(planted_collision(), 1)
    assert not report.passed()
    assert report.witnesses(u'right cancellative')


def test_garside_structure_b3():
    """D = {a, b, ab, ba, aba}, a* = ba, *a = ab, φ交换a与b"""
    structure = garside_structure(braid_positive())
    assert structure.divisors == [A, B, AB, BA, ABA]
    assert structure.star(A) == BA
    assert structure.left_star(A) == AB
    assert structure.alpha(B) == BA
    assert structure.phi(A) == B
    assert structure.phi(AB) == BA
    assert structure.phi(A, 2) == A
    assert structure.delta_inverse_map(B) == A
    assert structure.llcm(A, B) == ABA
    assert structure.right_complement(A, B) == BA
    assert structure.rgcd(AB, ABA) == AB


def test_computation_rules_b3():
    report = computation_rules_check(garside_structure(braid_positive()))
    assert report.passed()
    assert report.checked(u'star product') == 25


def test_garside_structure_rejects():
    monoid = braid_positive()
    with pytest.raises(GarsideError):
        GarsideStructure(monoid, AB)
    with pytest.raises(GarsideError):
        GarsideStructure(monoid, monoid.one)
    with pytest.raises(FactorClientError):
        garside_structure(free_abelian())


def test_garside_group_needs_divisor_generators():
    """N²中ab是Garside元, 但生成集不是Δ的全部因子"""
    handle = free_abelian()
    structure = GarsideStructure(handle, handle.parse_element(u'a b'))
    assert structure.phi(A) == A
    with pytest.raises(GarsideError):
        GarsideGroup(structure)


def test_group_normal_form():
    """aΔ^{-1} 写作 (ab)^{-1}, 范数为1"""
    group = _b3_group()
    g, word = group_nf(group, u'a aba^-1')
    assert g == GroupElement(A, 1)
    assert word == (u'ab^-1',)
    assert group.norm(g) == 1
    assert group.element_name(g) == u'ab^-1'
    assert eta_garside_group(group, g) == (group.one, g)


def test_group_products():
    group = _b3_group()
    for text in (u'a', u'ab^-1', u'a b^-1 ba', u'aba^-1 aba^-1 b'):
        g = group.parse_element(text)
        assert group.multiply(g, group.inverse(g)) == group.one
        assert group.multiply(group.inverse(g), g) == group.one
    assert group.parse_element(u'aba aba^-1') == group.one
    assert group.delta_power(-2) == GroupElement((), 2)
    assert group.parse_element(u'a^-1') == GroupElement(BA, 1)


def test_group_full_form():
    group = _b3_group()
    g = group.parse_element(u'aba^-1 aba^-1')
    assert group.full_form(g) == ([], [ABA, ABA])
    assert group.to_word(g) == (u'aba^-1', u'aba^-1')
    xs, ys = group.full_form(group.from_positive(group.monoid.parse_element(u'abab'), 1))
    assert xs == [A]
    assert ys == []


def test_norm_explicit():
    """N(aΔ^{-n}) = max(N(a), n) 当且仅当Δ不右整除a"""
    group = _b3_group()
    monoid = group.monoid
    samples = [A, AB, ABA, monoid.parse_element(u'abab')]
    report = norm_explicit_check(group, samples, max_power=2)
    assert report.passed()
    assert report.checked(u'bound') == 8


def test_greedy_normal_form_against_search():
    """半径3的球上, 正规形与逐个找最大右因子的结果一致"""
    monoid = braid_positive()
    elements = ball(monoid, 3)
    assert len(elements) > 5
    for x in elements:
        assert greedy_nf(monoid, x) == tuple(e[0] for e in _greedy_letters(monoid, x)), x


def test_braid_strong_conditions_and_rewriting():
    monoid = braid_positive()
    assert check_strong_conditions(monoid, 3).passed()
    system = induced_rewriting_system(monoid.table)
    assert is_strongly_minimal(system).passed()
    confluence = check_confluence_on_peaks(system)
    assert confluence.passed()
    assert not confluence.non_joinable


def test_braid_rewriting_random_words():
    """1000个长度至多8的随机词都重写到正规形"""
    monoid = braid_positive()
    system = induced_rewriting_system(monoid.table)
    letters = list(system.alphabet)
    rnd = random.Random(8)
    for _ in range(1000):
        word = tuple(rnd.choice(letters) for _ in range(rnd.randint(1, 8)))
        result = reduce(system, word)
        assert result.outcome == IRREDUCIBLE, word
        assert tuple(result.word) == tuple(monoid.normal_form(word)), word


def test_braid_effective_sequences_bounded():
    """f_i序列的长度不超过c(n)"""
    monoid = braid_positive()
    gens = monoid.generators()
    for n in (1, 2, 3):
        bound = effective_sequence_bound(n)
        for tup in itertools.product(gens, repeat=n):
            assert longest_effective_sequence(monoid, tup) <= bound, tup


def test_group_normal_form_is_geodesic():
    """范数不超过3的球上, 范数与规范形的长度都等于D ∪ D^{-1}上的词长"""
    group = _b3_group()
    dist = group.bfs_distances(3)
    assert len(dist) > 20
    for g, d in dist.items():
        assert group.norm(g) == d, g
        assert len(group.to_word(g)) == d, g


def test_group_factorability():
    group = _b3_group()
    assert validate_handle(group, 3).passed()
    assert check_recognition_principle(group, 3).passed()
    assert check_graded_equality(group, 3).passed()


def test_norm_explicit_sampled():
    """200对(a, n)上的范数等式"""
    group = _b3_group()
    elements = ball(group.monoid, 3)
    rnd = random.Random(9)
    samples = [rnd.choice(elements) for _ in range(100)]
    report = norm_explicit_check(group, samples, max_power=2)
    assert report.passed()
    assert report.checked(u'bound') == 200
