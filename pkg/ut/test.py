# -*- coding=utf-8
import logging
import sys

import pytest

from factorable import FactorConfig
from factorable import FactorClientError, FactorStructureError, FactorBudgetError
from factorable.fac_comm import parse_word, format_word, crc64, check_crc64, sign
from factorable.fac_exception import FactorSpecError
from factorable.fac_threadpool import run_tasks, ColumnPool
from factorable.foundation import Alphabet, FiniteMonoid, AxiomReport, validate_handle, word_norm_bfs, ball
from factorable.factorability import PhiTable, PhiMonoid, phi_i, normal_form, f_i, check_local_factorability, \
    induced_rewriting_system, check_recognition_principle, check_graded_equality, check_strong_conditions, \
    check_weak_factorability, longest_effective_sequence, search_factorability
from factorable.rewriting import RewriteRule, RewriteSystem, reduce, apply_rule, rewrite_positions, replay, \
    is_irreducible, is_strongly_minimal, critical_pairs, check_confluence_on_peaks, effective_sequence_bound, \
    is_singleton_class, IRREDUCIBLE, CYCLE_FOUND, BUDGET_EXHAUSTED
from factorable.fixtures import APPENDIX_PHI_DATA, APPENDIX_CRC64, appendix_table, z2, cyclic, cyclic_single, \
    free_abelian, s3_table, planted_collision

logging.basicConfig(level=logging.INFO, stream=sys.stdout)


def _commuting_system():
    # b a -> a b, 不可约词是 a...a b...b
    return RewriteSystem([u'a', u'b'], [RewriteRule((u'b', u'a'), (u'a', u'b'))])


def test_parse_and_format_word():
    """词的解析与格式化, 1表示空词"""
    assert parse_word(u'a b 1 c') == (u'a', u'b', u'c')
    assert parse_word(u'1') == ()
    assert parse_word(u'') == ()
    assert format_word(()) == u'1'
    assert format_word((u'a', u'b')) == u'a b'
    with pytest.raises(FactorClientError):
        parse_word(u'a x', Alphabet([u'a', u'b']))


def test_alphabet_rejects_bad_letters():
    """字母表不接受单位元记号与重复字母"""
    for letters in ([u'a', u'1'], [u'a', u'a'], [u'a b']):
        try:
            Alphabet(letters)
            assert False
        except FactorClientError as e:
            print(e)
    alphabet = Alphabet([u'x', u'y'])
    assert alphabet.index(u'y') == 1
    assert u'x' in alphabet and u'z' not in alphabet


def test_crc64_of_embedded_data():
    """内嵌φ数据的校验值"""
    assert crc64(APPENDIX_PHI_DATA) == APPENDIX_CRC64
    assert check_crc64(APPENDIX_PHI_DATA, APPENDIX_CRC64, 'appendix') == APPENDIX_CRC64
    with pytest.raises(FactorSpecError):
        check_crc64(APPENDIX_PHI_DATA + u' ', APPENDIX_CRC64, 'appendix')


def test_sign():
    assert sign(0) == 1
    assert sign(3) == -1


def test_config_validation():
    """配置参数校验"""
    config = FactorConfig(Radius=3, NumThreads=2)
    assert config.get_radius() == 3
    assert config.get_num_threads() == 2
    assert config.to_dict()['Strategy'] == u'rightmost'
    for kwargs in ({'Radius': -1}, {'Budget': 0}, {'NumThreads': 0}, {'Strategy': 'random'}, {'MaxDegree': 1.5}):
        with pytest.raises(FactorClientError):
            FactorConfig(**kwargs)


def test_run_tasks_keeps_order():
    """多线程执行的结果与输入同序"""
    items = list(range(20))
    assert run_tasks(lambda x: x * x, items, num_threads=4) == [x * x for x in items]
    assert run_tasks(lambda x: x + 1, items) == [x + 1 for x in items]


def test_run_tasks_raises_first_error():
    def work(x):
        if x == 3:
            raise FactorStructureError('bad item', witness=x)
        return x

    with pytest.raises(FactorStructureError):
        run_tasks(work, range(6), num_threads=3)


def test_column_pool_keeps_order():
    """结果按下标排列, 多个失败时抛出下标最小的异常"""
    pool = ColumnPool(lambda x: -x, num_threads=3)
    assert pool.map(range(7)) == [0, -1, -2, -3, -4, -5, -6]

    def work(x):
        if x in (2, 5):
            raise FactorStructureError('bad item {0}'.format(x), witness=x)
        return x

    try:
        ColumnPool(work, num_threads=2).map(range(6))
        assert False
    except FactorStructureError as e:
        assert e.get_witness() == 2


def test_finite_monoid_checks_associativity():
    """乘法表不满足结合律时抛出FactorStructureError"""
    names = [u'1', u'a', u'b']
    table = {}
    for x in names:
        table[(u'1', x)] = x
        table[(x, u'1')] = x
    table.update({(u'a', u'a'): u'b', (u'a', u'b'): u'a', (u'b', u'a'): u'b', (u'b', u'b'): u'a'})
    try:
        FiniteMonoid(names, table, u'1', [u'a'])
        assert False
    except FactorStructureError as e:
        assert e.get_witness() is not None


def test_finite_monoid_missing_product():
    with pytest.raises(FactorClientError):
        FiniteMonoid([u'1', u'a'], {(u'1', u'1'): u'1'}, u'1', [u'a'])


def test_validate_handle_z2():
    """Z/2满足全部分解公理"""
    report = validate_handle(z2(), 4)
    assert report.passed()
    assert report.checked(u'F1') == 2


def test_validate_handle_cyclic():
    report = validate_handle(cyclic(4), 3)
    assert report.passed()


def test_word_norm_bfs():
    """广度优先搜索得到的词长"""
    handle = free_abelian()
    x = handle.parse_element(u'a b a')
    assert word_norm_bfs(handle, x, 3) == 3
    assert handle.norm(x) == 3
    with pytest.raises(FactorBudgetError):
        word_norm_bfs(handle, x, 2)


def test_ball_order():
    handle = z2()
    assert ball(handle, 3) == [u'1', u't']


def test_generator_word():
    """沿η拆出的生成元序列"""
    handle = free_abelian()
    x = handle.parse_element(u'a b')
    assert x == (u'b', u'a')
    assert handle.generator_word(x) == [(u'b',), (u'a',)]
    assert handle.generator_word(handle.one) == []


def test_axiom_report_text():
    report = AxiomReport(u'demo')
    report.record(u'one', True)
    report.record(u'two', False, (1, 2), u'pair (1, 2)')
    report.skip(u'three', u'not applicable')
    assert not report.passed()
    assert report.failures() == [u'two']
    assert report.witnesses(u'two') == [(1, 2)]
    assert report.is_skipped(u'three')
    text = report.to_text()
    assert text.startswith(u'demo: FAIL')
    assert u'witness pair (1, 2)' in text


def test_phi_table_unit_values():
    """φ(s, 1) = (1, s), φ(1, s) = (1, s)"""
    table = appendix_table()
    assert table.phi(u'a1', u'1') == (u'1', u'a1')
    assert table.phi(u'1', u'a1') == (u'1', u'a1')
    assert table.phi(u'c2', u'd1') == (u'c3', u'd2')
    assert table.phi(u'g2', u'd1') == (u'h2', u'i')
    assert table.phi(u'a1', u'c1') == (u'a1', u'c1')
    assert len(table.unstable_pairs()) == 18


def test_phi_table_rejects_unit_override():
    with pytest.raises(FactorClientError):
        PhiTable([u'a'], {(u'a', u'1'): (u'a', u'1')})


def test_phi_i_positions():
    """φ_i作用在位置(i+1, i), 位置1在最右"""
    table = appendix_table()
    tup = (u'a1', u'b1', u'c1')
    assert phi_i(table, tup, 2) == (u'a2', u'b2', u'c1')
    assert phi_i(table, tup, 1) == tup
    with pytest.raises(FactorClientError):
        phi_i(table, tup, 3)


def test_normal_form():
    """递归正规形"""
    table = appendix_table()
    assert normal_form(table, [u'a2', u'b3']) == (u'e2',)
    assert normal_form(table, [u'a1', u'b1']) == (u'a2', u'b2')
    assert normal_form(free_abelian().table, [u'a', u'b', u'a']) == (u'b', u'a', u'a')
    assert normal_form(table, []) == ()


def test_local_factorability_appendix():
    """反例的φ表满足局部可分解性的全部公理"""
    report = check_local_factorability(appendix_table())
    assert report.passed()
    assert report.checked(u'triple stability') == 27 ** 3
    assert report.details[u'normal form triples'] == [
        (u'a1', u'b6', u'c6'), (u'a2', u'b3', u'c3'), (u'e2', u'c2', u'd1'), (u'e3', u'c5', u'd2'),
    ]
    assert report.checked(u'normal form') == 4
    assert report.violations(u'normal form') == 0


def test_local_factorability_broken_idempotency():
    table = PhiTable([u'a', u'b'], {(u'a', u'b'): (u'b', u'a'), (u'b', u'a'): (u'a', u'b')})
    report = check_local_factorability(table)
    assert not report.passed(u'idempotency')
    assert (u'a', u'b') in report.witnesses(u'idempotency')


def test_induced_rewriting_system():
    """每个不稳定对给出一条规则, 右侧去掉单位元"""
    system = induced_rewriting_system(appendix_table())
    assert len(system) == 18
    rules = dict((r.lhs, r.rhs) for r in system.rules)
    assert rules[(u'a2', u'b3')] == (u'e2',)
    assert rules[(u'f2', u'h2')] == (u'j', u'k')
    assert is_strongly_minimal(system).passed(u'rhs irreducible')


def test_f_i():
    handle = free_abelian()
    a, b = (u'a',), (u'b',)
    assert f_i(handle, (a, b), 1) == ((u'b',), (u'a',))
    assert f_i(handle, (b, a), 1) == (b, a)


def test_recognition_principle():
    """Z/m取全部非平凡元素时可分解, 只取一个生成元时识别原则失败"""
    assert check_recognition_principle(z2(), 3).passed()
    assert check_recognition_principle(cyclic(3), 3).passed()
    report = check_recognition_principle(cyclic_single(3), 3)
    assert not report.passed()


def test_graded_equality_and_strong_conditions():
    handle = free_abelian()
    assert check_graded_equality(handle, 3).passed()
    assert check_strong_conditions(handle, 3).passed()
    assert check_weak_factorability(handle, 3).passed()
    assert check_graded_equality(z2(), 3).passed()


def test_longest_effective_sequence():
    """每步都改变元组的f序列长度"""
    handle = free_abelian()
    a, b = (u'a',), (u'b',)
    assert longest_effective_sequence(handle, (a, b)) == 1
    assert longest_effective_sequence(handle, (a, a, b)) == 2
    assert longest_effective_sequence(handle, (a, b, b)) <= effective_sequence_bound(2)


def test_search_factorability_s3():
    """S_3与全部对换存在可分解结构"""
    found = search_factorability(s3_table(), limit=1)
    assert len(found) == 1
    eta = found[0]
    assert eta[u't12'] == (u'1', u't12')


def test_search_factorability_needs_finite():
    with pytest.raises(FactorClientError):
        search_factorability(free_abelian())


def test_search_factorability_budget():
    with pytest.raises(FactorBudgetError):
        search_factorability(s3_table(), budget=1, limit=None)


def test_reduce_strategies():
    """最右与最左策略都得到唯一的不可约词"""
    system = _commuting_system()
    word = (u'b', u'b', u'a', u'a')
    right = reduce(system, word)
    left = reduce(system, word, strategy=u'leftmost')
    assert right.outcome == IRREDUCIBLE
    assert right.word == left.word == (u'a', u'a', u'b', u'b')
    assert len(right.trace) == 4
    assert replay(system, right.trace) == right.word
    assert right.trace.lines()[0].startswith(u'pos=')


def test_reduce_cycle_and_budget():
    system = RewriteSystem([u'a', u'b'], [((u'a',), (u'b',)), ((u'b',), (u'a',))])
    result = reduce(system, (u'a',))
    assert result.outcome == CYCLE_FOUND
    assert len(result.cycle) == 2
    growing = RewriteSystem([u'a'], [((u'a',), (u'a', u'a'))])
    result = reduce(growing, (u'a',), budget=5)
    assert result.outcome == BUDGET_EXHAUSTED
    assert len(result.trace) == 5


def test_reduce_bad_arguments():
    system = _commuting_system()
    with pytest.raises(FactorClientError):
        reduce(system, (u'a',), budget=0)
    with pytest.raises(FactorClientError):
        reduce(system, (u'a',), strategy=u'random')
    with pytest.raises(FactorClientError):
        reduce(system, (u'a',), strategy=u'follow')


def test_apply_rule_positions():
    """位置是出现段最右字母的位置"""
    system = _commuting_system()
    word = (u'b', u'a', u'b')
    assert [r.position for r in rewrite_positions(system, word)] == [2]
    assert apply_rule(system, word, 0, 2) == (u'a', u'b', u'b')
    with pytest.raises(FactorClientError):
        apply_rule(system, word, 0, 1)
    assert is_irreducible(system, (u'a', u'b'))


def test_critical_pairs_and_confluence():
    """ab->c, bc->a 在abc上有不可汇合的临界峰"""
    system = RewriteSystem([u'a', u'b', u'c'], [((u'a', u'b'), (u'c',)), ((u'b', u'c'), (u'a',))])
    pairs = critical_pairs(system)
    assert len(pairs) == 1
    assert pairs[0].peak == (u'a', u'b', u'c')
    report = check_confluence_on_peaks(system)
    assert not report.passed()
    assert len(report.non_joinable) == 1
    assert check_confluence_on_peaks(_commuting_system()).passed()


def test_effective_sequence_bound():
    assert [effective_sequence_bound(n) for n in (1, 2, 3, 4)] == [1, 4, 16, 55]
    with pytest.raises(FactorClientError):
        effective_sequence_bound(0)


def test_singleton_class():
    system = _commuting_system()
    assert is_singleton_class(system, (u'a', u'a'))
    assert not is_singleton_class(system, (u'a', u'b'))


def test_planted_collision_table():
    """右零乘法表: 每个元素的乘积等于右因子"""
    handle = planted_collision()
    assert handle.multiply(u'a', u'b') == handle.multiply(u'b', u'b') == u'b'
    assert handle.multiply(u'a', u'1') == u'a'


if __name__ == "__main__":
    test_local_factorability_appendix()
    test_reduce_strategies()
