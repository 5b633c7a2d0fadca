# -*- coding=utf-8
import pytest

from factorable import FactorClientError, FactorSpecError
from factorable.factorability import PhiMonoid, induced_rewriting_system
from factorable.fixtures import APPENDIX_CYCLE_WORD, APPENDIX_CYCLE_SCHEDULE, appendix_table, appendix_monoid, \
    parse_phi_data, gamma, GammaInvolution, a2_matrix, fixture_names, get_fixture, fixture_spec, EXPORTABLE, \
    right_cancellativity_probe
from factorable.foundation import FiniteMonoid
from factorable.garside import ArtinMonoid
from factorable.morse import homology, visy_complex
from factorable.rewriting import reduce, FOLLOW, CYCLE_FOUND, IRREDUCIBLE
from factorable.spec_file import loads_spec, dumps_spec, build_handle, build_garside, handle_to_doc, \
    loads_coxeter_xml, dumps_coxeter_xml

A2_XML = u"""<CoxeterMatrix>
    <Generator>a</Generator>
    <Generator>b</Generator>
    <Edge s="a" t="b" m="3"></Edge>
</CoxeterMatrix>"""


def test_appendix_rewriting_cycle():
    """按位置表3,2,1,2重写 a1 b1 c1 d1, 8步后回到起点"""
    system = induced_rewriting_system(appendix_table())
    result = reduce(system, APPENDIX_CYCLE_WORD, strategy=FOLLOW, positions=APPENDIX_CYCLE_SCHEDULE)
    assert result.outcome == CYCLE_FOUND
    assert result.word == APPENDIX_CYCLE_WORD
    assert len(result.cycle) == 8
    assert result.to_text() == u'CycleFound(a1 b1 c1 d1, 8 steps)'
    assert [p for _, p in result.cycle.steps] == APPENDIX_CYCLE_SCHEDULE


def test_appendix_normal_form_is_irreducible():
    """正规形在诱导的重写系统中不可约"""
    monoid = appendix_monoid()
    system = induced_rewriting_system(monoid.table)
    x = monoid.parse_element(u'a1 b1 c1 d1')
    assert reduce(system, x).outcome == IRREDUCIBLE
    assert reduce(system, x).word == x
    assert monoid.parse_element(u'a2 b3') == (u'e2',)


def test_parse_phi_data():
    rules = parse_phi_data(u'x y -> 1 z\n\nz x -> x z\n')
    assert rules[(u'x', u'y')] == (u'1', u'z')
    with pytest.raises(FactorSpecError):
        parse_phi_data(u'x y z\n')
    with pytest.raises(FactorSpecError):
        parse_phi_data(u'x y -> 1 z\nx y -> y x\n')


def test_gamma_involution():
    """γ是对合且与φ相容"""
    g = gamma()
    assert g(u'b1') == u'b4' and g(u'b4') == u'b1'
    assert g(u'i') == u'i'
    assert g.check(appendix_table()).passed()


def test_gamma_rejects_double_images():
    with pytest.raises(FactorClientError):
        GammaInvolution({u'a1': u'a2', u'a2': u'b1'})
    broken = GammaInvolution({u'a1': u'b1'})
    assert not broken.check(appendix_table()).passed(u'phi compatible')


def test_fixture_registry():
    names = fixture_names()
    assert names[0] == u'appendix'
    for name in (u'trivial', u'planted_collision', u'cyclic_single3'):
        assert name in names and name not in EXPORTABLE
    assert isinstance(get_fixture(u'b3'), ArtinMonoid)
    with pytest.raises(FactorClientError):
        get_fixture(u'nope')
    with pytest.raises(FactorClientError):
        fixture_spec(u'trivial')


def test_spec_round_trip_finite():
    """导出再读入的z2给出相同的同调"""
    text = dumps_spec(fixture_spec(u'z2'))
    assert text.endswith(u'\n')
    doc = loads_spec(text)
    assert doc['kind'] == u'finite-table'
    handle = build_handle(doc)
    assert isinstance(handle, FiniteMonoid)
    assert homology(visy_complex(handle, 4)).to_lines() == [u'H_0 = Z', u'H_1 = Z/2', u'H_2 = 0', u'H_3 = Z/2']


def test_spec_round_trip_phi():
    doc = loads_spec(dumps_spec(fixture_spec(u'appendix')))
    assert doc['kind'] == u'phi-table'
    assert len(doc['phi']) == 18
    handle = build_handle(doc)
    assert isinstance(handle, PhiMonoid)
    assert handle.parse_element(u'a2 b3') == (u'e2',)
    assert dict(handle_to_doc(handle)) == dict(doc)


def test_spec_round_trip_garside():
    doc = loads_spec(dumps_spec(fixture_spec(u'b3')))
    assert doc['kind'] == u'garside'
    assert doc['delta'] == [u'a', u'b', u'a']
    structure = build_garside(doc)
    assert structure.delta == (u'aba',)
    assert len(structure.divisors) == 5


def test_spec_s3_keeps_eta():
    doc = loads_spec(dumps_spec(fixture_spec(u's3')))
    handle = build_handle(doc)
    assert handle.eta_table() == get_fixture(u's3').eta_table()


def test_malformed_specs():
    """格式错误的文档抛出FactorSpecError并指出字段"""
    with pytest.raises(FactorSpecError):
        loads_spec(u'{not json')
    with pytest.raises(FactorSpecError):
        loads_spec(u'[1, 2]')
    try:
        loads_spec(u'{"kind": "matrix"}')
        assert False
    except FactorSpecError as e:
        assert e.get_field() == u'kind'
    bad = [
        {'kind': 'phi-table', 'generators': ['a', 'b']},
        {'kind': 'phi-table', 'generators': ['a', 'b'], 'phi': [['a', 'b']]},
        {'kind': 'phi-table', 'generators': ['a'], 'phi': [[['a', 'x'], ['a', 'a']]]},
        {'kind': 'finite-table', 'elements': ['1', 't'], 'unit': '1', 'generators': ['t'], 'table': [['1']]},
        {'kind': 'coxeter', 'generators': ['a', 'b'], 'm': [['a', 'b']]},
        {'kind': 'coxeter', 'generators': ['a', 'b'], 'm': [['a', 'b', 1]]},
    ]
    for doc in bad:
        with pytest.raises(FactorSpecError):
            build_handle(doc)


def test_build_garside_needs_coxeter():
    doc = loads_spec(dumps_spec(fixture_spec(u'z2')))
    with pytest.raises(FactorClientError):
        build_garside(doc)


def test_coxeter_xml():
    """xml格式的Coxeter矩阵"""
    doc = loads_coxeter_xml(A2_XML)
    handle = build_handle(doc)
    assert handle.matrix == a2_matrix()
    again = loads_coxeter_xml(dumps_coxeter_xml(a2_matrix()))
    assert build_handle(again).matrix == a2_matrix()
    with pytest.raises(FactorSpecError):
        loads_coxeter_xml(u'<Matrix><Generator>a</Generator></Matrix>')
    with pytest.raises(FactorSpecError):
        loads_coxeter_xml(u'<CoxeterMatrix><Generator>a</Generator>')


def test_appendix_right_cancellative():
    """半径3的正规形球上没有 xz = yz, x != y"""
    report = right_cancellativity_probe(appendix_monoid(), 3)
    assert report.passed()
    assert report.checked(u'right cancellative') > 27
