# -*- coding=utf-8

import io
import json
import logging
from collections import OrderedDict

import xmltodict
from xmltodict import unparse

from .fac_comm import to_unicode, is_string
from .fac_config import FactorConfig
from .fac_exception import FactorClientError, FactorSpecError
from .foundation import FiniteMonoid
from .factorability import PhiTable, PhiMonoid
from .garside import CoxeterMatrix, ArtinMonoid, GarsideStructure, INFINITY

logger = logging.getLogger(__name__)

KINDS = ('phi-table', 'finite-table', 'coxeter', 'garside')


def _require(doc, key, kind, types=list):
    if key not in doc:
        raise FactorSpecError('{0} document misses field {1}'.format(kind, key), field=key)
    value = doc[key]
    if types is not None and not isinstance(value, types):
        raise FactorSpecError('field {0} of {1} document has a wrong type'.format(key, kind), field=key)
    return value


def _strings(values, field):
    try:
        return [to_unicode(v) for v in values]
    except FactorClientError:
        raise FactorSpecError('field {0} must contain strings'.format(field), field=field)


def loads_spec(text):
    """解析JSON格式的monoid-spec文档并检查kind"""
    try:
        doc = json.loads(to_unicode(text), object_pairs_hook=OrderedDict)
    except ValueError as e:
        raise FactorSpecError('monoid spec is not valid json: {0}'.format(e))
    if not isinstance(doc, dict):
        raise FactorSpecError('monoid spec must be a json object')
    kind = doc.get('kind')
    if kind not in KINDS:
        raise FactorSpecError('kind must be one of {0}, got {1!r}'.format('/'.join(KINDS), kind), field='kind')
    return doc


def load_spec(path):
    try:
        with io.open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise FactorSpecError('can not read {0}: {1}'.format(path, e))
    except UnicodeDecodeError:
        raise FactorSpecError('{0} is not utf-8 encoded'.format(path))
    return loads_spec(text)


def dumps_spec(doc):
    """规范的JSON文本: 键排序, 缩进2, 以换行结尾"""
    return json.dumps(doc, sort_keys=True, indent=2, separators=(',', ': '), ensure_ascii=False) + u'\n'


def _coxeter_matrix(doc, kind):
    gens = _strings(_require(doc, 'generators', kind), 'generators')
    orders = {}
    for entry in doc.get('m', []):
        if not isinstance(entry, list) or len(entry) != 3:
            raise FactorSpecError('each m entry must be [s, t, m], got {0!r}'.format(entry), field='m')
        s, t, m = entry
        orders[(to_unicode(s), to_unicode(t))] = m
    try:
        return CoxeterMatrix(gens, orders)
    except FactorSpecError:
        raise
    except FactorClientError as e:
        raise FactorSpecError(str(e), field='m')


def _phi_monoid(doc):
    kind = 'phi-table'
    gens = _strings(_require(doc, 'generators', kind), 'generators')
    rules = OrderedDict()
    for entry in _require(doc, 'phi', kind):
        try:
            (x, y), (u, v) = entry
        except (TypeError, ValueError):
            raise FactorSpecError('each phi entry must be [[x, y], [u, v]], got {0!r}'.format(entry), field='phi')
        key = tuple(_strings((x, y), 'phi'))
        if key in rules:
            raise FactorSpecError('duplicate phi entry for ({0}, {1})'.format(*key), field='phi')
        rules[key] = tuple(_strings((u, v), 'phi'))
    try:
        return PhiMonoid(PhiTable(gens, rules))
    except FactorSpecError:
        raise
    except FactorClientError as e:
        raise FactorSpecError(str(e), field='phi')


def _finite_monoid(doc):
    kind = 'finite-table'
    elements = _strings(_require(doc, 'elements', kind), 'elements')
    unit = to_unicode(_require(doc, 'unit', kind, types=None))
    gens = _strings(_require(doc, 'generators', kind), 'generators')
    rows = _require(doc, 'table', kind)
    if len(rows) != len(elements) or any(not isinstance(r, list) or len(r) != len(elements) for r in rows):
        raise FactorSpecError('table must be {0}x{0}'.format(len(elements)), field='table')
    table = {}
    for x, row in zip(elements, rows):
        for y, z in zip(elements, _strings(row, 'table')):
            table[(x, y)] = z
    eta = None
    if 'eta' in doc:
        eta = {}
        for x, pair in doc['eta'].items():
            if not isinstance(pair, list) or len(pair) != 2:
                raise FactorSpecError('eta of {0} must be [bar, prime]'.format(x), field='eta')
            eta[to_unicode(x)] = tuple(_strings(pair, 'eta'))
    try:
        return FiniteMonoid(elements, table, unit, gens, eta=eta)
    except FactorClientError as e:
        raise FactorSpecError(str(e), field='table')


def build_handle(doc, config=None):
    """把文档转为幺半群对象: PhiMonoid, FiniteMonoid 或 ArtinMonoid"""
    config = config or FactorConfig()
    kind = doc.get('kind')
    if kind == 'phi-table':
        handle = _phi_monoid(doc)
    elif kind == 'finite-table':
        handle = _finite_monoid(doc)
    elif kind in ('coxeter', 'garside'):
        handle = ArtinMonoid(_coxeter_matrix(doc, kind), config.get_max_coxeter_order())
    else:
        raise FactorSpecError('unknown kind {0!r}'.format(kind), field='kind')
    logger.debug("built {0} handle with {1} generators".format(kind, len(handle.alphabet)))
    return handle


def build_garside(doc, config=None):
    """garside或coxeter文档的Garside结构, delta缺省为最长元素"""
    handle = build_handle(doc, config)
    if not isinstance(handle, ArtinMonoid):
        raise FactorClientError('{0} document has no Garside structure'.format(doc.get('kind')))
    delta = handle.delta
    if doc.get('delta') is not None:
        word = doc['delta']
        text = word if is_string(word) else u' '.join(_strings(word, 'delta'))
        try:
            delta = handle.parse_element(text)
        except FactorClientError as e:
            raise FactorSpecError(str(e), field='delta')
    return GarsideStructure(handle, delta)


def handle_to_doc(handle, kind=None):
    """幺半群对象导出为文档"""
    if isinstance(handle, ArtinMonoid):
        doc = OrderedDict([('kind', kind or 'coxeter')])
        doc.update(handle.matrix.to_dict())
        if doc['kind'] == 'garside':
            group = handle.coxeter_group
            doc['delta'] = list(group.word(group.longest()))
        return doc
    if isinstance(handle, PhiMonoid):
        return OrderedDict([
            ('kind', 'phi-table'),
            ('generators', list(handle.alphabet.letters)),
            ('phi', [[[x, y], [u, v]] for (x, y), (u, v) in handle.table.rules()]),
        ])
    if isinstance(handle, FiniteMonoid):
        names = list(handle.names)
        table = handle.table()
        eta = handle.eta_table()
        return OrderedDict([
            ('kind', 'finite-table'),
            ('elements', names),
            ('unit', handle.one),
            ('generators', list(handle.alphabet.letters)),
            ('table', [[table[(x, y)] for y in names] for x in names]),
            ('eta', OrderedDict((x, list(eta[x])) for x in names)),
        ])
    raise FactorClientError('{0} can not be exported'.format(type(handle).__name__))


def loads_coxeter_xml(text):
    """<CoxeterMatrix><Generator>a</Generator><Edge s="a" t="b" m="3"/></CoxeterMatrix>"""
    try:
        data = xmltodict.parse(text, force_list=('Generator', 'Edge'))
    except Exception as e:
        raise FactorSpecError('coxeter xml can not be parsed: {0}'.format(e))
    root = data.get('CoxeterMatrix') if isinstance(data, dict) else None
    if not isinstance(root, dict):
        raise FactorSpecError('root element must be CoxeterMatrix', field='CoxeterMatrix')
    gens = root.get('Generator') or []
    m = []
    for edge in root.get('Edge') or []:
        try:
            m.append([edge['@s'], edge['@t'], edge.get('@m', INFINITY)])
        except (KeyError, TypeError):
            raise FactorSpecError('Edge needs attributes s and t', field='Edge')
    doc = OrderedDict([('kind', 'coxeter'), ('generators', gens), ('m', m)])
    _coxeter_matrix(doc, 'coxeter')
    return doc


def load_coxeter_xml(path):
    try:
        with io.open(path, 'rb') as f:
            return loads_coxeter_xml(f.read())
    except (IOError, OSError) as e:
        raise FactorSpecError('can not read {0}: {1}'.format(path, e))


def dumps_coxeter_xml(matrix):
    """CoxeterMatrix转为xml文本, m为∞的对不写出"""
    edges = [OrderedDict([('@s', s), ('@t', t), ('@m', str(m))]) for s, t, m in matrix.pairs() if m is not None]
    body = OrderedDict([('Generator', list(matrix.generators))])
    if edges:
        body['Edge'] = edges
    return unparse({'CoxeterMatrix': body}, pretty=True)

