# -*- coding=utf-8

import logging
from collections import OrderedDict

from .fac_comm import UNIT_MARK, DEFAULT_BUDGET, check_crc64, to_unicode
from .fac_exception import FactorClientError, FactorSpecError
from .foundation import AxiomReport, FiniteMonoid, ball, format_cell
from .factorability import PhiTable, PhiMonoid, search_factorability
from .garside import CoxeterMatrix, ArtinMonoid

logger = logging.getLogger(__name__)

# 非noetherian反例的φ表, 每行 "x y -> u v"
APPENDIX_PHI_DATA = u"""a1 b1 -> a2 b2
b2 c1 -> b3 c2
c2 d1 -> c3 d2
b3 c3 -> b4 c4
a2 b4 -> a1 b5
b5 c4 -> b6 c5
c5 d2 -> c6 d1
b6 c6 -> b1 c1
a2 b3 -> 1 e2
a1 b6 -> 1 e3
e2 c2 -> f2 g2
e3 c5 -> f3 g3
e2 c3 -> f3 g3
e3 c6 -> f2 g2
g2 d1 -> h2 i
g3 d2 -> h3 i
f2 h2 -> j k
f3 h3 -> j k
"""
APPENDIX_CRC64 = 0x065a2ad5649103f9

APPENDIX_GENERATORS = [
    u'a1', u'a2',
    u'b1', u'b2', u'b3', u'b4', u'b5', u'b6',
    u'c1', u'c2', u'c3', u'c4', u'c5', u'c6',
    u'd1', u'd2', u'e2', u'e3', u'f2', u'f3', u'g2', u'g3', u'h2', u'h3',
    u'i', u'j', u'k',
]

# 按此位置表重写 a1 b1 c1 d1, 8步后回到起点
APPENDIX_CYCLE_WORD = (u'a1', u'b1', u'c1', u'd1')
APPENDIX_CYCLE_SCHEDULE = [3, 2, 1, 2, 3, 2, 1, 2]

GAMMA = {
    u'a1': u'a2',
    u'b1': u'b4', u'b2': u'b5', u'b3': u'b6',
    u'c1': u'c4', u'c2': u'c5', u'c3': u'c6',
    u'd1': u'd2', u'e2': u'e3', u'f2': u'f3', u'g2': u'g3', u'h2': u'h3',
}


def parse_phi_data(text):
    """解析 "x y -> u v" 格式的φ表文本"""
    rules = OrderedDict()
    for lineno, line in enumerate(to_unicode(text).splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            lhs, rhs = line.split(u'->')
            x, y = lhs.split()
            u, v = rhs.split()
        except ValueError:
            raise FactorSpecError('line {0} is not of the form "x y -> u v": {1}'.format(lineno, line),
                                  field='phi')
        if (x, y) in rules:
            raise FactorSpecError('duplicate phi entry for ({0}, {1})'.format(x, y), field='phi')
        rules[(x, y)] = (u, v)
    return rules


def appendix_table():
    check_crc64(APPENDIX_PHI_DATA, APPENDIX_CRC64, 'appendix phi data')
    return PhiTable(APPENDIX_GENERATORS, parse_phi_data(APPENDIX_PHI_DATA))


def appendix_monoid():
    """27个生成元, 18条非平凡φ值的局部可分解幺半群, 其重写系统有环"""
    return PhiMonoid(appendix_table())


class GammaInvolution(object):
    """生成元的对合置换, 未列出的生成元不动"""

    def __init__(self, pairs=None, letters=None):
        pairs = GAMMA if pairs is None else pairs
        self._map = {}
        for a, b in pairs.items():
            for x, y in ((a, b), (b, a)):
                if self._map.get(x, y) != y:
                    raise FactorClientError('gamma maps {0} twice'.format(x))
                self._map[x] = y
        self._letters = list(letters if letters is not None else APPENDIX_GENERATORS)
        for x in self._map:
            if x not in self._letters:
                raise FactorClientError('gamma moves unknown generator {0}'.format(x))

    def apply(self, letter):
        return self._map.get(letter, letter)

    def __call__(self, letter):
        return self.apply(letter)

    def check(self, table):
        """检查γ²=id 以及在全部带单位元的字母对上 φ(γa, γb) = (γ×γ)(φ(a, b))"""
        report = AxiomReport(u'gamma')
        report.add_check(u'involution')
        report.add_check(u'phi compatible')
        for x in self._letters:
            report.record(u'involution', self.apply(self.apply(x)) == x, x, x)
        pointed = table.pointed_letters()
        for a in pointed:
            for b in pointed:
                u, v = table.phi(a, b)
                lhs = table.phi(self.apply(a), self.apply(b))
                rhs = (self.apply(u), self.apply(v))
                report.record(u'phi compatible', lhs == rhs, (a, b), u'({0}, {1}): {2} != {3}'.format(
                    a, b, lhs, rhs))
        return report


def gamma():
    return GammaInvolution()


def right_cancellativity_probe(handle, radius, factors=None):
    """在半径radius的球上寻找 x != y 且 xz = yz; z缺省取全部生成元"""
    report = AxiomReport(u'right cancellativity')
    report.add_check(u'right cancellative')
    elements = ball(handle, radius)
    factors = handle.generators() if factors is None else list(factors)
    for z in factors:
        seen = {}
        for x in elements:
            xz = handle.multiply(x, z)
            other = seen.setdefault(xz, x)
            report.record(u'right cancellative', other == x, (other, x, z),
                          u'{0} and {1} both give {2}'.format(format_cell(handle, (other, z)),
                                                              format_cell(handle, (x, z)), handle.element_name(xz)))
    logger.debug("right cancellativity check radius {0}: {1} elements".format(radius, len(elements)))
    return report


def _cyclic_table(m):
    names = [UNIT_MARK] + [u'g{0}'.format(k) for k in range(1, m)]
    table = {}
    for i in range(m):
        for j in range(m):
            table[(names[i], names[j])] = names[(i + j) % m]
    return names, table


def z2():
    """Z/2 = {1, t}, t² = 1"""
    names = [UNIT_MARK, u't']
    table = {(UNIT_MARK, UNIT_MARK): UNIT_MARK, (UNIT_MARK, u't'): u't',
             (u't', UNIT_MARK): u't', (u't', u't'): UNIT_MARK}
    return FiniteMonoid(names, table, UNIT_MARK, [u't'])


def cyclic(m):
    """Z/m, 生成集为全部非平凡元素"""
    if m < 2:
        raise FactorClientError('cyclic group order must be >= 2, got {0}'.format(m))
    names, table = _cyclic_table(m)
    return FiniteMonoid(names, table, UNIT_MARK, names[1:])


def cyclic_single(m):
    """Z/m 只取一个生成元; m >= 3 时不可分解"""
    if m < 2:
        raise FactorClientError('cyclic group order must be >= 2, got {0}'.format(m))
    names, table = _cyclic_table(m)
    return FiniteMonoid(names, table, UNIT_MARK, [names[1]])


def trivial():
    return FiniteMonoid([UNIT_MARK], {(UNIT_MARK, UNIT_MARK): UNIT_MARK}, UNIT_MARK, [])


def planted_collision():
    """{1, a, b}, x·y = y (y != 1): a·b = b·b 而 a != b"""
    names = [UNIT_MARK, u'a', u'b']
    table = {}
    for x in names:
        for y in names:
            table[(x, y)] = x if y == UNIT_MARK else y
    return FiniteMonoid(names, table, UNIT_MARK, [u'a', u'b'])


def free_abelian():
    """N², 正规形为 b...b a...a"""
    return PhiMonoid(PhiTable([u'a', u'b'], {(u'a', u'b'): (u'b', u'a')}))


def a2_matrix():
    return CoxeterMatrix([u'a', u'b'], {(u'a', u'b'): 3})


def braid_positive(strands=3):
    """正辫幺半群B_n⁺, 生成集为Δ的全部因子"""
    if strands < 2:
        raise FactorClientError('braid monoid needs at least 2 strands, got {0}'.format(strands))
    gens = [u's{0}'.format(k) for k in range(1, strands)] if strands > 3 else [u'a', u'b'][:strands - 1]
    orders = {}
    for i, s in enumerate(gens):
        for j in range(i + 1, len(gens)):
            orders[(s, gens[j])] = 3 if j == i + 1 else 2
    return ArtinMonoid(CoxeterMatrix(gens, orders))


def artin(matrix):
    return ArtinMonoid(matrix)


_S3_NAMES = OrderedDict([
    (UNIT_MARK, (0, 1, 2)),
    (u't12', (1, 0, 2)),
    (u't13', (2, 1, 0)),
    (u't23', (0, 2, 1)),
    (u'c123', (1, 2, 0)),
    (u'c132', (2, 0, 1)),
])


def s3_table():
    """S_3的乘法表, 生成集为三个对换"""
    by_perm = dict((p, n) for n, p in _S3_NAMES.items())
    table = {}
    for x, p in _S3_NAMES.items():
        for y, q in _S3_NAMES.items():
            table[(x, y)] = by_perm[tuple(p[q[i]] for i in range(3))]
    return FiniteMonoid(list(_S3_NAMES), table, UNIT_MARK, [u't12', u't13', u't23'])


def s3_transpositions(budget=DEFAULT_BUDGET):
    """S_3与全部对换, η取搜索顺序下第一个通过检查的表"""
    monoid = s3_table()
    found = search_factorability(monoid, budget=budget, limit=1)
    if not found:
        raise FactorSpecError('no factorability structure found for S_3 with transpositions')
    return monoid.with_eta(found[0])


FIXTURES = OrderedDict([
    ('appendix', appendix_monoid),
    ('z2', z2),
    ('cyclic3', lambda: cyclic(3)),
    ('cyclic_single3', lambda: cyclic_single(3)),
    ('trivial', trivial),
    ('planted_collision', planted_collision),
    ('free_abelian', free_abelian),
    ('b3', braid_positive),
    ('a2-coxeter', lambda: artin(a2_matrix())),
    ('s3', s3_transpositions),
])

EXPORTABLE = ('z2', 'cyclic3', 'free_abelian', 'b3', 'a2-coxeter', 'appendix', 's3')


def fixture_names():
    return list(FIXTURES.keys())


def get_fixture(name):
    try:
        factory = FIXTURES[name]
    except KeyError:
        raise FactorClientError('unknown fixture {0}, choose from {1}'.format(name, ', '.join(FIXTURES)))
    return factory()


def fixture_spec(name):
    """fixture对应的monoid-spec文档"""
    from .spec_file import handle_to_doc
    if name not in EXPORTABLE:
        raise FactorClientError('fixture {0} can not be exported'.format(name))
    handle = get_fixture(name)
    if name == 'b3':
        return handle_to_doc(handle, kind='garside')
    return handle_to_doc(handle)
