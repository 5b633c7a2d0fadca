# -*- coding=utf-8

import logging
import math
from collections import namedtuple, deque

import numpy

from .fac_comm import UNIT_MARK, INVERSE_SUFFIX, MAX_COXETER_ORDER, DEFAULT_BUDGET, to_unicode, parse_word, \
    is_string
from .fac_exception import FactorClientError, GarsideError, FactorBudgetError
from .foundation import Alphabet, AxiomReport, FactorableMonoid, ball, format_cell
from .factorability import PhiTable, PhiMonoid

logger = logging.getLogger(__name__)

INFINITY = u'inf'


class CoxeterMatrix(object):
    """Coxeter矩阵, 只保存无序对的m值, 缺省的对为∞"""

    def __init__(self, generators, orders=None):
        """
        :param generators(list): 生成元名列表.
        :param orders(dict): (s, t) -> m, m为>=2的整数; None或"inf"表示∞.
        """
        self._alphabet = Alphabet(generators)
        self._orders = {}
        for (s, t), m in (orders or {}).items():
            s, t = to_unicode(s), to_unicode(t)
            self._alphabet.check_letter(s)
            self._alphabet.check_letter(t)
            if s == t:
                raise FactorClientError('m({0}, {0}) is fixed to 1'.format(s))
            m = self._check_order(s, t, m)
            key = self._key(s, t)
            if key in self._orders and self._orders[key] != m:
                raise FactorClientError('m({0}, {1}) is not symmetric'.format(s, t))
            self._orders[key] = m

    @staticmethod
    def _check_order(s, t, m):
        if m is None or (isinstance(m, float) and math.isinf(m)):
            return None
        if is_string(m) and to_unicode(m).strip().lower() in (INFINITY, u'infinity', u'∞'):
            return None
        try:
            value = int(m)
        except (TypeError, ValueError):
            raise FactorClientError('m({0}, {1}) must be an integer >= 2 or inf, got {2!r}'.format(s, t, m))
        if value < 2:
            raise FactorClientError('m({0}, {1}) must be >= 2, got {2}'.format(s, t, value))
        return value

    def _key(self, s, t):
        if self._alphabet.index(s) > self._alphabet.index(t):
            s, t = t, s
        return (s, t)

    @property
    def generators(self):
        return self._alphabet.letters

    @property
    def alphabet(self):
        return self._alphabet

    def order(self, s, t):
        """m(s, t), ∞返回None"""
        if s == t:
            return 1
        return self._orders.get(self._key(s, t))

    def pairs(self):
        """[(s, t, m)], 包括m为∞(None)的对"""
        gens = self.generators
        return [(s, t, self.order(s, t)) for i, s in enumerate(gens) for t in gens[i + 1:]]

    def parse_positive(self, text):
        """解析正词; 生成元名都是单字符时也接受连写, 如 "abab" """
        if isinstance(text, (list, tuple)):
            return parse_word(text, self._alphabet)
        letters = []
        for tok in to_unicode(text).split():
            if tok == UNIT_MARK:
                continue
            if tok in self._alphabet:
                letters.append(tok)
            elif all(len(s) == 1 for s in self.generators) and all(c in self._alphabet for c in tok):
                letters.extend(tok)
            else:
                raise FactorClientError('unknown generator {0}'.format(tok))
        return tuple(letters)

    def to_dict(self):
        return {
            'generators': list(self.generators),
            'm': [[s, t, INFINITY if m is None else m] for s, t, m in self.pairs()],
        }

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.pairs() == other.pairs()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'CoxeterMatrix({0})'.format(', '.join(
            u'{0}{1}:{2}'.format(s, t, u'inf' if m is None else m) for s, t, m in self.pairs()))


def alternating_word(s, t, length):
    """<s, t>^length = s t s ..."""
    return tuple(s if k % 2 == 0 else t for k in range(length))


def braid_relations(matrix):
    """Artin幺半群的定义关系 <s,t>^m = <t,s>^m"""
    return [(alternating_word(s, t, m), alternating_word(t, s, m)) for s, t, m in matrix.pairs() if m is not None]


def _matrix_key(mat):
    return tuple(int(v) for v in numpy.rint(mat * 1e6).ravel())


class CoxeterGroup(object):
    """通过几何表示枚举的有限Coxeter群, 元素用广度优先搜索的编号表示, 0为单位元"""

    def __init__(self, matrix, max_order=MAX_COXETER_ORDER):
        self._matrix = matrix
        gens = matrix.generators
        n = len(gens)
        form = numpy.eye(n)
        for i, s in enumerate(gens):
            for j, t in enumerate(gens):
                if i != j:
                    m = matrix.order(s, t)
                    form[i, j] = -1.0 if m is None else -math.cos(math.pi / m)
        # s_i(α_j) = α_j - 2B(α_i, α_j)α_i
        reflections = []
        for i in range(n):
            r = numpy.eye(n)
            r[i, :] -= 2 * form[i, :]
            reflections.append(r)
        self._gen_index = dict((s, k) for k, s in enumerate(gens))
        mats = [numpy.eye(n)]
        words = [()]
        lengths = [0]
        keys = {_matrix_key(mats[0]): 0}
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                for k, s in enumerate(gens):
                    mat = mats[idx].dot(reflections[k])
                    key = _matrix_key(mat)
                    if key in keys:
                        continue
                    if len(mats) >= max_order:
                        raise GarsideError('Coxeter group of {0} has more than {1} elements'.format(
                            matrix, max_order), witness=max_order)
                    keys[key] = len(mats)
                    nxt.append(len(mats))
                    mats.append(mat)
                    words.append(words[idx] + (s,))
                    lengths.append(lengths[idx] + 1)
            frontier = nxt
        self._words = words
        self._lengths = lengths
        self._right = [[keys[_matrix_key(m.dot(r))] for r in reflections] for m in mats]
        self._left = [[keys[_matrix_key(r.dot(m))] for r in reflections] for m in mats]
        self._inverse = [self.element_of_word(w[::-1]) for w in words]
        logger.debug("coxeter group {0}: {1} elements".format(matrix, len(mats)))

    @property
    def matrix(self):
        return self._matrix

    @property
    def order(self):
        return len(self._words)

    def elements(self):
        return list(range(len(self._words)))

    def word(self, idx):
        """广度优先搜索得到的约化词"""
        return self._words[idx]

    def length(self, idx):
        return self._lengths[idx]

    def right_multiply(self, idx, s):
        return self._right[idx][self._gen_index[s]]

    def left_multiply(self, s, idx):
        return self._left[idx][self._gen_index[s]]

    def element_of_word(self, word):
        idx = 0
        for s in word:
            if s not in self._gen_index:
                raise FactorClientError('unknown generator {0}'.format(s))
            idx = self._right[idx][self._gen_index[s]]
        return idx

    def multiply(self, i, j):
        for s in self._words[j]:
            i = self.right_multiply(i, s)
        return i

    def inverse(self, idx):
        return self._inverse[idx]

    def right_descents(self, idx):
        return [s for s in self._matrix.generators if self._lengths[self.right_multiply(idx, s)] < self._lengths[idx]]

    def left_descents(self, idx):
        return [s for s in self._matrix.generators if self._lengths[self.left_multiply(s, idx)] < self._lengths[idx]]

    def longest(self):
        return max(range(len(self._words)), key=lambda i: (self._lengths[i], -i))


def coxeter_group(matrix, max_order=MAX_COXETER_ORDER):
    return CoxeterGroup(matrix, max_order)


def same_element(matrix, u, v, budget=DEFAULT_BUDGET):
    """两个正词是否在Artin幺半群中相等: 在辫关系移动下搜索, 适用于任意Coxeter矩阵"""
    if isinstance(matrix, ArtinMonoid):
        matrix = matrix.matrix
    u = matrix.parse_positive(u)
    v = matrix.parse_positive(v)
    if len(u) != len(v) or sorted(set(u)) != sorted(set(v)):
        return False
    moves = []
    for lhs, rhs in braid_relations(matrix):
        moves.append((lhs, rhs))
        moves.append((rhs, lhs))
    seen = {u}
    queue = deque([u])
    while queue:
        word = queue.popleft()
        if word == v:
            return True
        for lhs, rhs in moves:
            k = len(lhs)
            for pos in range(len(word) - k + 1):
                if word[pos:pos + k] == lhs:
                    nxt = word[:pos] + rhs + word[pos + k:]
                    if nxt not in seen:
                        if len(seen) >= budget:
                            raise FactorBudgetError('word problem undecided within {0} words'.format(budget),
                                                    budget=budget, last=word)
                        seen.add(nxt)
                        queue.append(nxt)
    return False


class ArtinMonoid(PhiMonoid):
    """有限型Artin幺半群, 生成集为全部非平凡单元素(无平方元素), 元素是右贪婪正规形"""

    def __init__(self, matrix, max_order=MAX_COXETER_ORDER):
        self._matrix = matrix
        self._group = CoxeterGroup(matrix, max_order)
        group = self._group
        self._sep = u'' if all(len(s) == 1 for s in matrix.generators) else u'.'
        order = sorted(range(1, group.order), key=lambda i: (group.length(i), i))
        self._name = {0: UNIT_MARK}
        self._index = {UNIT_MARK: 0}
        for i in order:
            name = self._sep.join(group.word(i))
            self._name[i] = name
            self._index[name] = i
        table = PhiTable(Alphabet([self._name[i] for i in order]), resolver=self._resolve)
        PhiMonoid.__init__(self, table)
        self._w0 = group.longest()

    @property
    def matrix(self):
        return self._matrix

    @property
    def coxeter_group(self):
        return self._group

    @property
    def delta(self):
        return (self._name[self._w0],)

    def simple_names(self):
        return list(self._alphabet.letters)

    def simple_index(self, x):
        """单元素(名字或长度<=1的元素)在Coxeter群中的编号"""
        if isinstance(x, tuple):
            if len(x) > 1:
                raise FactorClientError('{0} is not a simple element'.format(format_cell(self, x)))
            x = x[0] if x else UNIT_MARK
        try:
            return self._index[x]
        except KeyError:
            raise FactorClientError('unknown simple element {0}'.format(x))

    def simple_name(self, idx):
        return self._name[idx]

    def _resolve(self, x, y):
        # 把u的右下降元移到v的左侧, 直到 R(u) ⊆ L(v)
        group = self._group
        u, v = self._index[x], self._index[y]
        while True:
            left = group.left_descents(v)
            movable = [s for s in group.right_descents(u) if s not in left]
            if not movable:
                break
            s = movable[0]
            u = group.right_multiply(u, s)
            v = group.left_multiply(s, v)
        return self._name[u], self._name[v]

    def parse_element(self, text):
        """解析正词: 空白分隔的单元素名, 生成元名都是单字符时也接受连写"""
        tokens = to_unicode(text).split() if not isinstance(text, (list, tuple)) else list(text)
        x = self.one
        for tok in tokens:
            tok = to_unicode(tok)
            if tok == UNIT_MARK:
                continue
            if tok in self._alphabet:
                letters = [tok]
            elif self._sep == u'' and all(c in self._matrix.alphabet for c in tok):
                letters = list(tok)
            else:
                raise FactorClientError('unknown generator {0}'.format(tok))
            for letter in letters:
                x = self.multiply(x, (letter,))
        return x

    def _left_divides_idx(self, a, b):
        g = self._group
        return g.length(g.multiply(g.inverse(a), b)) + g.length(a) == g.length(b)

    def _right_divides_idx(self, a, b):
        g = self._group
        return g.length(g.multiply(b, g.inverse(a))) + g.length(a) == g.length(b)

    def _extremal(self, candidates, x, y, what):
        if not candidates:
            raise GarsideError('{0} of {1} and {2} does not exist among simples'.format(what, x, y), witness=(x, y))
        lengths = [self._group.length(i) for i in candidates]
        # lcm取最短的公共倍元, gcd取最长的公共因子
        target = min(lengths) if what.endswith('lcm') else max(lengths)
        return candidates[lengths.index(target)]

    def rlcm(self, x, y):
        """最小公共右倍元"""
        a, b = self.simple_index(x), self.simple_index(y)
        cands = [z for z in self._group.elements() if self._left_divides_idx(a, z) and self._left_divides_idx(b, z)]
        return self._name[self._extremal(cands, x, y, 'rlcm')]

    def llcm(self, x, y):
        """最小公共左倍元"""
        a, b = self.simple_index(x), self.simple_index(y)
        cands = [z for z in self._group.elements() if self._right_divides_idx(a, z) and self._right_divides_idx(b, z)]
        return self._name[self._extremal(cands, x, y, 'llcm')]

    def right_complement(self, x, y):
        """x\\y, 满足 rlcm(x, y) = x·(x\\y)"""
        g = self._group
        z = self.simple_index(self.rlcm(x, y))
        return self._name[g.multiply(g.inverse(self.simple_index(x)), z)]

    def left_complement(self, x, y):
        """x/y, 满足 llcm(x, y) = (x/y)·y"""
        g = self._group
        z = self.simple_index(self.llcm(x, y))
        return self._name[g.multiply(z, g.inverse(self.simple_index(y)))]

    def simple_rgcd(self, x, y):
        a, b = self.simple_index(x), self.simple_index(y)
        cands = [z for z in self._group.elements() if self._right_divides_idx(z, a) and self._right_divides_idx(z, b)]
        return self._name[self._extremal(cands, x, y, 'rgcd')]

    def _strip_right(self, x, c):
        # x = x'·c, c是x_1的右因子
        g = self._group
        last = self._index[x[-1]]
        rest = g.multiply(last, g.inverse(self._index[c]))
        return self.multiply(tuple(x[:-1]), () if rest == 0 else (self._name[rest],))

    def rgcd(self, x, y):
        """一般元素的最大公共右因子, 逐次取末字母的公共右因子"""
        found = []
        for _ in range(self.norm(x) * self._group.length(self._w0) + 1):
            if not x or not y:
                break
            c = self.simple_rgcd(x[-1], y[-1])
            if c == UNIT_MARK:
                break
            found.append(c)
            x = self._strip_right(x, c)
            y = self._strip_right(y, c)
        result = self.one
        for c in reversed(found):
            result = self.multiply(result, (c,))
        return result

    def right_divides(self, x, y):
        """x是否为y的右因子"""
        return self.rgcd(x, y) == tuple(x)


def artin_monoid(matrix, max_order=MAX_COXETER_ORDER):
    return ArtinMonoid(matrix, max_order)


def square_free_elements(matrix, max_order=MAX_COXETER_ORDER):
    """无平方元素: Coxeter群非单位元素的约化词的提升, 并校验对llcm与左补的封闭性"""
    monoid = ArtinMonoid(matrix, max_order)
    names = monoid.simple_names()
    for x in names:
        for y in names:
            monoid.llcm(x, y)
            monoid.left_complement(x, y)
    group = monoid.coxeter_group
    return [group.word(monoid.simple_index(n)) for n in names]


def greedy_nf(handle, word):
    """右贪婪E-正规形, 每次取最大的E中右因子"""
    if isinstance(handle, PhiMonoid):
        return tuple(handle.parse_element(word) if is_string(word) else handle.normal_form(word))
    x = handle.parse_element(word) if is_string(word) else word
    return tuple(_greedy_letters(handle, x))


def _right_divides_in(handle, d, x, elements):
    return any(handle.multiply(a, d) == x for a in elements)


def _greatest_right_divisor(handle, x, elements):
    divisors = [e for e in handle.generators() if _right_divides_in(handle, e, x, elements)]
    if not divisors:
        raise GarsideError('no generator right-divides {0}'.format(handle.element_name(x)), witness=x)
    for e in divisors:
        if all(_right_divides_in(handle, d, e, elements) for d in divisors):
            return e
    raise GarsideError('no greatest right-divisor of {0} in E: {1} and {2}'.format(
        handle.element_name(x), handle.element_name(divisors[0]), handle.element_name(divisors[-1])),
        witness=(divisors[0], divisors[-1]))


def _greedy_letters(handle, x):
    letters = []
    elements = ball(handle, handle.norm(x))
    while x != handle.one:
        e = _greatest_right_divisor(handle, x, elements)
        rest = [a for a in elements if handle.multiply(a, e) == x]
        letters.append(e)
        x = rest[0]
    return letters[::-1]


def eta_gaussian(handle, x):
    """贪婪正规形的分解 (x_p...x_2, x_1)"""
    one = handle.one
    if x == one:
        return one, one
    if isinstance(handle, PhiMonoid):
        return handle.eta(x)
    letters = _greedy_letters(handle, x)
    bar = one
    for e in letters[:-1]:
        bar = handle.multiply(bar, e)
    return bar, letters[-1]


def right_divisors(handle, x):
    elements = ball(handle, max(handle.norm(x), 1))
    return [d for d in elements if d != handle.one and _right_divides_in(handle, d, x, elements)]


def left_divisors(handle, x):
    elements = ball(handle, max(handle.norm(x), 1))
    return [d for d in elements if d != handle.one and any(handle.multiply(d, c) == x for c in elements)]


def is_e_normal(handle, x, y):
    """x ◁_E y: xy在E中的右因子都是y的右因子"""
    xy = handle.multiply(x, y)
    elements = ball(handle, handle.norm(x) + handle.norm(y))
    for e in handle.generators():
        if _right_divides_in(handle, e, xy, elements) and not _right_divides_in(handle, e, y, elements):
            return False
    return True


def incremental_prefix_lemma_check(handle, samples=None, radius=3):
    """x_1a = y_1 或 NF(x_1a) = z y_1, 并且正规形长度增加0或1"""
    report = AxiomReport(u'incremental prefix')
    report.add_check(u'last letter')
    report.add_check(u'length')
    one = handle.one
    if samples is None:
        samples = ball(handle, radius)
    for x in samples:
        if x == one:
            continue
        word = handle.generator_word(x)
        x1 = word[-1]
        for a in handle.generators():
            target = handle.generator_word(handle.multiply(x, a))
            y1 = target[-1]
            x1a = handle.multiply(x1, a)
            split = handle.generator_word(x1a)
            ok = x1a == y1 or (len(split) == 2 and split[-1] == y1)
            cell = format_cell(handle, (x, a))
            report.record(u'last letter', ok, (x, a), u'{0}: y_1 = {1}'.format(cell, handle.element_name(y1)))
            report.record(u'length', len(target) in (len(word), len(word) + 1), (x, a),
                          u'{0}: {1} -> {2}'.format(cell, len(word), len(target)))
    return report


def validate_gaussian_hypotheses(handle, radius):
    """在球上检查右消去律, 无非平凡可逆元, 最小公共左倍元与其乘积性质"""
    report = AxiomReport(u'gaussian hypotheses')
    for name in (u'right cancellative', u'no invertibles', u'llcm', u'llcm product'):
        report.add_check(name)
    elements = ball(handle, radius)
    inside = set(elements)
    one = handle.one
    products = dict(((a, b), handle.multiply(a, b)) for a in elements for b in elements)
    for z in elements:
        seen = {}
        for x in elements:
            xz = products[(x, z)]
            if xz in seen and seen[xz] != x:
                report.record(u'right cancellative', False, (seen[xz], x, z), u'{0} != {1} but both times {2} give {3}'
                              .format(handle.element_name(seen[xz]), handle.element_name(x),
                                      handle.element_name(z), handle.element_name(xz)))
            else:
                seen[xz] = x
                report.record(u'right cancellative', True)
    for x in elements:
        for y in elements:
            if products[(x, y)] == one:
                report.record(u'no invertibles', x == one and y == one, (x, y), format_cell(handle, (x, y)))
    left_multiples = {}
    for x in elements:
        left_multiples[x] = set(products[(a, x)] for a in elements) & inside

    def least(x, y):
        common = left_multiples[x] & left_multiples[y]
        if not common:
            return None, False
        best = [m for m in common if common <= left_multiples[m]]
        return (best[0] if best else None), True

    pairs = ball(handle, max(radius - 1, 1))
    llcms = {}
    for x in pairs:
        for y in pairs:
            m, found = least(x, y)
            if not found:
                continue
            llcms[(x, y)] = m
            report.record(u'llcm', m is not None, (x, y), u'{0}: no least common left-multiple'.format(
                format_cell(handle, (x, y))))
    gens = handle.generators()
    for x in gens:
        for y in gens:
            m = llcms.get((x, y))
            if m is None:
                continue
            for z in pairs:
                xz, yz, mz = products.get((x, z)), products.get((y, z)), handle.multiply(m, z)
                if xz not in inside or yz not in inside or mz not in inside:
                    continue
                lcm, _ = least(xz, yz)
                report.record(u'llcm product', lcm == mz, (x, y, z), u'{0}: {1} != {2}'.format(
                    format_cell(handle, (x, y, z)), None if lcm is None else handle.element_name(lcm),
                    handle.element_name(mz)))
    return report


class GarsideStructure(object):
    """Garside元Δ及其除子集, 星映射与自同构φ; 除子计算在半径2N(Δ)的球上搜索"""

    def __init__(self, handle, delta, radius=None):
        self._handle = handle
        one = handle.one
        if delta == one:
            raise GarsideError('the unit is not a Garside element', witness=delta)
        self._delta = delta
        n = handle.norm(delta)
        self._radius = radius or 2 * n
        self._elements = ball(handle, self._radius)
        self._products = {}
        self._right_of = {}
        self._left_of = {}
        for a in self._elements:
            for b in self._elements:
                ab = handle.multiply(a, b)
                self._products[(a, b)] = ab
                self._right_of.setdefault(a, {}).setdefault(ab, b)
                self._left_of.setdefault(b, {}).setdefault(ab, a)
        near = ball(handle, n)
        lefts = [d for d in near if self.left_divides(d, delta)]
        rights = [d for d in near if self.right_divides(d, delta)]
        if set(lefts) != set(rights):
            odd = sorted(set(lefts) ^ set(rights), key=near.index)[0]
            raise GarsideError('{0} is not a Garside element: {1} divides it on one side only'.format(
                handle.element_name(delta), handle.element_name(odd)), witness=odd)
        self._divisors = [d for d in lefts if d != one]
        self._phi = {}
        self._delta_map = {}
        for d in [one] + self._divisors:
            self._phi[d] = self._solve(lambda y: self.mul(delta, y) == self.mul(d, delta), d, 'phi')
            self._delta_map[d] = self._solve(lambda y: self.mul(delta, d) == self.mul(y, delta), d, 'delta')
        logger.debug("garside structure {0}: {1} divisors".format(handle.element_name(delta), len(self._divisors)))

    def _solve(self, predicate, d, what):
        for y in [self._handle.one] + self._divisors:
            if predicate(y):
                return y
        raise GarsideError('{0} of {1} is not a divisor of delta'.format(what, self._handle.element_name(d)),
                           witness=d)

    @property
    def handle(self):
        return self._handle

    @property
    def delta(self):
        return self._delta

    @property
    def divisors(self):
        return list(self._divisors)

    def simples(self):
        """S = D ∪ {1}, 单位元在最前"""
        return [self._handle.one] + self._divisors

    def mul(self, a, b):
        value = self._products.get((a, b))
        if value is None:
            value = self._handle.multiply(a, b)
        return value

    def left_quotient(self, a, m):
        """c 使 a·c = m, 不存在时返回None"""
        return self._right_of.get(a, {}).get(m)

    def right_quotient(self, m, b):
        """c 使 c·b = m, 不存在时返回None"""
        return self._left_of.get(b, {}).get(m)

    def left_divides(self, a, m):
        return self.left_quotient(a, m) is not None

    def right_divides(self, b, m):
        return self.right_quotient(m, b) is not None

    def _least(self, common, divides, what, x, y):
        best = [m for m in common if all(divides(m, z) for z in common)]
        if not best:
            raise GarsideError('{0} of {1} and {2} not found within radius {3}'.format(
                what, self._handle.element_name(x), self._handle.element_name(y), self._radius), witness=(x, y))
        return best[0]

    def rlcm(self, x, y):
        common = [m for m in self._elements if self.left_divides(x, m) and self.left_divides(y, m)]
        return self._least(common, self.left_divides, 'rlcm', x, y)

    def llcm(self, x, y):
        common = [m for m in self._elements if self.right_divides(x, m) and self.right_divides(y, m)]
        return self._least(common, self.right_divides, 'llcm', x, y)

    def right_complement(self, x, y):
        """x\\y"""
        return self.left_quotient(x, self.rlcm(x, y))

    def left_complement(self, x, y):
        """x/y"""
        return self.right_quotient(self.llcm(x, y), y)

    def rgcd(self, x, y):
        common = [c for c in self._elements if self.right_divides(c, x) and self.right_divides(c, y)]
        best = [g for g in common if all(self.right_divides(c, g) for c in common)]
        if not best:
            raise GarsideError('rgcd of {0} and {1} not found'.format(
                self._handle.element_name(x), self._handle.element_name(y)), witness=(x, y))
        return best[0]

    def star(self, t):
        """t* = t\\Δ"""
        value = self.left_quotient(t, self._delta)
        if value is None:
            raise GarsideError('{0} does not divide delta'.format(self._handle.element_name(t)), witness=t)
        return value

    def left_star(self, t):
        """*t = Δ/t, 也记作α(t)"""
        value = self.right_quotient(self._delta, t)
        if value is None:
            raise GarsideError('{0} does not divide delta'.format(self._handle.element_name(t)), witness=t)
        return value

    alpha = left_star

    def phi(self, x, power=1):
        """Δφ(x) = xΔ 定义的自同构, power<0 时为δ = φ^{-1}"""
        table = self._phi if power >= 0 else self._delta_map
        handle = self._handle
        for _ in range(abs(power)):
            if x in table:
                x = table[x]
                continue
            result = handle.one
            for letter in handle.generator_word(x):
                if letter not in table:
                    raise GarsideError('{0} is not a divisor of delta'.format(handle.element_name(letter)),
                                       witness=letter)
                result = handle.multiply(result, table[letter])
            x = result
        return x

    def delta_inverse_map(self, x):
        return self.phi(x, -1)


def garside_structure(handle, delta=None, radius=None):
    if delta is None:
        if not isinstance(handle, ArtinMonoid):
            raise FactorClientError('delta is required for {0}'.format(type(handle).__name__))
        delta = handle.delta
    return GarsideStructure(handle, delta, radius)


def computation_rules_check(structure, samples=None):
    """在S = D ∪ {1}上检查补运算规则, rgcd与Δ的乘积规则和星映射的等价"""
    handle = structure.handle
    report = AxiomReport(u'computation rules')
    for name in (u'complement of product', u'complement into product', u'gcd with delta', u'product split',
                 u'prod lemma', u'star product'):
        report.add_check(name)
    simples = structure.simples()
    samples = simples if samples is None else list(samples)
    delta = structure.delta
    mul = structure.mul
    bs = structure.right_complement
    name = handle.element_name

    def show(*xs):
        return u'(' + u', '.join(name(x) for x in xs) + u')'

    for x in samples:
        for y in samples:
            xy = mul(x, y)
            for z in samples:
                report.record(u'complement of product', bs(xy, z) == bs(y, bs(x, z)), (x, y, z), show(x, y, z))
                rhs = mul(bs(z, x), bs(bs(x, z), y))
                report.record(u'complement into product', bs(z, xy) == rhs, (x, y, z), show(x, y, z))
            report.record(u'prod lemma', structure.rgcd(xy, delta) == structure.rgcd(
                mul(structure.rgcd(x, delta), y), delta), (x, y), show(x, y))
    for s in simples:
        for t in simples:
            st = mul(s, t)
            inner = structure.star(bs(structure.delta_inverse_map(t), structure.alpha(s)))
            report.record(u'gcd with delta', structure.rgcd(st, delta) == inner, (s, t), show(s, t))
            split = mul(bs(structure.alpha(s), structure.delta_inverse_map(t)), inner)
            report.record(u'product split', st == split, (s, t), show(s, t))
    for a in structure.divisors:
        for b in structure.divisors:
            ab = mul(a, b)
            lhs = structure.left_divides(structure.star(a), b)
            rhs = structure.right_divides(delta, ab)
            ok = lhs == rhs
            if ok and lhs:
                ok = any(mul(t, delta) == ab for t in simples)
            report.record(u'star product', ok, (a, b), show(a, b))
    return report


class GroupElement(namedtuple('GroupElement', ['word', 'power'])):
    """w·Δ^{-power}, w为正元素的正规形; power>0时Δ不右整除w"""
    __slots__ = ()


class GarsideGroup(FactorableMonoid):
    """Garside群, 生成集为 D ∪ D^{-1}"""

    def __init__(self, structure):
        monoid = structure.handle
        if set(monoid.generators()) != set(structure.divisors):
            raise GarsideError('the monoid generators must be the divisors of delta', witness=structure.delta)
        self._structure = structure
        self._monoid = monoid
        self._names = {}
        self._by_name = {}
        for d in structure.divisors:
            n = monoid.element_name(d)
            self._names[d] = n
            self._by_name[n] = d
        letters = [self._names[d] for d in structure.divisors]
        FactorableMonoid.__init__(self, Alphabet(letters + [n + INVERSE_SUFFIX for n in letters]))
        self._one = GroupElement(monoid.one, 0)
        self._letters = {}
        for d in structure.divisors:
            self._letters[self._names[d]] = GroupElement(d, 0)
            self._letters[self._names[d] + INVERSE_SUFFIX] = self.inverse_letter(d)
        self._gen_set = set(self._letters.values())

    @property
    def structure(self):
        return self._structure

    @property
    def monoid(self):
        return self._monoid

    @property
    def one(self):
        return self._one

    def _normalize(self, w, m):
        monoid = self._monoid
        delta = self._structure.delta
        while m > 0 and w != monoid.one and monoid.eta_prime(w) == delta:
            w = monoid.eta_bar(w)
            m -= 1
        return GroupElement(w, m)

    def from_positive(self, x, power=0):
        return self._normalize(x, power)

    def delta_power(self, k):
        """Δ^k, k可以为负"""
        if k < 0:
            return GroupElement(self._monoid.one, -k)
        w = self._monoid.one
        for _ in range(k):
            w = self._monoid.multiply(w, self._structure.delta)
        return GroupElement(w, 0)

    def inverse_letter(self, d):
        """d^{-1} = d*·Δ^{-1}"""
        return self._normalize(self._structure.star(d), 1)

    def letter_element(self, letter):
        self._alphabet.check_letter(letter)
        return self._letters[letter]

    def generators(self):
        return [self._letters[l] for l in self._alphabet]

    def is_generator(self, x):
        return x in self._gen_set

    def multiply(self, g, h):
        # Δ^{-m} x = φ^m(x) Δ^{-m}
        moved = self._structure.phi(h.word, g.power)
        return self._normalize(self._monoid.multiply(g.word, moved), g.power + h.power)

    def inverse(self, g):
        result = self.delta_power(g.power)
        for d in reversed(self._monoid.generator_word(g.word)):
            result = self.multiply(result, self.inverse_letter(d))
        return result

    def norm(self, g):
        return max(self._monoid.norm(g.word), g.power)

    def full_form(self, g):
        """(xs, ys), g = x_p...x_1 y_1^{-1}...y_q^{-1}"""
        letters = self._monoid.generator_word(g.word)
        q = g.power
        if q == 0:
            return letters, []
        structure = self._structure
        r = len(letters)
        xs = letters[:r - q] if r > q else []
        us = letters[r - q:] if r > q else letters
        pad = q - len(us)
        ys = [structure.delta] * pad
        for i, u in enumerate(us, start=pad + 1):
            ys.append(structure.left_star(structure.phi(u, -(i - 1))))
        return xs, ys

    def eta(self, g):
        if g == self._one:
            return self._one, self._one
        xs, ys = self.full_form(g)
        if ys:
            y = ys[-1]
            return self.multiply(g, GroupElement(y, 0)), self.inverse_letter(y)
        bar, prime = self._monoid.eta(g.word)
        return GroupElement(bar, 0), GroupElement(prime, 0)

    def element_name(self, g):
        xs, ys = self.full_form(g)
        tokens = [self._names[x] for x in xs] + [self._names[y] + INVERSE_SUFFIX for y in ys]
        return u' '.join(tokens) if tokens else UNIT_MARK

    def to_word(self, g):
        xs, ys = self.full_form(g)
        return tuple(self._names[x] for x in xs) + tuple(self._names[y] + INVERSE_SUFFIX for y in ys)

    def parse_element(self, text):
        g = self._one
        for token in parse_word(text, self._alphabet):
            g = self.multiply(g, self._letters[token])
        return g

    from_word = parse_element


def group_nf(group, word):
    """群元素的规范形(w, m)与 x_p...x_1 y_1^{-1}...y_q^{-1} 形式"""
    g = group.parse_element(word) if not isinstance(word, GroupElement) else word
    return g, group.to_word(g)


def eta_garside_group(group, g):
    """群元素的分解, q>0时分出y_q^{-1}, 否则分出x_1"""
    return group.eta(g)


def norm_explicit_check(group, samples, max_power=2):
    """N(aΔ^{-n}) <= max(k, n), 等号成立当且仅当Δ不整除a"""
    report = AxiomReport(u'explicit norm')
    report.add_check(u'bound')
    report.add_check(u'equality')
    monoid = group.monoid
    delta = group.structure.delta
    for a in samples:
        k = monoid.norm(a)
        divisible = a != monoid.one and monoid.eta_prime(a) == delta
        for n in range(1, max_power + 1):
            g = group.multiply(GroupElement(a, 0), group.delta_power(-n))
            radius = max(k, n)
            dist = group.bfs_distances(radius)
            value = dist.get(g)
            cell = u'{0} D^-{1}'.format(monoid.element_name(a), n)
            report.record(u'bound', value is not None, (a, n), cell)
            if value is None:
                continue
            report.record(u'equality', (value == radius) == (not divisible), (a, n),
                          u'{0}: norm {1}, bound {2}'.format(cell, value, radius))
    return report
