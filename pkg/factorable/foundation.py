# -*- coding=utf-8

import logging
from collections import OrderedDict
from threading import Lock

from .fac_comm import UNIT_MARK, MAX_WITNESSES, to_unicode, parse_word, format_word
from .fac_exception import FactorClientError, FactorStructureError, FactorBudgetError

logger = logging.getLogger(__name__)


class Alphabet(object):
    """有序的生成元集合, 字母互不相同且不能是单位元记号"""

    def __init__(self, letters):
        letters = tuple(to_unicode(l) for l in letters)
        index = {}
        for pos, letter in enumerate(letters):
            if not letter or letter != letter.strip() or len(letter.split()) != 1:
                raise FactorClientError('invalid letter {0!r}'.format(letter))
            if letter == UNIT_MARK:
                raise FactorClientError('letter can not be the unit mark {0}'.format(UNIT_MARK))
            if letter in index:
                raise FactorClientError('duplicate letter {0}'.format(letter))
            index[letter] = pos
        self._letters = letters
        self._index = index

    @property
    def letters(self):
        return self._letters

    def index(self, letter):
        try:
            return self._index[letter]
        except KeyError:
            raise FactorClientError('unknown generator {0}'.format(letter))

    def check_letter(self, letter):
        if letter not in self._index:
            raise FactorClientError('unknown generator {0}'.format(letter))
        return letter

    def check_word(self, word):
        for letter in word:
            self.check_letter(letter)
        return tuple(word)

    def __len__(self):
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __contains__(self, letter):
        return letter in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._letters == other._letters

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._letters)

    def __repr__(self):
        return 'Alphabet({0})'.format(' '.join(self._letters))


def concat(u, v, alphabet=None):
    """拼接两个词, v占据右侧位置"""
    if alphabet is not None:
        alphabet.check_word(u)
        alphabet.check_word(v)
    return tuple(u) + tuple(v)


def format_cell(handle, cell):
    """格式化元素元组, 如[a | b c]"""
    return u'[' + u' | '.join(handle.element_name(x) for x in cell) + u']'


class FactorableMonoid(object):
    """带范数与分解映射η的幺半群的统一接口

    子类需要实现 one, generators, multiply, norm, eta, letter_element, element_name.
    """

    def __init__(self, alphabet):
        self._alphabet = alphabet
        self._bfs_lock = Lock()
        self._bfs_cache = {}

    @property
    def alphabet(self):
        return self._alphabet

    @property
    def one(self):
        raise NotImplementedError

    def generators(self):
        """生成元(作为元素)的列表, 与字母表同序"""
        return [self.letter_element(l) for l in self._alphabet]

    def letter_element(self, letter):
        raise NotImplementedError

    def is_generator(self, x):
        return x in self.generators()

    def multiply(self, x, y):
        raise NotImplementedError

    def norm(self, x):
        raise NotImplementedError

    def eta(self, x):
        raise NotImplementedError

    def eta_bar(self, x):
        return self.eta(x)[0]

    def eta_prime(self, x):
        return self.eta(x)[1]

    def is_stable(self, x, y):
        return self.eta(self.multiply(x, y)) == (x, y)

    def is_geodesic(self, x, y):
        return self.norm(self.multiply(x, y)) == self.norm(x) + self.norm(y)

    def element_name(self, x):
        raise NotImplementedError

    def generator_word(self, x):
        """沿η拆出的生成元序列, 书写顺序"""
        letters = []
        one = self.one
        for _ in range(self.norm(x) + 1):
            if x == one:
                return letters[::-1]
            bar, prime = self.eta(x)
            letters.append(prime)
            x = bar
        raise FactorStructureError('eta does not reach the unit from {0}'.format(self.element_name(x)), witness=x)

    def parse_element(self, text):
        """将字母序列解析为元素"""
        word = parse_word(text, self._alphabet)
        x = self.one
        for letter in word:
            x = self.multiply(x, self.letter_element(letter))
        return x

    def is_finite(self):
        return False

    def elements(self):
        raise FactorClientError('{0} is not a finite monoid'.format(type(self).__name__))

    def bfs_distances(self, radius):
        """广度优先搜索, 返回 元素 -> 最短生成元词长 的有序字典

        顺序为先按距离, 同距离内按发现顺序.
        """
        with self._bfs_lock:
            cached = self._bfs_cache.get(radius)
            if cached is not None:
                return cached
        dist = OrderedDict()
        dist[self.one] = 0
        frontier = [self.one]
        gens = self.generators()
        for d in range(1, radius + 1):
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
            logger.debug("bfs radius {0}: {1} new elements".format(d, len(nxt)))
            if not frontier:
                break
        with self._bfs_lock:
            self._bfs_cache[radius] = dist
        return dist


def word_norm_bfs(handle, x, radius):
    """通过广度优先搜索计算x的最短词长, 与handle.norm无关"""
    dist = handle.bfs_distances(radius)
    if x not in dist:
        raise FactorBudgetError('norm of {0} unknown beyond radius {1}'.format(
            handle.element_name(x), radius), budget=radius, last=x)
    return dist[x]


def ball(handle, radius):
    """半径radius内的全部元素"""
    return list(handle.bfs_distances(radius).keys())


class FiniteMonoid(FactorableMonoid):
    """乘法表给出的有限幺半群"""

    def __init__(self, names, table, unit, generators, eta=None):
        """初始化并校验乘法表

        :param names(list): 元素名列表.
        :param table(dict): (x, y) -> xy 的乘积表, 以元素名为键.
        :param unit(string): 单位元的名字.
        :param generators(list): 生成元名列表.
        :param eta(dict): 可选, 元素名 -> (η̄, η′); 缺省时取广度优先搜索树上的分解.
        """
        names = tuple(to_unicode(n) for n in names)
        if len(set(names)) != len(names):
            raise FactorClientError('duplicate element names')
        unit = to_unicode(unit)
        if unit not in names:
            raise FactorClientError('unit {0} is not an element'.format(unit))
        FactorableMonoid.__init__(self, Alphabet(generators))
        for g in self._alphabet:
            if g not in names:
                raise FactorClientError('generator {0} is not an element'.format(g))
            if g == unit:
                raise FactorClientError('the unit can not be a generator')
        self._names = names
        self._unit = unit
        self._table = {}
        for x in names:
            for y in names:
                try:
                    z = to_unicode(table[(x, y)])
                except KeyError:
                    raise FactorClientError('product {0}*{1} missing in table'.format(x, y))
                if z not in names:
                    raise FactorClientError('product {0}*{1}={2} is not an element'.format(x, y, z))
                self._table[(x, y)] = z
        self._check_axioms()
        self._norms, self._parents = self._search_norms()
        if eta is None:
            self._eta = dict(self._parents)
        else:
            self._eta = {}
            for x in names:
                if x not in eta:
                    raise FactorClientError('eta of {0} missing'.format(x))
                bar, prime = eta[x]
                bar, prime = to_unicode(bar), to_unicode(prime)
                if bar not in names or prime not in names:
                    raise FactorClientError('eta of {0} is not a pair of elements'.format(x))
                self._eta[x] = (bar, prime)

    def _check_axioms(self):
        for x in self._names:
            if self._table[(self._unit, x)] != x or self._table[(x, self._unit)] != x:
                raise FactorStructureError('unit does not act as identity on {0}'.format(x), witness=x)
        for x in self._names:
            for y in self._names:
                xy = self._table[(x, y)]
                for z in self._names:
                    if self._table[(xy, z)] != self._table[(x, self._table[(y, z)])]:
                        raise FactorStructureError('table is not associative at ({0}, {1}, {2})'.format(x, y, z),
                                                   witness=(x, y, z))

    def _search_norms(self):
        norms = {self._unit: 0}
        parents = {self._unit: (self._unit, self._unit)}
        frontier = [self._unit]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self._alphabet:
                    y = self._table[(x, g)]
                    if y not in norms:
                        norms[y] = norms[x] + 1
                        parents[y] = (x, g)
                        nxt.append(y)
            frontier = nxt
        missing = [x for x in self._names if x not in norms]
        if missing:
            raise FactorStructureError('generators do not generate {0}'.format(', '.join(missing)), witness=missing[0])
        return norms, parents

    def with_eta(self, eta):
        """返回使用另一个η的副本"""
        return FiniteMonoid(self._names, self._table, self._unit, self._alphabet.letters, eta=eta)

    @property
    def one(self):
        return self._unit

    @property
    def names(self):
        return self._names

    def letter_element(self, letter):
        return self._alphabet.check_letter(letter)

    def multiply(self, x, y):
        try:
            return self._table[(x, y)]
        except KeyError:
            raise FactorClientError('unknown element in product {0!r}*{1!r}'.format(x, y))

    def norm(self, x):
        return self._norms[x]

    def eta(self, x):
        try:
            return self._eta[x]
        except KeyError:
            raise FactorClientError('unknown element {0!r}'.format(x))

    def eta_table(self):
        return dict(self._eta)

    def table(self):
        return dict(self._table)

    def element_name(self, x):
        return x

    def parse_element(self, text):
        text = to_unicode(text).strip()
        if text in self._names:
            return text
        return FactorableMonoid.parse_element(self, text)

    def is_finite(self):
        return True

    def elements(self):
        return list(self._names)


class AxiomReport(object):
    """按检查项汇总的校验报告, 违例作为报告内容而不是异常"""

    def __init__(self, title):
        self._title = title
        self._checks = OrderedDict()
        self.details = {}

    @property
    def title(self):
        return self._title

    def add_check(self, name):
        if name not in self._checks:
            self._checks[name] = {'checked': 0, 'violations': 0, 'witnesses': [], 'skipped': None}
        return self._checks[name]

    def record(self, name, ok, witness=None, describe=None):
        """记录一次检查, 违例时保存反例(最多MAX_WITNESSES个)"""
        entry = self.add_check(name)
        entry['checked'] += 1
        if not ok:
            entry['violations'] += 1
            if len(entry['witnesses']) < MAX_WITNESSES:
                entry['witnesses'].append((witness, describe if describe is not None else repr(witness)))
        return ok

    def skip(self, name, reason):
        entry = self.add_check(name)
        entry['skipped'] = reason

    def merge(self, other, prefix=None):
        for name, entry in other._checks.items():
            key = name if prefix is None else u'{0}.{1}'.format(prefix, name)
            target = self.add_check(key)
            target['checked'] += entry['checked']
            target['violations'] += entry['violations']
            room = MAX_WITNESSES - len(target['witnesses'])
            target['witnesses'].extend(entry['witnesses'][:max(room, 0)])
            if entry['skipped'] is not None:
                target['skipped'] = entry['skipped']
        return self

    def names(self):
        return list(self._checks.keys())

    def passed(self, name=None):
        if name is not None:
            return self._checks[name]['violations'] == 0
        return all(e['violations'] == 0 for e in self._checks.values())

    def failures(self):
        return [n for n, e in self._checks.items() if e['violations']]

    def checked(self, name):
        return self._checks[name]['checked']

    def violations(self, name):
        return self._checks[name]['violations']

    def is_skipped(self, name):
        return self._checks[name]['skipped'] is not None

    def witnesses(self, name):
        return [w for w, _ in self._checks[name]['witnesses']]

    def to_dict(self):
        return OrderedDict((n, {'checked': e['checked'], 'violations': e['violations'],
                                'witnesses': [d for _, d in e['witnesses']], 'skipped': e['skipped']})
                           for n, e in self._checks.items())

    def to_text(self):
        lines = [u'{0}: {1}'.format(self._title, u'PASS' if self.passed() else u'FAIL')]
        for name, entry in self._checks.items():
            if entry['skipped'] is not None:
                lines.append(u'  {0}: skipped ({1})'.format(name, entry['skipped']))
                continue
            status = u'ok' if entry['violations'] == 0 else u'FAIL'
            lines.append(u'  {0}: {1} ({2} checked, {3} violations)'.format(
                name, status, entry['checked'], entry['violations']))
            for _, describe in entry['witnesses']:
                lines.append(u'    witness {0}'.format(describe))
        return u'\n'.join(lines)

    def __str__(self):
        return self.to_text()


def validate_handle(handle, radius):
    """在半径radius的球上检查η的单位元规则与(F1)-(F3)"""
    report = AxiomReport(u'factorability axioms')
    one = handle.one
    report.record(u'unit', handle.eta(one) == (one, one), one,
                  u'eta(1) = {0}'.format(format_cell(handle, handle.eta(one))))
    for t in handle.generators():
        report.record(u'generators', handle.eta(t) == (one, t), t,
                      u'eta({0}) = {1}'.format(handle.element_name(t), format_cell(handle, handle.eta(t))))
    dist = handle.bfs_distances(radius)
    for x in dist:
        name = handle.element_name(x)
        bar, prime = handle.eta(x)
        report.record(u'F1', handle.multiply(bar, prime) == x, x,
                      u'{0} != {1}'.format(format_cell(handle, (bar, prime)), name))
        n_bar, n_prime = dist.get(bar), dist.get(prime)
        ok = n_bar is not None and n_prime is not None and n_bar + n_prime == dist[x]
        report.record(u'F2', ok, x, u'{0}: norms {1} + {2} != {3}'.format(name, n_bar, n_prime, dist[x]))
        report.record(u'norm', handle.norm(x) == dist[x], x,
                      u'{0}: norm {1} != word length {2}'.format(name, handle.norm(x), dist[x]))
        if x != one:
            report.record(u'F3', handle.is_generator(prime), x,
                          u'{0}: eta prime {1} is not a generator'.format(name, handle.element_name(prime)))
    logger.debug("validate handle radius {0}: {1}".format(radius, 'pass' if report.passed() else report.failures()))
    return report
