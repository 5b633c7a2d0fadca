# -*- coding=utf-8

import itertools
import logging
from threading import Lock

from .fac_comm import UNIT_MARK, DEFAULT_BUDGET, format_word, to_unicode
from .fac_exception import FactorClientError, FactorStructureError, FactorBudgetError, NormalFormError
from .foundation import Alphabet, AxiomReport, FactorableMonoid, ball, format_cell
from .rewriting import RewriteRule, RewriteSystem

logger = logging.getLogger(__name__)


class PhiTable(object):
    """局部可分解结构φ: E⁺×E⁺ -> E⁺×E⁺

    只保存非平凡的值, 未出现的对是不动点; φ(s,1)=(1,s)与φ(1,s)=(1,s)不存储.
    resolver用于按需计算的表(如Artin幺半群), 结果缓存在锁保护的字典中.
    """

    def __init__(self, alphabet, rules=None, resolver=None):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self._alphabet = alphabet
        self._rules = {}
        self._resolver = resolver
        self._cache = {}
        self._lock = Lock()
        for (x, y), (u, v) in (rules or {}).items():
            x, y, u, v = [to_unicode(l) for l in (x, y, u, v)]
            for letter in (x, y, u, v):
                if letter != UNIT_MARK:
                    alphabet.check_letter(letter)
            if x == UNIT_MARK or y == UNIT_MARK:
                if (u, v) != self._unit_value(x, y):
                    raise FactorClientError('phi({0}, {1}) is fixed to ({2}, {3})'.format(
                        x, y, *self._unit_value(x, y)))
                continue
            if (u, v) != (x, y):
                self._rules[(x, y)] = (u, v)

    @staticmethod
    def _unit_value(x, y):
        if y == UNIT_MARK:
            return (UNIT_MARK, x)
        return (UNIT_MARK, y)

    @property
    def alphabet(self):
        return self._alphabet

    def pointed_letters(self):
        """E⁺ = E ∪ {1}, 单位元记号在最后"""
        return list(self._alphabet.letters) + [UNIT_MARK]

    def phi(self, x, y):
        if x == UNIT_MARK or y == UNIT_MARK:
            return self._unit_value(x, y)
        value = self._rules.get((x, y))
        if value is not None:
            return value
        if self._resolver is None:
            return (x, y)
        with self._lock:
            value = self._cache.get((x, y))
        if value is None:
            value = tuple(self._resolver(x, y))
            with self._lock:
                self._cache[(x, y)] = value
        return value

    def is_stable_pair(self, x, y):
        return self.phi(x, y) == (x, y)

    def unstable_pairs(self):
        """E×E中全部不稳定对, 按字母表顺序"""
        letters = self._alphabet.letters
        return [(x, y) for x in letters for y in letters if not self.is_stable_pair(x, y)]

    def rules(self):
        """全部非平凡的值 [((x, y), (u, v))], 按字母表顺序"""
        return [((x, y), self.phi(x, y)) for x, y in self.unstable_pairs()]

    def is_totally_stable(self, word):
        return all(self.is_stable_pair(word[k], word[k + 1]) for k in range(len(word) - 1))


def phi_i(table, tup, i):
    """把位置(i+1, i)替换为φ的值, 位置1是最右"""
    n = len(tup)
    if i < 1 or i > n - 1:
        raise FactorClientError('phi index {0} out of range for a {1}-tuple'.format(i, n))
    left, right = n - 1 - i, n - i
    u, v = table.phi(tup[left], tup[right])
    return tuple(tup[:left]) + (u, v) + tuple(tup[right + 1:])


def _sweep(table, tup):
    for i in range(1, len(tup)):
        tup = phi_i(table, tup, i)
    return tup


def _extend(table, nf, letters):
    """把letters逐个接到正规形nf右侧"""
    letters = [l for l in letters if l != UNIT_MARK]
    total = len(nf) + len(letters)
    budget = total * (total + 1)
    count = 0
    pending = list(letters)
    current = tuple(nf)
    while pending:
        count += 1
        if count > budget:
            raise NormalFormError('normal form recursion exceeds {0} steps on {1}'.format(
                budget, format_word(tuple(nf) + tuple(letters))), witness=tuple(nf) + tuple(letters))
        swept = _sweep(table, current + (pending.pop(0),))
        if UNIT_MARK in swept:
            # 含1的串的正规形等于去掉1后的正规形
            pending = [l for l in swept if l != UNIT_MARK] + pending
            current = ()
        else:
            current = swept
    return current


def normal_form(table, word):
    """递归定义的正规形 NF(a_n..a_1) = φ_{n-1}..φ_1(NF(a_n..a_2), a_1)"""
    word = tuple(to_unicode(l) for l in word)
    for letter in word:
        if letter != UNIT_MARK:
            table.alphabet.check_letter(letter)
    return _extend(table, (), word)


def eta_of(table, x):
    """正规形x的分解 (去掉最右字母, 最右字母); 空词返回(空词, 1)"""
    if not x:
        return (), UNIT_MARK
    return tuple(x[:-1]), x[-1]


class PhiMonoid(FactorableMonoid):
    """φ表定义的幺半群, 元素是正规形元组"""

    def __init__(self, table):
        FactorableMonoid.__init__(self, table.alphabet)
        self._phi = table

    @property
    def table(self):
        return self._phi

    @property
    def one(self):
        return ()

    def letter_element(self, letter):
        return (self._alphabet.check_letter(letter),)

    def generators(self):
        return [(l,) for l in self._alphabet]

    def is_generator(self, x):
        return len(x) == 1

    def multiply(self, x, y):
        return _extend(self._phi, x, y)

    def norm(self, x):
        return len(x)

    def eta(self, x):
        bar, prime = eta_of(self._phi, x)
        return bar, (() if prime == UNIT_MARK else (prime,))

    def element_name(self, x):
        return format_word(x)

    def normal_form(self, word):
        return normal_form(self._phi, word)


def _triple_nf(table, tup):
    """用φ1φ2φ1φ2计算至多三个字母的正规形"""
    tup = tuple(l for l in tup if l != UNIT_MARK)
    if len(tup) == 3:
        for i in (2, 1, 2, 1):
            tup = phi_i(table, tup, i)
        stripped = tuple(l for l in tup if l != UNIT_MARK)
        if len(stripped) < 3:
            return _triple_nf(table, stripped)
        return stripped
    if len(tup) == 2:
        stripped = tuple(l for l in table.phi(tup[0], tup[1]) if l != UNIT_MARK)
        return stripped
    return tup


def check_local_factorability(table):
    """检查局部可分解性的公理2-5"""
    report = AxiomReport(u'local factorability')
    for name in (u'idempotency', u'unit', u'triple stability', u'normal form'):
        report.add_check(name)
    pointed = table.pointed_letters()
    letters = table.alphabet.letters
    for a in pointed:
        for b in pointed:
            value = table.phi(a, b)
            report.record(u'idempotency', table.phi(*value) == value, (a, b),
                          u'phi({0}, {1}) = ({2}, {3}) is not a fixed point'.format(a, b, value[0], value[1]))
        report.record(u'unit', table.phi(a, UNIT_MARK) == (UNIT_MARK, a) and
                      table.is_stable_pair(UNIT_MARK, a), a, a)
    checked = []
    for a in letters:
        for b in letters:
            ab_unstable = not table.is_stable_pair(a, b)
            for c in letters:
                tup = (a, b, c)
                for i in (2, 1, 2):
                    tup = phi_i(table, tup, i)
                ok = UNIT_MARK in tup or table.is_totally_stable(tup)
                report.record(u'triple stability', ok, (a, b, c),
                              u'({0}, {1}, {2}) -> {3}'.format(a, b, c, format_word(tup)))
                # 有一对稳定时第五条公理自动成立
                if not ab_unstable or table.is_stable_pair(b, c):
                    continue
                checked.append((a, b, c))
                lhs = _triple_nf(table, (a, b, c))
                rhs = _triple_nf(table, phi_i(table, (a, b, c), 1))
                report.record(u'normal form', lhs == rhs, (a, b, c), u'({0}, {1}, {2}): {3} != {4}'.format(
                    a, b, c, format_word(lhs), format_word(rhs)))
    report.details[u'normal form triples'] = checked
    logger.debug("local factorability: {0} totally unstable triples checked".format(len(checked)))
    return report


def induced_rewriting_system(table):
    """每个不稳定对(x,y)给出规则 (x,y) -> φ(x,y)去掉1"""
    rules = []
    for (x, y), (u, v) in table.rules():
        rhs = tuple(l for l in (u, v) if l != UNIT_MARK)
        rules.append(RewriteRule((x, y), rhs))
    return RewriteSystem(table.alphabet, rules)


def f_i(handle, tup, i):
    """把位置(i+1, i)替换为η(x_{i+1} x_i)"""
    n = len(tup)
    if i < 1 or i > n - 1:
        raise FactorClientError('f index {0} out of range for a {1}-tuple'.format(i, n))
    left, right = n - 1 - i, n - i
    bar, prime = handle.eta(handle.multiply(tup[left], tup[right]))
    return tuple(tup[:left]) + (bar, prime) + tuple(tup[right + 1:])


def _apply_sequence(handle, tup, seq):
    # seq按书写顺序, 最右的先作用
    for i in reversed(seq):
        tup = f_i(handle, tup, i)
    return tup


def _norm_sum(handle, tup):
    return sum(handle.norm(x) for x in tup)


def check_recognition_principle(handle, radius):
    """(m,a)稳定 当且仅当 (η′(m),a)稳定"""
    report = AxiomReport(u'recognition principle')
    report.add_check(u'recognition')
    for m in ball(handle, radius):
        prime = handle.eta_prime(m)
        for a in handle.generators():
            lhs = handle.is_stable(m, a)
            rhs = handle.is_stable(prime, a)
            report.record(u'recognition', lhs == rhs, (m, a), u'{0}: stable={1}, prime pair stable={2}'.format(
                format_cell(handle, (m, a)), lhs, rhs))
    return report


def _triples_up_to(handle, radius):
    elements = ball(handle, radius)
    norms = dict((x, handle.norm(x)) for x in elements)
    for x3 in elements:
        for x2 in elements:
            if norms[x3] + norms[x2] > radius:
                continue
            for x1 in elements:
                if norms[x3] + norms[x2] + norms[x1] <= radius:
                    yield (x3, x2, x1)


def _graded_equal(handle, tup, results):
    total = _norm_sum(handle, tup)
    drops = [_norm_sum(handle, r) < total for r in results]
    if all(drops):
        return True
    return not any(drops) and all(r == results[0] for r in results)


def check_graded_equality(handle, radius, triples=None):
    """f1f2f1f2, f2f1f2, f2f1f2f1 在分次意义下相等"""
    report = AxiomReport(u'graded equality')
    report.add_check(u'graded equality')
    if triples is None:
        triples = _triples_up_to(handle, radius)
    for tup in triples:
        results = [_apply_sequence(handle, tup, seq) for seq in ((1, 2, 1, 2), (2, 1, 2), (2, 1, 2, 1))]
        report.record(u'graded equality', _graded_equal(handle, tup, results), tup, u'{0} -> {1}'.format(
            format_cell(handle, tup), u', '.join(format_cell(handle, r) for r in results)))
    return report


def check_strong_conditions(handle, radius):
    """(xs)′ = (x′s)′ 与 \\overline{xs} = x̄ · \\overline{x′s}"""
    report = AxiomReport(u'strong conditions')
    report.add_check(u'prime')
    report.add_check(u'bar')
    for x in ball(handle, radius):
        bar, prime = handle.eta(x)
        for s in handle.generators():
            xs = handle.eta(handle.multiply(x, s))
            ps = handle.eta(handle.multiply(prime, s))
            cell = format_cell(handle, (x, s))
            report.record(u'prime', xs[1] == ps[1], (x, s), u'{0}: {1} != {2}'.format(
                cell, handle.element_name(xs[1]), handle.element_name(ps[1])))
            product = handle.multiply(bar, ps[0])
            report.record(u'bar', xs[0] == product, (x, s), u'{0}: {1} != {2}'.format(
                cell, handle.element_name(xs[0]), handle.element_name(product)))
    return report


def check_weak_factorability(handle, radius):
    """图(WF)在分次意义下交换"""
    report = AxiomReport(u'weak factorability')
    report.add_check(u'weak factorability')
    for x in ball(handle, radius):
        bar, prime = handle.eta(x)
        total = handle.norm(x) + 1
        for t in handle.generators():
            direct = handle.eta(handle.multiply(x, t))
            pt_bar, pt_prime = handle.eta(handle.multiply(prime, t))
            composite = (handle.multiply(bar, pt_bar), pt_prime)
            drop_direct = _norm_sum(handle, direct) < total
            drop_composite = _norm_sum(handle, composite) < total
            ok = (drop_direct and drop_composite) or (not drop_direct and not drop_composite and direct == composite)
            report.record(u'weak factorability', ok, (x, t), u'{0}: {1} vs {2}'.format(
                format_cell(handle, (x, t)), format_cell(handle, direct), format_cell(handle, composite)))
    return report


def longest_effective_sequence(handle, tup):
    """每一步都改变元组的f_i序列的最大长度; 存在环时抛出FactorStructureError"""
    memo = {}
    in_progress = set()

    def visit(current):
        if current in memo:
            return memo[current]
        if current in in_progress:
            raise FactorStructureError('cycle of effective f-moves through {0}'.format(
                format_cell(handle, current)), witness=current)
        in_progress.add(current)
        best = 0
        for i in range(1, len(current)):
            nxt = f_i(handle, current, i)
            if nxt != current:
                best = max(best, 1 + visit(nxt))
        in_progress.discard(current)
        memo[current] = best
        return best

    return visit(tuple(tup))


def search_factorability(handle, budget=DEFAULT_BUDGET, limit=None):
    """对有限幺半群枚举η的候选, 返回通过全部检查的η表列表

    对每个范数≥2的元素选一种分解(x̄, x′), x′∈E且N(x̄)=N(x)-1; 候选按确定的顺序枚举.
    """
    if not handle.is_finite():
        raise FactorClientError('factorability search needs a finite monoid')
    elements = handle.elements()
    gens = handle.generators()
    base = {}
    choices = []
    for x in elements:
        n = handle.norm(x)
        if n <= 1:
            base[x] = (handle.one, handle.one) if n == 0 else (handle.one, x)
            continue
        splits = [(y, g) for y in elements for g in gens
                  if handle.norm(y) == n - 1 and handle.multiply(y, g) == x]
        choices.append((x, splits))
    triples = list(itertools.product(elements, repeat=3))
    found = []
    examined = 0
    for combo in itertools.product(*[splits for _, splits in choices]):
        examined += 1
        if examined > budget:
            raise FactorBudgetError('factorability search exceeds {0} candidates'.format(budget),
                                    budget=budget, last=found)
        eta = dict(base)
        for (x, _), split in zip(choices, combo):
            eta[x] = split
        candidate = handle.with_eta(eta)
        if not check_recognition_principle(candidate, len(elements)).passed():
            continue
        if not check_graded_equality(candidate, 0, triples=triples).passed():
            continue
        found.append(eta)
        if limit is not None and len(found) >= limit:
            break
    logger.debug("factorability search: {0} candidates examined, {1} found".format(examined, len(found)))
    return found
