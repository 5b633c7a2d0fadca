# -*- coding=utf-8

import logging
from collections import namedtuple, deque

from .fac_comm import DEFAULT_BUDGET, STRATEGIES, format_word, to_unicode
from .fac_exception import FactorClientError
from .foundation import Alphabet, AxiomReport

logger = logging.getLogger(__name__)

IRREDUCIBLE = u'Irreducible'
CYCLE_FOUND = u'CycleFound'
BUDGET_EXHAUSTED = u'BudgetExhausted'

FOLLOW = u'follow'

Rewrite = namedtuple('Rewrite', ['rule_id', 'position', 'word'])
CriticalPair = namedtuple('CriticalPair', ['peak', 'left', 'right', 'rule_ids'])


class RewriteRule(object):
    """重写规则 lhs -> rhs"""

    def __init__(self, lhs, rhs):
        self._lhs = tuple(to_unicode(l) for l in lhs)
        self._rhs = tuple(to_unicode(l) for l in rhs)
        if not self._lhs:
            raise FactorClientError('rule lhs can not be empty')
        if self._lhs == self._rhs:
            raise FactorClientError('rule lhs equals rhs: {0}'.format(format_word(self._lhs)))

    @property
    def lhs(self):
        return self._lhs

    @property
    def rhs(self):
        return self._rhs

    def to_text(self):
        return u'({0}→{1})'.format(format_word(self._lhs), format_word(self._rhs))

    def __eq__(self, other):
        return isinstance(other, RewriteRule) and (self._lhs, self._rhs) == (other._lhs, other._rhs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._lhs, self._rhs))

    def __repr__(self):
        return 'RewriteRule({0!r}, {1!r})'.format(self._lhs, self._rhs)


class RewriteSystem(object):
    """字母表上的字符串重写系统, 规则按给定顺序编号"""

    def __init__(self, alphabet, rules):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self._alphabet = alphabet
        self._rules = []
        for rule in rules:
            if not isinstance(rule, RewriteRule):
                rule = RewriteRule(*rule)
            alphabet.check_word(rule.lhs)
            alphabet.check_word(rule.rhs)
            self._rules.append(rule)
        self._rules = tuple(self._rules)

    @property
    def alphabet(self):
        return self._alphabet

    @property
    def rules(self):
        return self._rules

    def rule(self, rule_id):
        try:
            return self._rules[rule_id]
        except IndexError:
            raise FactorClientError('rule id {0} out of range'.format(rule_id))

    def __len__(self):
        return len(self._rules)

    def to_text(self):
        return u'\n'.join(u'{0}: {1}'.format(i, r.to_text()) for i, r in enumerate(self._rules))


def _occurrences(word, pattern):
    n, m = len(word), len(pattern)
    return [k for k in range(n - m + 1) if word[k:k + m] == pattern]


def apply_rule(system, word, rule_id, position):
    """在位置position(出现段最右字母的位置, 最右为1)应用规则"""
    rule = system.rule(rule_id)
    n, m = len(word), len(rule.lhs)
    k = n - position - m + 1
    if k < 0 or position < 1 or tuple(word[k:k + m]) != rule.lhs:
        raise FactorClientError('rule {0} does not apply at position {1} of {2}'.format(
            rule_id, position, format_word(word)))
    return tuple(word[:k]) + rule.rhs + tuple(word[k + m:])


def rewrite_positions(system, word):
    """word的全部一步重写, 按(位置, 规则号)排序"""
    word = tuple(word)
    n = len(word)
    result = []
    for rule_id, rule in enumerate(system.rules):
        m = len(rule.lhs)
        for k in _occurrences(word, rule.lhs):
            position = n - (k + m - 1)
            result.append(Rewrite(rule_id, position, word[:k] + rule.rhs + word[k + m:]))
    result.sort(key=lambda r: (r.position, r.rule_id))
    return result


def is_irreducible(system, word):
    word = tuple(word)
    for rule in system.rules:
        if _occurrences(word, rule.lhs):
            return False
    return True


class RewriteTrace(object):
    """从start开始的一串(规则号, 位置)重写步, 终点按需重放得到"""

    def __init__(self, system, start, steps=None):
        self._system = system
        self._start = tuple(start)
        self._steps = list(steps or [])
        self._words = None

    @property
    def start(self):
        return self._start

    @property
    def steps(self):
        return list(self._steps)

    def words(self):
        if self._words is None or len(self._words) != len(self._steps) + 1:
            words = [self._start]
            for rule_id, position in self._steps:
                words.append(apply_rule(self._system, words[-1], rule_id, position))
            self._words = words
        return list(self._words)

    @property
    def end(self):
        return self.words()[-1]

    def __len__(self):
        return len(self._steps)

    def lines(self):
        """每步一行: pos=i rule=(l→r) word=..."""
        words = self.words()
        out = []
        for (rule_id, position), word in zip(self._steps, words[1:]):
            out.append(u'pos={0} rule={1} word={2}'.format(
                position, self._system.rule(rule_id).to_text(), format_word(word)))
        return out


def replay(system, trace):
    """重放trace, 返回终点词; 某步不可应用时抛出FactorClientError"""
    word = tuple(trace.start)
    for rule_id, position in trace.steps:
        word = apply_rule(system, word, rule_id, position)
    return word


class TerminationReport(object):
    """reduce的结果: Irreducible / CycleFound / BudgetExhausted"""

    def __init__(self, outcome, word, trace, cycle=None):
        self._outcome = outcome
        self._word = word
        self._trace = trace
        self._cycle = cycle

    @property
    def outcome(self):
        return self._outcome

    @property
    def word(self):
        """终点的不可约词, 环的起止词, 或预算耗尽时最后的词"""
        return self._word

    @property
    def trace(self):
        return self._trace

    @property
    def cycle(self):
        return self._cycle

    def is_irreducible(self):
        return self._outcome == IRREDUCIBLE

    def to_text(self):
        if self._outcome == CYCLE_FOUND:
            return u'{0}({1}, {2} steps)'.format(self._outcome, format_word(self._word), len(self._cycle))
        return u'{0}({1})'.format(self._outcome, format_word(self._word))


def reduce(system, word, budget=DEFAULT_BUDGET, strategy=u'rightmost', positions=None):
    """按策略重写直到不可约, 出现环或预算耗尽

    :param budget(int): 最多的重写步数.
    :param strategy(string): rightmost(最右位置优先)/leftmost/follow.
    :param positions(list): follow策略下循环使用的位置表.
    :return(TerminationReport): 结果.
    """
    if budget < 1:
        raise FactorClientError('budget must be >= 1')
    if strategy not in STRATEGIES and strategy != FOLLOW:
        raise FactorClientError('unknown strategy {0}'.format(strategy))
    if strategy == FOLLOW and not positions:
        raise FactorClientError('follow strategy needs a position schedule')
    word = tuple(word)
    system.alphabet.check_word(word)
    steps = []
    visited = {word: 0}
    current = word
    for step in range(budget):
        candidates = rewrite_positions(system, current)
        if not candidates:
            return TerminationReport(IRREDUCIBLE, current, RewriteTrace(system, word, steps))
        if strategy == u'rightmost':
            chosen = candidates[0]
        elif strategy == u'leftmost':
            top = max(c.position for c in candidates)
            chosen = [c for c in candidates if c.position == top][0]
        else:
            position = positions[step % len(positions)]
            scheduled = [c for c in candidates if c.position == position]
            if not scheduled:
                raise FactorClientError('no rule applies at scheduled position {0} of {1}'.format(
                    position, format_word(current)))
            chosen = scheduled[0]
        steps.append((chosen.rule_id, chosen.position))
        current = chosen.word
        if current in visited:
            first = visited[current]
            cycle = RewriteTrace(system, current, steps[first:])
            logger.debug("cycle of {0} steps at {1}".format(len(cycle), format_word(current)))
            return TerminationReport(CYCLE_FOUND, current, RewriteTrace(system, word, steps), cycle)
        visited[current] = len(steps)
    if not rewrite_positions(system, current):
        return TerminationReport(IRREDUCIBLE, current, RewriteTrace(system, word, steps))
    logger.warning("rewriting budget {0} exhausted at {1}".format(budget, format_word(current)))
    return TerminationReport(BUDGET_EXHAUSTED, current, RewriteTrace(system, word, steps))


def is_strongly_minimal(system):
    """检查强极小性: 右侧不可约, 左侧对其余规则不可约, 单字母不可约"""
    report = AxiomReport(u'strong minimality')
    report.add_check(u'rhs irreducible')
    report.add_check(u'lhs minimal')
    report.add_check(u'letters irreducible')
    for rule_id, rule in enumerate(system.rules):
        report.record(u'rhs irreducible', is_irreducible(system, rule.rhs), rule_id,
                      u'{0}: {1}'.format(rule_id, rule.to_text()))
        others = [r for i, r in enumerate(system.rules) if i != rule_id]
        reducible = any(_occurrences(rule.lhs, r.lhs) for r in others)
        report.record(u'lhs minimal', not reducible, rule_id, u'{0}: {1}'.format(rule_id, rule.to_text()))
    for letter in system.alphabet:
        report.record(u'letters irreducible', is_irreducible(system, (letter,)), letter, letter)
    return report


def critical_pairs(system):
    """全部重叠与包含歧义, 返回CriticalPair列表"""
    pairs = []
    rules = system.rules
    for i, ri in enumerate(rules):
        for j, rj in enumerate(rules):
            li, lj = ri.lhs, rj.lhs
            # lhs_i的后缀与lhs_j的前缀重叠
            for k in range(1, min(len(li), len(lj))):
                if li[-k:] == lj[:k]:
                    peak = li + lj[k:]
                    pairs.append(CriticalPair(peak, ri.rhs + lj[k:], li[:-k] + rj.rhs, (i, j)))
            if i == j:
                continue
            if len(lj) < len(li) or (lj == li and i < j):
                for p in _occurrences(li, lj):
                    pairs.append(CriticalPair(li, ri.rhs, li[:p] + rj.rhs + li[p + len(lj):], (i, j)))
    return pairs


def _descendants(system, word, budget):
    """返回(全部后代, 是否在预算内穷尽)"""
    seen = {word}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for r in rewrite_positions(system, current):
            if r.word not in seen:
                if len(seen) >= budget:
                    return seen, False
                seen.add(r.word)
                queue.append(r.word)
    return seen, True


class ConfluenceReport(object):
    """临界峰的汇合情况"""

    def __init__(self):
        self.joinable = []
        self.non_joinable = []
        self.undecided = []

    def passed(self):
        return not self.non_joinable and not self.undecided

    def to_text(self):
        lines = [u'confluence on critical peaks: {0} ({1} joinable, {2} non-joinable, {3} undecided)'.format(
            u'PASS' if self.passed() else u'FAIL', len(self.joinable), len(self.non_joinable), len(self.undecided))]
        for pair, u, v in self.non_joinable:
            lines.append(u'  non-joinable peak {0}: {1} / {2}'.format(
                format_word(pair.peak), format_word(u), format_word(v)))
        for pair in self.undecided:
            lines.append(u'  undecided peak {0}'.format(format_word(pair.peak)))
        return u'\n'.join(lines)


def check_confluence_on_peaks(system, budget=DEFAULT_BUDGET):
    """对每个临界峰搜索两支的后代是否相交"""
    report = ConfluenceReport()
    for pair in critical_pairs(system):
        if pair.left == pair.right:
            report.joinable.append(pair)
            continue
        left, left_done = _descendants(system, pair.left, budget)
        right, right_done = _descendants(system, pair.right, budget)
        if left & right:
            report.joinable.append(pair)
        elif left_done and right_done:
            u = sorted(w for w in left if is_irreducible(system, w))
            v = sorted(w for w in right if is_irreducible(system, w))
            report.non_joinable.append((pair, u[0] if u else pair.left, v[0] if v else pair.right))
        else:
            logger.warning("peak {0} undecided within budget {1}".format(format_word(pair.peak), budget))
            report.undecided.append(pair)
    return report


def effective_sequence_bound(n):
    """c(1)=1, c(2)=4, c(n)=3c(n-1)+c(n-2)+3"""
    if n < 1:
        raise FactorClientError('n must be >= 1, got {0}'.format(n))
    if n == 1:
        return 1
    prev, cur = 1, 4
    for _ in range(3, n + 1):
        prev, cur = cur, 3 * cur + prev + 3
    return cur


def is_singleton_class(system, word):
    """word所在的等价类是否只含word本身"""
    word = tuple(word)
    if not is_irreducible(system, word):
        return False
    for rule in system.rules:
        if not rule.rhs or _occurrences(word, rule.rhs):
            return False
    return True
