# -*- coding=utf-8

import itertools
import logging
from collections import deque

from .fac_comm import DEFAULT_ORACLE_DEPTH, DEFAULT_ORACLE_BUDGET, format_sequence
from .fac_exception import FactorClientError, FactorStructureError, FactorBudgetError
from .foundation import AxiomReport, format_cell
from .factorability import f_i

logger = logging.getLogger(__name__)


def _commute(a, b):
    return abs(a - b) >= 2


def _check_entries(seq):
    seq = tuple(seq)
    for i in seq:
        if not isinstance(i, int) or i < 1:
            raise FactorClientError('sequence entries must be positive integers, got {0!r}'.format(i))
    return seq


def is_leftmost(seq):
    """相邻两项可交换时左项更大"""
    seq = _check_entries(seq)
    return all(not _commute(l, r) or l > r for l, r in zip(seq, seq[1:]))


def is_rightmost(seq):
    """相邻两项可交换时左项更小"""
    seq = _check_entries(seq)
    return all(not _commute(l, r) or l < r for l, r in zip(seq, seq[1:]))


def is_reduced(seq):
    seq = tuple(seq)
    return all(l != r for l, r in zip(seq, seq[1:]))


def _bubble(seq, wrong_order):
    seq = list(_check_entries(seq))
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(seq) - 1:
            l, r = seq[k], seq[k + 1]
            if l == r:
                del seq[k + 1]
                changed = True
                continue
            if _commute(l, r) and wrong_order(l, r):
                seq[k], seq[k + 1] = r, l
                changed = True
            k += 1
    return tuple(seq)


def leftmost_reduced(seq):
    """P-等价的唯一左极约化代表元"""
    return _bubble(seq, lambda l, r: l < r)


def rightmost_reduced(seq):
    """P-等价的唯一右极约化代表元"""
    return _bubble(seq, lambda l, r: l > r)


def j_blocks(seq):
    """右极约化序列按连续递减1的极大段分解, 返回[(a, b)]从左到右"""
    seq = _check_entries(seq)
    if not is_rightmost(seq) or not is_reduced(seq):
        raise FactorClientError('{0} is not right-most and reduced'.format(format_sequence(seq)))
    blocks = []
    start = 0
    for k in range(1, len(seq) + 1):
        if k == len(seq) or seq[k] != seq[k - 1] - 1:
            blocks.append((seq[k - 1], seq[start]))
            start = k
    return blocks


def is_small(seq):
    """块的最大值从左到右严格递增时是小序列"""
    blocks = j_blocks(rightmost_reduced(seq))
    maxima = [b for _, b in blocks]
    return all(x < y for x, y in zip(maxima, maxima[1:]))


def _has_pattern(seq):
    return any(seq[k] == seq[k + 2] == seq[k + 1] + 1 for k in range(len(seq) - 2))


def is_small_oracle(seq, expansion_depth=DEFAULT_ORACLE_DEPTH, budget=DEFAULT_ORACLE_BUDGET):
    """在P-移动图上搜索(k+1, k, k+1)因子, 找到则不是小序列

    移动包括交换可交换的相邻项, 收缩平方aa->a, 以及至多expansion_depth次展开a->aa.
    """
    start = _check_entries(seq)
    seen = {(start, 0)}
    queue = deque([(start, 0)])
    while queue:
        current, used = queue.popleft()
        if _has_pattern(current):
            return False
        moves = []
        for k in range(len(current) - 1):
            l, r = current[k], current[k + 1]
            if _commute(l, r):
                moves.append((current[:k] + (r, l) + current[k + 2:], used))
            if l == r:
                moves.append((current[:k] + current[k + 1:], used))
        if used < expansion_depth:
            for k in range(len(current)):
                moves.append((current[:k + 1] + current[k:], used + 1))
        for state in moves:
            if state not in seen:
                if len(seen) >= budget:
                    raise FactorBudgetError('smallness of {0} undecided within {1} states'.format(
                        format_sequence(start), budget), budget=budget, last=current)
                seen.add(state)
                queue.append(state)
    return True


def enumerate_small(n, include_empty=True):
    """F_n中全部右极, 约化, 小的序列(Λ_n), 按(长度, 项)排序

    由块的文法生成: 块最大值 b_l < ... < b_1 <= n, 每块 a_r <= b_r.
    """
    if n < 0:
        raise FactorClientError('n must be >= 0, got {0}'.format(n))
    result = []
    for size in range(0, n + 1):
        for maxima in itertools.combinations(range(1, n + 1), size):
            for lows in itertools.product(*[range(1, b + 1) for b in maxima]):
                seq = ()
                for a, b in zip(lows, maxima):
                    seq += segment_J(a, b)
                result.append(seq)
    if not include_empty:
        result = [s for s in result if s]
    result.sort(key=lambda s: (len(s), s))
    return result


def segment_I(a, b):
    """I_a^b = (a, a+1, ..., b)"""
    if a < 1 or a > b:
        raise FactorClientError('segment needs 1 <= a <= b, got a={0}, b={1}'.format(a, b))
    return tuple(range(a, b + 1))


def segment_J(a, b):
    """J_a^b = (b, b-1, ..., a)"""
    if a < 1 or a > b:
        raise FactorClientError('segment needs 1 <= a <= b, got a={0}, b={1}'.format(a, b))
    return tuple(range(b, a - 1, -1))


def D_sequence(k):
    """D_k = I_k^k I_{k-1}^k ... I_1^k"""
    if k < 1:
        raise FactorClientError('k must be >= 1, got {0}'.format(k))
    seq = ()
    for a in range(k, 0, -1):
        seq += segment_I(a, k)
    return seq


def evaluate_f(handle, seq, tup):
    """f_I = f_{i_s} ∘ ... ∘ f_{i_1}, 最右项先作用"""
    seq = _check_entries(seq)
    tup = tuple(tup)
    for i in seq:
        if i > len(tup) - 1:
            raise FactorClientError('index {0} out of range for a {1}-tuple'.format(i, len(tup)))
    for i in reversed(seq):
        tup = f_i(handle, tup, i)
    return tup


def check_absorption_D(handle, n, samples, extra_length=2):
    """在样本元组上检查 f(D_n I) = f(D_n) = f(I D_n) 与 f((I_1^n)^n) = f(D_n)"""
    report = AxiomReport(u'absorption of D_{0}'.format(n))
    report.add_check(u'D absorbs')
    report.add_check(u'power of I')
    d = D_sequence(n)
    power = segment_I(1, n) * n
    extras = [()]
    for length in range(1, extra_length + 1):
        extras.extend(itertools.product(range(1, n + 1), repeat=length))
    for tup in samples:
        tup = tuple(tup)
        base = evaluate_f(handle, d, tup)
        for extra in extras:
            left = evaluate_f(handle, d + extra, tup)
            right = evaluate_f(handle, extra + d, tup)
            report.record(u'D absorbs', left == base == right, (tup, extra),
                          u'{0} with {1}'.format(format_cell(handle, tup), format_sequence(extra)))
        report.record(u'power of I', evaluate_f(handle, power, tup) == base, tup, format_cell(handle, tup))
    return report


def xi_involution(seq, is_zero, is_stable_at):
    """Λ∖F_x上的对合ξ

    :param seq(tuple): 书写顺序的序列(i_s, ..., i_1).
    :param is_zero(callable): is_zero(seq)表示f_I(x)为零, 此时ξ固定seq.
    :param is_stable_at(callable): is_stable_at(t)表示 f_{i_t}...f_{i_1}(x) 在位置 i_t-1 稳定.
    :return(tuple): ξ(seq).
    """
    seq = _check_entries(seq)
    s = len(seq)
    if is_zero(seq):
        return seq
    t = None
    for cand in range(1, s + 1):
        if seq[s - cand] >= 2 and is_stable_at(cand):
            t = cand
            break
    if t is None:
        raise FactorStructureError('no stable position for {0}'.format(format_sequence(seq)), witness=seq)
    while True:
        j = seq[s - t] - 1
        prefix, suffix = seq[:s - t], seq[s - t:]
        # 情形1: j可以交换到前缀的最右端, 删去它
        for p in range(len(prefix) - 1, -1, -1):
            if not _commute(prefix[p], j):
                if prefix[p] == j:
                    return prefix[:p] + prefix[p + 1:] + suffix
                break
        # 情形2: 插入j后仍是小序列
        if is_small(prefix + (j,) + suffix):
            return rightmost_reduced(prefix + (j,)) + suffix
        # 情形3: 改用前缀中最右的j
        occurrences = [p for p in range(len(prefix)) if prefix[p] == j]
        if not occurrences:
            raise FactorStructureError('xi undefined on {0}'.format(format_sequence(seq)), witness=seq)
        t = s - occurrences[-1]
        logger.debug("xi on {0}: advance to t={1}".format(format_sequence(seq), t))
