# -*- coding=utf-8

import logging
from collections import namedtuple
from threading import Lock

from .fac_comm import DEFAULT_BUDGET, DEFAULT_MAX_DEGREE, format_sequence, sign
from .fac_exception import FactorClientError, FactorBudgetError, MorseMatchingError, ChainComplexError
from .fac_threadpool import run_tasks
from .foundation import format_cell
from .indexseq import enumerate_small, is_rightmost, is_reduced, is_small, xi_involution
from .snf import SparseMatrix, elementary_divisors

logger = logging.getLogger(__name__)

ESSENTIAL = 'essential'
COLLAPSIBLE = 'collapsible'
REDUNDANT = 'redundant'

METHODS = ('lambda', 'coherent', 'generic')

CellStatus = namedtuple('CellStatus', ['kind', 'height'])


class FormalChain(object):
    """整系数的胞腔线性组合, 不保存零系数"""

    def __init__(self, terms=None):
        self._terms = {}
        for cell, coeff in (terms or {}).items():
            self.add(cell, coeff)

    def add(self, cell, coeff=1):
        if not coeff:
            return self
        cell = tuple(cell)
        value = self._terms.get(cell, 0) + coeff
        if value:
            self._terms[cell] = value
        else:
            del self._terms[cell]
        return self

    def add_chain(self, other, factor=1):
        for cell, coeff in other.items():
            self.add(cell, factor * coeff)
        return self

    def coefficient(self, cell):
        return self._terms.get(tuple(cell), 0)

    def cells(self):
        return list(self._terms.keys())

    def items(self):
        return list(self._terms.items())

    def is_zero(self):
        return not self._terms

    def copy(self):
        return FormalChain(self._terms)

    def to_text(self, handle):
        if not self._terms:
            return u'0'
        parts = sorted((format_cell(handle, cell), coeff) for cell, coeff in self._terms.items())
        return u' '.join(u'{0:+d} {1}'.format(coeff, name) for name, coeff in parts)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        return isinstance(other, FormalChain) and self._terms == other._terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'FormalChain({0!r})'.format(self._terms)


def _is_zero_cell(handle, cell):
    one = handle.one
    return any(m == one for m in cell)


def face(handle, cell, i):
    """第i个面映射d_i, 含单位元的结果为零, 返回None

    d_0去掉位置1, d_n去掉位置n, 其余把位置i+1与i相乘.
    """
    cell = tuple(cell)
    n = len(cell)
    if i < 0 or i > n:
        raise FactorClientError('face index {0} out of range for a {1}-cell'.format(i, n))
    if n == 0:
        raise FactorClientError('the 0-cell has no faces')
    if i == 0:
        result = cell[:-1]
    elif i == n:
        result = cell[1:]
    else:
        left = n - 1 - i
        result = cell[:left] + (handle.multiply(cell[left], cell[left + 1]),) + cell[left + 2:]
    if _is_zero_cell(handle, result):
        return None
    return result


def bar_differential(handle, cell):
    """约化bar复形的微分 d = Σ (-1)^i d_i"""
    cell = tuple(cell)
    chain = FormalChain()
    if not cell:
        return chain
    for i in range(len(cell) + 1):
        result = face(handle, cell, i)
        if result is not None:
            chain.add(result, sign(i))
    return chain


def height(handle, cell):
    """最长的本质右子胞腔[m_k|...|m_1]的长度k"""
    cell = tuple(cell)
    n = len(cell)
    h = 0
    while h < n:
        m = cell[n - 1 - h]
        if not handle.is_generator(m):
            break
        if h >= 1 and handle.is_stable(m, cell[n - h]):
            break
        h += 1
    return h


def classify(handle, cell):
    """本质 / 可坍缩 / 冗余, 及高度"""
    cell = tuple(cell)
    if _is_zero_cell(handle, cell):
        raise FactorClientError('cell {0} contains the unit'.format(format_cell(handle, cell)))
    n = len(cell)
    h = height(handle, cell)
    if h == n:
        return CellStatus(ESSENTIAL, h)
    if h == 0:
        return CellStatus(REDUNDANT, 0)
    if handle.is_stable(cell[n - 1 - h], cell[n - h]):
        return CellStatus(COLLAPSIBLE, h)
    return CellStatus(REDUNDANT, h)


def matching_mu(handle, cell):
    """可分解幺半群上的Morse配对μ

    可坍缩(高度h)时合并位置h+1与h; 冗余(高度h)时把位置h+1拆成(η̄, η′).
    """
    cell = tuple(cell)
    status = classify(handle, cell)
    n = len(cell)
    h = status.height
    if status.kind == ESSENTIAL:
        raise MorseMatchingError('{0} is essential'.format(format_cell(handle, cell)), witness=cell)
    if status.kind == COLLAPSIBLE:
        left = n - 1 - h
        return cell[:left] + (handle.multiply(cell[left], cell[left + 1]),) + cell[left + 2:]
    left = n - 1 - h
    bar, prime = handle.eta(cell[left])
    return cell[:left] + (bar, prime) + cell[left + 1:]


def f_cell(handle, cell, seq):
    """在bar复形中计算 f_I(cell), 任一步出现单位元时结果为零, 返回None"""
    cell = tuple(cell)
    n = len(cell)
    for i in reversed(tuple(seq)):
        if i < 1 or i > n - 1:
            raise FactorClientError('f index {0} out of range for a {1}-cell'.format(i, n))
        left = n - 1 - i
        bar, prime = handle.eta(handle.multiply(cell[left], cell[left + 1]))
        cell = cell[:left] + (bar, prime) + cell[left + 2:]
        if _is_zero_cell(handle, cell):
            return None
    return cell


def is_stable_at(handle, cell, p):
    """位置(p+1, p)上的一对元素是否稳定"""
    n = len(cell)
    if p < 1 or p > n - 1:
        return False
    return handle.is_stable(cell[n - 1 - p], cell[n - p])


def is_coherent(handle, cell, seq):
    """所有 d_{i_k} f_{i_{k-1}} ... f_{i_1}(x) 都是冗余胞腔"""
    current = tuple(cell)
    seq = tuple(seq)
    for k in range(len(seq) - 1, -1, -1):
        i = seq[k]
        d = face(handle, current, i)
        if d is None or classify(handle, d).kind != REDUNDANT:
            return False
        current = f_cell(handle, current, (i,))
        if current is None:
            return False
    return True


class MorseMatching(object):
    """可分解幺半群的bar复形与其上的配对, 缓存分类与∂μ"""

    def __init__(self, handle, budget=DEFAULT_BUDGET):
        self._handle = handle
        self._budget = budget
        self._lock = Lock()
        self._status = {}
        self._partner_boundary = {}

    @property
    def handle(self):
        return self._handle

    def classify(self, cell):
        with self._lock:
            status = self._status.get(cell)
        if status is None:
            status = classify(self._handle, cell)
            with self._lock:
                self._status[cell] = status
        return status

    def mu(self, cell):
        return matching_mu(self._handle, cell)

    def boundary(self, cell):
        return bar_differential(self._handle, cell)

    def partner_boundary(self, cell):
        """冗余胞腔x的(∂μ(x), ε), ε = <∂μ(x), x>"""
        with self._lock:
            cached = self._partner_boundary.get(cell)
        if cached is not None:
            return cached
        chain = self.boundary(self.mu(cell))
        epsilon = chain.coefficient(cell)
        if epsilon not in (1, -1):
            raise MorseMatchingError('incidence {0} of {1} with its partner is not a unit'.format(
                epsilon, format_cell(self._handle, cell)), witness=cell)
        cached = (chain, epsilon)
        with self._lock:
            self._partner_boundary[cell] = cached
        return cached

    def theta(self, chain):
        """θ的一步: 本质不变, 可坍缩为零, 冗余x变为 x - ε∂μ(x)"""
        result = FormalChain()
        for cell, coeff in chain.items():
            kind = self.classify(cell).kind
            if kind == ESSENTIAL:
                result.add(cell, coeff)
            elif kind == REDUNDANT:
                partner, epsilon = self.partner_boundary(cell)
                result.add(cell, coeff)
                result.add_chain(partner, -epsilon * coeff)
        return result

    def project(self, chain):
        """投影到本质胞腔"""
        return FormalChain(dict((cell, coeff) for cell, coeff in chain.items()
                                if self.classify(cell).kind == ESSENTIAL))


def _lambda_bound(n):
    # Λ_n中序列的最大长度
    return n * (n + 1) // 2


def redundant_chain(handle, cell, budget=DEFAULT_BUDGET, matching=None):
    """沿⊢关系深度优先搜索冗余胞腔链, 证明其终止

    范数和不变的链上记录面映射下标序列(i_m, ..., i_2), 校验其为右极, 约化, 小序列.
    :return(ChainCertificate): 经过的冗余胞腔, 最长链长, 记录的下标序列.
    """
    matching = matching or MorseMatching(handle, budget)
    return _redundant_chain(matching, tuple(cell), budget)


def _norm_sum(handle, cell):
    return sum(handle.norm(m) for m in cell)


ChainCertificate = namedtuple('ChainCertificate', ['cells', 'longest', 'sequences'])


def _redundant_chain(matching, start, budget):
    handle = matching.handle
    if matching.classify(start).kind != REDUNDANT:
        raise FactorClientError('{0} is not redundant'.format(format_cell(handle, start)))
    bound = _lambda_bound(len(start))
    reached = []
    reached_set = set()
    sequences = set()
    seen = set()
    on_path = set()
    longest = [1]
    states = [0]

    def visit(cell, seq, depth):
        states[0] += 1
        if states[0] > budget:
            raise FactorBudgetError('redundant chains from {0} exceed {1} states'.format(
                format_cell(handle, start), budget), budget=budget, last=cell)
        longest[0] = max(longest[0], depth)
        if cell not in reached_set:
            reached_set.add(cell)
            reached.append(cell)
        on_path.add(cell)
        total = _norm_sum(handle, cell)
        partner, _ = matching.partner_boundary(cell)
        for nxt, _ in sorted(partner.items(), key=lambda item: repr(item[0])):
            if nxt == cell or matching.classify(nxt).kind != REDUNDANT:
                continue
            if nxt in on_path:
                raise MorseMatchingError('redundant chain returns to {0}'.format(format_cell(handle, nxt)),
                                         witness=nxt)
            if _norm_sum(handle, nxt) == total:
                nxt_seq = (matching.classify(nxt).height + 1,) + seq
                if not (is_rightmost(nxt_seq) and is_reduced(nxt_seq) and is_small(nxt_seq)) \
                        or len(nxt_seq) > bound:
                    raise MorseMatchingError('height sequence {0} from {1} is not small'.format(
                        format_sequence(nxt_seq), format_cell(handle, start)), witness=(start, nxt_seq))
                if nxt_seq:
                    sequences.add(nxt_seq)
            else:
                nxt_seq = ()
            if (nxt, nxt_seq) in seen:
                continue
            seen.add((nxt, nxt_seq))
            visit(nxt, nxt_seq, depth + 1)
        on_path.discard(cell)

    visit(start, (), 1)
    logger.debug("redundant chain from {0}: {1} cells, longest {2}".format(
        format_cell(handle, start), len(reached), longest[0]))
    return ChainCertificate(reached, longest[0], sorted(sequences, key=lambda s: (len(s), s)))


def visy_basis(handle, degree):
    """degree维的全部本质胞腔: 元素都在E中, 相邻一对都不稳定"""
    if degree < 0:
        raise FactorClientError('degree must be >= 0, got {0}'.format(degree))
    gens = handle.generators()
    order = dict((g, k) for k, g in enumerate(gens))
    # unstable_left[g]: 使(h, g)不稳定的h
    unstable_left = dict((g, [h for h in gens if not handle.is_stable(h, g)]) for g in gens)
    cells = [()]
    for k in range(degree):
        if k == 0:
            cells = [(g,) for g in gens]
        else:
            cells = [(h,) + cell for cell in cells for h in unstable_left[cell[0]]]
    cells.sort(key=lambda cell: [order[m] for m in cell])
    return cells


def visy_differential_lambda(handle, cell, matching=None):
    """∂(x) = π ∘ d ∘ Σ_{I∈Λ_{n-1}} (-1)^{#I} f_I(x)"""
    cell = tuple(cell)
    matching = matching or MorseMatching(handle)
    n = len(cell)
    result = FormalChain()
    if n == 0:
        return result
    for seq in enumerate_small(n - 1):
        value = f_cell(handle, cell, seq)
        if value is not None:
            result.add_chain(bar_differential(handle, value), sign(len(seq)))
    return matching.project(result)


def visy_differential_coherent(handle, cell, matching=None):
    """对x-相干的约化序列(j, i_r, ..., i_1)求和, 系数(-1)^{j+r}"""
    cell = tuple(cell)
    matching = matching or MorseMatching(handle)
    n = len(cell)
    result = FormalChain()
    if n == 0:
        return result
    bound = _lambda_bound(n - 1)

    def walk(current, r, last):
        if r > bound:
            raise MorseMatchingError('coherent sequence from {0} is longer than {1}'.format(
                format_cell(handle, cell), bound), witness=cell)
        for j in range(n + 1):
            if j == last:
                continue
            d = face(handle, current, j)
            if d is None:
                continue
            kind = matching.classify(d).kind
            if kind == ESSENTIAL:
                result.add(d, sign(j + r))
            elif kind == REDUNDANT and 0 < j < n:
                nxt = f_cell(handle, current, (j,))
                if nxt is not None:
                    walk(nxt, r + 1, j)

    walk(cell, 0, None)
    return result


def morse_differential_generic(matching, cell):
    """任意noetherian配对的Morse微分: 对所有 z_r ⊢ ... ⊢ z_1 的链求和"""
    cell = tuple(cell)
    handle = matching.handle
    result = FormalChain()
    if not cell:
        return result
    bound = _lambda_bound(len(cell)) + 1
    flows = {}

    def flow(z, path):
        # 冗余胞腔z沿所有zigzag路径流到本质胞腔的组合, 每步乘以 -ε
        cached = flows.get(z)
        if cached is not None:
            return cached
        if len(path) > bound:
            raise MorseMatchingError('zigzag path from {0} does not terminate'.format(
                format_cell(handle, cell)), witness=z)
        partner, epsilon = matching.partner_boundary(z)
        out = FormalChain()
        for y, coeff in partner.items():
            if y == z:
                continue
            kind = matching.classify(y).kind
            if kind == ESSENTIAL:
                out.add(y, -epsilon * coeff)
            elif kind == REDUNDANT:
                if y in path:
                    raise MorseMatchingError('zigzag path from {0} returns to {1}'.format(
                        format_cell(handle, cell), format_cell(handle, y)), witness=y)
                out.add_chain(flow(y, path | {y}), -epsilon * coeff)
        flows[z] = out
        return out

    for z, coeff in matching.boundary(cell).items():
        kind = matching.classify(z).kind
        if kind == ESSENTIAL:
            result.add(z, coeff)
        elif kind == REDUNDANT:
            result.add_chain(flow(z, frozenset([z])), coeff)
    return result


def theta_reduce(matching, chain, budget=DEFAULT_BUDGET):
    """迭代θ直到稳定, 结果只含本质胞腔"""
    current = chain.copy()
    for step in range(budget):
        nxt = matching.theta(current)
        if nxt == current:
            logger.debug("theta stabilised after {0} steps".format(step))
            return current
        current = nxt
    raise FactorBudgetError('theta does not stabilise within {0} steps'.format(budget), budget=budget,
                            last=current)


def prp_residual(handle, cell, matching=None):
    """Σ_{I∈Λ_{n-1}∖F_x} (-1)^{#I} f_I(x), 对本质胞腔应为零"""
    cell = tuple(cell)
    result = FormalChain()
    if len(cell) == 0:
        return result
    for seq in enumerate_small(len(cell) - 1):
        if is_coherent(handle, cell, seq):
            continue
        value = f_cell(handle, cell, seq)
        if value is not None:
            result.add(value, sign(len(seq)))
    return result


def xi_cell(handle, cell, seq):
    """本质胞腔x上Λ∖F_x的对合ξ"""
    cell = tuple(cell)
    seq = tuple(seq)
    if is_coherent(handle, cell, seq):
        raise FactorClientError('{0} is coherent for {1}'.format(format_sequence(seq), format_cell(handle, cell)))
    s = len(seq)

    def is_zero(candidate):
        return f_cell(handle, cell, candidate) is None

    def stable_at(t):
        value = f_cell(handle, cell, seq[s - t:])
        return value is not None and is_stable_at(handle, value, seq[s - t] - 1)

    return xi_involution(seq, is_zero, stable_at)


class IntegerChainComplex(object):
    """有限秩自由链复形, 每一维的基与到低一维的稀疏矩阵"""

    def __init__(self, bases, differentials):
        """
        :param bases(list): bases[k]为第k维的基标签列表.
        :param differentials(dict): k -> SparseMatrix, 形状为 (len(bases[k-1]), len(bases[k])).
        """
        self._bases = [list(b) for b in bases]
        self._index = [dict((label, pos) for pos, label in enumerate(b)) for b in self._bases]
        self._diffs = {}
        for k in range(1, len(self._bases)):
            matrix = differentials.get(k)
            if matrix is None:
                matrix = SparseMatrix(len(self._bases[k - 1]), len(self._bases[k]))
            if matrix.shape != (len(self._bases[k - 1]), len(self._bases[k])):
                raise FactorClientError('differential {0} has shape {1}, expected {2}'.format(
                    k, matrix.shape, (len(self._bases[k - 1]), len(self._bases[k]))))
            self._diffs[k] = matrix

    @property
    def max_degree(self):
        return len(self._bases) - 1

    def basis(self, k):
        return list(self._bases[k])

    def rank(self, k):
        if k < 0 or k > self.max_degree:
            return 0
        return len(self._bases[k])

    def index(self, k, label):
        return self._index[k][label]

    def differential(self, k):
        if k < 1 or k > self.max_degree:
            return SparseMatrix(self.rank(k - 1), self.rank(k))
        return self._diffs[k]

    def check_square_zero(self):
        """检查 ∂_{k-1} ∘ ∂_k = 0"""
        for k in range(2, self.max_degree + 1):
            product = self._diffs[k - 1].multiply(self._diffs[k])
            if not product.is_zero():
                (r, c), v = next(product.items())
                raise ChainComplexError('boundary squared is not zero in degree {0}: {1!r} -> {2!r}: {3}'.format(
                    k, self._bases[k][c], self._bases[k - 2][r], v), witness=(k, self._bases[k][c]))
        return True


class HomologyResult(object):
    """各维同调群 Z^r ⊕ Z/d1 ⊕ Z/d2 ..."""

    def __init__(self, groups):
        self._groups = [(rank, list(torsion)) for rank, torsion in groups]

    @property
    def max_degree(self):
        return len(self._groups) - 1

    def rank(self, k):
        return self._groups[k][0]

    def torsion(self, k):
        return list(self._groups[k][1])

    def group_text(self, k):
        rank, torsion = self._groups[k]
        parts = []
        if rank == 1:
            parts.append(u'Z')
        elif rank > 1:
            parts.append(u'Z^{0}'.format(rank))
        parts.extend(u'Z/{0}'.format(d) for d in torsion)
        return u' (+) '.join(parts) if parts else u'0'

    def to_lines(self):
        return [u'H_{0} = {1}'.format(k, self.group_text(k)) for k in range(len(self._groups))]

    def to_text(self):
        return u'\n'.join(self.to_lines())

    def to_dict(self):
        return [{'degree': k, 'rank': rank, 'torsion': list(torsion)}
                for k, (rank, torsion) in enumerate(self._groups)]

    def __eq__(self, other):
        return isinstance(other, HomologyResult) and self._groups == other._groups

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'HomologyResult({0})'.format('; '.join(self.to_lines()))


def homology(complex, max_degree=None):
    """用Smith正规形计算 H_0 ... H_max_degree, 需要第max_degree+1维的微分"""
    top = complex.max_degree - 1 if max_degree is None else max_degree
    if top < 0 or top > complex.max_degree - 1:
        raise FactorClientError('homology up to degree {0} needs a complex of degree {1}, got {2}'.format(
            top, top + 1, complex.max_degree))
    complex.check_square_zero()
    divisors = {}
    for k in range(1, top + 2):
        divisors[k] = elementary_divisors(complex.differential(k))
    groups = []
    for k in range(top + 1):
        out_rank = len(divisors[k]) if k >= 1 else 0
        rank = complex.rank(k) - out_rank - len(divisors[k + 1])
        torsion = [d for d in divisors[k + 1] if d > 1]
        groups.append((rank, torsion))
    return HomologyResult(groups)


def _complex_from_columns(bases, columns):
    diffs = {}
    for k in range(1, len(bases)):
        row_index = dict((label, pos) for pos, label in enumerate(bases[k - 1]))
        matrix = SparseMatrix(len(bases[k - 1]), len(bases[k]))
        for c, chain in enumerate(columns[k]):
            for cell, coeff in chain.items():
                if cell not in row_index:
                    raise ChainComplexError('boundary of {0!r} leaves the basis at {1!r}'.format(
                        bases[k][c], cell), witness=cell)
                matrix.add(row_index[cell], c, coeff)
        diffs[k] = matrix
    return IntegerChainComplex(bases, diffs)


def visy_complex(handle, max_degree=DEFAULT_MAX_DEGREE, method='lambda', num_threads=1):
    """本质胞腔张成的链复形, 微分按method计算, 各列可以并行"""
    if method not in METHODS:
        raise FactorClientError('method can be only set to {0}'.format('/'.join(METHODS)))
    matching = MorseMatching(handle)
    if method == 'lambda':
        func = lambda cell: visy_differential_lambda(handle, cell, matching)
    elif method == 'coherent':
        func = lambda cell: visy_differential_coherent(handle, cell, matching)
    else:
        func = lambda cell: morse_differential_generic(matching, cell)
    bases = [visy_basis(handle, k) for k in range(max_degree + 1)]
    columns = {}
    for k in range(1, max_degree + 1):
        columns[k] = run_tasks(func, bases[k], num_threads)
        logger.debug("visy complex degree {0}: {1} cells, method {2}".format(k, len(bases[k]), method))
    return _complex_from_columns(bases, columns)


def bar_complex_truncated(handle, max_degree=DEFAULT_MAX_DEGREE, num_threads=1):
    """有限幺半群的约化bar复形, 直到max_degree维"""
    if not handle.is_finite():
        raise FactorClientError('the bar complex oracle needs a finite monoid')
    nontrivial = [x for x in handle.elements() if x != handle.one]
    bases = [[()]]
    for k in range(1, max_degree + 1):
        bases.append([(x,) + cell for x in nontrivial for cell in bases[-1]])
    columns = {}
    for k in range(1, max_degree + 1):
        columns[k] = run_tasks(lambda cell: bar_differential(handle, cell), bases[k], num_threads)
    return _complex_from_columns(bases, columns)
