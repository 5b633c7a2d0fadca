# -*- coding=utf-8

import logging
from .fac_comm import DEFAULT_RADIUS, DEFAULT_BUDGET, DEFAULT_MAX_DEGREE, MAX_COXETER_ORDER
from .fac_comm import DEFAULT_ORACLE_DEPTH, STRATEGIES, to_unicode
from .fac_exception import FactorClientError

logger = logging.getLogger(__name__)


class FactorConfig(object):
    """config类，保存计算相关的参数"""

    def __init__(self, Radius=DEFAULT_RADIUS, Budget=DEFAULT_BUDGET, MaxDegree=DEFAULT_MAX_DEGREE,
                 MaxCoxeterOrder=MAX_COXETER_ORDER, OracleDepth=DEFAULT_ORACLE_DEPTH, NumThreads=1,
                 Strategy=u'rightmost'):
        """初始化，保存计算参数

        :param Radius(int): 广度优先搜索范数的半径.
        :param Budget(int): 重写与搜索的步数预算.
        :param MaxDegree(int): 同调计算的最高维数.
        :param MaxCoxeterOrder(int): Coxeter群元素个数上限, 超过则认为是无限型.
        :param OracleDepth(int): 小序列搜索中平方展开的次数.
        :param NumThreads(int): 计算Morse微分时的线程数.
        :param Strategy(string): 重写策略 rightmost/leftmost.
        """
        self._radius = self._check_int('Radius', Radius, 0)
        self._budget = self._check_int('Budget', Budget, 1)
        self._max_degree = self._check_int('MaxDegree', MaxDegree, 1)
        self._max_coxeter_order = self._check_int('MaxCoxeterOrder', MaxCoxeterOrder, 1)
        self._oracle_depth = self._check_int('OracleDepth', OracleDepth, 0)
        self._num_threads = self._check_int('NumThreads', NumThreads, 1)
        Strategy = to_unicode(Strategy)
        if Strategy not in STRATEGIES:
            raise FactorClientError('Strategy can be only set to {0}'.format('/'.join(STRATEGIES)))
        self._strategy = Strategy
        logger.debug("config parameter-> radius: {0}, budget: {1}, max_degree: {2}, threads: {3}".format(
            self._radius, self._budget, self._max_degree, self._num_threads))

    @staticmethod
    def _check_int(name, value, lower):
        if isinstance(value, bool) or not isinstance(value, int):
            raise FactorClientError('{0} must be an integer, got {1!r}'.format(name, value))
        if value < lower:
            raise FactorClientError('{0} must be >= {1}, got {2}'.format(name, lower, value))
        return value

    def get_radius(self):
        return self._radius

    def get_budget(self):
        return self._budget

    def get_max_degree(self):
        return self._max_degree

    def get_max_coxeter_order(self):
        return self._max_coxeter_order

    def get_oracle_depth(self):
        return self._oracle_depth

    def get_num_threads(self):
        return self._num_threads

    def get_strategy(self):
        return self._strategy

    def to_dict(self):
        """导出配置, 用于日志与导出文件"""
        return {
            'Radius': self._radius,
            'Budget': self._budget,
            'MaxDegree': self._max_degree,
            'MaxCoxeterOrder': self._max_coxeter_order,
            'OracleDepth': self._oracle_depth,
            'NumThreads': self._num_threads,
            'Strategy': self._strategy,
        }
