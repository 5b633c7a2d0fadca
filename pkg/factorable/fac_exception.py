# -*- coding=utf-8


class FactorException(Exception):
    def __init__(self, message):
        self._message = message

    def __str__(self):
        return str(self._message)


class FactorClientError(FactorException):
    """调用端错误，如下标越界、未知生成元"""

    def __init__(self, message):
        FactorException.__init__(self, message)


class FactorSpecError(FactorClientError):
    """描述文件格式错误，可以获取出错的字段"""

    def __init__(self, message, field=None):
        FactorClientError.__init__(self, message)
        self._field = field

    def get_field(self):
        """获取出错的字段名"""
        return self._field


class FactorStructureError(FactorException):
    """代数结构不满足要求，可以获取反例"""

    def __init__(self, message, witness=None):
        FactorException.__init__(self, message)
        self._witness = witness

    def get_reason(self):
        """获取错误描述"""
        return self._message

    def get_witness(self):
        """获取反例, 没有反例时返回None"""
        return self._witness


class NormalFormError(FactorStructureError):
    """正规形递归超出深度上限，φ表不合法"""

    def __init__(self, message, witness=None):
        FactorStructureError.__init__(self, message, witness)


class MorseMatchingError(FactorStructureError):
    """Morse配对不满足要求"""

    def __init__(self, message, witness=None):
        FactorStructureError.__init__(self, message, witness)


class GarsideError(FactorStructureError):
    """Garside结构相关错误，如无限型、除子集不对称"""

    def __init__(self, message, witness=None):
        FactorStructureError.__init__(self, message, witness)


class ChainComplexError(FactorStructureError):
    """链复形的边缘映射平方不为零"""

    def __init__(self, message, witness=None):
        FactorStructureError.__init__(self, message, witness)


class FactorBudgetError(FactorException):
    """预算耗尽，结果未知"""

    def __init__(self, message, budget=None, last=None):
        FactorException.__init__(self, message)
        self._budget = budget
        self._last = last

    def get_budget(self):
        """获取耗尽的预算"""
        return self._budget

    def get_last(self):
        """获取耗尽预算时最后处理的对象"""
        return self._last
