# -*- coding=utf-8

from six import text_type, binary_type, string_types
import crcmod
from .fac_exception import FactorClientError
from .fac_exception import FactorSpecError

UNIT_MARK = u'1'  # 单位元记号, 不能作为生成元名
DEFAULT_RADIUS = 4  # 广度优先搜索的默认半径
DEFAULT_BUDGET = 10000  # 重写步数的默认预算
DEFAULT_MAX_DEGREE = 4  # 同调计算的默认最高维数
MAX_COXETER_ORDER = 1000  # 枚举Coxeter群时元素个数上限
DEFAULT_ORACLE_DEPTH = 1  # 小序列搜索中平方展开的次数
DEFAULT_ORACLE_BUDGET = 200000  # 小序列搜索访问状态数上限
MAX_WITNESSES = 20  # 报告中每项最多保留的反例个数
STRATEGIES = ('rightmost', 'leftmost')
INVERSE_SUFFIX = u'^-1'

_crc64 = crcmod.mkCrcFun(0x142F0E1EBA9EA3693, initCrc=0, xorOut=0xffffffffffffffff, rev=True)


def to_unicode(s):
    """将字符串转为unicode"""
    if isinstance(s, binary_type):
        try:
            return s.decode('utf-8')
        except UnicodeDecodeError as e:
            raise FactorClientError('your bytes strings can not be decoded in utf8, utf8 support only!')
    if isinstance(s, text_type):
        return s
    raise FactorClientError('expect a string, got {0!r}'.format(s))


def to_bytes(s):
    """将字符串转为bytes"""
    if isinstance(s, text_type):
        try:
            return s.encode('utf-8')
        except UnicodeEncodeError as e:
            raise FactorClientError('your unicode strings can not encoded in utf8, utf8 support only!')
    return s


def is_string(s):
    return isinstance(s, string_types)


def crc64(data):
    """计算CRC-64/XZ校验值"""
    return _crc64(to_bytes(data))


def check_crc64(data, expected, name):
    """校验内嵌数据, 不一致时抛出FactorSpecError"""
    value = crc64(data)
    if value != expected:
        raise FactorSpecError('crc64 of {0}: {1:#018x} is mismatch with expected: {2:#018x}'.format(
            name, value, expected))
    return value


def parse_word(text, alphabet=None):
    """解析空白分隔的字母序列, "1"与空串表示空词

    :param text(string|list): 文本或字母列表.
    :param alphabet(Alphabet): 若给出, 检查每个字母属于该字母表.
    :return(tuple): 书写顺序的字母元组, 最右字母为位置1.
    """
    if isinstance(text, (tuple, list)):
        letters = [to_unicode(l) for l in text]
    else:
        letters = to_unicode(text).split()
    letters = tuple(l for l in letters if l != UNIT_MARK)
    if alphabet is not None:
        alphabet.check_word(letters)
    return letters


def format_word(word):
    """格式化字母元组, 空词显示为1"""
    if not word:
        return UNIT_MARK
    return u' '.join(word)


def format_sequence(seq):
    """格式化下标序列, 如(1,2,1)"""
    return u'(' + u','.join(str(i) for i in seq) + u')'


def sign(k):
    """(-1)^k"""
    return -1 if k % 2 else 1
