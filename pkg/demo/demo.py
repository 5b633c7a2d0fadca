# -*- coding=utf-8
from factorable import FactorConfig
from factorable import FactorClientError, FactorStructureError
from factorable.factorability import check_local_factorability, induced_rewriting_system
from factorable.rewriting import reduce
from factorable.morse import visy_complex, bar_complex_truncated, homology
from factorable.garside import GarsideGroup, garside_structure, greedy_nf, group_nf
from factorable.fixtures import z2, appendix_monoid, braid_positive, APPENDIX_CYCLE_WORD, APPENDIX_CYCLE_SCHEDULE

import sys
import logging


if __name__ == "__main__":

    logging.basicConfig(level=logging.INFO, stream=sys.stdout)

    config = FactorConfig(MaxDegree=6, NumThreads=2)  # 获取配置对象

    # Z/2 的同调, Visy复形与bar复形的结果一致
    handle = z2()
    visy = homology(visy_complex(handle, config.get_max_degree(), num_threads=config.get_num_threads()))
    print(visy.to_text())
    bar = homology(bar_complex_truncated(handle, 4))
    print(bar.to_text())

    # 反例: φ表满足局部可分解性, 但诱导的重写系统有环
    monoid = appendix_monoid()
    print(check_local_factorability(monoid.table).to_text())
    system = induced_rewriting_system(monoid.table)
    result = reduce(system, APPENDIX_CYCLE_WORD, strategy=u'follow', positions=APPENDIX_CYCLE_SCHEDULE)
    print(result.to_text())
    for line in result.trace.lines():
        print(line)

    # 正辫幺半群与辫群
    braids = braid_positive(3)
    print(greedy_nf(braids, u'abab'))
    group = GarsideGroup(garside_structure(braids))
    try:
        g, word = group_nf(group, u'a aba^-1')
        print(word, group.norm(g))
    except (FactorClientError, FactorStructureError) as e:
        print(e)
