# -*- coding: utf-8 -*-

from logging import getLogger
from threading import Thread, Lock

from six.moves.queue import Queue

logger = getLogger(__name__)


class ColumnPool(object):
    """按下标收集结果的线程池, 用于并行计算微分矩阵的各列"""

    def __init__(self, func, num_threads=4):
        self._func = func
        self._num_threads = num_threads
        self._queue = Queue()
        self._lock = Lock()
        self._results = {}
        self._errors = {}

    def _work(self):
        while True:
            idx, item = self._queue.get()
            if idx is None:
                return
            try:
                value = self._func(item)
                with self._lock:
                    self._results[idx] = value
            except Exception as e:
                logger.error("task {0} failed: {1}".format(idx, e))
                with self._lock:
                    self._errors[idx] = e

    def map(self, items):
        """返回与items同序的结果; 有任务失败时抛出下标最小的那个异常"""
        items = list(items)
        for idx, item in enumerate(items):
            self._queue.put((idx, item))
        workers = [Thread(target=self._work) for _ in range(self._num_threads)]
        for w in workers:
            w.daemon = True
            w.start()
            # 每个线程取到一个结束标记后退出
            self._queue.put((None, None))
        for w in workers:
            w.join()
        if self._errors:
            logger.error("{0} of {1} tasks failed".format(len(self._errors), len(items)))
            raise self._errors[min(self._errors)]
        return [self._results[i] for i in range(len(items))]


def run_tasks(func, items, num_threads=1):
    """对items中每一项调用func, num_threads<=1时顺序执行"""
    items = list(items)
    if num_threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    return ColumnPool(func, min(num_threads, len(items))).map(items)
