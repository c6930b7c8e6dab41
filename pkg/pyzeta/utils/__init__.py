# pyzeta - Numerical laboratory for the Riemann zeta function, its zeros and the primes
#
# Copyright (C) 2026 pyzeta developers. All rights reserved.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# Author:
#   pyzeta developers
#

# Standard imports
import os
import csv
import logging
from queue import Queue
from threading import Thread, Lock
# External imports
import mpmath
import numpy as np


# Create a logger for the worker pool
log_pool = logging.getLogger("pyzeta.pool")


def default_threads():
    """Number of workers used when the caller does not cap them."""
    return max(1, min(8, os.cpu_count() or 1))


def split_range(start, stop, parts):
    """Split the half-open integer range [start, stop) into at most ``parts``
    contiguous blocks of nearly equal size.

    :param start: first value of the range
    :type start: ``int``

    :param stop: end of the range (excluded)
    :type stop: ``int``

    :param parts: maximum number of blocks
    :type parts: ``int``

    :return: list of (block_start, block_stop) tuples in ascending order
    :rtype: ``list``
    """
    total = max(0, stop - start)
    parts = max(1, min(parts, total or 1))
    size, extra = divmod(total, parts)
    blocks = []
    lo = start
    for index in range(parts):
        hi = lo + size + (1 if index < extra else 0)
        if hi > lo:
            blocks.append((lo, hi))
        lo = hi
    return blocks


# Simple Thread Pool implementation based on http://code.activestate.com/recipes/577187-python-thread-pool/
# WorkerQueue class
class WorkerQueue(Thread):
    """Thread executing tasks from a given tasks queue"""
    def __init__(self, tasks):
        Thread.__init__(self)
        self.tasks = tasks
        self.daemon = True
        self.start()

    def run(self):
        while True:
            func, args, kargs = self.tasks.get()
            if func is None:
                self.tasks.task_done()
                break
            try:
                func(*args, **kargs)
            except Exception as e:
                log_pool.debug("Task failed: %s", e)
            self.tasks.task_done()


# ThreadPool class
class ThreadPool(object):
    """Pool of threads consuming tasks from a queue

    Results of :meth:`map` are returned in submission order, so the outcome of
    a computation does not depend on how many workers the pool runs.
    """
    def __init__(self, num_threads=None):
        self.num_threads = max(1, num_threads or default_threads())
        self.tasks = Queue(self.num_threads)
        self.workers = []
        if self.num_threads > 1:
            for _ in range(self.num_threads):
                self.workers.append(WorkerQueue(self.tasks))

    def add_task(self, func, *args, **kargs):
        """Add a task to the queue"""
        if not self.workers:
            func(*args, **kargs)
            return
        self.tasks.put((func, args, kargs))

    def wait_completion(self):
        """Wait for completion of all the tasks in the queue"""
        self.tasks.join()

    def close(self):
        """Stop the workers once the queued tasks are done"""
        workers, self.workers = getattr(self, "workers", []), []
        for _ in workers:
            self.tasks.put((None, (), {}))

    def __del__(self):
        self.close()

    def map(self, func, items):
        """Apply ``func`` to every item and collect the results in input order.

        The first exception raised by a task is re-raised once every task has
        finished.

        :param func: function to run
        :type func: C{callable}

        :param items: arguments, one per task
        :type items: iterable

        :return: results in the order of ``items``
        :rtype: ``list``
        """
        items = list(items)
        results = [None] * len(items)
        errors = []
        lock = Lock()

        def run_one(index, item):
            try:
                results[index] = func(item)
            except Exception as e:
                with lock:
                    errors.append((index, e))

        for index, item in enumerate(items):
            self.add_task(run_one, index, item)
        self.wait_completion()

        if errors:
            errors.sort(key=lambda error: error[0])
            raise errors[0][1]
        return results


def format_number(value, digits=15):
    """Fixed textual form of a number with ``digits`` significant digits.

    Integers are written as such; floats and mpmath numbers go through
    :func:`mpmath.nstr` so that output does not depend on the numeric type.
    """
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return "%d" % value
    if value is None:
        return ""
    return mpmath.nstr(mpmath.mpf(value), digits, strip_zeros=False, min_fixed=-4, max_fixed=digits + 1)


def write_csv(filename, header, rows, digits=15):
    """Writes rows as comma separated values with a header row and LF line
    endings.

    :param filename: output file
    :type filename: ``str``

    :param header: column names
    :type header: ``list`` of ``str``

    :param rows: row values, numbers or strings
    :type rows: iterable

    :param digits: significant digits of non integer values
    :type digits: ``int``
    """
    with open(filename, "w", newline="") as fd:
        writer = csv.writer(fd, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([value if isinstance(value, str) else format_number(value, digits)
                             for value in row])
