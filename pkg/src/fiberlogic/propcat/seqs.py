"""Indexable lazy sequences, so huge hom-sets and fibers can be sized and sampled."""

from __future__ import annotations

import math
from collections.abc import Sequence


class LazyProduct(Sequence):
    """Cartesian product of sequences, indexed in mixed radix (last factor fastest)."""

    def __init__(self, factors):
        self.factors = [f if isinstance(f, Sequence) else tuple(f) for f in factors]
        self._len = math.prod(len(f) for f in self.factors)

    def __len__(self):
        return self._len

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(self._len))]
        if i < 0:
            i += self._len
        if not 0 <= i < self._len:
            raise IndexError(i)
        out = []
        for f in reversed(self.factors):
            i, r = divmod(i, len(f))
            out.append(f[r])
        return tuple(reversed(out))

    def __iter__(self):
        import itertools

        return itertools.product(*self.factors)


class Mapped(Sequence):
    def __init__(self, base, fn):
        self.base = base
        self.fn = fn

    def __len__(self):
        return len(self.base)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self.fn(x) for x in self.base[i]]
        return self.fn(self.base[i])

    def __iter__(self):
        return map(self.fn, self.base)


class Subsets(Sequence):
    """All subsets of a finite sequence, as frozensets, by bitmask."""

    def __init__(self, items):
        self.items = tuple(items)

    def __len__(self):
        return 2 ** len(self.items)

    def __getitem__(self, i):
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        return frozenset(x for k, x in enumerate(self.items) if i >> k & 1)
