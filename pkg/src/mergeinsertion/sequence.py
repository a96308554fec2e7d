"""Positional sequence backed by a chunked order-statistics tree.

Items are addressed purely by zero-based position; the container never
compares items. Internal nodes carry subtree sizes, leaves hold small
arrays, and the whole tree is rebuilt perfectly balanced whenever a leaf
split would push the depth past roughly twice the optimum. Lookup and
insertion therefore stay logarithmic (amortized for insertion).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Any

_LEAF_MAX = 256    # a leaf splits in half once it grows past this
_LEAF_BUILD = 128  # leaf fill used when (re)building the tree

# Nodes are plain lists to keep descents cheap:
#   internal: [size, left, right]
#   leaf:     [size, items, None]


def _build(chunks: list[list], lo: int, hi: int) -> list:
    if hi - lo == 0:
        return [0, [], None]
    if hi - lo == 1:
        chunk = chunks[lo]
        return [len(chunk), chunk, None]
    mid = (lo + hi) // 2
    left = _build(chunks, lo, mid)
    right = _build(chunks, mid, hi)
    return [left[0] + right[0], left, right]


class PosSequence:
    """Ordered container with indexed insert, lookup and iteration."""

    __slots__ = ("_root", "_size", "_leaves")

    def __init__(self) -> None:
        self._root: list = [0, [], None]
        self._size = 0
        self._leaves = 1

    @classmethod
    def from_items(cls, items: Iterable[Any]) -> "PosSequence":
        """Build a balanced sequence holding ``items`` in iteration order."""
        seq = cls()
        data = list(items)
        if data:
            chunks = [data[i:i + _LEAF_BUILD] for i in range(0, len(data), _LEAF_BUILD)]
            seq._root = _build(chunks, 0, len(chunks))
            seq._size = len(data)
            seq._leaves = len(chunks)
        return seq

    def __len__(self) -> int:
        return self._size

    def get(self, pos: int) -> Any:
        """Item at ``pos``; raises IndexError outside [0, len)."""
        if not 0 <= pos < self._size:
            raise IndexError(f"position {pos} out of range for length {self._size}")
        node = self._root
        while node[2] is not None:
            left = node[1]
            if pos < left[0]:
                node = left
            else:
                pos -= left[0]
                node = node[2]
        return node[1][pos]

    __getitem__ = get

    def insert(self, pos: int, item: Any) -> None:
        """Place ``item`` at ``pos``, shifting later items right by one.

        ``pos`` may equal the current length (append); anything outside
        [0, len] raises IndexError.
        """
        if not 0 <= pos <= self._size:
            raise IndexError(f"insert position {pos} out of range for length {self._size}")
        self._size += 1
        node = self._root
        depth = 0
        while node[2] is not None:
            node[0] += 1
            left = node[1]
            if pos < left[0]:
                node = left
            else:
                pos -= left[0]
                node = node[2]
            depth += 1
        node[0] += 1
        items = node[1]
        items.insert(pos, item)
        if len(items) > _LEAF_MAX:
            mid = len(items) // 2
            node[1] = [mid, items[:mid], None]
            node[2] = [len(items) - mid, items[mid:], None]
            self._leaves += 1
            if depth + 1 > self._depth_limit():
                self._rebuild()

    def _depth_limit(self) -> int:
        # splits only ever deepen the tree, so enforcing the bound here
        # keeps every leaf within ~2x the optimal depth at all times
        return 2 * max(self._leaves, 2).bit_length() + 2

    def depth(self) -> int:
        """Maximum leaf depth (number of internal nodes above it)."""
        best = 0
        stack = [(self._root, 0)]
        while stack:
            node, d = stack.pop()
            if node[2] is None:
                if d > best:
                    best = d
            else:
                stack.append((node[1], d + 1))
                stack.append((node[2], d + 1))
        return best

    def _rebuild(self) -> None:
        chunks: list[list] = []
        stack = [self._root]
        while stack:
            node = stack.pop()
            if node[2] is None:
                if node[1]:
                    chunks.append(node[1])
            else:
                stack.append(node[2])
                stack.append(node[1])
        self._root = _build(chunks, 0, len(chunks))
        self._leaves = max(len(chunks), 1)

    def __iter__(self) -> Iterator[Any]:
        stack = [self._root]
        while stack:
            node = stack.pop()
            if node[2] is None:
                yield from node[1]
            else:
                stack.append(node[2])
                stack.append(node[1])

    def to_list(self) -> list:
        return list(self)

    def __repr__(self) -> str:
        return f"PosSequence(len={self._size})"
