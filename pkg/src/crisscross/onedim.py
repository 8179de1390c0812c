"""Sequence-level primitives: signatures, VT syndromes and decoding,
inversions, runs, compositions, and single-sequence deletion balls.

Sequences are plain tuples of nonnegative ints. Positions are 1-based.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .errors import (
    CodePropertyError,
    InvalidParameterError,
    NotACodewordError,
)


def signature(x: tuple[int, ...]) -> tuple[int, ...]:
    """Binary ascent indicator: bit i is 1 iff x[i+1] >= x[i] (1-based: x_{i+1} >= x_i)."""
    if len(x) < 1:
        raise InvalidParameterError("signature needs a nonempty sequence")
    return tuple(1 if b >= a else 0 for a, b in zip(x, x[1:]))


def signature_syndrome(x: tuple[int, ...], n: int) -> int:
    """Weighted ascent sum of the signature, reduced mod n."""
    if n < 1:
        raise InvalidParameterError("modulus must be positive")
    sig = signature(x)
    return sum(i for i, bit in enumerate(sig, start=1) if bit) % n


def vt_syndromes(x: tuple[int, ...], n: int, q: int) -> tuple[int, int]:
    """(signature syndrome mod n, symbol sum mod q) of x."""
    if q < 2:
        raise InvalidParameterError("alphabet size must be at least 2")
    return signature_syndrome(x, n), sum(x) % q


def inversions(x: tuple[int, ...]) -> int:
    """Number of out-of-order pairs (s < t with x_s > x_t)."""
    count = 0
    for i, a in enumerate(x):
        for b in x[i + 1:]:
            if a > b:
                count += 1
    return count


def runs_count(x: tuple[int, ...]) -> int:
    """Number of maximal blocks of equal adjacent symbols."""
    if not x:
        raise InvalidParameterError("runs are undefined for the empty sequence")
    return 1 + sum(1 for a, b in zip(x, x[1:]) if a != b)


def composition(x: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Symbol frequency vector (count of 0, count of 1, ..., count of q-1)."""
    if q < 2:
        raise InvalidParameterError("alphabet size must be at least 2")
    counts = [0] * q
    for v in x:
        if not 0 <= v < q:
            raise InvalidParameterError(f"symbol {v} outside [0, {q})")
        counts[v] += 1
    return tuple(counts)


@lru_cache(maxsize=1 << 16)
def comp_rank(comp: tuple[int, ...]) -> int:
    """Lexicographic rank of a frequency vector among all with the same total and length.

    Order-isomorphic to tuple comparison, so it can stand in for the
    composition itself wherever only relative order matters.
    """
    q = len(comp)
    if q < 1 or any(c < 0 for c in comp):
        raise InvalidParameterError(f"not a frequency vector: {comp}")
    remaining = sum(comp)
    rank = 0
    for pos in range(q - 1):
        parts_left = q - pos - 1
        for v in range(comp[pos]):
            rank += math.comb(remaining - v + parts_left - 1, parts_left - 1)
        remaining -= comp[pos]
    return rank


def one_deletion_ball(x: tuple[int, ...], s: int) -> tuple[tuple[int, ...], ...]:
    """All distinct subsequences of x obtained by deleting exactly s symbols."""
    if s < 0 or s > len(x):
        raise InvalidParameterError(f"cannot delete {s} symbols from length {len(x)}")
    out = set()
    for keep in itertools.combinations(range(len(x)), len(x) - s):
        out.add(tuple(x[i] for i in keep))
    return tuple(sorted(out))


def _insert(y: tuple[int, ...], p: int, v: int) -> tuple[int, ...]:
    """Insert v so that it lands at 1-based position p of the result."""
    return y[: p - 1] + (v,) + y[p - 1:]


def vt_decode_known_symbol(
    y: tuple[int, ...], v: int, a: int, n: int
) -> tuple[tuple[int, ...], tuple[int, int]]:
    """Recover x of length n from y = x minus one occurrence of the known symbol v.

    Matches the signature syndrome a mod n over all n insertion positions using
    incremental syndrome updates; the matching positions form one run of equal
    insertions and every one yields the same sequence. Returns (x, (lo, hi))
    where [lo, hi] is that 1-based ambiguity run.
    """
    if len(y) != n - 1:
        raise InvalidParameterError(f"received length {len(y)}, expected {n - 1}")
    if n == 1:
        if a % n != 0:
            raise NotACodewordError("syndrome impossible for length-1 sequences")
        return (v,), (1, 1)
    sig = signature(y)
    # prefix weighted sums / counts of the received signature
    w = [0] * (n - 1)
    c = [0] * (n - 1)
    acc_w = acc_c = 0
    for t in range(1, n - 1):
        if sig[t - 1]:
            acc_w += t
            acc_c += 1
        w[t] = acc_w
        c[t] = acc_c
    total_w, total_c = w[n - 2], c[n - 2]

    matches = []
    for p in range(1, n + 1):
        syn = w[p - 2] if p >= 2 else 0
        # ascents of y shifted right past the insertion point
        tail_w = total_w - (w[p - 1] if p <= n - 1 else total_w)
        tail_c = total_c - (c[p - 1] if p <= n - 1 else total_c)
        syn += tail_w + tail_c
        if p >= 2 and v >= y[p - 2]:
            syn += p - 1
        if p <= n - 1 and y[p - 1] >= v:
            syn += p
        if syn % n == a % n:
            matches.append(p)

    if not matches:
        raise NotACodewordError("no insertion position matches the signature syndrome")
    first = _insert(y, matches[0], v)
    for p in matches[1:]:
        if _insert(y, p, v) != first:
            raise CodePropertyError(
                "distinct reconstructions share a syndrome; input is not a codeword"
            )
    if matches != list(range(matches[0], matches[-1] + 1)):
        raise CodePropertyError("matching insertion positions are not one run")
    return first, (matches[0], matches[-1])


def vt_decode_full(
    y: tuple[int, ...], a: int, b: int, n: int, q: int
) -> tuple[tuple[int, ...], tuple[int, int]]:
    """Recover x in the VT class (a mod n, b mod q) from a single deletion.

    The missing symbol is forced by the sum syndrome; its position is then
    resolved as in vt_decode_known_symbol. Returns (x, ambiguity run).
    """
    if q < 2:
        raise InvalidParameterError("alphabet size must be at least 2")
    if any(not 0 <= s < q for s in y):
        raise InvalidParameterError("received symbols outside the alphabet")
    v = (b - sum(y)) % q
    return vt_decode_known_symbol(y, v, a, n)
