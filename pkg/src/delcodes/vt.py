"""Varshamov-Tenengolts codes and single deletable-error correction.

VT_a(n) is the set of length-n binary words whose weighted checksum
sum(i * x_i) is congruent to a mod n+1.  A single deletion, erasure or
flip can be corrected from the checksum discrepancy alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from .errors import BudgetExceeded, DecodeFailure
from .words import ERASURE, Word, check_codeword

DEFAULT_ENUM_CAP = 24  # vt_enumerate walks 2^n words


@dataclass(frozen=True)
class VtParams:
    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")
        if not 0 <= self.a <= self.n:
            raise ValueError("need 0 <= a <= n")

    @property
    def modulus(self) -> int:
        return self.n + 1


def vt_checksum(x: Word) -> int:
    """Unreduced weighted checksum sum(i * x_i), 1-based."""
    check_codeword(x)
    return sum(i * bit for i, bit in enumerate(x, start=1))


def vt_contains(p: VtParams, x: Word) -> bool:
    if len(x) != p.n:
        raise ValueError(f"word length {len(x)} != n = {p.n}")
    return vt_checksum(x) % p.modulus == p.a


def vt_enumerate(p: VtParams, cap: int = DEFAULT_ENUM_CAP) -> List[Word]:
    """All codewords of VT_a(n) in lexicographic order."""
    if p.n > cap:
        raise BudgetExceeded(f"n = {p.n} exceeds enumeration cap {cap}")
    out = []
    for bits in itertools.product((0, 1), repeat=p.n):
        if vt_checksum(bits) % p.modulus == p.a:
            out.append(bits)
    return out


def vt_class_sizes(n: int, cap: int = DEFAULT_ENUM_CAP) -> List[int]:
    """Sizes of VT_a(n) for a = 0..n (one pass over all 2^n words)."""
    if n > cap:
        raise BudgetExceeded(f"n = {n} exceeds enumeration cap {cap}")
    sizes = [0] * (n + 1)
    for bits in itertools.product((0, 1), repeat=n):
        sizes[vt_checksum(bits) % (n + 1)] += 1
    return sizes


def vt_best_residue(n: int, cap: int = DEFAULT_ENUM_CAP) -> Tuple[int, int]:
    """Residue a maximizing |VT_a(n)| (smallest a on ties), with the size."""
    sizes = vt_class_sizes(n, cap)
    best = max(sizes)
    return sizes.index(best), best


def correct_erasure(p: VtParams, y: Word) -> Word:
    """Fill in the single erased bit of y using the checksum discrepancy."""
    if len(y) != p.n:
        raise ValueError(f"word length {len(y)} != n = {p.n}")
    erased = [i for i, s in enumerate(y, start=1) if s == ERASURE]
    if len(erased) != 1:
        raise ValueError(f"expected exactly one erasure, found {len(erased)}")
    k = erased[0]
    cs_er = sum(i * bit for i, bit in enumerate(y, start=1) if i != k)
    bit = 0 if (cs_er - p.a) % p.modulus == 0 else 1
    x = y[:k - 1] + (bit,) + y[k:]
    if not vt_contains(p, x):
        raise DecodeFailure("erasure correction left a non-codeword",
                            {"position": k})
    return x


def flip_candidates(p: VtParams, y: Word) -> List[Word]:
    """Codewords reachable from y by undoing one flip, in a fixed order.

    The checksum residue r = (CS(y) - a) mod n+1 admits two readings: a
    one at position r that was flipped up (restore to 0), or a zero at
    position n+1-r that was flipped down (restore to 1).  Both readings
    may be valid simultaneously: VT classes contain pairs differing
    exactly at positions p and n+1-p, so single flips are not uniquely
    decodable in general.
    """
    if len(y) != p.n:
        raise ValueError(f"word length {len(y)} != n = {p.n}")
    check_codeword(y)
    r = (vt_checksum(y) - p.a) % p.modulus
    if r == 0:
        raise DecodeFailure("word is already a codeword, no flip to correct")
    out: List[Word] = []
    if 1 <= r <= p.n and y[r - 1] == 1:  # restore position r to 0
        out.append(y[:r - 1] + (0,) + y[r:])
    pos_up = p.n + 1 - r
    if 1 <= pos_up <= p.n and y[pos_up - 1] == 0:  # restore to 1
        out.append(y[:pos_up - 1] + (1,) + y[pos_up:])
    return out


def correct_flip(p: VtParams, y: Word) -> Tuple[Word, bool]:
    """Correct a single flipped bit; returns (word, ambiguous).

    When both flip readings are consistent (see flip_candidates) the
    flip-up reading is returned and the ambiguity flag is set.
    """
    candidates = flip_candidates(p, y)
    if not candidates:
        raise DecodeFailure("no single flip reaches a codeword")
    return candidates[0], len(candidates) > 1


def correct_deletion(p: VtParams, y: Word) -> Word:
    """Reinsert the single deleted bit of y (length n-1)."""
    if len(y) != p.n - 1:
        raise ValueError(f"word length {len(y)} != n-1 = {p.n - 1}")
    check_codeword(y)
    w = sum(y)
    cs = sum(i * bit for i, bit in enumerate(y, start=1))
    disc = (p.a - cs) % p.modulus
    m = len(y)
    if disc <= w:
        # deleted bit was 0: insert left of the rightmost point where the
        # suffix weight equals the discrepancy
        f = None
        suffix = 0
        for j in range(m + 1, 0, -1):  # suffix sum over y_j..y_m
            if suffix == disc:
                f = j
                break
            if j >= 2:
                suffix += y[j - 2]
        if f is None:
            raise DecodeFailure("no insertion point for a deleted 0",
                                {"discrepancy": disc, "weight": w})
        x = y[:f - 1] + (0,) + y[f - 1:]
    else:
        # deleted bit was 1: the prefix must contain disc - w - 1 zeros
        target = disc - w - 1
        f = None
        zeros = 0
        for j in range(1, m + 2):
            if zeros == target:
                f = j
                break
            if j <= m:
                zeros += 1 - y[j - 1]
        if f is None:
            raise DecodeFailure("no insertion point for a deleted 1",
                                {"discrepancy": disc, "weight": w})
        x = y[:f - 1] + (1,) + y[f - 1:]
    if not vt_contains(p, x):
        raise DecodeFailure("deletion correction left a non-codeword",
                            {"position": f})
    return x


def correct_single(p: VtParams, y: Word) -> Tuple[Word, bool]:
    """Correct at most one deletable error; returns (word, ambiguous)."""
    erasures = sum(1 for s in y if s == ERASURE)
    if erasures > 1:
        raise DecodeFailure(f"{erasures} erasures, at most one supported")
    if erasures == 1:
        if len(y) != p.n:
            raise DecodeFailure("erasure present but length is not n")
        return correct_erasure(p, y), False
    if len(y) == p.n - 1:
        return correct_deletion(p, y), False
    if len(y) == p.n:
        if vt_contains(p, y):
            return y, False
        return correct_flip(p, y)
    raise DecodeFailure(f"received length {len(y)} outside {{n-1, n}}")
