"""Elementary combinatorics on binary words.

Words are plain Python strings over {'0','1'}, 1-indexed in all position
arguments to match the usual coding-theory convention.  Since every set we
build holds words of a single common length, sorting the strings
lexicographically is the same as sorting by the big-endian integer value
(bit 1 is the most significant), so canonical order is just ``sorted()``.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "RunProfile",
    "AffixDecomposition",
    "parse_word",
    "encode",
    "decode",
    "hamming",
    "runs",
    "run_count",
    "weight",
    "complement",
    "reverse",
    "vt_syndrome",
    "inversion_number",
    "psi",
    "psi_inverse",
    "common_affixes",
    "max_le2_periodic_length",
]


def parse_word(text: str) -> str:
    """Validate a 0/1 string (the canonical text form) and return it."""
    if any(c not in "01" for c in text):
        raise ValueError(f"not a binary word: {text!r}")
    return text


def encode(x: str) -> int:
    """Big-endian integer value of a word; the empty word encodes to 0."""
    return int(x, 2) if x else 0


def decode(value: int, n: int) -> str:
    """Inverse of :func:`encode` for words of length n."""
    if n == 0:
        return ""
    return format(value, f"0{n}b")


def hamming(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError("hamming distance needs equal lengths")
    return sum(a != b for a, b in zip(x, y))


@dataclass(frozen=True, slots=True)
class RunProfile:
    """Maximal constant substrings of a word.

    ``boundaries`` lists (start, symbol, length) per run, start 1-indexed;
    ``run_count`` is r(x).  The empty word has no runs.
    """

    run_count: int
    boundaries: tuple[tuple[int, str, int], ...]


def runs(x: str) -> RunProfile:
    """Scan x into its run profile."""
    if not x:
        return RunProfile(0, ())
    out: list[tuple[int, str, int]] = []
    start = 0
    for i in range(1, len(x) + 1):
        if i == len(x) or x[i] != x[start]:
            out.append((start + 1, x[start], i - start))
            start = i
    return RunProfile(len(out), tuple(out))


def run_count(x: str) -> int:
    """r(x) without materializing the boundaries."""
    if not x:
        return 0
    return 1 + sum(x[i] != x[i + 1] for i in range(len(x) - 1))


def weight(x: str) -> int:
    return x.count("1")


def complement(x: str) -> str:
    return x.translate(_FLIP)


_FLIP = str.maketrans("01", "10")


def reverse(x: str) -> str:
    return x[::-1]


def vt_syndrome(x: str, k: int) -> int:
    """Order-k VT syndrome, no modulus applied.

    The weight of position i is i for k=1 and i(i+1)/2 for k=2 (the column
    sums of the triangular weighting).  Code membership applies its own
    modulus on top of this raw integer.
    """
    if k == 1:
        return sum(i for i, c in enumerate(x, 1) if c == "1")
    if k == 2:
        return sum(i * (i + 1) // 2 for i, c in enumerate(x, 1) if c == "1")
    raise ValueError(f"unsupported syndrome order k={k}")


def inversion_number(x: str) -> int:
    """Number of pairs i < j with x_i = 1 and x_j = 0."""
    inv = 0
    ones = 0
    for c in x:
        if c == "1":
            ones += 1
        else:
            inv += ones
    return inv


def psi(x: str) -> str:
    """Difference map: psi(x)_i = x_i - x_{i-1} mod 2, with x_0 = 0."""
    prev = "0"
    out = []
    for c in x:
        out.append("1" if c != prev else "0")
        prev = c
    return "".join(out)


def psi_inverse(y: str) -> str:
    """Prefix-sum map inverting :func:`psi`."""
    acc = 0
    out = []
    for c in y:
        acc ^= c == "1"
        out.append("1" if acc else "0")
    return "".join(out)


@dataclass(frozen=True, slots=True)
class AffixDecomposition:
    """Longest common prefix/suffix split of a distinct equal-length pair.

    For x != y with first and last differing positions j_1 and j_2
    (1-indexed), prefix = x[1..j_1-1] and suffix = x[j_2+1..n] are shared
    by both words, and hamming counts the differing positions inside the
    middle window.
    """

    prefix: str
    suffix: str
    hamming: int
    first_diff: int
    last_diff: int


def common_affixes(x: str, y: str) -> AffixDecomposition:
    if len(x) != len(y):
        raise ValueError("common_affixes needs equal lengths")
    if x == y:
        raise ValueError("common_affixes needs distinct words")
    n = len(x)
    j1 = next(i for i in range(n) if x[i] != y[i])
    j2 = next(i for i in range(n - 1, -1, -1) if x[i] != y[i])
    d_h = sum(x[i] != y[i] for i in range(j1, j2 + 1))
    return AffixDecomposition(x[:j1], x[j2 + 1 :], d_h, j1 + 1, j2 + 1)


def max_le2_periodic_length(x: str) -> int:
    """Length of the longest window with period at most 2.

    A window [l, r] qualifies when x_k = x_{k+2} for every k in [l, r-2];
    that is, the window is constant or alternating.  Windows of length <= 2
    qualify vacuously, so the result is min(n, 2) at least.
    """
    n = len(x)
    if n <= 2:
        return n
    best = 2
    start = 0  # left edge of the current maximal period-<=2 window
    for k in range(n - 2):
        if x[k] != x[k + 2]:
            best = max(best, k + 2 - start)
            start = k + 1
    return max(best, n - start)
