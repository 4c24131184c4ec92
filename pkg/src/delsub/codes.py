"""Code families: membership, enumeration, sizing, and best-coset search.

Every family is a conjunction of cheap per-word predicates (syndrome
residues, run bounds, periodic-window bounds), so membership is O(n) and
enumeration just filters the ascending integer order of Sigma^n.  Sizes and
best cosets are computed by exact counting rather than pigeonhole floors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TextIO

from .words import (
    decode,
    inversion_number,
    max_le2_periodic_length,
    parse_word,
    run_count,
    vt_syndrome,
    weight,
)

__all__ = [
    "FULL",
    "VT",
    "INV",
    "VT_MOD",
    "EVEN_POS",
    "RUN_BOUNDED",
    "RLL",
    "CP",
    "C2N9",
    "CN21",
    "CL",
    "FAMILIES",
    "ENUMERATION_LIMIT",
    "CodeSpec",
    "spec",
    "default_period",
    "contains",
    "members",
    "size",
    "redundancy",
    "best_coset",
    "subcode_check",
    "save_code",
    "load_code",
]

FULL = "full"
VT = "vt"
INV = "inv"
VT_MOD = "vt_mod"
EVEN_POS = "even_pos"
RUN_BOUNDED = "run_bounded"
RLL = "rll"
CP = "cp"
C2N9 = "c2n9"
CN21 = "cn21"
CL = "cl"

# canonical parameter order per family, used for file headers and the
# lexicographic tie-break of best_coset
_PARAM_ORDER: dict[str, tuple[str, ...]] = {
    FULL: (),
    VT: ("a",),
    INV: ("a", "m"),
    VT_MOD: ("a", "m"),
    EVEN_POS: ("a", "m"),
    RUN_BOUNDED: (),
    RLL: ("P",),
    CP: ("P", "a1", "a2"),
    C2N9: ("a", "m"),
    CN21: ("P", "a1", "a2"),
    CL: ("a0", "a1", "a2"),
}

FAMILIES = tuple(_PARAM_ORDER)

ENUMERATION_LIMIT = 24


def default_period(n: int) -> int:
    """Smallest even integer P with P >= log2(n) + 3."""
    if n < 1:
        raise ValueError("period needs n >= 1")
    p = math.ceil(math.log2(n) + 3)
    return p if p % 2 == 0 else p + 1


def _check_params(family: str, n: int, params: dict[str, int]) -> None:
    order = _PARAM_ORDER.get(family)
    if order is None:
        raise ValueError(f"unknown family {family!r}")
    if set(params) != set(order):
        raise ValueError(
            f"family {family} takes parameters {order}, got {tuple(params)}"
        )
    if "m" in params and params["m"] < 2:
        raise ValueError("modulus m must be at least 2")
    if "P" in params:
        # the inversion modulus 1 + P/2 needs an even period; the bare
        # run-length family is well defined for any positive period
        if family in (CP, CN21) and (params["P"] < 2 or params["P"] % 2):
            raise ValueError("period P must be even and at least 2")
        if params["P"] < 1:
            raise ValueError("period P must be positive")
    ranges: dict[str, tuple[int, int]] = {}
    if family == VT:
        ranges["a"] = (0, 2 * n - 1)
    elif family in (INV, VT_MOD, EVEN_POS, C2N9):
        ranges["a"] = (0, params["m"] - 1)
    elif family in (CP, CN21):
        ranges["a1"] = (0, 1)
        ranges["a2"] = (0, params["P"] // 2)
    elif family == CL:
        ranges["a0"] = (0, 3)
        ranges["a1"] = (0, 2 * n - 1)
        ranges["a2"] = (0, 2 * n * n - 1)
    for name, (lo, hi) in ranges.items():
        if not lo <= params[name] <= hi:
            raise ValueError(f"parameter {name}={params[name]} outside [{lo},{hi}]")


@dataclass(frozen=True, slots=True)
class CodeSpec:
    """A code family instance: family id, length, and named parameters.

    params is stored as (name, value) pairs in the family's canonical
    order; build instances through :func:`spec` for keyword convenience.
    """

    family: str
    n: int
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("code length must be positive")
        given = dict(self.params)
        if len(given) != len(self.params):
            raise ValueError("duplicate parameter names")
        _check_params(self.family, self.n, given)
        canonical = tuple((k, given[k]) for k in _PARAM_ORDER[self.family])
        object.__setattr__(self, "params", canonical)

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def param_dict(self) -> dict[str, int]:
        return dict(self.params)


def spec(family: str, n: int, **params: int) -> CodeSpec:
    return CodeSpec(family, n, tuple(params.items()))


def _predicate(cs: CodeSpec) -> Callable[[str], bool]:
    """Membership test for words already known to have length cs.n."""
    n = cs.n
    p = cs.param_dict()
    fam = cs.family
    if fam == FULL:
        return lambda x: True
    if fam == VT:
        a, mod = p["a"], 2 * n
        return lambda x: vt_syndrome(x, 1) % mod == a
    if fam == INV:
        a, m = p["a"], p["m"]
        return lambda x: inversion_number(x) % m == a
    if fam == VT_MOD:
        a, m = p["a"], p["m"]
        return lambda x: vt_syndrome(x, 1) % m == a
    if fam == EVEN_POS:
        a, m = p["a"], p["m"]
        return lambda x: sum(x[i] == "1" for i in range(1, n, 2)) % m == a
    if fam == RUN_BOUNDED:
        cap = (n + 1) // 2
        return lambda x: run_count(x) <= cap
    if fam == RLL:
        period = p["P"]
        return lambda x: max_le2_periodic_length(x) <= period
    if fam == CP:
        period, a1, a2 = p["P"], p["a1"], p["a2"]
        mod = 1 + period // 2
        return (
            lambda x: max_le2_periodic_length(x) <= period
            and weight(x) % 2 == a1
            and inversion_number(x) % mod == a2
        )
    if fam == C2N9:
        a, m = p["a"], p["m"]
        cap = (n + 1) // 2
        return lambda x: run_count(x) <= cap and inversion_number(x) % m == a
    if fam == CN21:
        period, a1, a2 = p["P"], p["a1"], p["a2"]
        mod = 1 + period // 2
        cap = (n + 1) // 2
        return (
            lambda x: max_le2_periodic_length(x) <= period
            and run_count(x) <= cap
            and weight(x) % 2 == a1
            and inversion_number(x) % mod == a2
        )
    if fam == CL:
        a0, a1, a2 = p["a0"], p["a1"], p["a2"]
        m1, m2 = 2 * n, 2 * n * n
        return (
            lambda x: weight(x) % 4 == a0
            and vt_syndrome(x, 1) % m1 == a1
            and vt_syndrome(x, 2) % m2 == a2
        )
    raise AssertionError(fam)


def contains(cs: CodeSpec, x: str) -> bool:
    if len(x) != cs.n:
        raise ValueError(f"word length {len(x)} does not match spec n={cs.n}")
    return _predicate(cs)(x)


def members(cs: CodeSpec) -> Iterator[str]:
    """Stream the code in ascending order; capped at the enumeration limit."""
    if cs.n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration capped at n <= {ENUMERATION_LIMIT}")
    member = _predicate(cs)
    for value in range(1 << cs.n):
        x = decode(value, cs.n)
        if member(x):
            yield x


def size(cs: CodeSpec) -> int:
    if cs.family == FULL:
        return 1 << cs.n
    return sum(1 for _ in members(cs))


def redundancy(cs: CodeSpec) -> float:
    count = size(cs)
    if count == 0:
        raise ValueError("redundancy of an empty code is undefined")
    return cs.n - math.log2(count)


# residue components searched by best_coset: key function and the moduli the
# free parameters range over; structural constraints stay fixed
def _coset_layout(
    family: str, n: int, m: int, period: int
) -> tuple[Callable[[str], tuple[int, ...] | None], list[tuple[str, int]], dict[str, int]]:
    cap = (n + 1) // 2
    if family == VT:
        return lambda x: (vt_syndrome(x, 1) % (2 * n),), [("a", 2 * n)], {}
    if family == INV:
        return lambda x: (inversion_number(x) % m,), [("a", m)], {"m": m}
    if family == VT_MOD:
        return lambda x: (vt_syndrome(x, 1) % m,), [("a", m)], {"m": m}
    if family == EVEN_POS:
        return (
            lambda x: (sum(x[i] == "1" for i in range(1, n, 2)) % m,),
            [("a", m)],
            {"m": m},
        )
    if family == C2N9:
        return (
            lambda x: (inversion_number(x) % m,) if run_count(x) <= cap else None,
            [("a", m)],
            {"m": m},
        )
    if family == CP:
        mod = 1 + period // 2
        return (
            lambda x: (weight(x) % 2, inversion_number(x) % mod)
            if max_le2_periodic_length(x) <= period
            else None,
            [("a1", 2), ("a2", mod)],
            {"P": period},
        )
    if family == CN21:
        mod = 1 + period // 2
        return (
            lambda x: (weight(x) % 2, inversion_number(x) % mod)
            if max_le2_periodic_length(x) <= period and run_count(x) <= cap
            else None,
            [("a1", 2), ("a2", mod)],
            {"P": period},
        )
    if family == CL:
        m1, m2 = 2 * n, 2 * n * n
        return (
            lambda x: (weight(x) % 4, vt_syndrome(x, 1) % m1, vt_syndrome(x, 2) % m2),
            [("a0", 4), ("a1", m1), ("a2", m2)],
            {},
        )
    raise ValueError(f"family {family} has no residue parameters")


def best_coset(family: str, n: int, *, m: int = 2, P: int | None = None) -> CodeSpec:
    """Exhaustively find the largest coset of a residue family.

    Ties break toward the lexicographically smallest parameter tuple.  m
    fixes the modulus where the family has one; P fixes the period (default
    the smallest even value >= log2(n) + 3).
    """
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"coset search capped at n <= {ENUMERATION_LIMIT}")
    period = default_period(n) if P is None else P
    key_of, free, fixed = _coset_layout(family, n, m, period)
    counts: dict[tuple[int, ...], int] = {}
    for value in range(1 << n):
        key = key_of(decode(value, n))
        if key is not None:
            counts[key] = counts.get(key, 0) + 1
    best_key = min(
        (key for key in counts),
        key=lambda k: (-counts[k], k),
        default=tuple(0 for _ in free),
    )
    params = dict(fixed)
    params.update(zip((name for name, _ in free), best_key))
    return spec(family, n, **params)


def subcode_check(inner: CodeSpec, outer: CodeSpec) -> bool:
    """True when every member of inner also satisfies outer."""
    if inner.n != outer.n:
        raise ValueError("subcode check needs matching lengths")
    outer_member = _predicate(outer)
    return all(outer_member(x) for x in members(inner))


def _format_header(cs: CodeSpec) -> str:
    kv = ",".join(f"{k}={v}" for k, v in cs.params)
    return f"# family={cs.family} n={cs.n} params={kv}"


def save_code(cs: CodeSpec, out: TextIO, words: Iterable[str] | None = None) -> int:
    """Write the header plus one word per line; returns the word count."""
    print(_format_header(cs), file=out)
    count = 0
    for x in members(cs) if words is None else words:
        print(x, file=out)
        count += 1
    return count


def load_code(src: TextIO) -> tuple[CodeSpec, list[str]]:
    """Parse a code file back into its spec and word list."""
    header = src.readline().strip()
    if not header.startswith("# "):
        raise ValueError("missing code file header")
    fields = dict(
        item.split("=", 1) for item in header[2:].split(" ") if "=" in item
    )
    try:
        family = fields["family"]
        n = int(fields["n"])
        raw = fields.get("params", "")
    except KeyError as missing:
        raise ValueError(f"header lacks {missing} field") from None
    params = {}
    if raw:
        for item in raw.split(","):
            key, value = item.split("=", 1)
            params[key] = int(value)
    cs = spec(family, n, **params)
    out = []
    for line in src:
        word = line.strip()
        if word:
            out.append(parse_word(word))
    return cs, out
