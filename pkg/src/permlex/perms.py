"""Permutation patterns induced by comparing shifts of a word.

The window ``[a, a+n)`` of a word gets the pattern whose i-th entry is the
1-based rank of the shift starting at ``a+i`` among the window's shifts under
lexicographic order.  Patterns are plain tuples of ints.

Two paths compute patterns: a scalar path (``compare_shifts`` and
``subpermutation``) that fetches letters lazily and honours a strict
comparison horizon, and a bulk path (``perm_set``) built on the prefix-doubling
rank engine for enumerating every window of a large scan.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    HorizonExhausted,
    LengthTooSmall,
    LimitExceeded,
    PrefixTooShort,
    WrongSource,
)
from .ranking import DEFAULT_MAX_HORIZON, RankedWord, window_patterns
from .words import DoubledSource, WordSource

Perm = tuple[int, ...]

#: Return values of compare_shifts: the shift at ``a`` comes first / second.
LESS = -1
GREATER = 1

#: Default number of window start positions scanned during enumeration.
DEFAULT_SCAN_WINDOW = 4096


def is_permutation(p: Perm) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def format_perm(p: Perm) -> str:
    return "(" + " ".join(str(v) for v in p) + ")"


def parse_perm(text: str) -> Perm:
    """Read a pattern like ``(4 9 7 2 6 1 3 8 5)`` (parens/commas optional)."""
    cleaned = text.strip().strip("()").replace(",", " ")
    try:
        p = tuple(int(tok) for tok in cleaned.split())
    except ValueError as exc:
        raise DomainError(f"cannot parse permutation from {text!r}") from exc
    if not p or not is_permutation(p):
        raise DomainError(f"{text!r} is not a permutation of 1..n")
    return p


def compare_shifts(
    source: WordSource, a: int, b: int, max_horizon: int = DEFAULT_MAX_HORIZON
) -> tuple[int, int]:
    """Order the shifts starting at ``a`` and ``b`` lexicographically.

    Returns ``(ordering, witness)``: ordering is LESS (-1) when the shift at
    ``a`` comes first and GREATER (+1) otherwise; witness is the offset of the
    first differing letter.  Raises ``HorizonExhausted`` if the shifts agree
    on ``max_horizon`` letters, and ``PrefixTooShort`` if the word ends first.
    """
    if a < 0 or b < 0:
        raise DomainError("shift positions must be nonnegative")
    if a == b:
        raise DomainError("shifts at equal positions are identical")
    top = max(a, b)
    available = source.max_available()
    scanned = 0
    step = 64
    while scanned < max_horizon:
        upto = min(scanned + step, max_horizon)
        hit_end = top + upto > available
        if hit_end:
            upto = available - top
            if upto <= scanned:
                raise PrefixTooShort(
                    f"shifts at {a} and {b} agree through offset {scanned - 1} "
                    "and the word ends"
                )
        w = source.letters(top + upto)
        seg_a = w[a + scanned : a + upto]
        seg_b = w[b + scanned : b + upto]
        diff = np.flatnonzero(seg_a != seg_b)
        if diff.size:
            c = scanned + int(diff[0])
            return (LESS if w[a + c] < w[b + c] else GREATER, c)
        if hit_end:
            raise PrefixTooShort(
                f"shifts at {a} and {b} agree through offset {upto - 1} "
                "and the word ends"
            )
        scanned = upto
        step *= 2
    raise HorizonExhausted(
        f"shifts at {a} and {b} agree on the first {max_horizon} letters"
    )


def subpermutation(
    source: WordSource, a: int, n: int, max_horizon: int = DEFAULT_MAX_HORIZON
) -> Perm:
    """Pattern of the window ``[a, a+n)``: entry i is the rank of shift ``a+i``."""
    if a < 0:
        raise DomainError("window start must be nonnegative")
    if n < 1:
        raise DomainError("window length must be at least 1")
    if n == 1:
        return (1,)
    order = sorted(
        range(a, a + n),
        key=functools.cmp_to_key(
            lambda x, y: compare_shifts(source, x, y, max_horizon)[0]
        ),
    )
    rank_of = {pos: i + 1 for i, pos in enumerate(order)}
    return tuple(rank_of[pos] for pos in range(a, a + n))


def form_of(p: Perm) -> str:
    """Ascent/descent word of a pattern: letter i is 0 iff ``p[i] < p[i+1]``.

    For patterns of a binary word this recovers the underlying factor.
    """
    if len(p) < 2:
        raise LengthTooSmall("a form needs a pattern of length at least 2")
    return "".join("0" if p[i] < p[i + 1] else "1" for i in range(len(p) - 1))


# -- restrictions ---------------------------------------------------------------


def _drop_and_renumber(values: tuple[int, ...], removed: int) -> Perm:
    return tuple(v - 1 if v > removed else v for v in values)


def left_restrict(p: Perm) -> Perm:
    """Forget the last entry and renumber: the pattern of the window minus
    its right endpoint."""
    if len(p) < 2:
        raise LengthTooSmall("left restriction needs length at least 2")
    return _drop_and_renumber(p[:-1], p[-1])


def right_restrict(p: Perm) -> Perm:
    """Forget the first entry and renumber."""
    if len(p) < 2:
        raise LengthTooSmall("right restriction needs length at least 2")
    return _drop_and_renumber(p[1:], p[0])


def middle_restrict(p: Perm) -> Perm:
    """Forget both end entries and renumber."""
    if len(p) < 3:
        raise LengthTooSmall("middle restriction needs length at least 3")
    return left_restrict(right_restrict(p))


def left_restrict_k(p: Perm, k: int) -> Perm:
    """k-fold left restriction (k = 0 returns the pattern unchanged)."""
    if k < 0:
        raise DomainError("restriction count must be nonnegative")
    if len(p) < k + 1:
        raise LengthTooSmall(f"cannot left-restrict a length-{len(p)} pattern {k} times")
    for _ in range(k):
        p = left_restrict(p)
    return p


# -- enumeration -----------------------------------------------------------------


@dataclass(frozen=True)
class PermSet:
    """All window patterns of one length found in a scan.

    ``saturated`` records whether doubling the scan once more found nothing
    new; when False the member set is only a lower bound.
    """

    source_spec: str
    n: int
    members: frozenset[Perm]
    scan_window: int
    saturated: bool

    @property
    def count(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Perm]:
        return sorted(self.members)


def _pattern_rows(
    source: WordSource,
    n: int,
    window: int,
    parity: str | None,
    max_horizon: int,
) -> np.ndarray:
    ranked = RankedWord.of(source, max_horizon)
    global_ranks = ranked.ranks(window + n)
    if parity is None:
        starts = np.arange(window)
    elif parity == "even":
        starts = np.arange(0, window, 2)
    elif parity == "odd":
        starts = np.arange(1, window, 2)
    else:
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    return window_patterns(global_ranks, starts, n)


def _unique_patterns(rows: np.ndarray) -> frozenset[Perm]:
    return frozenset(map(tuple, np.unique(rows, axis=0).tolist()))


def _enumerate(
    source: WordSource,
    n: int,
    parity: str | None,
    scan_window: int,
    saturate: bool,
    max_horizon: int,
) -> PermSet:
    if n < 1:
        raise DomainError("pattern length must be at least 1")
    if scan_window < 2:
        raise DomainError("scan window must be at least 2")
    spec = source.spec_string()
    window = scan_window
    previous: frozenset[Perm] | None = None
    while True:
        try:
            rows = _pattern_rows(source, n, window, parity, max_horizon)
        except (LimitExceeded, PrefixTooShort):
            if previous is None:
                raise
            return PermSet(spec, n, previous, window // 2, saturated=False)
        members = _unique_patterns(rows)
        if not saturate:
            return PermSet(spec, n, members, window, saturated=False)
        # Windows of a fixed prefix are a superset of those of a shorter one,
        # so an unchanged count across one doubling means an unchanged set.
        if previous is not None and len(members) == len(previous):
            return PermSet(spec, n, members, window, saturated=True)
        previous = members
        window *= 2


def perm_set(
    source: WordSource,
    n: int,
    scan_window: int = DEFAULT_SCAN_WINDOW,
    saturate: bool = True,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> PermSet:
    """Patterns of every length-``n`` window starting in ``[0, scan_window)``.

    With ``saturate=True`` the scan doubles until a doubling adds no pattern
    (the count is then exact for all words whose patterns all appear early,
    which holds for uniformly recurrent words) or until letters run out, in
    which case the result is flagged unsaturated.
    """
    return _enumerate(source, n, None, scan_window, saturate, max_horizon)


def perm_set_parity(
    source: WordSource,
    n: int,
    parity: str,
    scan_window: int = DEFAULT_SCAN_WINDOW,
    saturate: bool = True,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> PermSet:
    """Patterns of length-``n`` windows at even or odd starts of a doubled word.

    Start-position parity is only meaningful when letters come in aligned
    pairs, so any source that is not a doubling is rejected.
    """
    if not isinstance(source, DoubledSource):
        raise WrongSource(
            "parity enumeration needs a doubled word; got "
            f"{source.spec_string()}"
        )
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    return _enumerate(source, n, parity, scan_window, saturate, max_horizon)
