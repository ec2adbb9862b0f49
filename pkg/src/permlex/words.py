"""Binary word sources.

A :class:`WordSource` produces an unbounded 0/1 sequence one prefix at a time:
morphic fixed points, characteristic Sturmian words, and the letter-doubling /
complementation operators layered over any inner source.  Prefixes are cached
and only ever grow — extending a source never rewrites letters already handed
out, so positions are stable identifiers for shifts.

Letters are stored as int8 arrays (values 0 and 1); ``prefix_str`` renders the
same data as a digit string for display and hashing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DomainError,
    InvalidDirective,
    LimitExceeded,
    NotSaturated,
    PrefixTooShort,
    WordSpecError,
)

#: Hard ceiling on prefix length; requests beyond it raise LimitExceeded.
DEFAULT_HARD_LIMIT = 1 << 24

#: Default inspection window for factor statistics (run bounds, factor sets).
DEFAULT_FACTOR_WINDOW = 4096

_THUE_MORSE_RULES: Mapping[int, tuple[int, ...]] = {0: (0, 1), 1: (1, 0)}


def _str_to_letters(text: str) -> np.ndarray:
    arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")
    return arr.astype(np.int8)


class WordSource:
    """Lazily evaluated one-sided infinite binary word.

    Subclasses implement :meth:`_generate`, returning *at least* ``n`` letters
    as an int8 array.  The base class owns the cache and enforces the growth
    invariant: a longer prefix always begins with every shorter one.
    """

    def __init__(self, hard_limit: int = DEFAULT_HARD_LIMIT):
        self.hard_limit = int(hard_limit)
        self._prefix = np.empty(0, dtype=np.int8)
        self._prefix.setflags(write=False)

    # -- subclass interface -------------------------------------------------

    def _generate(self, n: int) -> np.ndarray:
        raise NotImplementedError

    def spec_string(self) -> str:
        """Expression in the word-spec grammar (or a descriptive tag)."""
        raise NotImplementedError

    def max_available(self) -> int:
        """Largest prefix this source can ever produce."""
        return self.hard_limit

    # -- public API ----------------------------------------------------------

    def letters(self, n: int) -> np.ndarray:
        """First ``n`` letters as a read-only int8 array of 0s and 1s."""
        if n < 0:
            raise DomainError("prefix length must be nonnegative")
        if n > self.hard_limit:
            raise LimitExceeded(
                f"requested {n} letters of {self.spec_string()}, "
                f"hard limit is {self.hard_limit}"
            )
        if n > self._prefix.size:
            grown = np.ascontiguousarray(self._generate(n), dtype=np.int8)
            if grown.size < n:
                raise PrefixTooShort(
                    f"{self.spec_string()} produced {grown.size} letters, needed {n}"
                )
            old = self._prefix
            if old.size and not np.array_equal(grown[: old.size], old):
                raise AssertionError(
                    f"{self.spec_string()} rewrote an already-produced prefix"
                )
            grown.setflags(write=False)
            self._prefix = grown
        return self._prefix[:n]

    def prefix_str(self, n: int) -> str:
        """First ``n`` letters as a digit string."""
        data = self.letters(n)
        return (data + ord("0")).astype(np.uint8).tobytes().decode("ascii")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"{type(self).__name__}({self.spec_string()!r})"


class MorphicSource(WordSource):
    """Fixed point of a binary morphism prolongable at its seed letter.

    The Thue-Morse word is the fixed point of 0 -> 01, 1 -> 10 starting
    from 0.  Generation iterates the morphism on the cached prefix, which is
    itself a prefix of the fixed point, so the output only ever extends.
    """

    def __init__(
        self,
        rules: Mapping[int, Sequence[int]],
        seed: int = 0,
        hard_limit: int = DEFAULT_HARD_LIMIT,
    ):
        super().__init__(hard_limit)
        images: dict[int, tuple[int, ...]] = {}
        for letter in (0, 1):
            image = tuple(int(x) for x in rules[letter])
            if not image or any(x not in (0, 1) for x in image):
                raise DomainError("morphism images must be nonempty binary words")
            images[letter] = image
        if seed not in (0, 1):
            raise DomainError("seed letter must be 0 or 1")
        if images[seed][0] != seed or len(images[seed]) < 2:
            raise DomainError("morphism is not prolongable at the seed letter")
        self.rules = images
        self.seed = seed
        self._images_str = {
            str(a): "".join(str(x) for x in images[a]) for a in (0, 1)
        }
        self._word = str(seed)

    def _generate(self, n: int) -> np.ndarray:
        word = self._word
        while len(word) < n:
            word = "".join(self._images_str[c] for c in word)
        self._word = word
        return _str_to_letters(word)

    def spec_string(self) -> str:
        if self.rules == dict(_THUE_MORSE_RULES) and self.seed == 0:
            return "thue-morse"
        images = ";".join(f"{a}>{self._images_str[str(a)]}" for a in (0, 1))
        return f"morphic[{images}|seed={self.seed}]"


class SturmianSource(WordSource):
    """Characteristic Sturmian word built from a periodic directive.

    Uses the standard-sequence recursion with s(-1) = 1, s(0) = 0 and
    s(i) = s(i-1)^d_i s(i-2), where the directive entries d_1 d_2 ... repeat
    forever.  Every s(i) is a prefix of s(i+1), so the limit word is
    well defined and generation can resume from cached state.
    """

    def __init__(
        self, directive: Sequence[int], hard_limit: int = DEFAULT_HARD_LIMIT
    ):
        super().__init__(hard_limit)
        entries = tuple(int(d) for d in directive)
        if not entries or any(d < 1 for d in entries):
            raise InvalidDirective(
                f"directive entries must be integers >= 1, got {entries!r}"
            )
        self.directive = entries
        self._prev = "1"
        self._cur = "0"
        self._step = 0

    def _generate(self, n: int) -> np.ndarray:
        prev, cur, step = self._prev, self._cur, self._step
        while len(cur) < n:
            d = self.directive[step % len(self.directive)]
            prev, cur = cur, cur * d + prev
            step += 1
        self._prev, self._cur, self._step = prev, cur, step
        return _str_to_letters(cur)

    def spec_string(self) -> str:
        return "sturmian:" + ",".join(str(d) for d in self.directive)


class ExplicitSource(WordSource):
    """Finite word given literally; it runs out instead of extending."""

    def __init__(self, text: str, hard_limit: int = DEFAULT_HARD_LIMIT):
        super().__init__(hard_limit)
        if not text or set(text) - {"0", "1"}:
            raise DomainError("explicit words must be nonempty strings of 0s and 1s")
        self.text = text
        self._all = _str_to_letters(text)

    def _generate(self, n: int) -> np.ndarray:
        if n > self._all.size:
            raise PrefixTooShort(
                f"explicit word has {self._all.size} letters, needed {n}"
            )
        return self._all

    def max_available(self) -> int:
        return min(self.hard_limit, self._all.size)

    def spec_string(self) -> str:
        return f"explicit:{self.text}"


class DoubledSource(WordSource):
    """Image of an inner word under the doubling substitution a -> aa."""

    def __init__(self, inner: WordSource, hard_limit: int = DEFAULT_HARD_LIMIT):
        super().__init__(hard_limit)
        self.inner = inner

    def _generate(self, n: int) -> np.ndarray:
        half = self.inner.letters((n + 1) // 2)
        return np.repeat(half, 2)

    def max_available(self) -> int:
        return min(self.hard_limit, 2 * self.inner.max_available())

    def spec_string(self) -> str:
        return f"double({self.inner.spec_string()})"


class ComplementSource(WordSource):
    """Letter-wise complement (0 <-> 1) of an inner word."""

    def __init__(self, inner: WordSource, hard_limit: int = DEFAULT_HARD_LIMIT):
        super().__init__(hard_limit)
        self.inner = inner

    def _generate(self, n: int) -> np.ndarray:
        return (1 - self.inner.letters(n)).astype(np.int8)

    def max_available(self) -> int:
        return min(self.hard_limit, self.inner.max_available())

    def spec_string(self) -> str:
        return f"complement({self.inner.spec_string()})"


# -- constructors -------------------------------------------------------------


def thue_morse_source(hard_limit: int = DEFAULT_HARD_LIMIT) -> MorphicSource:
    """The Thue-Morse word 0110100110010110..."""
    return MorphicSource(_THUE_MORSE_RULES, seed=0, hard_limit=hard_limit)


def fibonacci_source(hard_limit: int = DEFAULT_HARD_LIMIT) -> SturmianSource:
    """The Fibonacci word 0100101001001010... (directive 1,1,1,...)."""
    return SturmianSource((1,), hard_limit=hard_limit)


def sturmian_characteristic(
    directive: Sequence[int], hard_limit: int = DEFAULT_HARD_LIMIT
) -> SturmianSource:
    """Characteristic Sturmian word for a periodically repeated directive."""
    return SturmianSource(directive, hard_limit=hard_limit)


def explicit_source(text: str, hard_limit: int = DEFAULT_HARD_LIMIT) -> ExplicitSource:
    return ExplicitSource(text, hard_limit=hard_limit)


def double(source: WordSource) -> DoubledSource:
    """Word with every letter written twice."""
    return DoubledSource(source, hard_limit=source.hard_limit)


def complement(source: WordSource) -> ComplementSource:
    """Word with every letter flipped."""
    return ComplementSource(source, hard_limit=source.hard_limit)


def extend_prefix(source: WordSource, target_len: int) -> str:
    """Grow the cached prefix to ``target_len`` letters and return it."""
    return source.prefix_str(target_len)


# -- factor statistics ---------------------------------------------------------


@dataclass(frozen=True)
class RunBounds:
    """Certified maximal run lengths: at most ``k0`` zeros or ``k1`` ones in a row."""

    k0: int
    k1: int
    certified_over: int

    @property
    def k(self) -> int:
        return max(self.k0, self.k1)

    @property
    def num_classes(self) -> int:
        return self.k0 + self.k1


def _effective_window(source: WordSource, window_len: int) -> int:
    return min(window_len, source.max_available())


def run_bounds(
    source: WordSource, inspect_len: int = DEFAULT_FACTOR_WINDOW
) -> RunBounds:
    """Maximal run length of each letter over a prefix.

    Only runs bounded on both sides inside the prefix are trusted.  If a run
    touching either end of the prefix is longer than everything certified, or
    a letter never completes an interior run, the prefix cannot support a
    conclusion and ``PrefixTooShort`` is raised.
    """
    if inspect_len < 2:
        raise DomainError("inspect_len must be at least 2")
    eff = _effective_window(source, inspect_len)
    if eff < 2:
        raise PrefixTooShort("cannot certify run bounds on fewer than 2 letters")
    w = source.letters(eff)
    run_starts = np.concatenate([[0], np.flatnonzero(np.diff(w)) + 1])
    run_ends = np.concatenate([run_starts[1:], [w.size]])
    lengths = run_ends - run_starts
    letters_at = w[run_starts]
    if run_starts.size < 3:
        raise PrefixTooShort(
            f"no interior runs in the first {eff} letters of {source.spec_string()}"
        )
    interior_lengths = lengths[1:-1]
    interior_letters = letters_at[1:-1]
    bounds = {}
    for letter in (0, 1):
        runs = interior_lengths[interior_letters == letter]
        if runs.size == 0:
            raise PrefixTooShort(
                f"letter {letter} completes no interior run in the first {eff} "
                f"letters of {source.spec_string()}"
            )
        bounds[letter] = int(runs.max())
    for edge in (0, run_starts.size - 1):
        if lengths[edge] > bounds[int(letters_at[edge])]:
            raise PrefixTooShort(
                "a run clipped by the prefix boundary exceeds every interior run; "
                "inspect a longer prefix"
            )
    return RunBounds(k0=bounds[0], k1=bounds[1], certified_over=eff)


def factors(
    source: WordSource, n: int, window_len: int = DEFAULT_FACTOR_WINDOW
) -> set[str]:
    """Distinct length-``n`` blocks occurring in the first ``window_len`` letters."""
    if n < 1:
        raise DomainError("factor length must be at least 1")
    eff = _effective_window(source, window_len)
    if eff < n:
        raise PrefixTooShort(
            f"window of {eff} letters cannot contain a factor of length {n}"
        )
    text = source.prefix_str(eff)
    return {text[a : a + n] for a in range(eff - n + 1)}


def recurrence_bound(
    source: WordSource, k: int, window_len: int = DEFAULT_FACTOR_WINDOW
) -> int:
    """Smallest N such that every length-N window of the inspected prefix
    contains every length-``k`` factor seen in that prefix.

    Saturation guard: the length-``k`` factor set over the first half of the
    inspected prefix must already equal the set over the whole prefix, and
    each factor must occur at least twice; otherwise the estimate cannot be
    trusted and ``NotSaturated`` is raised.
    """
    if k < 1:
        raise DomainError("factor length must be at least 1")
    eff = _effective_window(source, window_len)
    if eff < 2 * k:
        raise PrefixTooShort(f"window of {eff} letters is too short for k={k}")
    w = source.letters(eff).astype(np.int64)
    weights = 1 << np.arange(k - 1, -1, -1, dtype=np.int64)
    codes = np.lib.stride_tricks.sliding_window_view(w, k) @ weights
    half_codes = codes[: max(eff // 2 - k + 1, 0)]
    if set(half_codes.tolist()) != set(codes.tolist()):
        raise NotSaturated(
            f"length-{k} factor set still growing at window {eff}; "
            "inspect a longer prefix"
        )
    uniq, counts = np.unique(codes, return_counts=True)
    if counts.min() < 2:
        raise NotSaturated(
            f"some length-{k} factor occurs only once in the first {eff} letters"
        )
    total = uniq.size

    def window_covers_all(n: int) -> bool:
        # Distinct codes in each sliding range of n - k + 1 factor positions.
        span = n - k + 1
        if span < 1:
            return False
        tally = np.zeros(int(codes.max()) + 1, dtype=np.int64)
        distinct = 0
        for x in codes[:span]:
            if tally[x] == 0:
                distinct += 1
            tally[x] += 1
        if distinct < total:
            return False
        for lead in range(span, codes.size):
            x = codes[lead]
            if tally[x] == 0:
                distinct += 1
            tally[x] += 1
            y = codes[lead - span]
            tally[y] -= 1
            if tally[y] == 0:
                distinct -= 1
            if distinct < total:
                return False
        return True

    lo, hi = k, eff
    if not window_covers_all(hi):
        raise NotSaturated(
            f"even the full {eff}-letter window misses some length-{k} factor"
        )
    while lo < hi:
        mid = (lo + hi) // 2
        if window_covers_all(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


# -- word-spec grammar ---------------------------------------------------------


def parse_word_spec(text: str, hard_limit: int = DEFAULT_HARD_LIMIT) -> WordSource:
    """Build a :class:`WordSource` from the compact spec grammar.

    ::

        spec := fibonacci | thue-morse
              | sturmian:<d1>,<d2>,...
              | explicit:<digits>
              | double(<spec>) | complement(<spec>)
    """
    s = text.strip()
    if s == "fibonacci":
        return fibonacci_source(hard_limit)
    if s == "thue-morse":
        return thue_morse_source(hard_limit)
    if s.startswith("sturmian:"):
        body = s[len("sturmian:") :]
        parts = [p.strip() for p in body.split(",")]
        if not body or any(not re.fullmatch(r"\d+", p) for p in parts):
            raise WordSpecError(f"bad directive list in {text!r}")
        return sturmian_characteristic(tuple(int(p) for p in parts), hard_limit)
    if s.startswith("explicit:"):
        body = s[len("explicit:") :]
        if not re.fullmatch(r"[01]+", body):
            raise WordSpecError(f"explicit words must be nonempty 0/1 strings: {text!r}")
        return explicit_source(body, hard_limit)
    for tag, wrap in (("double", double), ("complement", complement)):
        prefix = tag + "("
        if s.startswith(prefix) and s.endswith(")"):
            inner = parse_word_spec(s[len(prefix) : -1], hard_limit)
            return wrap(inner)
    raise WordSpecError(f"unrecognised word spec: {text!r}")
