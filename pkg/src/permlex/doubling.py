"""Transfer of window patterns through the letter-doubling substitution.

Positions in a window of an aperiodic binary word are graded by the run they
start: with maximal runs of k0 zeros and k1 ones, a position starting m
consecutive zeros gets class ``k0 - m`` and one starting m consecutive ones
gets class ``k0 + m - 1``.  Classes order shifts: a shift with a smaller
class index is lexicographically smaller whenever the classes differ.
Sorting shifts of the doubled word interleaves the two copies of each
position in a ladder fixed by these classes, which turns the doubled-window
pattern into arithmetic on the base pattern plus class counts:

    image[2i]   = core[i] + (partial sum below the class)   if letter is 0
    image[2i+1] = core[i] + (partial sum through the class)

with the two values swapped when the letter is 1.  ``core`` is the pattern of
the bare window, i.e. the k-fold left restriction of the window extended k
positions right.

The scalar entry points (``class_profile``, ``delta`` and friends) serve
single windows; ``audit_map``/``verify_image_formulas`` run the same formula
vectorised over every window of a scan and compare against patterns computed
directly on the doubled word.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import ClassMissing, DomainError, PrefixTooShort, Unsaturated
from .pairs import complementary_pair
from .perms import (
    DEFAULT_SCAN_WINDOW,
    LESS,
    Perm,
    compare_shifts,
    left_restrict,
    left_restrict_k,
    middle_restrict,
    perm_set,
    perm_set_parity,
    right_restrict,
    subpermutation,
)
from .ranking import DEFAULT_MAX_HORIZON, RankedWord, window_patterns
from .words import (
    DEFAULT_FACTOR_WINDOW,
    RunBounds,
    WordSource,
    double,
    recurrence_bound,
    run_bounds,
)

MAP_NAMES = ("delta", "delta-l", "delta-r", "delta-m")


def _doubled_view(source: WordSource) -> WordSource:
    """One shared doubled wrapper per source, so rank caches accumulate."""
    cached = getattr(source, "_doubled_twin", None)
    if cached is None:
        cached = double(source)
        source._doubled_twin = cached
    return cached


def _class_indices(
    letters: np.ndarray, k0: int, k1: int, count: int
) -> np.ndarray:
    """Run class of each of the first ``count`` positions of ``letters``.

    Needs ``max(k0, k1)`` letters of lookahead past position ``count - 1``.
    """
    k = max(k0, k1)
    if letters.size < count + k:
        raise PrefixTooShort(
            f"classifying {count} positions needs {count + k} letters, "
            f"got {letters.size}"
        )
    if count == 0:
        return np.empty(0, dtype=np.int64)
    changes = np.flatnonzero(letters[:-1] != letters[1:]) + 1
    xs = np.arange(count)
    if changes.size:
        slot = np.searchsorted(changes, xs, side="right")
        run_end = np.where(
            slot < changes.size,
            changes[np.minimum(slot, changes.size - 1)],
            letters.size,
        )
    else:
        run_end = np.full(count, letters.size)
    run = run_end - xs
    head = letters[:count].astype(np.int64)
    cap = np.where(head == 0, k0, k1)
    over = np.flatnonzero(run > cap)
    if over.size:
        x = int(over[0])
        raise DomainError(
            f"run of letter {int(head[x])} at offset {x} exceeds the certified "
            f"bound ({k0}, {k1}); certify run bounds over a longer prefix"
        )
    return np.where(head == 0, k0 - run, k0 + run - 1).astype(np.int64)


def _bounds_covering(source: WordSource, extent: int) -> RunBounds:
    """Run bounds certified over at least ``extent`` letters.

    A longer certification window can reveal longer runs, which changes the
    class count, so re-certify until the bounds are stable over the region
    the caller is about to classify.
    """
    bounds = run_bounds(source, max(DEFAULT_FACTOR_WINDOW, extent))
    for _ in range(8):
        need = extent + bounds.k
        if bounds.certified_over >= need:
            return bounds
        wider = run_bounds(source, need + 64)
        if (wider.k0, wider.k1) == (bounds.k0, bounds.k1):
            return wider
        bounds = wider
    raise DomainError(
        f"run bounds of {source.spec_string()} kept growing while certifying "
        f"{extent} letters"
    )


# -- scalar path -----------------------------------------------------------------


@dataclass(frozen=True)
class ClassProfile:
    """Run classes of one window, their sizes, and the partial sums that
    drive the doubling formula."""

    k0: int
    k1: int
    start: int
    length: int
    classes: tuple[int, ...]
    gamma: tuple[int, ...]
    partial_sums: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.k0, self.k1)

    @property
    def num_classes(self) -> int:
        return self.k0 + self.k1


def class_profile(
    source: WordSource,
    a: int,
    n: int,
    bounds: RunBounds | None = None,
) -> ClassProfile:
    """Class data for the window ``[a, a+n)``.

    Every class must be inhabited; a window too short to meet all classes
    (shorter than the word's recurrence bound for length-k factors) raises
    ``ClassMissing``.
    """
    if a < 0 or n < 1:
        raise DomainError("window start must be >= 0 and length >= 1")
    if bounds is None:
        bounds = _bounds_covering(source, a + n)
    letters = source.letters(a + n + bounds.k)
    classes = _class_indices(letters[a:], bounds.k0, bounds.k1, n)
    gamma = np.bincount(classes, minlength=bounds.k0 + bounds.k1)
    if (gamma == 0).any():
        missing = np.flatnonzero(gamma == 0).tolist()
        raise ClassMissing(
            f"window [{a}, {a + n}) of {source.spec_string()} lacks run "
            f"class(es) {missing}"
        )
    return ClassProfile(
        k0=bounds.k0,
        k1=bounds.k1,
        start=a,
        length=n,
        classes=tuple(int(c) for c in classes),
        gamma=tuple(int(g) for g in gamma),
        partial_sums=tuple(int(s) for s in np.cumsum(gamma)),
    )


@dataclass(frozen=True)
class DeltaResult:
    """Doubled-window pattern assembled from base-word data alone."""

    start: int
    half_length: int
    base: Perm          # pattern of [a, a + n + k)
    core: Perm          # its k-fold left restriction, the pattern of [a, a + n)
    profile: ClassProfile
    image: Perm         # pattern of the doubled window [2a, 2a + 2n)


def delta(
    source: WordSource,
    a: int,
    n: int,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> DeltaResult:
    """Image of the window ``[a, a+n)`` under letter doubling.

    The result's ``image`` equals the doubled word's pattern at
    ``[2a, 2a+2n)`` but is computed without ever ranking doubled shifts.
    """
    profile = class_profile(source, a, n)
    base = subpermutation(source, a, n + profile.k, max_horizon)
    core = left_restrict_k(base, profile.k)
    letters = source.letters(a + n)
    image = [0] * (2 * n)
    for i in range(n):
        j = profile.classes[i]
        below = profile.partial_sums[j - 1] if j > 0 else 0
        through = profile.partial_sums[j]
        if letters[a + i] == 0:
            image[2 * i] = core[i] + below
            image[2 * i + 1] = core[i] + through
        else:
            image[2 * i] = core[i] + through
            image[2 * i + 1] = core[i] + below
    if sorted(image) != list(range(1, 2 * n + 1)):
        raise AssertionError(
            f"doubling image of window [{a}, {a + n}) is not a permutation; "
            "this is a bug"
        )
    return DeltaResult(
        start=a,
        half_length=n,
        base=base,
        core=core,
        profile=profile,
        image=tuple(image),
    )


def delta_left(
    source: WordSource, a: int, n: int, max_horizon: int = DEFAULT_MAX_HORIZON
) -> Perm:
    """Doubled pattern with its last position dropped: window ``[2a, 2a+2n-1)``."""
    return left_restrict(delta(source, a, n, max_horizon).image)


def delta_right(
    source: WordSource, a: int, n: int, max_horizon: int = DEFAULT_MAX_HORIZON
) -> Perm:
    """Doubled pattern with its first position dropped: window ``[2a+1, 2a+2n)``."""
    return right_restrict(delta(source, a, n, max_horizon).image)


def delta_middle(
    source: WordSource, a: int, n: int, max_horizon: int = DEFAULT_MAX_HORIZON
) -> Perm:
    """Doubled pattern with both end positions dropped: ``[2a+1, 2a+2n-1)``."""
    return middle_restrict(delta(source, a, n, max_horizon).image)


@dataclass(frozen=True)
class OrderCase:
    """How the two doubled copies of two ordered shifts interleave."""

    label: str                          # one of 'a'..'e'
    chain: tuple[int, int, int, int]    # doubled positions in ascending shift order
    holds: bool                         # chain confirmed by direct comparison


def doubling_order_case(
    source: WordSource, a: int, b: int, max_horizon: int = DEFAULT_MAX_HORIZON
) -> OrderCase:
    """Interleaving pattern of the doubled shifts of ``a`` and ``b``.

    Requires the shift at ``a`` to precede the shift at ``b``.  The five
    possible chains are determined by the letters at the two positions and,
    when the letters agree, by whether their run classes agree:

    ========  ============================  =========================================
    letters   classes                       ascending chain
    ========  ============================  =========================================
    0, 0      class(a) < class(b)           2a < 2a+1 < 2b < 2b+1
    0, 0      class(a) = class(b)           2a < 2b   < 2a+1 < 2b+1
    0, 1      (any)                         2a < 2a+1 < 2b+1 < 2b
    1, 1      class(a) < class(b)           2a+1 < 2a < 2b+1 < 2b
    1, 1      class(a) = class(b)           2a+1 < 2b+1 < 2a < 2b
    ========  ============================  =========================================
    """
    ordering, _ = compare_shifts(source, a, b, max_horizon)
    if ordering != LESS:
        raise DomainError("the shift at a must precede the shift at b")
    bounds = _bounds_covering(source, max(a, b) + 1)
    letters = source.letters(max(a, b) + 1 + bounds.k)
    class_a = int(_class_indices(letters[a:], bounds.k0, bounds.k1, 1)[0])
    class_b = int(_class_indices(letters[b:], bounds.k0, bounds.k1, 1)[0])
    letter_a, letter_b = int(letters[a]), int(letters[b])
    if (letter_a, class_a) > (letter_b, class_b):
        raise AssertionError(
            "class ladder out of order for lexicographically ordered shifts; "
            "this is a bug"
        )
    if letter_a == 0 and letter_b == 0:
        if class_a < class_b:
            label, chain = "a", (2 * a, 2 * a + 1, 2 * b, 2 * b + 1)
        else:
            label, chain = "b", (2 * a, 2 * b, 2 * a + 1, 2 * b + 1)
    elif letter_a == 0 and letter_b == 1:
        label, chain = "c", (2 * a, 2 * a + 1, 2 * b + 1, 2 * b)
    else:
        if class_a < class_b:
            label, chain = "d", (2 * a + 1, 2 * a, 2 * b + 1, 2 * b)
        else:
            label, chain = "e", (2 * a + 1, 2 * b + 1, 2 * a, 2 * b)
    doubled = _doubled_view(source)
    holds = all(
        compare_shifts(doubled, x, y, max_horizon)[0] == LESS
        for x, y in zip(chain, chain[1:])
    )
    return OrderCase(label=label, chain=chain, holds=holds)


# -- bulk path ---------------------------------------------------------------------


@dataclass(frozen=True)
class _BulkWindows:
    """Per-window data for every start in ``[0, window)``: patterns, classes,
    formula images, and directly computed doubled patterns."""

    n: int
    bounds: RunBounds
    window: int
    letters: np.ndarray         # base letters covering the scan
    base_patterns: np.ndarray   # (W, n+k)
    core_patterns: np.ndarray   # (W, n)
    classes: np.ndarray         # (W, n)
    class_complete: np.ndarray  # (W,) every class inhabited
    images: np.ndarray          # (W, 2n) via the class formula
    direct: np.ndarray          # (W, 2n) via ranking the doubled word


def _restrict_rows_left(rows: np.ndarray) -> np.ndarray:
    kept = rows[:, :-1]
    return kept - (kept > rows[:, -1:])


def _restrict_rows_right(rows: np.ndarray) -> np.ndarray:
    kept = rows[:, 1:]
    return kept - (kept > rows[:, :1])


def _bulk_windows(
    source: WordSource,
    n: int,
    scan_window: int,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> _BulkWindows:
    if n < 1:
        raise DomainError("half-length must be at least 1")
    if scan_window < 1:
        raise DomainError("scan window must be at least 1")
    bounds = _bounds_covering(source, scan_window + n)
    k = bounds.k
    letters = source.letters(scan_window + n + k)
    starts = np.arange(scan_window)
    base_ranks = RankedWord.of(source, max_horizon).ranks(scan_window + n + k)
    base_patterns = window_patterns(base_ranks, starts, n + k)
    core_patterns = window_patterns(base_ranks, starts, n)

    position_classes = _class_indices(letters, bounds.k0, bounds.k1, scan_window + n)
    classes = np.lib.stride_tricks.sliding_window_view(position_classes, n)[
        :scan_window
    ]
    num_classes = bounds.num_classes
    onehot = position_classes[:, None] == np.arange(num_classes)[None, :]
    cumulative = np.vstack(
        [np.zeros(num_classes, dtype=np.int64), np.cumsum(onehot, axis=0)]
    )
    gamma = cumulative[n : scan_window + n] - cumulative[:scan_window]
    through = np.cumsum(gamma, axis=1)
    below = through - gamma
    through_at = np.take_along_axis(through, classes, axis=1)
    below_at = np.take_along_axis(below, classes, axis=1)
    ascending = (
        np.lib.stride_tricks.sliding_window_view(letters, n)[:scan_window] == 0
    )
    images = np.empty((scan_window, 2 * n), dtype=np.int64)
    images[:, 0::2] = core_patterns + np.where(ascending, below_at, through_at)
    images[:, 1::2] = core_patterns + np.where(ascending, through_at, below_at)

    doubled = _doubled_view(source)
    doubled_ranks = RankedWord.of(doubled, max_horizon).ranks(2 * (scan_window + n))
    direct = window_patterns(doubled_ranks, 2 * starts, 2 * n)
    if not np.array_equal(images, direct):
        raise AssertionError(
            "doubling image formula disagrees with directly ranked doubled "
            "windows; this is a bug"
        )
    return _BulkWindows(
        n=n,
        bounds=bounds,
        window=scan_window,
        letters=letters,
        base_patterns=base_patterns,
        core_patterns=core_patterns,
        classes=classes,
        class_complete=(gamma > 0).all(axis=1),
        images=images,
        direct=direct,
    )


@dataclass(frozen=True)
class ImageFormulaCheck:
    """Outcome of comparing the class formula against direct ranking for all
    four maps over every window of a scan."""

    source_spec: str
    half_length: int
    windows: int
    mismatches: dict[str, int]

    @property
    def ok(self) -> bool:
        return all(v == 0 for v in self.mismatches.values())


def verify_image_formulas(
    source: WordSource,
    n: int,
    scan_window: int,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> ImageFormulaCheck:
    """Compare formula images (and their three restrictions) with patterns
    ranked directly on the doubled word, for every window start in
    ``[0, scan_window)``."""
    bulk = _bulk_windows(source, n, scan_window, max_horizon)
    doubled = _doubled_view(source)
    doubled_ranks = RankedWord.of(doubled, max_horizon).ranks(2 * (scan_window + n))
    starts = np.arange(scan_window)
    direct = {
        "delta": bulk.direct,
        "delta-l": window_patterns(doubled_ranks, 2 * starts, 2 * n - 1),
        "delta-r": window_patterns(doubled_ranks, 2 * starts + 1, 2 * n - 1),
        "delta-m": window_patterns(doubled_ranks, 2 * starts + 1, 2 * n - 2),
    }
    derived = {
        "delta": bulk.images,
        "delta-l": _restrict_rows_left(bulk.images),
        "delta-r": _restrict_rows_right(bulk.images),
        "delta-m": _restrict_rows_left(_restrict_rows_right(bulk.images)),
    }
    mismatches = {
        name: int((derived[name] != direct[name]).any(axis=1).sum())
        for name in MAP_NAMES
    }
    return ImageFormulaCheck(
        source_spec=source.spec_string(),
        half_length=n,
        windows=scan_window,
        mismatches=mismatches,
    )


@dataclass(frozen=True)
class CollisionRecord:
    """Two window starts whose distinct domain patterns map to one image."""

    start_a: int
    start_b: int
    pair_type: int | None       # complementary-pair type of the domain patterns
    equal_factors: bool         # length-n letter blocks agree
    equal_forms: bool           # full (n+k-1)-letter forms agree


@dataclass(frozen=True)
class AuditReport:
    """Injectivity/surjectivity audit of one transfer map at one half-length.

    The domain is the set of distinct ``(n+k)``-patterns seen in the scan;
    the image side is compared against the parity pattern sets of the doubled
    word enumerated over the same scan, so both sides share one horizon.
    The structural fields check, on the full doubling images, that the left
    and right restrictions stay faithful, that no two images form a
    complementary pair of type 1, and that same-core windows whose final
    positions sit in different classes have adjacent classes and gapped
    final image entries.
    """

    source_spec: str
    map_name: str
    half_length: int
    image_length: int
    k0: int
    k1: int
    scan_window: int
    domain_size: int
    image_size: int
    collisions: tuple[CollisionRecord, ...]
    surjective: bool
    left_restriction_faithful: bool
    right_restriction_faithful: bool
    no_type1_image_pairs: bool
    gap_pairs_checked: int
    gap_violations: int
    class_complete_windows: int

    @property
    def injective(self) -> bool:
        return not self.collisions

    def to_dict(self) -> dict:
        data = asdict(self)
        data["collisions"] = [asdict(c) for c in self.collisions]
        data["injective"] = self.injective
        return data


def _image_rows_for_map(bulk: _BulkWindows, map_name: str) -> np.ndarray:
    if map_name == "delta":
        return bulk.images
    if map_name == "delta-l":
        return _restrict_rows_left(bulk.images)
    if map_name == "delta-r":
        return _restrict_rows_right(bulk.images)
    if map_name == "delta-m":
        return _restrict_rows_left(_restrict_rows_right(bulk.images))
    raise DomainError(f"unknown map {map_name!r}; expected one of {MAP_NAMES}")


def audit_map(
    source: WordSource,
    map_name: str,
    n: int,
    scan_window: int = DEFAULT_SCAN_WINDOW,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> AuditReport:
    """Collision and surjectivity audit of one transfer map at half-length ``n``."""
    if map_name not in MAP_NAMES:
        raise DomainError(f"unknown map {map_name!r}; expected one of {MAP_NAMES}")
    bulk = _bulk_windows(source, n, scan_window, max_horizon)
    k = bulk.bounds.k
    image_rows = _image_rows_for_map(bulk, map_name)
    image_length = image_rows.shape[1]

    # Representative start for each distinct domain pattern, and the image
    # each pattern maps to.  The image must depend on the pattern alone.
    first_start_of: dict[bytes, int] = {}
    image_of: dict[bytes, bytes] = {}
    for a in range(bulk.window):
        key = bulk.base_patterns[a].tobytes()
        img = image_rows[a].tobytes()
        if key not in first_start_of:
            first_start_of[key] = a
            image_of[key] = img
        elif image_of[key] != img:
            raise AssertionError(
                "one domain pattern produced two different images; this is a bug"
            )

    by_image: dict[bytes, list[int]] = {}
    for key, a in first_start_of.items():
        by_image.setdefault(image_of[key], []).append(a)

    collisions: list[CollisionRecord] = []
    for starts in by_image.values():
        if len(starts) < 2:
            continue
        starts.sort()
        for i in range(len(starts)):
            for j in range(i + 1, len(starts)):
                a, b = starts[i], starts[j]
                pattern_a = tuple(bulk.base_patterns[a].tolist())
                pattern_b = tuple(bulk.base_patterns[b].tolist())
                collisions.append(
                    CollisionRecord(
                        start_a=a,
                        start_b=b,
                        pair_type=complementary_pair(pattern_a, pattern_b),
                        equal_factors=bool(
                            np.array_equal(
                                bulk.letters[a : a + n], bulk.letters[b : b + n]
                            )
                        ),
                        equal_forms=bool(
                            np.array_equal(
                                bulk.letters[a : a + n + k - 1],
                                bulk.letters[b : b + n + k - 1],
                            )
                        ),
                    )
                )
    collisions.sort(key=lambda c: (c.start_a, c.start_b))

    parity = "even" if map_name in ("delta", "delta-l") else "odd"
    target = perm_set_parity(
        _doubled_view(source),
        image_length,
        parity,
        scan_window=2 * bulk.window,
        saturate=False,
        max_horizon=max_horizon,
    )
    image_set = frozenset(
        tuple(image_rows[a].tolist()) for a in first_start_of.values()
    )
    surjective = image_set == target.members

    # Structural checks on the full doubling images.
    full_images = {
        tuple(bulk.images[a].tolist()) for a in first_start_of.values()
    }
    left_faithful = (
        len({left_restrict(p) for p in full_images}) == len(full_images)
    )
    right_faithful = (
        len({right_restrict(p) for p in full_images}) == len(full_images)
    )
    no_type1 = True
    by_form: dict[tuple[bool, ...], list[Perm]] = {}
    for p in full_images:
        shape = tuple(p[i] < p[i + 1] for i in range(len(p) - 1))
        by_form.setdefault(shape, []).append(p)
    for group in by_form.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if complementary_pair(group[i], group[j]) == 1:
                    no_type1 = False

    # Same-core windows whose final positions sit in different classes: the
    # classes must be adjacent and the last two image entries must differ.
    gap_groups: dict[bytes, dict[tuple[int, int, int], int]] = {}
    for a in range(bulk.window):
        if not bulk.class_complete[a]:
            continue
        signature = (
            int(bulk.classes[a, n - 1]),
            int(bulk.images[a, 2 * n - 2]),
            int(bulk.images[a, 2 * n - 1]),
        )
        gap_groups.setdefault(bulk.core_patterns[a].tobytes(), {}).setdefault(
            signature, a
        )
    gap_checked = 0
    gap_violations = 0
    for signatures in gap_groups.values():
        keys = list(signatures)
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                (c1, x1, y1), (c2, x2, y2) = keys[i], keys[j]
                if c1 == c2:
                    continue
                gap_checked += 1
                if abs(c1 - c2) != 1 or x1 == x2 or y1 == y2:
                    gap_violations += 1

    return AuditReport(
        source_spec=source.spec_string(),
        map_name=map_name,
        half_length=n,
        image_length=image_length,
        k0=bulk.bounds.k0,
        k1=bulk.bounds.k1,
        scan_window=bulk.window,
        domain_size=len(first_start_of),
        image_size=len(by_image),
        collisions=tuple(collisions),
        surjective=surjective,
        left_restriction_faithful=left_faithful,
        right_restriction_faithful=right_faithful,
        no_type1_image_pairs=no_type1,
        gap_pairs_checked=gap_checked,
        gap_violations=gap_violations,
        class_complete_windows=int(bulk.class_complete.sum()),
    )


@dataclass(frozen=True)
class BoundsReport:
    """Saturated pattern counts versus the two-sided doubling bounds:
    the doubled word's counts at lengths 2n-1 and 2n never exceed
    2*tau(n+k) and tau(n+k) + tau(n+k+1) respectively."""

    source_spec: str
    n: int
    k: int
    tau_base: int           # tau(n + k)
    tau_base_next: int      # tau(n + k + 1)
    tau_doubled_odd: int    # tau of the doubled word at 2n - 1
    tau_doubled_even: int   # tau of the doubled word at 2n
    odd_ok: bool
    even_ok: bool
    odd_tight: bool
    even_tight: bool


def check_bounds(
    source: WordSource,
    n: int,
    scan_window: int = DEFAULT_SCAN_WINDOW,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> BoundsReport:
    """Verify the doubling count bounds at half-length ``n`` with saturated
    enumeration on both the base word and its doubling.

    ``n`` must be at least the word's recurrence bound for length-k factors
    (every window of length ``n`` must contain all of them).
    """
    bounds = _bounds_covering(source, scan_window + n)
    threshold = recurrence_bound(source, bounds.k)
    if n < threshold:
        raise DomainError(
            f"bounds need n >= {threshold} (recurrence bound of "
            f"{source.spec_string()} for length-{bounds.k} factors), got {n}"
        )
    k = bounds.k
    sets = [
        perm_set(source, n + k, scan_window, saturate=True, max_horizon=max_horizon),
        perm_set(
            source, n + k + 1, scan_window, saturate=True, max_horizon=max_horizon
        ),
        perm_set(
            _doubled_view(source),
            2 * n - 1,
            scan_window,
            saturate=True,
            max_horizon=max_horizon,
        ),
        perm_set(
            _doubled_view(source),
            2 * n,
            scan_window,
            saturate=True,
            max_horizon=max_horizon,
        ),
    ]
    stale = [s for s in sets if not s.saturated]
    if stale:
        raise Unsaturated(
            f"enumeration did not saturate for lengths "
            f"{[s.n for s in stale]} of {source.spec_string()}"
        )
    tau_base, tau_base_next, tau_odd, tau_even = (s.count for s in sets)
    odd_bound = 2 * tau_base
    even_bound = tau_base + tau_base_next
    return BoundsReport(
        source_spec=source.spec_string(),
        n=n,
        k=k,
        tau_base=tau_base,
        tau_base_next=tau_base_next,
        tau_doubled_odd=tau_odd,
        tau_doubled_even=tau_even,
        odd_ok=tau_odd <= odd_bound,
        even_ok=tau_even <= even_bound,
        odd_tight=tau_odd == odd_bound,
        even_tight=tau_even == even_bound,
    )
