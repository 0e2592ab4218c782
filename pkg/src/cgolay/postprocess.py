"""Closure, classification, and diagnostics over enumerated pairs.

The enumeration emits one normalized pair per solver solution.  This module
expands those back out: the closure of a pair under the five equivalence
moves (reversal, conjugate-reversal of the first member, swap, scaling the
first member by i, and the positional i^k ramp) reconstructs every pair in
its class, and grouping normalized pairs by class yields the inequivalent
representatives and the three headline counts per length -- distinct member
sequences, total pairs, and classes.

The crossover test is a structural diagnostic relating mirrored entries of
the two members; it holds for every class at small lengths except a single
length-8 class, and is reported, never enforced.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core


def equivalence_closure(pairs):
    """Every pair reachable from the given ones under the five moves."""
    seen = {(tuple(a), tuple(b)) for a, b in pairs}
    frontier = list(seen)
    while frontier:
        pair = frontier.pop()
        for tag in core.EQUIV_OPS:
            image = core.apply_equivalence(tag, pair)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return frozenset(seen)


def _text_key(pair):
    return (core.to_text(pair[0]), core.to_text(pair[1]))


@dataclass(frozen=True)
class OmegaSets:
    """Closure census of an enumeration run at one length."""

    length: int
    all_pairs: frozenset  # every pair in any class
    sequences: frozenset  # every sequence appearing as a member
    representatives: tuple  # lexicographically least pair per class

    @property
    def counts(self):
        """(sequences, pairs, classes) -- the headline census triple."""
        return (len(self.sequences), len(self.all_pairs), len(self.representatives))


def build_omegas(n, pairs):
    """Group pairs into equivalence classes and collect the closure census.

    Input order does not matter; every input pair is validated against the
    defining correlation condition before anything else touches it.
    """
    todo = []
    for pair in pairs:
        a, b = pair
        if len(a) != n or len(b) != n:
            raise ValueError(f"pair {pair!r} does not have length {n}")
        if not core.is_golay_pair(pair):
            raise ValueError(f"pair {pair!r} fails the correlation condition")
        todo.append((tuple(a), tuple(b)))

    absorbed = set()
    classes = []
    for pair in sorted(todo):
        if pair in absorbed:
            continue
        cls = equivalence_closure([pair])
        absorbed |= cls
        classes.append(min(cls, key=_text_key))
    classes.sort(key=_text_key)

    sequences = frozenset(s for p in absorbed for s in p)
    return OmegaSets(
        length=n,
        all_pairs=frozenset(absorbed),
        sequences=sequences,
        representatives=tuple(classes),
    )


def crossover_check(pair):
    """Whether mirrored interior entries of the two members stay in step.

    Compares the exponent difference across each mirrored position pair of
    the first member with the corresponding difference of the second, up to
    the sign forced by the length's parity.  Vacuously true below length 3.
    """
    a, b = pair
    n = len(a)
    offset = 2 if n % 2 == 0 else 0
    for k in range(1, n - 1):
        lhs = (a[k] - a[n - 1 - k]) & 3
        rhs = (offset + b[k] - b[n - 1 - k]) & 3
        if lhs != rhs:
            return False
    return True


def census_rows(pairs_by_length):
    """counts-CSV rows (n, sequences, pairs, classes), sorted by length."""
    rows = []
    for n in sorted(pairs_by_length):
        omegas = build_omegas(n, pairs_by_length[n])
        rows.append((n,) + omegas.counts)
    return rows
