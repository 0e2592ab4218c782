"""Partner search for a fixed first sequence, via the programmatic kernel.

Given a first sequence A over the fourth roots of unity, the partner B must
cancel A's aperiodic autocorrelation at every nonzero shift.  Each entry of
B is two Boolean variables: for position k, variable 2k is the "imaginary"
bit and variable 2k+1 the "negation" bit, decoding as

    (False, False) -> 1       (True, False) -> i
    (False, True)  -> -1      (True, True)  -> -i

i.e. the entry exponent is bit0 + 2*bit1.  Normalization pins the leading
entry of B to 1 (two unit clauses).  The largest shift constrains only the
outermost entries: the real part of A's shift-(n-1) correlation forces the
product b_0 * conj(b_{n-1}) into a known parity class, and the same applies
inward, so each mirror pair (k, n-1-k) gets two binary clauses tying the
imaginary bits together.  Everything finer-grained than parity lives in the
search callback, which recomputes a shift's correlation sum the moment all
entries it touches become known and vetoes the subtree on a mismatch.

The decision order interleaves the two ends (positions 0, n-1, 1, n-2, ...)
so that large shifts -- whose constraint windows complete first -- prune as
early as possible.

Two callback implementations are provided.  golay_callback is a direct,
stateless reading of the rule and rescans the full assignment every time;
PartnerChecker keeps incremental per-shift completion counts synchronized
with the solver trail and only recomputes sums that changed.  They must
agree move for move; tests drive both.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core, progsat

_RE = core.ENTRY_RE
_IM = core.ENTRY_IM


@dataclass(frozen=True)
class PartnerEncoding:
    """Instance data tying solver variables back to sequence entries."""

    length: int
    first: tuple  # entry exponents of the fixed first sequence
    targets: tuple  # required (re, im) correlation of the partner per shift

    @property
    def num_vars(self):
        return 2 * self.length


def decode_entry(imag_bit, negate_bit):
    """Exponent of the entry encoded by one variable pair."""
    return (1 if imag_bit else 0) + (2 if negate_bit else 0)


def decode_assignment(enc, assignment):
    """Entry exponents of the partner under a full assignment."""
    return tuple(
        decode_entry(assignment[2 * k], assignment[2 * k + 1]) for k in range(enc.length)
    )


def _support(n, shift):
    """Positions whose entries feed the correlation at the given shift."""
    if 2 * shift >= n:
        return list(range(n - shift)) + list(range(shift, n))
    return list(range(n))


def build_instance(first, *, parity_clauses=True):
    """Solver plus encoding for all partners of the given first sequence.

    The parity clauses are redundant with the callback and exist to prune;
    disabling them must not change the solution set.
    """
    a = tuple(e & 3 for e in first)
    n = len(a)
    if n == 0:
        raise ValueError("first sequence must be non-empty")
    targets = tuple(
        (-re, -im) for re, im in (core.autocorr(a, s) for s in range(1, n))
    )
    enc = PartnerEncoding(length=n, first=a, targets=targets)

    solver = progsat.Solver(2 * n)
    solver.add_clause((-1,))  # leading entry pinned to 1
    solver.add_clause((-2,))
    if parity_clauses:
        # shift n-1 fixes whether b_0 and b_{n-1} lie in the same parity
        # class; shrinking the shift walks the same constraint inward
        for k in range(n // 2):
            j = n - 1 - k
            p, q = 2 * k + 1, 2 * j + 1  # DIMACS vars of the imaginary bits
            if (a[k] ^ a[j]) & 1:
                solver.add_clause((p, q))
                solver.add_clause((-p, -q))
            else:
                solver.add_clause((p, -q))
                solver.add_clause((-p, q))

    order = []
    lo, hi = 0, n - 1
    while lo <= hi:
        order.extend((2 * lo, 2 * lo + 1))
        if hi != lo:
            order.extend((2 * hi, 2 * hi + 1))
        lo += 1
        hi -= 1
    solver.set_branch_order(order)
    return solver, enc


def _veto_clause(n, shift, values):
    """Block the current values of every variable in the shift's support."""
    lits = []
    for k in _support(n, shift):
        for var in (2 * k, 2 * k + 1):
            lits.append(-(var + 1) if values[var] else var + 1)
    return tuple(lits)


def golay_callback(enc, assignment):
    """Reference verdict for a partial partner assignment.

    Checks every shift whose support is fully assigned, scanning the whole
    assignment from scratch.  Returns one of the kernel's three verdicts.
    """
    n = enc.length
    exps = [None] * n
    assigned = 0
    for k in range(n):
        b0, b1 = assignment[2 * k], assignment[2 * k + 1]
        if b0 is None or b1 is None:
            continue
        exps[k] = decode_entry(b0, b1)
        assigned += 1
    for shift in range(n - 1, 0, -1):
        sup = _support(n, shift)
        if any(exps[k] is None for k in sup):
            continue
        re = im = 0
        for k in range(n - shift):
            e = (exps[k] - exps[k + shift]) & 3
            re += _RE[e]
            im += _IM[e]
        if (re, im) != enc.targets[shift - 1]:
            return progsat.Conflict(_veto_clause(n, shift, assignment))
    if assigned == n:
        return progsat.SOLUTION
    return progsat.NO_CONFLICT


class PartnerChecker:
    """Incremental form of golay_callback, synchronized with the trail.

    Completion counts per shift are maintained as entries become known; the
    supports are nested (shrinking the shift only adds positions), so the
    scan from the largest shift stops at the first incomplete one.  A shift
    already verified on this branch is skipped via a memo flag -- set only
    after a successful check, never on a veto, since a veto unwinds the
    trail and the same shift must be re-examined on the next branch.
    """

    def __init__(self, enc):
        n = enc.length
        self._n = n
        self._targets = enc.targets
        self._bits = [-1] * (2 * n)
        self._exps = [0] * n
        self._known = [False] * n
        # shift s touches position k iff s <= max(k, n-1-k)
        self._max_shift = [max(k, n - 1 - k) for k in range(n)]
        self._complete = [0] * n  # known positions in support(s), index s
        self._size = [0] + [min(n, 2 * (n - s)) for s in range(1, n)]
        self._checked = [False] * n
        self._shadow = []  # copy of the absorbed trail prefix

    def on_backtrack(self, new_len):
        shadow = self._shadow
        bits, known = self._bits, self._known
        while len(shadow) > new_len:
            var = shadow.pop()
            bits[var] = -1
            k = var >> 1
            if known[k]:
                known[k] = False
                for s in range(1, self._max_shift[k] + 1):
                    self._complete[s] -= 1
                    self._checked[s] = False

    def _sync(self, solver):
        trail, val = solver.trail, solver._val
        shadow = self._shadow
        if len(shadow) > len(trail):
            raise RuntimeError("trail unwound without an on_backtrack notification")
        bits, known = self._bits, self._known
        for i in range(len(shadow), len(trail)):
            var = trail[i]
            shadow.append(var)
            bits[var] = val[var]
            k = var >> 1
            if not known[k] and bits[2 * k] >= 0 and bits[2 * k + 1] >= 0:
                known[k] = True
                self._exps[k] = bits[2 * k] + 2 * bits[2 * k + 1]
                for s in range(1, self._max_shift[k] + 1):
                    self._complete[s] += 1

    def __call__(self, solver):
        self._sync(solver)
        n = self._n
        exps = self._exps
        shift = n - 1
        while shift >= 1 and self._complete[shift] == self._size[shift]:
            if not self._checked[shift]:
                re = im = 0
                for k in range(n - shift):
                    e = (exps[k] - exps[k + shift]) & 3
                    re += _RE[e]
                    im += _IM[e]
                if (re, im) != self._targets[shift - 1]:
                    return progsat.Conflict(
                        _veto_clause(n, shift, solver.assignment())
                    )
                self._checked[shift] = True
            shift -= 1
        if len(solver.trail) == 2 * n:
            return progsat.SOLUTION
        return progsat.NO_CONFLICT


def find_partners(first, *, incremental=True, parity_clauses=True):
    """All partner sequences of the given first member, sorted by exponents.

    Every reported partner is re-verified against the full pair condition
    with exact arithmetic before being returned.
    """
    solver, enc = build_instance(first, parity_clauses=parity_clauses)
    if incremental:
        callback = PartnerChecker(enc)
    else:
        callback = lambda s: golay_callback(enc, s.assignment())
    partners = []
    for snapshot in solver.solve_all(callback):
        b = decode_assignment(enc, snapshot)
        if not core.is_golay_pair((enc.first, b)):
            raise RuntimeError(
                f"search produced a non-partner {b!r} for {enc.first!r}"
            )
        partners.append(b)
    return sorted(partners)
