"""Exact-rational charge accounting over a triangulation.

Every vertex starts with charge 6 - deg(v); the total is 6n - 2m, which is
12 for a triangulated sphere.  Two local rules then move charge along
edges, and since moving preserves the total, some vertex always ends up
positive.  The point of the exercise: around a positive vertex the catalog
is guaranteed to bite, so a matcher that comes up empty on a min-degree-5
graph contradicts the audit and one of the two is broken.

Transfers sent by a degree-5 vertex (rule A): 1/3 to each degree-7
neighbor, 1/2 to each degree-8 neighbor, and the larger of 1/3 and
r/|N9| to each neighbor of degree 9 or more, where r is 1 minus the
shares already pledged to the 7s and 8s.  Nothing goes out on the third
leg when there is no such neighbor; r may be negative, the floor of 1/3
applies regardless.

Transfers sent by a degree-7 vertex whose link holds exactly four
degree-5 vertices (rule B): if those four sit consecutively, the two ends
of the run receive 1/6 each; otherwise each 9-or-more link member whose
two link flanks are both degree-5 receives 1/3.

All amounts are fractions with denominators dividing 360; the arithmetic
is exact and the sum is asserted, never trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


class SumMismatch(RuntimeError):
    """Final charges do not add up to 6n - 2m; arithmetic corruption."""


@dataclass
class ChargeLedger:
    """Initial charges, the transfer map, and the expected grand total."""

    initial: dict  # vertex -> int, 6 - deg
    transfers: dict  # (sender, receiver) -> Fraction, nonzero entries only
    expected: int  # 6n - 2m

    def sent(self, v):
        return sum(
            (a for (s, _), a in self.transfers.items() if s == v),
            Fraction(0),
        )

    def received(self, v):
        return sum(
            (a for (_, r), a in self.transfers.items() if r == v),
            Fraction(0),
        )


def _shares_from_five(degrees):
    """Rule A shares, keyed by link position, for one degree-5 sender."""
    shares = {}
    heavy = []
    r = Fraction(1)
    for i, d in enumerate(degrees):
        if d == 7:
            shares[i] = THIRD
            r -= THIRD
        elif d == 8:
            shares[i] = HALF
            r -= HALF
        elif d >= 9:
            heavy.append(i)
    if heavy:
        each = max(THIRD, r / len(heavy))
        for i in heavy:
            shares[i] = each
    return shares


def _shares_from_seven(degrees):
    """Rule B shares, keyed by link position, for one degree-7 sender."""
    k = len(degrees)
    fives = {i for i, d in enumerate(degrees) if d == 5}
    if len(fives) != 4:
        return {}
    for start in range(k):
        if all((start + j) % k in fives for j in range(4)):
            return {start: SIXTH, (start + 3) % k: SIXTH}
    shares = {}
    for i, d in enumerate(degrees):
        if d >= 9 and (i - 1) % k in fives and (i + 1) % k in fives:
            shares[i] = THIRD
    return shares


def transfers(g):
    """Apply both rules across g and return the resulting ledger."""
    moved = {}
    for v in g.vertices():
        link = g.rotation[v]
        d = len(link)
        if d == 5:
            shares = _shares_from_five([g.degree(u) for u in link])
        elif d == 7:
            shares = _shares_from_seven([g.degree(u) for u in link])
        else:
            continue
        for i, amount in shares.items():
            moved[(v, link[i])] = amount
    initial = {v: 6 - g.degree(v) for v in g.vertices()}
    return ChargeLedger(initial, moved, 6 * g.n - 2 * g.m)


def final_charges(ledger):
    """Settle the ledger: charge minus sent plus received, per vertex.

    The grand total must come back to the ledger's expected value exactly,
    and every stored fraction must have denominator dividing 360.
    """
    flow = {v: Fraction(0) for v in ledger.initial}
    for (s, r), amount in ledger.transfers.items():
        flow[s] -= amount
        flow[r] += amount
    charges = {v: c + flow[v] for v, c in ledger.initial.items()}
    total = sum(charges.values(), Fraction(0))
    if total != ledger.expected:
        raise SumMismatch(f"charges total {total}, expected {ledger.expected}")
    assert all(c.denominator and 360 % c.denominator == 0 for c in charges.values())
    return charges


@dataclass(frozen=True)
class AuditReport:
    charges: dict  # vertex -> Fraction
    total: Fraction
    positives: tuple  # vertices with positive final charge, ascending
    min_degree: int
    inconsistent: bool


def audit(g, matched=True):
    """Settle charges and judge them against the matcher's verdict.

    Somebody ends up positive (the total is positive), and near a positive
    vertex of a min-degree-5 triangulation a configuration must occur.  So
    a failed match on such a graph flags the report as inconsistent.
    """
    charges = final_charges(transfers(g))
    positives = tuple(sorted(v for v, c in charges.items() if c > 0))
    min_degree = min((g.degree(v) for v in g.vertices()), default=0)
    return AuditReport(
        charges=charges,
        total=sum(charges.values(), Fraction(0)),
        positives=positives,
        min_degree=min_degree,
        inconsistent=min_degree >= 5 and not matched,
    )
