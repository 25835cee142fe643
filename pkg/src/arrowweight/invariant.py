"""The arrow-weight enhancement of the biquandle counting invariant.

For a colored diagram, every unordered pair of crossing arrows with
color pairs p, q and signs e, e' contributes e * e' * phi(p, q); the
signed total mod m is the coloring's weight sum.  Collecting weight
sums over the whole homset gives a multiset of residues -- the
invariant value -- rendered either as a residue-multiplicity mapping or
as a polynomial in u (u^0 terms appear as bare integers, e.g. "2u^4",
"19+4u+4u^2").
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import enumerate_colorings, extract_pairs
from .errors import DimensionError
from .gauss import crossing_pairs

__all__ = [
    "InvariantValue",
    "weight_sum",
    "weight_sum_terms",
    "compute_invariant",
    "counting_invariant",
]


@dataclass(frozen=True)
class InvariantValue:
    """Multiset of weight sums: counts[r] colorings hit residue r."""

    m: int
    counts: tuple  # sorted (residue, multiplicity) pairs

    @property
    def total(self):
        return sum(mult for _, mult in self.counts)

    def as_dict(self):
        return dict(self.counts)

    def multiset(self):
        """The raw multiset, as a sorted tuple of residues."""
        out = []
        for r, mult in self.counts:
            out.extend([r] * mult)
        return tuple(out)

    def polynomial(self):
        """Render as a polynomial in u with ascending exponents."""
        terms = []
        for e, mult in self.counts:
            if e == 0:
                terms.append(str(mult))
            elif e == 1:
                terms.append("u" if mult == 1 else f"{mult}u")
            else:
                terms.append(f"u^{e}" if mult == 1 else f"{mult}u^{e}")
        return "+".join(terms) if terms else "0"

    def __str__(self):
        return self.polynomial()


def weight_sum_terms(d, b, w, c):
    """Signed phi contributions of one coloring, one per crossing pair.

    Returns a list of ((i, j), term) with i < j and
    term = sign_i * sign_j * phi(pair_i, pair_j), not yet reduced mod m;
    useful for reproducing worked computations term by term.
    """
    if w.n != b.n:
        raise DimensionError(
            f"tensor is over {w.n} elements, biquandle has {b.n}")
    pairs = extract_pairs(d, b, c)
    terms = []
    for i, j in crossing_pairs(d):
        xi, yi, si = pairs[i]
        xj, yj, sj = pairs[j]
        terms.append(((i, j), si * sj * w.lookup((xi, yi), (xj, yj))))
    return terms


def weight_sum(d, b, w, c):
    """The weight sum of one coloring, reduced mod m."""
    return sum(t for _, t in weight_sum_terms(d, b, w, c)) % w.m


def compute_invariant(d, b, w):
    """The invariant value of d: weight-sum multiset over all colorings."""
    tally = {}
    for c in enumerate_colorings(d, b):
        r = weight_sum(d, b, w, c)
        tally[r] = tally.get(r, 0) + 1
    return InvariantValue(w.m, tuple(sorted(tally.items())))


def counting_invariant(d, b):
    """The baseline homset cardinality."""
    return len(enumerate_colorings(d, b))
