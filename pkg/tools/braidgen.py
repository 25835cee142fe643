"""Gauss codes from braid closures and 4-plat closures.

Used by the table-building tooling: braid words give reliable signed
Gauss codes because every crossing of a braid diagram (all strands
descending) has sign equal to the generator's sign, and the closure
arcs add no crossings.  Plat closures reuse the same crossing grid but
trace strands in both vertical directions, so crossing signs are
computed from the traversal directions through each crossing.
"""

from __future__ import annotations


def _braid_events(width, word):
    """Simulate the braid: returns per-crossing data and strand paths.

    Each letter +-i creates one crossing between the strands currently
    at positions i, i+1 (1-based).  Returns a list of events
    (time, pos_left_strand_id, pos_right_strand_id, letter) and the
    final permutation mapping top position -> bottom position.
    """
    at = list(range(width))  # at[p-1] = strand id currently at position p
    events = []
    for time, letter in enumerate(word):
        i = abs(letter)
        if not 1 <= i < width:
            raise ValueError(f"letter {letter} out of range for width {width}")
        left, right = at[i - 1], at[i]
        events.append((time, left, right, letter))
        at[i - 1], at[i] = right, left
    return events, at


def braid_gauss_code(width, word):
    """Signed Gauss code of the closure of a braid word.

    word: sequence of nonzero ints, +-i for sigma_i^{+-1}; sigma_i
    positive means the strand at position i passes over position i+1.
    Returns None when the closure has more than one component.
    """
    events, at = _braid_events(width, word)
    # passages[s] = ordered list of (crossing_id, "O"/"U", sign) for strand s
    passages = {s: [] for s in range(width)}
    for time, left, right, letter in events:
        sign = 1 if letter > 0 else -1
        over, under = (left, right) if letter > 0 else (right, left)
        passages[over].append((time, "O", sign))
        passages[under].append((time, "U", sign))

    # closure: bottom of strand occupying position p joins top position p.
    # strand ids are their top positions; at[p-1] is the id ending at p.
    next_strand = {}
    for p in range(width):
        next_strand[at[p]] = p

    order = []
    s = 0
    while True:
        order.extend(passages[s])
        s = next_strand[s]
        if s == 0:
            break
    if len(order) != 2 * len(word):
        return None  # closure is a link, not a knot

    labels = {}
    out = []
    for time, ou, sign in order:
        if time not in labels:
            labels[time] = len(labels) + 1
        out.append(f"{ou}{labels[time]}{'+' if sign > 0 else '-'}")
    return "".join(out)


def plat_gauss_code(word, width=4):
    """Signed Gauss code of the plat closure of an even-width braid.

    Top and bottom caps join positions (1,2), (3,4), ...; strands are
    traced through the crossing grid in both directions, and each
    crossing's sign is computed from the two traversal directions:
    with ports NW,NE,SW,SE, a crossing whose over-strand runs NW-SE is
    sigma-positive, and reversing exactly one strand flips the sign.
    Returns None when the plat closes into a link.
    """
    if width % 2:
        raise ValueError("plat closure needs even width")
    events, at = _braid_events(width, word)
    # grid wiring: node = (time, position); strand segments connect nodes
    # vertically between events.  We walk ports: (time_index, position,
    # direction) with direction +1 = downward.  For tracing we treat the
    # braid as a sequence of levels 0..len(word); positions carry through
    # levels except at their event.
    word = list(word)
    L = len(word)

    def step(pos, level, down):
        """Advance through one level; returns (passage or None, pos, level)."""
        lev = level if down else level - 1
        if not 0 <= lev < L:
            return None, pos, level + (1 if down else -1)
        letter = word[lev]
        i = abs(letter)
        passage = None
        if pos in (i, i + 1):
            # participate in crossing lev
            going_left = (pos == i + 1)
            # over iff: positive letter and strand enters at position i
            # (NW port going down, or SE port going up); under otherwise.
            enters_left = (pos == i) if down else (pos == i + 1)
            over = (letter > 0) == enters_left
            passage = (lev, over, down, enters_left)
            pos = i + 1 if pos == i else i
        return passage, pos, level + (1 if down else -1)

    # trace the knot starting at top cap of positions (1,2): go down pos 1
    start = (1, 0, True)
    pos, level, down = start
    passages = []
    visited_steps = 0
    while True:
        passage, pos, level = step(pos, level, down)
        if passage is not None:
            passages.append(passage)
        visited_steps += 1
        if visited_steps > 20 * (L + width) + 100:
            return None  # safety: wedged trace
        if down and level == L:
            # bottom cap: position p joins its partner, then goes up
            partner = pos - 1 if pos % 2 == 0 else pos + 1
            pos, down = partner, False
        elif not down and level == 0:
            partner = pos - 1 if pos % 2 == 0 else pos + 1
            pos, down = partner, True
            if (pos, level, down) == start:
                break

    if len(passages) != 2 * L:
        return None  # link, or trace closed early

    # directions per crossing: first/second passage; compute sign.
    # With both strands downward, sign = +1 for positive letters.
    # Reversing exactly one strand flips the sign.
    by_crossing = {}
    for lev, over, downdir, enters_left in passages:
        by_crossing.setdefault(lev, []).append((over, downdir))
    labels = {}
    out = []
    for lev, over, downdir, enters_left in passages:
        (o1, d1), (o2, d2) = by_crossing[lev]
        base = 1 if word[lev] > 0 else -1
        sign = base if (d1 == d2) else -base
        if lev not in labels:
            labels[lev] = len(labels) + 1
        out.append(f"{'O' if over else 'U'}{labels[lev]}{'+' if sign > 0 else '-'}")
    return "".join(out)
