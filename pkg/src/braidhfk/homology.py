"""Bigraded homology of the total complex over Q(t)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .alexander import LaurentPoly
from .field import laurent_rank


@dataclass
class PoincarePolynomial:
    """Rank table of the bigraded homology, keyed (Maslov m, Alexander s)."""

    entries: dict = field(default_factory=dict)  # (m, s) -> positive rank
    knot_name: str = ""

    def total_rank(self):
        return sum(self.entries.values())

    def sorted_entries(self):
        """Rows ordered by s descending, then m descending."""
        return sorted(self.entries.items(),
                      key=lambda kv: (-kv[0][1], -kv[0][0]))

    def to_json(self):
        return {
            "knot": self.knot_name,
            "ranks": [{"m": m, "s": s, "rank": r}
                      for (m, s), r in self.sorted_entries()],
            "euler": str(euler_characteristic(self)),
        }


def _as_int(x, what):
    if getattr(x, "denominator", 1) != 1:
        raise AssertionError(f"non-integer {what} grading {x} on a knot")
    return int(x)


def homology(total, knot_name=""):
    """Ranks of H(D) per (M, A') slice, over Q(t).

    Within a fixed A', rank H_M = dim C_M - rank D_M - rank D_(M+1) where
    D_M maps C_M into C_(M-1).
    """
    ranks = {}
    rank_cache = {}

    def rank_of(key):
        if key not in rank_cache:
            if key in total.differential:
                # copy the cached Laurent rows; elimination consumes them
                rows = [{c: dict(p) for c, p in r.items()}
                        for r in total.lau_rows(key)]
                rank_cache[key] = laurent_rank(rows)
            else:
                rank_cache[key] = 0
        return rank_cache[key]

    for (aprime, m), elements in total.basis.items():
        h = len(elements) - rank_of((aprime, m)) - rank_of((aprime, m + 1))
        if h:
            ranks[(_as_int(m, "Maslov"), _as_int(aprime, "Alexander"))] = h
    return PoincarePolynomial(ranks, knot_name)


def euler_characteristic(p):
    """Signed generating function sum (-1)^m rank T^s."""
    out = LaurentPoly()
    for (m, s), r in p.entries.items():
        out = out + LaurentPoly.term(s, r if m % 2 == 0 else -r)
    return out


def text_table(p):
    lines = [f"knot: {p.knot_name}" if p.knot_name else "knot: (unnamed)",
             "note: ranks over Q(t); integral torsion is invisible",
             "  s    m   rank"]
    for (m, s), r in p.sorted_entries():
        lines.append(f"{s:>3} {m:>4} {r:>6}")
    lines.append(f"euler: {euler_characteristic(p)}")
    return "\n".join(lines)
