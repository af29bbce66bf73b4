"""The five smooth toric del Pezzo degrees and their floor-diagram data.

Families and parameter conventions follow the dual polygons: the plane of
degree d, the quadric of bidegree (a1, a2), and the blowups of the plane
in one, two or three points.  Derived data: the number of point
conditions n, the white-vertex (floor) count with its leak budget, and
the incoming/outgoing vertical end counts.
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidDegree(ValueError):
    pass


@dataclass(frozen=True)
class DegreeSpec:
    family: str                 # "p2" | "p1xp1" | "bl1" | "bl2" | "bl3"
    params: tuple[int, ...]

    def __post_init__(self):
        f, p = self.family, self.params
        if any(x < 1 for x in p):
            raise InvalidDegree(f"parameters must be positive: {self}")
        if f == "p2":
            if len(p) != 1:
                raise InvalidDegree("p2 takes one parameter d")
        elif f == "p1xp1":
            if len(p) != 2:
                raise InvalidDegree("p1xp1 takes (a1, a2)")
        elif f == "bl1":
            if len(p) != 2 or p[1] > p[0]:
                raise InvalidDegree("bl1 takes (d, a1) with a1 <= d")
        elif f == "bl2":
            if len(p) != 3:
                raise InvalidDegree("bl2 takes (d, a1, a2)")
            d, a1, a2 = p
            if a1 < a2 or a1 + a2 > d:
                raise InvalidDegree("bl2 needs a1 >= a2 and a1 + a2 <= d")
        elif f == "bl3":
            if len(p) != 4:
                raise InvalidDegree("bl3 takes (d, a1, a2, a3)")
            d, a1, a2, a3 = p
            if a1 < a2 or a1 + a2 > d or a1 + a3 > d or a2 + a3 > d:
                raise InvalidDegree(
                    "bl3 needs a1 >= a2, a1+a2 <= d, a1+a3 <= d, a2+a3 <= d")
        else:
            raise InvalidDegree(f"unknown family {f!r}")
        if n_delta(self) < 1:
            raise InvalidDegree(f"n(degree) < 1: {self}")

    def __str__(self):
        return f"{self.family}:{','.join(map(str, self.params))}"


def parse_degree(text: str) -> DegreeSpec:
    """Parse "p2:d", "p1xp1:a1,a2", "bl1:d,a1", "bl2:d,a1,a2", "bl3:d,a1,a2,a3"."""
    try:
        family, rest = text.strip().lower().split(":", 1)
        params = tuple(int(x) for x in rest.split(","))
    except ValueError as exc:
        raise InvalidDegree(f"cannot parse degree spec {text!r}") from exc
    return DegreeSpec(family, params)


def n_delta(spec: DegreeSpec) -> int:
    """Number of point conditions: boundary lattice points minus one."""
    p = spec.params
    if spec.family == "p2":
        return 3 * p[0] - 1
    if spec.family == "p1xp1":
        return 2 * (p[0] + p[1]) - 1
    if spec.family == "bl1":
        return 3 * p[0] - p[1] - 1
    if spec.family == "bl2":
        return 3 * p[0] - p[1] - p[2] - 1
    return 3 * p[0] - p[1] - p[2] - p[3] - 1


def white_spec(spec: DegreeSpec) -> tuple[int, tuple[int, ...]]:
    """(floor count, degree-level leak multiset, one entry per floor)."""
    p = spec.params
    if spec.family == "p2":
        d = p[0]
        return d, (1,) * d
    if spec.family == "p1xp1":
        return p[0], (0,) * p[0]
    if spec.family == "bl1":
        d, a1 = p
        return d, (0,) * a1 + (1,) * (d - a1)
    if spec.family == "bl2":
        d, a1, a2 = p
        return d, (-1,) * a2 + (0,) * (a1 - a2) + (1,) * (d - a1)
    d, a1, a2, a3 = p
    return d - a3, (-1,) * a2 + (0,) * (a1 - a2) + (1,) * (d - a1 - a3)


def leak_budget(spec: DegreeSpec) -> tuple[int, int]:
    """(number of floors carrying a -1 leak, number carrying a +1 leak)."""
    _, leaks = white_spec(spec)
    return sum(1 for v in leaks if v == -1), sum(1 for v in leaks if v == 1)


def end_spec(spec: DegreeSpec) -> tuple[int, int]:
    """(incoming, outgoing) vertical end counts."""
    p = spec.params
    if spec.family == "p2":
        return p[0], 0
    if spec.family == "p1xp1":
        return p[1], p[1]
    if spec.family == "bl1":
        return p[0] - p[1], 0
    if spec.family == "bl2":
        return p[0] - p[1] - p[2], 0
    return p[0] - p[1] - p[2], p[3]
