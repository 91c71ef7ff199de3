"""Rank predictions for small graphs and the girth-rank bound checker.

The bound: a connected quaternion unit gain graph that is not a tree, with
girth g and adjacency rank r, has g <= r + 2.  Equality holds exactly when g is
even and the graph is either a g-cycle with gain (-1)^(g/2), or complete
bipartite with both parts of order >= 2 and every 4-cycle of gain 1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernel
from .gain_graph import (GainGraph, GraphError, adjacency_matrix, cycle_gain, gain_of,
                         normalized_cycle, walk_gain)
from .graph_metrics import (all_cycles_up_to, bipartition, complete_bipartite_parts, girth,
                            is_connected)
from .qlinalg import rank_exact
from .quaternion import (ONE, Q8, Quaternion, UnitQuaternion, conjugate, is_real, multiply,
                         rational_unit_from_vector, real_part)

log = logging.getLogger(__name__)

MAX_ENUMERATION_N = 7


class GirthUndefinedError(GraphError):
    """The underlying graph is a tree, so it has no girth."""


class BudgetExceededError(RuntimeError):
    pass


# -- paths and cycles ------------------------------------------------------

class CycleGainClass(str, Enum):
    EVEN_MATCHING_SIGN = "even_matching_sign"
    EVEN_OTHER = "even_other"
    ODD_REAL_PART_NONZERO = "odd_real_part_nonzero"
    ODD_REAL_PART_ZERO = "odd_real_part_zero"


@dataclass(frozen=True)
class CycleRankCase:
    n: int
    gain_class: CycleGainClass
    predicted_rank: int


def sign_power(n: int) -> int:
    """(-1)^(n/2) for even n."""
    return 1 if (n // 2) % 2 == 0 else -1


def predicted_path_rank(n: int) -> int:
    if n < 1:
        raise ValueError("a path has at least one vertex")
    return n - 1 if n % 2 else n


def predicted_cycle_rank(n: int, cycle_gain: Quaternion) -> CycleRankCase:
    if n < 3:
        raise ValueError("a cycle has at least three vertices")
    if n % 2 == 0:
        if cycle_gain == sign_power(n):
            return CycleRankCase(n, CycleGainClass.EVEN_MATCHING_SIGN, n - 2)
        return CycleRankCase(n, CycleGainClass.EVEN_OTHER, n)
    if real_part(cycle_gain) != 0:
        return CycleRankCase(n, CycleGainClass.ODD_REAL_PART_NONZERO, n)
    return CycleRankCase(n, CycleGainClass.ODD_REAL_PART_ZERO, n - 1)


def graph_rank(g: GainGraph) -> int:
    return rank_exact(adjacency_matrix(g)).rank


def verify_cycle_recursion(n: int, h: Quaternion) -> bool:
    """rank C_n(h) == 2 + rank C_{n-2}(-h), both sides by exact elimination."""
    if n < 5:
        raise ValueError("the recursion needs n >= 5")
    return graph_rank(normalized_cycle(n, h)) == 2 + graph_rank(normalized_cycle(n - 2, -h))


def pendant_cycle(n: int, gains: Optional[Sequence[Quaternion]] = None) -> GainGraph:
    """n-cycle on 0..n-1 (gains[i] on step i -> i+1) plus pendant vertex n on 0."""
    gains = list(gains) if gains is not None else [ONE] * (n + 1)
    if len(gains) != n + 1:
        raise ValueError(f"need {n + 1} gains, got {len(gains)}")
    edges = [(i, (i + 1) % n, gains[i]) for i in range(n)]
    edges.append((0, n, gains[n]))
    return GainGraph(n + 1, edges)


def verify_pendant_cycle(n: int, gains: Optional[Sequence[Quaternion]] = None) -> bool:
    if n < 3:
        raise ValueError("the cycle needs n >= 3")
    r = graph_rank(pendant_cycle(n, gains))
    return r == 2 + predicted_path_rank(n - 1) and r >= n


# -- extremal families -----------------------------------------------------

def generate_extremal_cycle(g_even: int) -> GainGraph:
    if g_even < 4 or g_even % 2:
        raise ValueError("extremal cycles have even length >= 4")
    return normalized_cycle(g_even, Quaternion(sign_power(g_even)))


def generate_extremal_complete_bipartite(p: int, q: int, row_units: Sequence[Quaternion],
                                         col_units: Sequence[Quaternion]) -> GainGraph:
    """K_{p,q} on parts 0..p-1 and p..p+q-1 with gain(x_i -> y_j) = u_i v_j.

    Every 4-cycle x1 y1 x2 y2 then has gain u1 v1 (u2 v1)* u2 v2 (u1 v2)* = 1,
    and the off-diagonal block is the rank-one product u v^T.
    """
    if p < 2 or q < 2:
        raise ValueError("both parts need order >= 2")
    if len(row_units) != p or len(col_units) != q:
        raise ValueError(f"expected {p} row units and {q} column units")
    return GainGraph(p + q, [(i, p + j, multiply(UnitQuaternion.of(u), UnitQuaternion.of(v)))
                             for i, u in enumerate(row_units) for j, v in enumerate(col_units)])


def random_q8_unit(rng) -> UnitQuaternion:
    return Q8[int(rng.integers(8))]


def random_rational_unit(rng, span: int = 3, max_den: int = 3) -> UnitQuaternion:
    x, y, z = (Fraction(int(rng.integers(-span, span + 1)), int(rng.integers(1, max_den + 1)))
               for _ in range(3))
    return rational_unit_from_vector(x, y, z)


def random_unit(rng) -> UnitQuaternion:
    """Q8 element or rational unit, evenly."""
    return random_q8_unit(rng) if rng.integers(2) else random_rational_unit(rng)


# -- bipartite rank-two characterization -----------------------------------

def four_cycles_all_one(g: GainGraph) -> bool:
    return all(cycle_gain(g, c) == ONE for c in all_cycles_up_to(g, 4) if len(c) == 4)


def verify_bipartite_rank2_characterization(g: GainGraph) -> bool:
    """(rank == 2) iff (complete bipartite and every 4-cycle has gain 1).

    Also checks, for complete bipartite input, that the 4-cycle x1 y1 x2 y2
    has gain c1 c2* with c_t = gain(x1 y_t) gain(x2 y_t)*, and that the 4-cycle
    condition agrees with c1 == c2 over all pairs.
    """
    report = bipartition(g)
    if not report.is_bipartite:
        raise GraphError("graph is not bipartite")
    rank_side = graph_rank(g) == 2
    parts = complete_bipartite_parts(g)
    structure_side = parts is not None and four_cycles_all_one(g)
    if parts is not None:
        X, Y = parts
        algebra_side = True
        for x1, x2 in combinations(X, 2):
            for y1, y2 in combinations(Y, 2):
                c1 = multiply(gain_of(g, x1, y1), conjugate(gain_of(g, x2, y1)))
                c2 = multiply(gain_of(g, x1, y2), conjugate(gain_of(g, x2, y2)))
                if walk_gain(g, [x1, y1, x2, y2, x1]) != multiply(c1, conjugate(c2)):
                    return False
                algebra_side = algebra_side and c1 == c2
        if algebra_side != structure_side:
            return False
    return rank_side == structure_side


# -- the bound -------------------------------------------------------------

class EqualityCase(str, Enum):
    NONE = "none"
    CYCLE = "cycle"
    COMPLETE_BIPARTITE = "complete_bipartite"
    BOTH = "both"


@dataclass(frozen=True)
class TheoremReport:
    g: int
    r: int
    bound_holds: bool
    equality: bool
    equality_case: EqualityCase
    characterization_holds: bool = True  # equality <=> one of the two descriptions

    @property
    def ok(self) -> bool:
        return self.bound_holds and self.characterization_holds

    def to_dict(self) -> dict:
        d = {"g": self.g, "r": self.r, "bound_holds": self.bound_holds,
             "equality": self.equality, "characterization_holds": self.characterization_holds}
        if self.equality_case is not EqualityCase.NONE:
            d["case"] = self.equality_case.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremReport":
        return cls(d["g"], d["r"], d["bound_holds"], d["equality"],
                   EqualityCase(d.get("case", "none")), d.get("characterization_holds", True))


def is_extremal_cycle(g: GainGraph, girth_value: int) -> bool:
    """The graph is one even g-cycle whose gain is exactly (-1)^(g/2).

    (-1)^(g/2) is real and central, so comparing it with the gain from any
    start and direction gives the same answer.
    """
    if girth_value % 2 or g.n != girth_value or len(g.edges) != g.n:
        return False
    if any(len(nb) != 2 for nb in g.adj):
        return False
    cyc = [0]
    prev = None
    while len(cyc) < g.n:
        nxt = next(w for w in g.adj[cyc[-1]] if w != prev)
        prev = cyc[-1]
        cyc.append(nxt)
    h = cycle_gain(g, cyc)
    return is_real(h) and real_part(h) == sign_power(girth_value)


def is_extremal_complete_bipartite(g: GainGraph) -> bool:
    parts = complete_bipartite_parts(g)
    if parts is None or min(len(parts[0]), len(parts[1])) < 2:
        return False
    return four_cycles_all_one(g)


def check_theorem(g: GainGraph) -> TheoremReport:
    if g.n < 1 or not is_connected(g):
        raise GraphError("the bound is stated for connected graphs")
    gr = girth(g)
    if gr.acyclic:
        raise GirthUndefinedError("graph is a tree; girth undefined")
    gv = gr.girth
    r = graph_rank(g)
    case_cycle = is_extremal_cycle(g, gv)
    case_bip = is_extremal_complete_bipartite(g)
    equality = gv == r + 2
    if not equality:
        case = EqualityCase.NONE
    elif case_cycle and case_bip:
        case = EqualityCase.BOTH
    elif case_cycle:
        case = EqualityCase.CYCLE
    elif case_bip:
        case = EqualityCase.COMPLETE_BIPARTITE
    else:
        case = EqualityCase.NONE
    return TheoremReport(
        g=gv, r=r, bound_holds=gv <= r + 2, equality=equality, equality_case=case,
        characterization_holds=equality == (gv % 2 == 0 and (case_cycle or case_bip)),
    )


# -- enumeration -----------------------------------------------------------

@dataclass(frozen=True)
class Q8Exhaustive:
    """Every Q8 gain assignment while 8^|E| fits the budget, else seeded samples."""

    downgrade_samples: int = 50
    seed: int = 0


@dataclass(frozen=True)
class Q8Sampled:
    count: int
    seed: int


@dataclass(frozen=True)
class RationalUnitSampled:
    count: int
    seed: int


@dataclass(frozen=True)
class Violation:
    instance: str
    reason: str


@dataclass(frozen=True)
class EqualityInstance:
    instance: str
    report: TheoremReport


@dataclass
class EnumerationSummary:
    instances_checked: int = 0
    graphs_checked: int = 0
    exhaustive_graphs: int = 0
    sampled_graphs: int = 0
    violations: list = field(default_factory=list)
    equality_instances: list = field(default_factory=list)

    def merge(self, other: "EnumerationSummary") -> "EnumerationSummary":
        out = EnumerationSummary(
            self.instances_checked + other.instances_checked,
            self.graphs_checked + other.graphs_checked,
            self.exhaustive_graphs + other.exhaustive_graphs,
            self.sampled_graphs + other.sampled_graphs,
            self.violations + other.violations,
            self.equality_instances + other.equality_instances,
        )
        out.canonicalize()
        return out

    def canonicalize(self):
        self.violations.sort(key=lambda v: (v.instance, v.reason))
        self.equality_instances.sort(key=lambda e: e.instance)

    def case_counts(self) -> dict:
        counts = {c.value: 0 for c in EqualityCase}
        for e in self.equality_instances:
            counts[e.report.equality_case.value] += 1
        return counts

    def to_dict(self, include_instances: bool = False) -> dict:
        d = {
            "instances_checked": self.instances_checked,
            "graphs_checked": self.graphs_checked,
            "exhaustive_graphs": self.exhaustive_graphs,
            "sampled_graphs": self.sampled_graphs,
            "violations": len(self.violations),
            "equality": len(self.equality_instances),
            "equality_cases": self.case_counts(),
        }
        if self.violations:
            d["violation_details"] = [{"instance": v.instance, "reason": v.reason}
                                      for v in self.violations]
        if include_instances:
            d["equality_instances"] = [dict(e.report.to_dict(), instance=e.instance)
                                       for e in self.equality_instances]
        return d


_Q8_MUL = np.array([[Q8.index(multiply(a, b)) for b in Q8] for a in Q8], dtype=np.uint8)
_Q8_CONJ = np.array(kernel.Q8_CONJ, dtype=np.uint8)
_CHUNK = 4096


def _edges_of_mask(n: int, mask: int) -> list:
    return [uv for b, uv in enumerate(kernel.pair_list(n)) if mask >> b & 1]


def _gain_graph_from_digits(n: int, edges: list, digits) -> GainGraph:
    return GainGraph(n, [(u, v, Q8[int(d)]) for (u, v), d in zip(edges, digits)])


def _q8_cycle_gains(edges: list, digits: np.ndarray, cycle: Sequence[int]) -> np.ndarray:
    # Q8 index of the closed-walk gain around ``cycle``, one per digit row
    pos = {e: k for k, e in enumerate(edges)}
    acc = np.zeros(digits.shape[0], dtype=np.uint8)
    closed = list(cycle) + [cycle[0]]
    for a, b in zip(closed, closed[1:]):
        d = digits[:, pos[(min(a, b), max(a, b))]]
        step = d if a < b else _Q8_CONJ[d]
        acc = _Q8_MUL[acc, step]
    return acc


def _q8_case_mask(n: int, girth_value: int, probe: GainGraph, edges: list,
                  digits: np.ndarray) -> np.ndarray:
    """Which assignments satisfy one of the two equality descriptions."""
    mask = np.zeros(digits.shape[0], dtype=bool)
    if girth_value % 2 == 0 and n == girth_value and len(edges) == n:
        target = Q8.index(Quaternion(sign_power(girth_value)))
        mask |= _q8_cycle_gains(edges, digits, list(girth(probe).witness_cycle)) == target
    parts = complete_bipartite_parts(probe)
    if parts is not None and min(len(parts[0]), len(parts[1])) >= 2:
        ok = np.ones(digits.shape[0], dtype=bool)
        for c in all_cycles_up_to(probe, 4):
            ok &= _q8_cycle_gains(edges, digits, c) == 0
        mask |= ok
    return mask


def _exhaustive_digits(indices: np.ndarray, n_edges: int) -> np.ndarray:
    t = np.asarray(indices, dtype=np.int64)[:, None]
    return ((t >> (3 * np.arange(n_edges, dtype=np.int64))) & 7).astype(np.uint8)


def _may_be_extremal(n: int, gv: int, n_edges: int) -> bool:
    # necessary conditions for either description; cheap prefilter
    if gv % 2 == 0 and n == gv and n_edges == n:
        return True
    return gv == 4 and any(n_edges == p * (n - p) for p in range(2, n - 1))


def _audit_q8(summary: EnumerationSummary, n: int, gv: int, edges: list, ranks: np.ndarray,
              digits_at, offset: int = 0):
    """Bound and characterization on a block of Q8 instances of one graph.

    ``digits_at(indices)`` returns the gain digits of the given block rows.
    """
    equality = ranks + 2 == gv
    if _may_be_extremal(n, gv, len(edges)):
        probe = GainGraph(n, edges)
        described = _q8_case_mask(n, gv, probe, edges, digits_at(np.arange(len(ranks))))
    else:
        described = np.zeros(len(ranks), dtype=bool)
    for t in np.flatnonzero(ranks + 2 < gv):
        inst = _gain_graph_from_digits(n, edges, digits_at([t])[0])
        summary.violations.append(Violation(inst.encode(), f"girth {gv} > rank {int(ranks[t])} + 2"))
    for t in np.flatnonzero(equality != described):
        inst = _gain_graph_from_digits(n, edges, digits_at([t])[0])
        summary.violations.append(Violation(
            inst.encode(), "equality does not match the extremal descriptions"))
    for t in np.flatnonzero(equality):
        inst = _gain_graph_from_digits(n, edges, digits_at([t])[0])
        _record_checked(summary, inst, expected_rank=int(ranks[t]))


def _record_checked(summary: EnumerationSummary, inst: GainGraph,
                    expected_rank: Optional[int] = None) -> TheoremReport:
    rep = check_theorem(inst)
    enc = inst.encode()
    if expected_rank is not None and rep.r != expected_rank:
        summary.violations.append(Violation(enc, f"kernel rank {expected_rank} != {rep.r}"))
    if not rep.bound_holds:
        summary.violations.append(Violation(enc, f"girth {rep.g} > rank {rep.r} + 2"))
    if not rep.characterization_holds:
        summary.violations.append(Violation(enc, "equality does not match the extremal descriptions"))
    if rep.equality:
        summary.equality_instances.append(EqualityInstance(enc, rep))
    return rep


def check_instances(graphs: Iterable[GainGraph]) -> EnumerationSummary:
    """Run :func:`check_theorem` on explicit instances."""
    summary = EnumerationSummary()
    for inst in graphs:
        _record_checked(summary, inst)
        summary.instances_checked += 1
        summary.graphs_checked += 1
    summary.canonicalize()
    return summary


def enumerate_and_check(max_n: int, gain_mode, *, min_n: int = 3, budget: int = 10 ** 7,
                        allow_downgrade: bool = True) -> EnumerationSummary:
    """Check the bound on every labeled connected non-tree graph with min_n..max_n vertices.

    Q8 modes compute ranks in the compiled kernel and audit every instance
    for the bound and for the equality characterization; each equality
    instance is then re-checked in full by :func:`check_theorem`.
    """
    if max_n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports n <= {MAX_ENUMERATION_N}")
    summary = EnumerationSummary()
    for n in range(max(min_n, 3), max_n + 1):
        masks, girths = kernel.scan_graphs(n)
        log.info("n=%d: %d connected graphs with a cycle", n, len(masks))
        if isinstance(gain_mode, RationalUnitSampled):
            _enumerate_rational(summary, n, masks, gain_mode)
        elif isinstance(gain_mode, (Q8Exhaustive, Q8Sampled)):
            _enumerate_q8(summary, n, masks, girths, gain_mode, budget, allow_downgrade)
        else:
            raise TypeError(f"unknown gain mode {gain_mode!r}")
    summary.canonicalize()
    return summary


def _enumerate_q8(summary, n, masks, girths, mode, budget, allow_downgrade):
    if isinstance(mode, Q8Exhaustive):
        samples, seed = mode.downgrade_samples, mode.seed
    else:
        samples, seed = mode.count, mode.seed
    rng = np.random.default_rng([seed, n])
    sampled = []
    block = 1 << 21
    for mask, gv in zip(masks.tolist(), girths.tolist()):
        n_edges = bin(mask).count("1")
        summary.graphs_checked += 1
        if not isinstance(mode, Q8Exhaustive) or 8 ** n_edges > budget:
            if isinstance(mode, Q8Exhaustive) and not allow_downgrade:
                raise BudgetExceededError(f"8^{n_edges} assignments exceed the budget {budget}")
            sampled.append((mask, gv))
            continue
        edges = _edges_of_mask(n, mask)
        total = 8 ** n_edges
        for start in range(0, total, block):
            stop = min(total, start + block)
            ranks = kernel.q8_ranks_exhaustive(n, mask, start, stop)
            summary.instances_checked += len(ranks)
            _audit_q8(summary, n, gv, edges, ranks,
                      lambda idx, s=start: _exhaustive_digits(np.asarray(idx) + s, n_edges))
        summary.exhaustive_graphs += 1

    width = n * (n - 1) // 2
    for lo in range(0, len(sampled), _CHUNK):
        chunk = sampled[lo:lo + _CHUNK]
        cmasks = np.array([m for m, _ in chunk], dtype=np.int64)
        cgirth = np.array([gv for _, gv in chunk], dtype=np.int64)
        choices = rng.integers(0, 8, size=(len(chunk), samples, width), dtype=np.uint8)
        ranks = kernel.q8_ranks_choices(n, cmasks, choices)
        summary.instances_checked += ranks.size
        summary.sampled_graphs += len(chunk)
        touched = set(np.flatnonzero((ranks + 2 <= cgirth[:, None]).any(axis=1)).tolist())
        for k, (mask, gv) in enumerate(chunk):
            n_edges = bin(mask).count("1")
            if k in touched or _may_be_extremal(n, gv, n_edges):
                edges = _edges_of_mask(n, mask)
                _audit_q8(summary, n, gv, edges, ranks[k],
                          lambda idx, k=k, e=n_edges: choices[k, idx, :e])


def _enumerate_rational(summary, n, masks, mode):
    rng = np.random.default_rng([mode.seed, n])
    for mask in masks.tolist():
        edges = _edges_of_mask(n, mask)
        for _ in range(mode.count):
            inst = GainGraph(n, [(u, v, random_rational_unit(rng)) for u, v in edges])
            _record_checked(summary, inst)
            summary.instances_checked += 1
        summary.sampled_graphs += 1
        summary.graphs_checked += 1
