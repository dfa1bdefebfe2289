"""Code-configuration search against a residual-loss-rate target.

Two searches: the smallest n whose C(n, k) code meets a PLR target on a
given channel (PLR is monotone in n, so a linear upward scan finds the
minimum and yields the n-1 witness for free), and the number of excess
parity packets a partitioned code needs before its PLR comes within a
tolerance delta of the unpartitioned code's.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import MAX_CODE_LENGTH, CodeSpec
from .lossmodel import BecChannel, analytic_plr, partitioned_plr
from .partition import PartitionSpec, split, split_shape


class CapacityError(ValueError):
    """The search ran into the GF(256) codeword-length limit."""


@dataclass(frozen=True)
class PlanRequest:
    """What to plan: block length, channel, loss target, partitioning."""

    k: int
    ch: BecChannel
    plr_target: float = 1e-5
    delta: float = 0.001
    partition: bool = False

    def __post_init__(self):
        if not 0.0 < self.plr_target < 1.0:
            raise ValueError(f"plr_target must be in (0, 1), got {self.plr_target}")
        if self.delta <= 0.0:
            raise ValueError(f"delta must be > 0, got {self.delta}")


@dataclass(frozen=True)
class PartitionPlan:
    """A planned partition with its PLR and the excess that bought it."""

    ps: PartitionSpec
    plr: float

    @property
    def excess(self) -> int:
        return self.ps.excess


@dataclass(frozen=True)
class PlanResult:
    spec: CodeSpec
    plr: float
    ri: float  # redundancy ratio p/k, reporting only
    partition: PartitionPlan | None = None


def min_n_for_target(k: int, ch: BecChannel, plr_target: float) -> CodeSpec:
    """Smallest n > k whose C(n, k) code has PLR <= plr_target on `ch`.

    Scans upward from n = k+1; the first hit is minimal because adding a
    parity packet never increases the PLR.  Raises CapacityError if no n
    within the field bound reaches the target.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if ch.p_e >= 1.0:
        raise CapacityError("every packet is erased; no code can meet a target")
    for n in range(k + 1, MAX_CODE_LENGTH + 1):
        if analytic_plr(CodeSpec(n, k), ch).plr <= plr_target:
            return CodeSpec(n, k)
    raise CapacityError(
        f"no n <= {MAX_CODE_LENGTH} meets PLR <= {plr_target} for k={k}, "
        f"p_e={ch.p_e}"
    )


def distribute_excess(parent: CodeSpec, ch: BecChannel, delta: float) -> PartitionSpec:
    """Smallest-excess partition of `parent` within `delta` of its PLR.

    Starting from a zero-excess split, adds one excess parity packet at a
    time (alternating halves, first half first) until the partitioned PLR
    exceeds the parent's by at most delta.  Each added packet must strictly
    lower the partitioned PLR unless it is already 0; excess counts whose
    split would leave a half without parity (only possible for p = 1) are
    skipped.
    """
    if delta <= 0.0:
        raise ValueError(f"delta must be > 0, got {delta}")
    plain = analytic_plr(parent, ch).plr
    previous = None
    excess = 0
    while True:
        k1, p1, k2, p2 = split_shape(parent, excess)
        if max(k1 + p1, k2 + p2) > MAX_CODE_LENGTH:
            raise CapacityError(
                f"partition of {parent} hit the field bound at excess={excess}"
            )
        if min(p1, p2) < 1:
            excess += 1  # a half would have zero parity; not a usable code
            continue
        ps = split(parent, excess)
        part = partitioned_plr(ps, ch).plr
        if part - plain <= delta:
            return ps
        if previous is not None and part >= previous and part > 0.0:
            raise AssertionError(
                f"excess packet {excess} did not lower the partitioned PLR "
                f"({previous} -> {part})"
            )
        previous = part
        excess += 1


def plan(req: PlanRequest) -> PlanResult:
    """Pick the minimal code for `req`, partitioning it if requested."""
    spec = min_n_for_target(req.k, req.ch, req.plr_target)
    plr = analytic_plr(spec, req.ch).plr
    partition = None
    if req.partition:
        ps = distribute_excess(spec, req.ch, req.delta)
        partition = PartitionPlan(ps=ps, plr=partitioned_plr(ps, req.ch).plr)
    return PlanResult(spec=spec, plr=plr, ri=spec.p / spec.k, partition=partition)
