"""Walk paths on the integers and the classifiers behind every count.

A path of length N starts at the origin and moves by one unit per step.  A
time index t in [1, N] sits on the *positive side* when both X(t) >= 0 and
X(t-1) >= 0; the sojourn time of a path is the number of such indices.  Two
end classifiers matter as well: a *bridge* finishes at the origin, and a
*positive-end* path is on the positive side at its final step.  Because
adjacent positions differ by exactly one, every time index is on exactly one
side, so the positive and negative sojourn times always add up to N.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class PathClass(enum.Enum):
    """Path families that get counted separately."""

    ALL = "all"
    BRIDGE = "bridge"
    POSITIVE_END = "positive-end"

    @classmethod
    def from_token(cls, token: str) -> "PathClass":
        for member in cls:
            if member.value == token:
                return member
        raise ValueError(f"unknown path class {token!r}")


@dataclass(frozen=True)
class StepSequence:
    """An immutable sequence of unit steps, each -1 or +1."""

    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for s in self.steps:
            if s not in (-1, 1):
                raise ValueError(f"steps must be -1 or +1, got {s!r}")

    @classmethod
    def from_bits(cls, word: int, length: int) -> "StepSequence":
        """Decode a bit-packed path: bit t of ``word`` set means step +1 at time t+1.

        Only the low ``length`` bits are read, so packed samples with stray
        high bits decode without masking first.
        """
        if length < 0:
            raise ValueError("length must be nonnegative")
        if word < 0:
            raise ValueError("word must be nonnegative")
        return cls(tuple(1 if (word >> t) & 1 else -1 for t in range(length)))

    @property
    def length(self) -> int:
        return len(self.steps)

    def negate(self) -> "StepSequence":
        """The reflected path, every step flipped."""
        return StepSequence(tuple(-s for s in self.steps))


def positions(path: StepSequence) -> tuple[int, ...]:
    """All positions X(0), ..., X(N) as running sums of the steps."""
    xs = [0]
    for s in path.steps:
        xs.append(xs[-1] + s)
    return tuple(xs)


def position(path: StepSequence, t: int) -> int:
    """Position X(t) after the first t steps; X(0) = 0."""
    if not 0 <= t <= path.length:
        raise IndexError(f"time index {t} outside [0, {path.length}]")
    return sum(path.steps[:t])


def is_positive_side(path: StepSequence, t: int) -> bool:
    """Whether time t is on the positive side: X(t) >= 0 and X(t-1) >= 0.

    Sides are properties of a time *step*, so t must lie in [1, N].
    """
    if not 1 <= t <= path.length:
        raise IndexError(f"time index {t} outside [1, {path.length}]")
    xt = position(path, t)
    return xt >= 0 and xt - path.steps[t - 1] >= 0


def is_negative_side(path: StepSequence, t: int) -> bool:
    """Whether time t is on the negative side: X(t) <= 0 and X(t-1) <= 0."""
    if not 1 <= t <= path.length:
        raise IndexError(f"time index {t} outside [1, {path.length}]")
    xt = position(path, t)
    return xt <= 0 and xt - path.steps[t - 1] <= 0


def sojourn_time(path: StepSequence) -> int:
    """Number of time indices in [1, N] on the positive side."""
    count = 0
    x = 0
    for s in path.steps:
        prev = x
        x += s
        if x >= 0 and prev >= 0:
            count += 1
    return count


def classify(path: StepSequence) -> set[PathClass]:
    """Every class the path belongs to; ALL is always included."""
    if path.length == 0:
        raise ValueError("cannot classify an empty path")
    end = position(path, path.length)
    out = {PathClass.ALL}
    if end == 0:
        out.add(PathClass.BRIDGE)
    if is_positive_side(path, path.length):
        out.add(PathClass.POSITIVE_END)
    return out


@dataclass(frozen=True)
class SojournTable:
    """Exact per-class path counts indexed by sojourn time.

    For even ``steps`` = 2n the index k runs over [0, n] and counts paths
    with sojourn time 2k; odd sojourn times cannot occur on even lengths, so
    nothing is lost.  For odd ``steps`` the index is the raw sojourn value
    in [0, steps].
    """

    steps: int
    all_counts: tuple[int, ...]
    bridge_counts: tuple[int, ...]
    positive_end_counts: tuple[int, ...]

    def __post_init__(self):
        for name in ("all_counts", "bridge_counts", "positive_end_counts"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        expected = self.steps // 2 + 1 if self.steps % 2 == 0 else self.steps + 1
        for name in ("all_counts", "bridge_counts", "positive_end_counts"):
            values = getattr(self, name)
            if len(values) != expected:
                raise ValueError(f"{name} must have {expected} entries, got {len(values)}")
            if any(v < 0 for v in values):
                raise ValueError(f"{name} contains a negative count")
        if sum(self.all_counts) != 2 ** self.steps:
            raise ValueError("all_counts must sum to the full path count 2**steps")
        for name in ("bridge_counts", "positive_end_counts"):
            values = getattr(self, name)
            if any(v > a for v, a in zip(values, self.all_counts)):
                raise ValueError(f"{name} exceeds all_counts in some cell")

    @property
    def half_steps(self) -> int:
        if self.steps % 2:
            raise ValueError("half_steps is only defined for even step counts")
        return self.steps // 2

    @property
    def size(self) -> int:
        """Number of index slots in each counts tuple."""
        return len(self.all_counts)

    def sojourn_value(self, index: int) -> int:
        """The sojourn time counted at ``index`` (2*index for even lengths)."""
        if not 0 <= index < self.size:
            raise IndexError(f"index {index} outside [0, {self.size - 1}]")
        return 2 * index if self.steps % 2 == 0 else index

    def counts(self, path_class: PathClass) -> tuple[int, ...]:
        if path_class is PathClass.ALL:
            return self.all_counts
        if path_class is PathClass.BRIDGE:
            return self.bridge_counts
        return self.positive_end_counts

    def count(self, index: int, path_class: PathClass) -> int:
        if not 0 <= index < self.size:
            raise IndexError(f"index {index} outside [0, {self.size - 1}]")
        return self.counts(path_class)[index]
