"""Depth bookkeeping: how degenerate was the input a run actually saw.

Every predicate call resolves at some depth of the perturbed-determinant
expansion; depth 0 means the raw determinant already decided.  A collector
aggregates per-predicate call counts and a depth histogram.
"""

from collections import Counter


class DepthStats:
    def __init__(self):
        self._per_name: dict[str, Counter] = {}

    def record(self, name: str, depth: int) -> None:
        self._per_name.setdefault(name, Counter())[depth] += 1

    def merge(self, other: "DepthStats") -> None:
        for name, hist in other._per_name.items():
            self._per_name.setdefault(name, Counter()).update(hist)

    def calls(self, name=None) -> int:
        if name is not None:
            return sum(self._per_name.get(name, Counter()).values())
        return sum(sum(h.values()) for h in self._per_name.values())

    def histogram(self, name=None) -> dict[int, int]:
        if name is not None:
            return dict(self._per_name.get(name, Counter()))
        total = Counter()
        for hist in self._per_name.values():
            total.update(hist)
        return dict(total)

    def max_depth(self, name=None) -> int:
        hist = self.histogram(name)
        return max(hist) if hist else 0

    def names(self):
        return sorted(self._per_name)


def degeneracy_report(stats: DepthStats) -> str:
    """Deterministic plain-text summary of a collector."""
    lines = ["# degeneracy report"]
    if not stats.names():
        lines.append("# (no predicate calls)")
        return "\n".join(lines) + "\n"
    for name in stats.names():
        hist = stats.histogram(name)
        spread = ",".join(f"{d}:{hist[d]}" for d in sorted(hist))
        lines.append(f"# {name} calls={stats.calls(name)} "
                     f"max_depth={stats.max_depth(name)} histogram={spread}")
    total = stats.histogram()
    spread = ",".join(f"{d}:{total[d]}" for d in sorted(total))
    lines.append(f"# total calls={stats.calls()} "
                 f"max_depth={stats.max_depth()} histogram={spread}")
    return "\n".join(lines) + "\n"
