"""Oracle bookkeeping: numeric results checked against independent references."""

import math
from dataclasses import dataclass
from threading import Lock
from typing import Dict, Optional


@dataclass
class OracleDelta:
    """One numeric-vs-reference comparison."""

    name: str
    numeric: float
    reference: float
    tolerance: Optional[float] = None

    @property
    def relative_delta(self) -> float:
        """Relative deviation |numeric - reference| / |reference| (absolute if reference is 0)."""
        scale = abs(self.reference)
        diff = abs(self.numeric - self.reference)
        if scale == 0.0:
            return diff
        return diff / scale

    @property
    def within_tolerance(self) -> Optional[bool]:
        """Whether the delta respects the tolerance, or None without one."""
        if self.tolerance is None:
            return None
        delta = self.relative_delta
        return math.isfinite(delta) and delta <= self.tolerance

    def to_dict(self) -> Dict:
        """Convert to a dictionary for serialization."""
        return {
            "numeric": self.numeric,
            "reference": self.reference,
            "relative_delta": self.relative_delta,
            "tolerance": self.tolerance,
            "passed": self.within_tolerance,
        }


class OracleLedger:
    """Thread-safe collector of oracle deltas, ordered by first record."""

    def __init__(self) -> None:
        """Initialize an empty ledger."""
        self._deltas: Dict[str, OracleDelta] = {}
        self._lock = Lock()

    def record(
        self,
        name: str,
        numeric: float,
        reference: float,
        tolerance: Optional[float] = None,
    ) -> OracleDelta:
        """
        Record a comparison, replacing any earlier entry with the same name.

        Args:
            name: Stable identifier of the check
            numeric: Value produced by the numerical route
            reference: Closed form or independent route
            tolerance: Optional relative tolerance the check is held to

        Returns:
            The recorded delta
        """
        delta = OracleDelta(
            name=name,
            numeric=float(numeric),
            reference=float(reference),
            tolerance=tolerance,
        )
        with self._lock:
            self._deltas[name] = delta
        return delta

    def get(self, name: str) -> Optional[OracleDelta]:
        """Get a recorded delta by name."""
        with self._lock:
            return self._deltas.get(name)

    def failures(self) -> Dict[str, OracleDelta]:
        """Deltas whose tolerance was breached."""
        with self._lock:
            return {
                name: d for name, d in self._deltas.items()
                if d.within_tolerance is False
            }

    def summary(self) -> Dict[str, Dict]:
        """Get all deltas as plain dictionaries in insertion order."""
        with self._lock:
            return {name: d.to_dict() for name, d in self._deltas.items()}

    def reset(self) -> None:
        """Drop all recorded deltas."""
        with self._lock:
            self._deltas.clear()
