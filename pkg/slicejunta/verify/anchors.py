"""
Checked-in regression anchors for census results.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional

from ..exceptions import ClaimViolation

logger = logging.getLogger(__name__)

DEFAULT_ANCHORS_PATH = Path(__file__).parent.parent / "data" / "anchors.json"


class AnchorStore:
    """Exact expected values keyed by domain (and degree bound)."""

    def __init__(self, anchors_path: Optional[str] = None):
        """
        Load anchors.

        Args:
            anchors_path: Path to anchors JSON (defaults to the packaged file)
        """
        self.path = Path(anchors_path) if anchors_path else DEFAULT_ANCHORS_PATH
        if self.path.exists():
            with open(self.path, 'r') as f:
                self.data = json.load(f)
        else:
            self.data = {}
        self.data.setdefault('dichotomy', {})
        self.data.setdefault('degree_one_count', {})

    def dichotomy(self, n: int, k: int, d: int) -> Optional[Fraction]:
        value = self.data['dichotomy'].get(f"{n},{k},{d}")
        return Fraction(value) if value is not None else None

    def degree_one_count(self, n: int, k: int) -> Optional[int]:
        return self.data['degree_one_count'].get(f"{n},{k}")

    def check_dichotomy(self, n: int, k: int, d: int, value: Optional[Fraction]) -> Optional[bool]:
        """True/False against a stored anchor, None when there is nothing to compare."""
        expected = self.dichotomy(n, k, d)
        if expected is None:
            return None
        return value is not None and Fraction(value) == expected

    def record_dichotomy(self, n: int, k: int, d: int, value: Fraction) -> None:
        """
        Freeze a verified minimum.

        Raises:
            ClaimViolation: If a different value is already stored
        """
        key = f"{n},{k},{d}"
        existing = self.dichotomy(n, k, d)
        if existing is not None and existing != Fraction(value):
            raise ClaimViolation(f"anchor {key} is {existing}, new run found {value}")
        self.data['dichotomy'][key] = str(Fraction(value))
        self.save()

    def save(self) -> None:
        with open(self.path, 'w') as f:
            json.dump(self.data, f, indent=2, sort_keys=True)
            f.write('\n')
        logger.info("anchors written to %s", self.path)
