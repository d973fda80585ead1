"""Decoder outcome shared by every decoder in the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import Uncorrectable


@dataclass(frozen=True)
class DecodeReport:
    """Result of a decoding attempt.

    On failure ``codeword`` and ``error`` hold whatever the decoder had when it
    gave up (often the received word and zeros) and ``reason`` says why.
    """

    codeword: np.ndarray
    error: np.ndarray
    success: bool = True
    reason: str = ""
    positions: tuple[int, ...] = field(default=())
    info: Optional[np.ndarray] = None

    def __bool__(self):
        return self.success

    def raise_if_failed(self, exc: type[Uncorrectable] = Uncorrectable) -> "DecodeReport":
        if not self.success:
            raise exc(self.reason)
        return self
