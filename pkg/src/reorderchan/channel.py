"""Binary-input memoryless channels with a finite output alphabet."""

from dataclasses import dataclass

import numpy as np

ROW_SUM_TOL = 1e-12

PRESET_KINDS = ("erasure", "bsc", "z")


def entropy_bits(pmf):
    """Shannon entropy of a probability vector in bits, with 0 log 0 = 0."""
    p = np.asarray(pmf, dtype=float)
    p = p[p > 0]
    # adding 0.0 keeps a degenerate vector from printing as -0.0
    return float(-np.sum(p * np.log2(p)) + 0.0)


def binary_entropy(p):
    """Entropy in bits of a coin that lands 1 with probability p."""
    return entropy_bits((1.0 - p, p))


@dataclass(frozen=True)
class BinaryInputChannel:
    """Per-packet channel: transition rows q0 and q1 over J output letters."""

    q0: tuple
    q1: tuple
    output_labels: tuple

    def __post_init__(self):
        q0 = tuple(float(v) for v in self.q0)
        q1 = tuple(float(v) for v in self.q1)
        labels = tuple(str(v) for v in self.output_labels)
        object.__setattr__(self, "q0", q0)
        object.__setattr__(self, "q1", q1)
        object.__setattr__(self, "output_labels", labels)
        if len(q0) != len(q1):
            raise ValueError("transition rows must have the same length")
        if len(q0) < 2:
            raise ValueError("output alphabet needs at least two letters")
        if len(labels) != len(q0):
            raise ValueError("need exactly one label per output letter")
        for row in (q0, q1):
            if any(v < 0.0 or v > 1.0 for v in row):
                raise ValueError("transition probabilities must lie in [0, 1]")
            if abs(sum(row) - 1.0) > ROW_SUM_TOL:
                raise ValueError("transition row does not sum to 1")

    @property
    def J(self):
        return len(self.q0)

    def row(self, bit):
        """Transition row for one input bit, as an array."""
        if bit not in (0, 1):
            raise ValueError("input bit must be 0 or 1")
        return np.asarray(self.q1 if bit else self.q0)

    def matrix(self):
        """Both transition rows stacked into a (2, J) array."""
        return np.array([self.q0, self.q1])


def channel_preset(kind, p):
    """Build one of the stock per-packet channels.

    erasure: outputs {0, 1, e}; either bit is erased with probability p.
    bsc: the bit flips with probability p.
    z: a sent 1 is read as 0 with probability p; a sent 0 always survives.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if kind == "erasure":
        return BinaryInputChannel((1.0 - p, 0.0, p), (0.0, 1.0 - p, p), ("0", "1", "e"))
    if kind == "bsc":
        return BinaryInputChannel((1.0 - p, p), (p, 1.0 - p), ("0", "1"))
    if kind == "z":
        return BinaryInputChannel((1.0, 0.0), (p, 1.0 - p), ("0", "1"))
    raise ValueError(f"unknown channel kind {kind!r}")


def row_entropy(channel, bit):
    """Entropy in bits of the output letter given one input bit."""
    return entropy_bits(channel.row(bit))


def channel_from_config(record):
    """Deserialize a channel from {kind, p} or {custom: {q0, q1[, labels]}}."""
    if "custom" in record:
        custom = record["custom"]
        q0 = tuple(custom["q0"])
        q1 = tuple(custom["q1"])
        labels = custom.get("labels")
        if labels is None:
            labels = tuple(str(j) for j in range(len(q0)))
        return BinaryInputChannel(q0, q1, tuple(labels))
    return channel_preset(record["kind"], float(record["p"]))
