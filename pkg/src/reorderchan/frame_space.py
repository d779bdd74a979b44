"""Frame-level view of the packet channel: states, weight classes, likelihoods.

A frame symbol is an F-bit integer whose leftmost (most significant) bit is
packet position 0. An output symbol is the base-J integer over the channel's
letter indices, leftmost digit first. Ascending integers therefore match
lexicographic order on the printed strings.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .channel import row_entropy

MAX_FRAME_LEN = 20


@dataclass(frozen=True)
class FrameConfig:
    """Frame length F and the probability a that a packet is addressed 1."""

    F: int
    a: float

    def __post_init__(self):
        if not isinstance(self.F, int) or not 1 <= self.F <= MAX_FRAME_LEN:
            raise ValueError(f"F must be an integer in 1..{MAX_FRAME_LEN}")
        if not 0.0 <= self.a <= 1.0:
            raise ValueError("a must be in [0, 1]")


def state_pmf(config):
    """Binomial law of the frame state (how many packets are addressed 1)."""
    F, a = config.F, config.a
    return np.array([comb(F, s) * a**s * (1.0 - a) ** (F - s) for s in range(F + 1)])


def weight(x):
    """Hamming weight of a frame symbol; identifies its weight class."""
    return int(x).bit_count()


def symbol_string(F, x):
    """Render a frame symbol as a bit string, leftmost position first."""
    return format(x, f"0{F}b")


def symbol_from_string(bits):
    """Parse a printed bit string back into a frame symbol."""
    return int(bits, 2)


def output_string(F, y, channel):
    """Render an output symbol with the channel's letter labels."""
    J = channel.J
    digits = [(y // J ** (F - 1 - f)) % J for f in range(F)]
    return "".join(channel.output_labels[d] for d in digits)


def enumerate_weight_class(F, s):
    """All F-bit symbols of weight s, ascending.

    Walks the weight class with the carry-and-redistribute bit trick, so the
    list comes out sorted without filtering all 2^F symbols.
    """
    if not 0 <= s <= F:
        raise ValueError(f"state must be in 0..{F}")
    if s == 0:
        return [0]
    syms = []
    x = (1 << s) - 1
    top = 1 << F
    while x < top:
        syms.append(x)
        low = x & -x
        ripple = x + low
        x = ripple | (((x ^ ripple) >> 2) // low)
    return syms


def bits_matrix(F, xs):
    """Bit of each symbol at each position, leftmost position first."""
    xs = np.asarray(xs, dtype=np.int64)
    out = np.empty((len(xs), F), dtype=np.int64)
    for f in range(F):
        out[:, f] = (xs >> (F - 1 - f)) & 1
    return out


def output_digits(F, J, cols):
    """Base-J digits of the given output indices, leftmost digit first."""
    cols = np.asarray(cols, dtype=np.int64)
    digits = np.empty((len(cols), F), dtype=np.int64)
    for f in range(F):
        digits[:, f] = (cols // J ** (F - 1 - f)) % J
    return digits


def likelihood_rows(channel, F, xs, cols=None):
    """Rows P(y | x) for each symbol in xs over the given output columns.

    cols defaults to the whole output space; pass an index array to keep
    memory bounded when J**F is large.
    """
    J = channel.J
    if cols is None:
        cols = np.arange(J**F, dtype=np.int64)
    digits = output_digits(F, J, cols)
    bits = bits_matrix(F, xs)
    qmat = channel.matrix()
    rows = np.ones((len(bits), len(digits)))
    for f in range(F):
        rows *= qmat[bits[:, f]][:, digits[:, f]]
    return rows


def frame_likelihood(channel, F, x, y):
    """P(y | x) for one frame: product of per-packet transition probabilities."""
    J = channel.J
    if not 0 <= x < (1 << F):
        raise ValueError("frame symbol out of range for this frame length")
    if not 0 <= y < J**F:
        raise ValueError("output symbol out of range for this frame length")
    prob = 1.0
    for f in range(F):
        bit = (x >> (F - 1 - f)) & 1
        letter = (y // J ** (F - 1 - f)) % J
        prob *= channel.q1[letter] if bit else channel.q0[letter]
    return prob


def conditional_entropy_given_x(channel, F, x):
    """Output entropy given the sent symbol: weight * H(q1) + (F - weight) * H(q0).

    The per-packet noise terms add because the packets see independent
    channel uses, so only the weight of x matters.
    """
    s = weight(x)
    return s * row_entropy(channel, 1) + (F - s) * row_entropy(channel, 0)
