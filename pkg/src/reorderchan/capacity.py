"""Information rates of the reordering channel: exact, closed-form, brute-force.

All rates are in bits per frame. The secondary encoder picks a strategy t,
the frame state picks which representative is sent, and the receiver sees
the noisy frame, so rates of interest are I(T;Y), its parts I(X;Y) and
I(X;Y|T), and the weight-class-constrained maximum of I(X;Y).
"""

import os
from dataclasses import dataclass
from itertools import product
from math import comb, log2

import numpy as np

from .channel import binary_entropy, channel_preset, entropy_bits, row_entropy
from .frame_space import (
    FrameConfig,
    enumerate_weight_class,
    likelihood_rows,
    state_pmf,
    weight,
)
from .strategy import build_weighted_graph, decompose_paths, induced_input_pmf

DECOMPOSITION_TOL = 1e-9
BA_TOL = 1e-10
BA_MAX_ITER = 100_000
ORACLE_MAX_ENTRIES = 2_000_000
ORACLE_ENV_VAR = "REORDERCHAN_ORACLE_MAX_ENTRIES"
BLOCK_COLS = 8192  # bounds the likelihood slab width when J**F is large
MAX_CACHED_ENTRIES = 64_000_000  # full likelihood table kept only under ~512 MB


@dataclass(frozen=True)
class CapacityReport:
    """Information rates of one evaluation, all in bits per frame."""

    i_ty: float
    i_xy: float
    i_xy_given_t: float
    c_xy: float
    outer_bound: float
    method: str


@dataclass(frozen=True)
class BAResult:
    """Converged capacity iteration: value, residual duality gap, input law."""

    capacity: float
    gap: float
    iterations: int
    input_pmf: tuple


def _neg_xlog2x_rows(mat):
    """Row sums of -p log2 p, treating zeros as zero contribution."""
    logs = np.zeros_like(mat)
    np.log2(mat, out=logs, where=mat > 0)
    return -(mat * logs).sum(axis=1)


def single_use_mutual_info(channel, a):
    """Information through one packet slot when its input bit is 1 w.p. a."""
    u = (1.0 - a) * np.asarray(channel.q0) + a * np.asarray(channel.q1)
    noise = (1.0 - a) * row_entropy(channel, 0) + a * row_entropy(channel, 1)
    return entropy_bits(u) - noise


def outer_bound(channel, config):
    """F independent slots at the marginal input law; caps every frame rate here."""
    return config.F * single_use_mutual_info(channel, config.a)


def _mean_noise_entropy(channel, config):
    # sum_s P_S(s) (s H(q1) + (F-s) H(q0)) collapses through E[S] = F a
    return config.F * (
        config.a * row_entropy(channel, 1) + (1.0 - config.a) * row_entropy(channel, 0)
    )


def _mixture_entropy_blocked(channel, F, xs, wts):
    """Entropy of sum_i w_i P(.|x_i) over the output space, in column blocks."""
    J = channel.J
    total_cols = J**F
    wts = np.asarray(wts, dtype=float)
    h = 0.0
    for start in range(0, total_cols, BLOCK_COLS):
        cols = np.arange(start, min(start + BLOCK_COLS, total_cols), dtype=np.int64)
        mix = wts @ likelihood_rows(channel, F, xs, cols)
        mix = mix[mix > 0]
        h -= float(np.sum(mix * np.log2(mix)))
    return h


def _class_uniform_weights(config):
    """Each state's mass spread uniformly over its weight class, indexed by symbol."""
    F = config.F
    pmf_s = state_pmf(config)
    wts = np.empty(1 << F)
    for x in range(1 << F):
        s = weight(x)
        wts[x] = pmf_s[s] / comb(F, s)
    return wts


def c_xy(channel, config):
    """Largest I(X;Y) over input laws with the binomial weight-class marginals.

    Attained by spreading each state's mass uniformly over its weight class.
    """
    F = config.F
    wts = _class_uniform_weights(config)
    xs = np.arange(1 << F, dtype=np.int64)
    return _mixture_entropy_blocked(channel, F, xs, wts) - _mean_noise_entropy(channel, config)


def _entropy_of(vec):
    vec = vec[vec > 0]
    return -float(np.sum(vec * np.log2(vec)))


def mutual_info_TY(channel, config, sset, method="constructed"):
    """Information rates of a strategy set, with the cascade split checked.

    H(Y) and the per-strategy output entropies come from one blocked pass
    over the output space. I(X;Y) is recomputed independently from the
    induced input law, and the split I(T;Y) = I(X;Y) - I(X;Y|T) must close
    numerically or the call fails.
    """
    F = config.F
    if sset.F != F:
        raise ValueError("strategy set and frame config disagree on F")
    J = channel.J
    pmf_s = state_pmf(config)
    pmf_t = np.asarray(sset.pmf)
    used = sorted({x for m in sset.multisymbols for x in m.reps})
    index = {x: i for i, x in enumerate(used)}
    rep_idx = np.array([[index[x] for x in m.reps] for m in sset.multisymbols])
    n_t = len(sset.multisymbols)
    total_cols = J**F

    # one likelihood table feeds the strategy rows and both mixture entropies
    cached = len(used) * total_cols <= MAX_CACHED_ENTRIES
    full_rows = np.empty((len(used), total_cols)) if cached else None
    chunk = max(1, (1 << 22) // BLOCK_COLS)  # strategies per slab
    h_t = np.zeros(n_t)
    h_y = 0.0
    for start in range(0, total_cols, BLOCK_COLS):
        stop = min(start + BLOCK_COLS, total_cols)
        cols = np.arange(start, stop, dtype=np.int64)
        rows = likelihood_rows(channel, F, used, cols)
        if cached:
            full_rows[:, start:stop] = rows
        mix = np.zeros(len(cols))
        for lo in range(0, n_t, chunk):
            hi = min(lo + chunk, n_t)
            trows = np.zeros((hi - lo, len(cols)))
            for s in range(F + 1):
                trows += pmf_s[s] * rows[rep_idx[lo:hi, s]]
            mix += pmf_t[lo:hi] @ trows
            h_t[lo:hi] += _neg_xlog2x_rows(trows)
        h_y += _entropy_of(mix)
    noise = _mean_noise_entropy(channel, config)
    i_ty = h_y - float(pmf_t @ h_t)
    i_xy_given_t = float(pmf_t @ h_t) - noise

    # the induced-law route regroups the same mixture by symbol instead of
    # by strategy, so the split check below is a real numerical comparison
    p_x = induced_input_pmf(sset, config)
    if cached:
        i_xy = _entropy_of(p_x[used] @ full_rows) - noise
    else:
        support = np.flatnonzero(p_x > 0)
        i_xy = _mixture_entropy_blocked(channel, F, support, p_x[support]) - noise

    if cached and len(used) == (1 << F):
        wts = _class_uniform_weights(config)
        c_xy_val = _entropy_of(wts @ full_rows) - noise
    else:
        c_xy_val = c_xy(channel, config)

    if abs(i_ty - (i_xy - i_xy_given_t)) > DECOMPOSITION_TOL:
        raise RuntimeError("information split I(T;Y) = I(X;Y) - I(X;Y|T) failed to close")
    return CapacityReport(
        i_ty=i_ty,
        i_xy=i_xy,
        i_xy_given_t=i_xy_given_t,
        c_xy=c_xy_val,
        outer_bound=outer_bound(channel, config),
        method=method,
    )


def errorless_capacity(config):
    """Frame rate with noiseless outputs: sum_s P_S(s) log2 C(F, s)."""
    pmf = state_pmf(config)
    return float(sum(pmf[s] * log2(comb(config.F, s)) for s in range(config.F + 1)))


def z_point_capacity(p):
    """Capacity of a single z channel use at flip probability p, free input law."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    if p == 0.0:
        return 1.0
    if p == 1.0:
        return 0.0
    return log2(1.0 + (1.0 - p) * p ** (p / (1.0 - p)))


def z_fixed_input_capacity(a, p):
    """Information through one z channel use when the input is 1 w.p. a."""
    if not 0.0 <= a <= 1.0 or not 0.0 <= p <= 1.0:
        raise ValueError("probabilities must be in [0, 1]")
    return binary_entropy(a * (1.0 - p)) - a * binary_entropy(p)


def strategy_space_size(F):
    """Number of maps sending each state into its own weight class."""
    n = 1
    for s in range(F + 1):
        n *= comb(F, s)
    return n


def oracle_entry_limit():
    """Enumeration ceiling for the brute-force oracle, env-var overridable."""
    raw = os.environ.get(ORACLE_ENV_VAR)
    return int(raw) if raw else ORACLE_MAX_ENTRIES


def equivalent_channel_matrix(channel, config, max_entries=None):
    """Rows P(y | t) for every strategy map, states mixed by the frame law."""
    F = config.F
    J = channel.J
    if max_entries is None:
        max_entries = oracle_entry_limit()
    n_t = strategy_space_size(F)
    n_y = J**F
    if n_t * n_y > max_entries:
        raise ValueError(
            f"strategy table needs {n_t} x {n_y} entries, over the limit {max_entries}; "
            f"raise {ORACLE_ENV_VAR} only if memory allows"
        )
    pmf_s = state_pmf(config)
    rows = likelihood_rows(channel, F, list(range(1 << F)))
    classes = [enumerate_weight_class(F, s) for s in range(F + 1)]
    W = np.zeros((n_t, n_y))
    for i, reps in enumerate(product(*classes)):
        for s, x in enumerate(reps):
            W[i] += pmf_s[s] * rows[x]
    return W


def blahut_arimoto(W, tol=BA_TOL, max_iter=BA_MAX_ITER):
    """Capacity of a discrete memoryless channel from its row-stochastic matrix.

    Alternating maximization over the input law; the spread of the per-row
    information densities brackets the optimum, so iteration stops once
    max_t D_t - sum_t r_t D_t drops under tol.
    """
    W = np.asarray(W, dtype=float)
    if W.ndim != 2 or np.any(W < 0) or not np.allclose(W.sum(axis=1), 1.0, atol=1e-9):
        raise ValueError("need a matrix of probability rows")
    n = W.shape[0]
    logW = np.zeros_like(W)
    np.log2(W, out=logW, where=W > 0)
    wlogw = np.sum(W * logW, axis=1)
    r = np.full(n, 1.0 / n)
    gap = np.inf
    for it in range(1, max_iter + 1):
        q = r @ W
        logq = np.zeros_like(q)
        np.log2(q, out=logq, where=q > 0)
        densities = wlogw - W @ logq
        lower = float(r @ densities)
        upper = float(densities.max())
        gap = upper - lower
        if gap < tol:
            return BAResult(lower, gap, it, tuple(r))
        r = r * np.exp2(densities - upper)
        r /= r.sum()
    raise RuntimeError(f"no convergence after {max_iter} iterations; duality gap {gap:.3e}")


def oracle_capacity(channel, config, max_entries=None, tol=BA_TOL, max_iter=BA_MAX_ITER):
    """Brute-force capacity over every admissible strategy map."""
    W = equivalent_channel_matrix(channel, config, max_entries=max_entries)
    return blahut_arimoto(W, tol=tol, max_iter=max_iter).capacity


def secondary_capacity(channel, config):
    """Capacity report of the constructed lcm-sized uniform strategy set."""
    sset = decompose_paths(build_weighted_graph(config.F))
    return mutual_info_TY(channel, config, sset)


@dataclass(frozen=True)
class SweepRow:
    """One grid point of the comparison sweep; c_oracle is None above limits."""

    F: int
    a: float
    p: float
    preset: str
    c_constructed: float
    c_oracle: object
    c_xy: float
    outer_bound: float
    c_errorless: float


def sweep_point(preset, p, a, F, oracle_max_entries=None):
    """Evaluate one (preset, p, a, F) grid point for the comparison sweep."""
    ch = channel_preset(preset, p)
    cfg = FrameConfig(F, a)
    report = secondary_capacity(ch, cfg)
    try:
        oracle = oracle_capacity(ch, cfg, max_entries=oracle_max_entries)
    except ValueError:
        oracle = None
    return SweepRow(
        F=F,
        a=a,
        p=p,
        preset=preset,
        c_constructed=report.i_ty,
        c_oracle=oracle,
        c_xy=report.c_xy,
        outer_bound=report.outer_bound,
        c_errorless=errorless_capacity(cfg),
    )
