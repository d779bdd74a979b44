import numpy as np
import pytest

from reorderchan import (
    BinaryInputChannel,
    binary_entropy,
    channel_from_config,
    channel_preset,
    entropy_bits,
    row_entropy,
)


def test_entropy_bits_basics():
    assert entropy_bits((1.0, 0.0)) == 0.0
    assert entropy_bits((0.5, 0.5)) == 1.0
    assert abs(entropy_bits([1 / 8] * 8) - 3.0) < 1e-12


def test_binary_entropy_values():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == 1.0
    # h(0.25) = 2 - 0.75 log2 3
    assert abs(binary_entropy(0.25) - 0.8112781244591328) < 1e-15


def test_erasure_preset_rows():
    ch = channel_preset("erasure", 0.2)
    assert ch.q0 == (0.8, 0.0, 0.2)
    assert ch.q1 == (0.0, 0.8, 0.2)
    assert ch.output_labels == ("0", "1", "e")
    assert ch.J == 3


def test_erasure_preset_noiseless():
    ch = channel_preset("erasure", 0.0)
    assert ch.q0 == (1.0, 0.0, 0.0)
    assert ch.q1 == (0.0, 1.0, 0.0)


def test_bsc_preset_rows():
    ch = channel_preset("bsc", 0.5)
    assert ch.q0 == (0.5, 0.5)
    assert ch.q1 == (0.5, 0.5)
    assert ch.output_labels == ("0", "1")


def test_z_preset_rows():
    ch = channel_preset("z", 0.2)
    assert ch.q0 == (1.0, 0.0)
    assert ch.q1 == (0.2, 0.8)


@pytest.mark.parametrize("p", [-0.1, 1.5, 2.0])
def test_preset_rejects_bad_p(p):
    with pytest.raises(ValueError):
        channel_preset("erasure", p)


def test_preset_rejects_unknown_kind():
    with pytest.raises(ValueError):
        channel_preset("awgn", 0.1)


def test_channel_validation():
    with pytest.raises(ValueError):
        BinaryInputChannel((0.5, 0.5), (0.3, 0.3, 0.4), ("0", "1"))
    with pytest.raises(ValueError):
        BinaryInputChannel((1.0,), (1.0,), ("0",))
    with pytest.raises(ValueError):
        BinaryInputChannel((0.5, 0.5), (0.6, 0.5), ("0", "1"))
    with pytest.raises(ValueError):
        BinaryInputChannel((-0.1, 1.1), (0.5, 0.5), ("0", "1"))
    with pytest.raises(ValueError):
        BinaryInputChannel((0.5, 0.5), (0.5, 0.5), ("0", "1", "2"))


def test_row_and_matrix():
    ch = channel_preset("z", 0.3)
    assert np.allclose(ch.row(0), [1.0, 0.0])
    assert np.allclose(ch.row(1), [0.3, 0.7])
    assert ch.matrix().shape == (2, 2)
    with pytest.raises(ValueError):
        ch.row(2)


def test_row_entropy_values():
    assert row_entropy(channel_preset("erasure", 0.0), 0) == 0.0
    assert row_entropy(channel_preset("z", 0.2), 0) == 0.0
    # h(0.2)
    assert abs(row_entropy(channel_preset("bsc", 0.2), 1) - 0.7219280948873623) < 1e-15
    assert abs(row_entropy(channel_preset("z", 0.2), 1) - 0.7219280948873623) < 1e-15
    # the erasure rows both carry h(p)
    ch = channel_preset("erasure", 0.3)
    assert abs(row_entropy(ch, 0) - binary_entropy(0.3)) < 1e-15
    assert abs(row_entropy(ch, 1) - binary_entropy(0.3)) < 1e-15


def test_channel_from_config_preset():
    ch = channel_from_config({"kind": "bsc", "p": 0.1})
    assert ch.q0 == (0.9, 0.1)
    assert ch.q1 == (0.1, 0.9)


def test_channel_from_config_custom():
    ch = channel_from_config({"custom": {"q0": [0.7, 0.2, 0.1], "q1": [0.1, 0.2, 0.7]}})
    assert ch.q0 == (0.7, 0.2, 0.1)
    assert ch.output_labels == ("0", "1", "2")
    named = channel_from_config(
        {"custom": {"q0": [1.0, 0.0], "q1": [0.4, 0.6], "labels": ["a", "b"]}}
    )
    assert named.output_labels == ("a", "b")


def test_labels_coerced_to_strings():
    ch = BinaryInputChannel((0.5, 0.5), (0.5, 0.5), (0, 1))
    assert ch.output_labels == ("0", "1")
