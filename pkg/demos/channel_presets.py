"""
Per-packet channel presets
==========================

Every packet in a frame passes through the same binary-input channel. This
script prints the three stock presets, their transition rows, and how much
information a single packet slot carries at a given input bias.
"""

from reorderchan import channel_preset, row_entropy, single_use_mutual_info

# %%
# The three presets share one interface: two rows over a finite letter set.

for kind in ("erasure", "bsc", "z"):
    ch = channel_preset(kind, 0.2)
    print(f"{kind} (p = 0.2)")
    print(f"  letters {ch.output_labels}")
    print(f"  q0 = {ch.q0}")
    print(f"  q1 = {ch.q1}")
    print(f"  row entropies: H(q0) = {row_entropy(ch, 0):.6f}, H(q1) = {row_entropy(ch, 1):.6f}")
    print()

# %%
# One slot's information depends on the input bias a. The erasure channel is
# symmetric in a, the z channel is not: its zeros always survive, so rare
# ones are cheap to protect.

print("single-slot rates I(bit; letter), p = 0.2")
print(f"{'a':>5} {'erasure':>10} {'bsc':>10} {'z':>10}")
for a in (0.1, 0.3, 0.5, 0.7, 0.9):
    rates = [single_use_mutual_info(channel_preset(kind, 0.2), a) for kind in ("erasure", "bsc", "z")]
    print(f"{a:>5.1f} {rates[0]:>10.6f} {rates[1]:>10.6f} {rates[2]:>10.6f}")

# %%
# F independent slots give F times the single-slot rate. That product is the
# outer bound every frame-level strategy has to live under.
