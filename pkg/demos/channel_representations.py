"""Channel representations and their round trips.

Shows the two interchangeable channel forms (Kraus operators and the Choi
operator), the measure-and-prepare construction behind every
entanglement-breaking channel, and the identity tying the depolarizing
family to Werner states.

Run:  python demos/channel_representations.py
"""

import numpy as np

from ealab import (
    DensityOperator,
    MeasurePrepare,
    apply,
    channel_from_choi,
    choi_of,
    compose,
    depolarizing,
    identity_channel,
    measure_prepare_channel,
    random_channel,
    random_density,
    werner,
)

print("=" * 72)
print("1. Choi operator of the depolarizing channel = Werner state")
print("=" * 72)
print()
for lam in (0.0, 0.25, 0.5, 1.0):
    diff = np.max(np.abs(choi_of(depolarizing(lam, 2)).matrix - werner(lam, 2).matrix))
    print(f"lam={lam:<5} max|choi - werner| = {diff:.2e}")
print()
print("Feeding half of a maximally entangled pair through the channel")
print("produces exactly the Werner state with the same mixing parameter.")

print()
print("=" * 72)
print("2. Kraus <-> Choi round trips")
print("=" * 72)
print()
for name, channel in (
    ("identity", identity_channel(2)),
    ("depolarizing(0.3)", depolarizing(0.3, 2)),
    ("random channel", random_channel(2, seed=42)),
):
    omega = choi_of(channel)
    rebuilt = choi_of(channel_from_choi(omega))
    diff = np.max(np.abs(rebuilt.matrix - omega.matrix))
    print(f"{name:<20} kraus ops: {len(channel.kraus):>2}   round-trip error: {diff:.2e}")

print()
print("=" * 72)
print("3. Measure-and-prepare channels")
print("=" * 72)
print()
print("Measure in the computational basis, then re-prepare what was seen:")
mp = MeasurePrepare(
    (np.diag([1.0, 0.0]), np.diag([0.0, 1.0])),
    (
        DensityOperator(np.diag([1.0, 0.0]), (2,)),
        DensityOperator(np.diag([0.0, 1.0]), (2,)),
    ),
)
dephase = measure_prepare_channel(mp)
rho = random_density((2,), rank=2, seed=7)
out = apply(dephase, rho)
print("input state:")
print(np.round(rho.matrix, 4))
print("output state (off-diagonals killed):")
print(np.round(out.matrix, 4))
print()
print("Choi operator of this channel (diagonal, hence separable):")
print(np.round(choi_of(dephase).matrix.real, 4))

print()
print("=" * 72)
print("4. Composition acts like multiplying noise parameters")
print("=" * 72)
print()
a, b = 0.8, 0.6
chained = compose(depolarizing(a, 2), depolarizing(b, 2))
direct = depolarizing(a * b, 2)
diff = np.max(np.abs(choi_of(chained).matrix - choi_of(direct).matrix))
print(f"E_{a} after E_{b} equals E_{a * b:.2f}: max Choi difference {diff:.2e}")
