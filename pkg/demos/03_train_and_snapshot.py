"""Training a small classifier on the nine-disks lattice with snapshots.

Builds the lattice dataset, trains one depth-11 network, and captures the
weights at several accuracy thresholds.  Prints the epoch each threshold was
crossed and where the snapshot files would land in a pipeline run.

    python3 demos/03_train_and_snapshot.py
"""

import os

from layerscape.datasets import generate_disks, split_and_subsample
from layerscape.mlp import MlpSpec, TrainConfig, save_params, train_with_snapshots

import numpy as np

OUT = os.path.join("out", "demos", "snapshots")
os.makedirs(OUT, exist_ok=True)

ds = generate_disks()
n_disks = int((ds.cloud.labels == 0).sum())
print(
    f"lattice dataset: {ds.n} points, {n_disks} inside the nine disks, "
    f"{ds.n - n_disks} in the complement"
)

rng = np.random.default_rng(0)
train, test, _ = split_and_subsample(ds, 0.9, None, rng, stride=1)
print(f"split: {train.n} train / {test.n} test")

spec = MlpSpec((2,) + (15,) * 10 + (2,), seed=0)
thresholds = [0.55, 0.90, 0.99]
log = []
snapshots = train_with_snapshots(
    spec,
    train.cloud,
    thresholds,
    TrainConfig(lr=0.004, batch_size=128, max_epochs=2000),
    log_sink=log,
)

print(f"trained for {len(log)} epochs; thresholds crossed:")
for snap in snapshots:
    path = os.path.join(OUT, f"snap_t{snap.threshold:g}.params")
    save_params(snap.params, path)
    print(
        f"  {snap.threshold:.0%} at epoch {snap.step_index} "
        f"(achieved {snap.achieved_accuracy:.4f}) -> {path}"
    )

final_acc = log[-1][2]
print(f"final training accuracy {final_acc:.4f}")
print("re-running this script reproduces identical weights: the seed fixes")
print("initialization and every shuffle")
