"""Multi-task representation learning on synthetic tactile frames.

A shared convolutional encoder feeds three supervision pathways: shape
reconstruction (marked + marker-free images), contact decoding (depth +
marker positions), and 7-D pose regression. The total objective is
L = lambda_s*L_shape + lambda_c*L_contact + lambda_p*L_pose. Everything
(forward, backward, SGD) is plain numpy. This script trains a small
model on the dataset from demo 03 and prints the loss breakdown.

Run:  python3 demos/03_generate_dataset.py && python3 demos/04_train_learner.py
"""

from pathlib import Path

import numpy as np

from tacsim.learn import (
    LearnerConfig,
    backward,
    embed,
    load_training_set,
    param_count,
    train,
)

OUT = Path(__file__).parent / "out"
dataset_dir = OUT / "demo_ds_run1"
if not dataset_dir.exists():
    raise SystemExit("run demos/03_generate_dataset.py first")

config = LearnerConfig(input_w=16, input_h=16, latent_dim=16, n_markers=63,
                       enc_channels=(4, 6, 8), mlp_hidden=16,
                       batch=8, epochs=15, lr=0.05, seed=0)
data = load_training_set(dataset_dir, config)
n = data["x"].shape[0]
print(f"loaded {n} frames, downsampled to {config.input_h}x{config.input_w}; "
      f"model has {param_count(config)} parameters")

params, curve = train(config, data)
print("\nepoch  mean total loss")
for epoch, loss in enumerate(curve):
    bar = "#" * int(round(40 * loss / curve[0]))
    print(f"{epoch:>5}  {loss:.4f}  {bar}")
print(f"\nloss fell to {curve[-1] / curve[0]:.1%} of its first-epoch value")

# per-pathway breakdown on one batch
tensors = ("x", "i_marked", "i_pure", "depth", "markers", "pose")
batch = {k: np.asarray(data[k])[: config.batch] for k in tensors}
_, parts = backward(config, params, batch)
print(f"pathways on one batch: shape {parts['shape']:.4f}, "
      f"contact {parts['contact']:.4f}, pose {parts['pose']:.4f}")

z = embed(config, params, data["x"][0])
print(f"latent embedding of frame 0: dim {z.shape[0]}, "
      f"norm {np.linalg.norm(z):.3f} (deterministic, reusable downstream)")
