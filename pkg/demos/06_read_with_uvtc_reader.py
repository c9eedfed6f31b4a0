"""Consuming a dataset with the standalone uvtc_reader package.

The reader depends only on numpy and the documented on-disk contract
(manifest.json + .uvtc byte layout) -- it never imports the simulator.
Install it with `pip install -e reader/ --no-build-isolation`.

Run:  python3 demos/03_generate_dataset.py && python3 demos/06_read_with_uvtc_reader.py
"""

from pathlib import Path

import numpy as np

import uvtc_reader as ur

OUT = Path(__file__).parent / "out"
dataset_dir = OUT / "demo_ds_run1"
if not dataset_dir.exists():
    raise SystemExit("run demos/03_generate_dataset.py first")

# verify=True recomputes every episode hash against the manifest
ds = ur.open_dataset(dataset_dir, verify=True)
print(f"opened {dataset_dir.name}: {ds.n_episodes} episodes, "
      f"{ds.total_samples} frames, integrity verified")
print(f"sensor: {ds.sensor_profile['name']} "
      f"{ds.sensor_profile['image_width']}x{ds.sensor_profile['image_height']}")

frame = ds.frame(0, 0)
print(f"\nframe (0, 0): marked {frame.i_marked.shape} {frame.i_marked.dtype}, "
      f"depth {frame.depth.shape} max {frame.depth.max():.3f} mm, "
      f"{frame.markers.shape[0]} markers, t = {frame.timestamp:.2f} s")
print(f"pose (tx ty tz qw qx qy qz): {np.array2string(frame.pose, precision=3)}")

ep = ds.episode(0)
print(f"\nepisode 0 action log ({len(ep.actions)} records):")
for a in ep.actions:
    print(f"  {a.kind:<6} t = [{a.t_start:.2f}, {a.t_end:.2f}] s, "
          f"{len(a.params)} params")

# manifest-order streaming, e.g. for building a training set
mean_depth = np.mean([f.depth.max() for _, _, f in ds.iter_frames()])
print(f"\nmean per-frame peak indentation across the dataset: {mean_depth:.3f} mm")
