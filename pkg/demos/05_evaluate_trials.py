"""Physics-based trial validity and success-rate aggregation.

A trial is admissible only if gel penetration stays bounded and marker
slip (deviation of in-contact marker motion from the commanded motion)
stays below threshold in every frame. This script judges the demo
dataset at the default thresholds, then tightens them to show how
verdicts degrade, and finishes with the success-rate arithmetic.

Run:  python3 demos/03_generate_dataset.py && python3 demos/05_evaluate_trials.py
"""

from pathlib import Path

from tacsim.dataset import EPISODE_DIR, read_episode, read_manifest
from tacsim.evaluation import ValidityConfig, default_validity_config, judge_trial, success_rate
from tacsim.sensor import SensorProfile

OUT = Path(__file__).parent / "out"
dataset_dir = OUT / "demo_ds_run1"
if not dataset_dir.exists():
    raise SystemExit("run demos/03_generate_dataset.py first")

manifest = read_manifest(dataset_dir)
profile = SensorProfile(**manifest["sensor_profile"])
grid = profile.grid()

episodes = [
    read_episode(dataset_dir / EPISODE_DIR / e["file"],
                 mm_per_px=(grid.mm_per_px_x, grid.mm_per_px_y))
    for e in manifest["episode_index"]
]

default = default_validity_config(profile)
print(f"default thresholds: penetration <= {default.max_penetration_mm} mm, "
      f"slip <= {default.max_slip_mm} mm\n")
print(f"{'episode':<22} {'valid':>5} {'peak pen':>9} {'peak slip':>10}  reasons")
verdicts = []
for entry, ep in zip(manifest["episode_index"], episodes):
    v = judge_trial(ep, default, profile)
    verdicts.append(v)
    reasons = ", ".join(r["kind"] for r in v.reasons) or "-"
    print(f"{entry['file']:<22} {str(v.valid):>5} {v.peak_penetration:>9.3f} "
          f"{v.peak_slip:>10.3f}  {reasons}")

# tighten the slip threshold until trials start failing
print("\ntightening max_slip_mm:")
for slip in (1.5, 0.8, 0.4, 0.2):
    cfg = ValidityConfig(default.max_penetration_mm, slip)
    n_valid = sum(judge_trial(ep, cfg, profile).valid for ep in episodes)
    print(f"  slip <= {slip:>4.1f} mm -> {n_valid}/{len(episodes)} trials valid")

# success rate gates task success on physical validity
successes = [True] * len(verdicts)  # pretend every trial achieved its task
rate = success_rate(verdicts, successes)
print(f"\nsuccess rate with all tasks 'succeeding': {rate:.1f}% "
      f"(invalid trials count as failures)")
