"""Contact basics: press a sphere into the gelpad and look at the result.

A 5 mm sphere pressed 1 mm into the gel should touch a circle of radius
sqrt(r^2 - (r - d)^2) = 3 mm, with peak indentation equal to the press
depth. This script traces the contact, prints those numbers next to the
analytic values, and saves tactile-image previews.

Run:  python3 demos/01_contact_basics.py
"""

from pathlib import Path

import numpy as np
from PIL import Image

from tacsim.contact import compute_contact_state, raw_penetration
from tacsim.geometry import FREE_BASE, IndenterShape, Pose, SceneObject
from tacsim.render import shade, stamp_markers
from tacsim.sensor import default_profile

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

profile = default_profile("gelsight_mini")
sphere = IndenterShape("sphere", (5.0,), base=FREE_BASE)
press = 1.0
# sensor gel plane is z = 0 with the object on +z; placing the sphere
# center at z = r - press buries its lowest point `press` mm deep
obj = SceneObject(shape=sphere, pose=Pose(translation=(0, 0, 5.0 - press), rotation=(1, 0, 0, 0)))

raw = raw_penetration(profile, obj, Pose.identity())
gx, gy = raw.grid.pixel_centers_mm()
rho = np.hypot(gx, gy)
radius = rho[raw.values > 0].max()

print(f"sensor: {profile.name}, {profile.image_width}x{profile.image_height} px, "
      f"{raw.grid.mm_per_px_x:.3f} mm/px")
print(f"peak penetration: {raw.max_depth():.4f} mm (analytic {press:.4f})")
print(f"contact radius:   {radius:.3f} mm (analytic 3.000)")

# the full pipeline adds elastic smoothing and the marker field
cs = compute_contact_state(profile, obj, Pose.identity(), tangential=(0.4, 0.0))
moved = np.linalg.norm(cs.markers.displaced - cs.markers.rest, axis=1)
print(f"contact area:     {cs.contact_area_mm2:.1f} mm^2, d_min reading {cs.d_min:.3f} mm")
print(f"markers in contact: {int(cs.markers.in_contact.sum())}/{cs.markers.n}, "
      f"max displacement {moved.max():.3f} mm under 0.4 mm shear")

pure = shade(profile, cs.depth)
marked = stamp_markers(pure, cs.markers, cs.depth.grid, profile.marker_radius_px, 0.75)
Image.fromarray(pure.pixels).save(OUT / "sphere_pure.png")
Image.fromarray(marked.pixels).save(OUT / "sphere_marked.png")
depth_u8 = (cs.depth.values / profile.max_indent * 255).astype(np.uint8)
Image.fromarray(depth_u8).save(OUT / "sphere_depth.png")
print(f"wrote previews to {OUT}/sphere_{{pure,marked,depth}}.png")
