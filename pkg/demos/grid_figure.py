"""Image of a rectangular grid under the Schwarz-Christoffel map.

With a = 0.2, b = 0.3, c = 1 and r = 0.7 the map sends the upper half-plane
onto a trapezoid (c = 1 makes two sides parallel).  The script writes the
grid image as SVG and CSV next to this file and checks that a few points
survive a round trip through the inverse map.
"""

from pathlib import Path

from gelliptic import export, scmap

here = Path(__file__).resolve().parent
out = here / "output"
out.mkdir(exist_ok=True)

p = scmap.SCParams(0.2, 0.3, 1.0, 0.7)
v = scmap.sc_vertices(p)
print("vertices:", ", ".join(f"{w.real:.6f}{w.imag:+.6f}i" for w in v.points))
print("interior angles / pi:", ", ".join(f"{t:.6f}" for t in v.geometric_angles()))
print("trapezoid:", v.is_trapezoid(), " parallelogram:", v.is_parallelogram())

grid = scmap.grid_image(p, n_lines=10, samples_per_line=60)
(out / "grid.svg").write_text(export.grid_to_svg(grid))
(out / "grid.csv").write_text(export.grid_to_csv(grid))
print(f"wrote {len(grid.polylines)} polylines to {out / 'grid.svg'}")

for z in (0.4 + 0.3j, 2.0 + 1.0j, -0.5 + 2.5j):
    w = scmap.sc_forward(p, z)
    back = scmap.sn(p, w)
    print(f"z = {z}:  f(z) = {w:.6f}  sn(f(z)) - z = {abs(back - z):.1e}")
