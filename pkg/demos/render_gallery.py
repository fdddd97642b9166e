"""Render a small gallery of configurations to SVG.

Writes four files into demos/out/: a canonical diamond, a perturbed patch, a
ring, and a diamond with a pendant wire. Rhombic faces are filled solid,
other faces hatched; orientation ticks are drawn on every disc.
"""

import math
from pathlib import Path

import numpy as np

from ocl.canonical import canonical
from ocl.config import Configuration, rhombic_perturb
from ocl.lattice import embed
from ocl.render import render_svg
from ocl.search import reference_minimizer

GAMMA = math.sqrt(3) / 2


def main() -> None:
    out = Path(__file__).parent / "out"
    out.mkdir(exist_ok=True)

    diamond = canonical(16)
    base = canonical(9)
    pendant = Configuration(
        np.vstack([base.pos, embed([(0, -1)])[0]]),
        np.vstack([base.ori, base.ori[0]]),
    )
    gallery = {
        "diamond16.svg": (diamond, GAMMA),
        "perturbed16.svg": (rhombic_perturb(diamond, 0.25), GAMMA),
        "ring12.svg": (reference_minimizer(12, 0.95), 0.95),
        "pendant10.svg": (pendant, GAMMA),
    }
    for name, (config, gamma) in gallery.items():
        path = out / name
        path.write_text(render_svg(config, gamma))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
