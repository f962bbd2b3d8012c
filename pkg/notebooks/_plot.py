"""Optional plotting helper shared by the notebooks.

Figures are written to ``$SFIRATE_FIGURE_DIR`` (default ``./figures``) when
matplotlib is installed; otherwise plotting is skipped silently.
"""

import os
from pathlib import Path

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:  # pragma: no cover
    plt = None


def figure_path(name):
    root = Path(os.environ.get("SFIRATE_FIGURE_DIR", "figures"))
    root.mkdir(parents=True, exist_ok=True)
    return root / name


def save(fig, name):
    path = figure_path(name)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    print(f"wrote {path}")
