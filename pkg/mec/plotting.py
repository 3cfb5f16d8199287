"""Figure of the sketches, the profile and the distributions built against it."""

import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.axes import Axes  # noqa: E402

from mec.bounds.profile import ProfileCurve, major_profile, profile_curve, sketch_points  # noqa: E402
from mec.core.models import InstanceSet  # noqa: E402
from mec.greedy.coupler import greedy_sizes  # noqa: E402

logger = logging.getLogger(__name__)


def _draw(ax: Axes, pc: ProfileCurve, label: str, **style: object) -> None:
    ax.step(pc.xs, pc.ys, where="pre", label=label, **style)  # type: ignore[arg-type]


def plot_instance(s: InstanceSet, out: str | Path, title: str | None = None) -> Path:
    """Draw every input sketch, the profile, the greedy sketch and the Major-Profile sketch."""
    pc = profile_curve(s)
    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        for k, d in enumerate(s.dists):
            _draw(ax, sketch_points(d), f"p{k + 1}", alpha=0.45, linewidth=1.0)
        _draw(ax, pc, "profile", color="black", linewidth=2.2)
        _draw(ax, sketch_points(greedy_sizes(s)), "greedy", linestyle="--", color="tab:red")
        _draw(ax, sketch_points(major_profile(pc)), "major-profile", linestyle=":",
              color="tab:green", linewidth=2.0)
        ax.set_xlim(0.0, pc.mass)
        ax.set_ylim(0.0, None)
        ax.set_xlabel("x (mass of smaller states)")
        ax.set_ylabel("state mass")
        if title:
            ax.set_title(title)
        ax.legend()
        fig.tight_layout()

        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
    logger.info(f"Saved sketch plot to {path}")
    return path
