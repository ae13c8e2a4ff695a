"""SVG figures of deconed arrangements with their resonant bands."""

import io
import logging
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Polygon

from src.config.settings import Settings, get_settings
from src.services.resonant_bands import resonant_bands, standing_wave
from src.services.spectrum_service import PreparedArrangement

logger = logging.getLogger(__name__)

BAND_COLORS = ("tab:red", "tab:blue", "tab:green", "tab:orange", "tab:purple", "tab:olive")


class SvgRenderer:
    """Render lines clipped to a margin around the bounding box of the vertices."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def _box(self, prepared: PreparedArrangement):
        vertices = prepared.normalized.vertices
        xs = [float(v.x) for v in vertices]
        ys = [float(v.y) for v in vertices]
        width = max(max(xs) - min(xs), 1.0)
        height = max(max(ys) - min(ys), 1.0)
        margin = self.settings.svg_margin
        return (
            min(xs) - margin * width,
            max(xs) + margin * width,
            min(ys) - margin * height,
            max(ys) + margin * height,
        )

    def render(self, prepared: PreparedArrangement, k: Optional[int] = None) -> str:
        """Draw the normalized arrangement; with k, shade the k-resonant bands
        and label the chambers supporting each standing wave.

        Returns:
            SVG document as a string
        """
        matplotlib.rcParams["svg.hashsalt"] = prepared.normalized.parent.name
        x0, x1, y0, y1 = self._box(prepared)
        size = self.settings.svg_width_inches
        fig, ax = plt.subplots(figsize=(size, size))
        ax.set_xlim(x0, x1)
        ax.set_ylim(y0, y1)
        ax.set_aspect("auto")
        ax.axis("off")

        lines = prepared.normalized.lines
        for index, line in enumerate(lines):
            if line.is_vertical:
                x = float(line.crossing)
                xs, ys = [x, x], [y0, y1]
            else:
                slope, intercept = float(line.slope), float(line.intercept)
                xs = [x0, x1]
                ys = [slope * x0 + intercept, slope * x1 + intercept]
            ax.plot(xs, ys, color="black", linewidth=1, zorder=2)
            ax.text(xs[1], ys[1], f"H{line.source}", fontsize=8, clip_on=True, zorder=4)

        if k is not None:
            for band in resonant_bands(prepared.bands, k):
                color = BAND_COLORS[band.index % len(BAND_COLORS)]
                ax.add_patch(
                    Polygon(
                        self._strip(lines[band.lower], lines[band.upper], x0, x1, y0, y1),
                        closed=True,
                        facecolor=color,
                        alpha=0.15,
                        edgecolor="none",
                        zorder=1,
                    )
                )
                wave = standing_wave(band, k)
                for chamber in band.bounded_interior:
                    value = wave.coefficient(chamber)
                    if not value:
                        continue
                    wx, wy = (float(c) for c in chamber.witness)
                    ax.text(
                        wx, wy, f"{band.label}: {value}",
                        color=color, fontsize=7, ha="center", va="center", zorder=5,
                    )
            ax.set_title(f"{prepared.normalized.parent.name}: {k}-resonant bands")

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)
        logger.info(f"Rendered {prepared.normalized.parent.name} with {len(lines)} lines")
        return buffer.getvalue()

    @staticmethod
    def _strip(lower, upper, x0, x1, y0, y1):
        if lower.is_vertical:
            a, b = float(lower.crossing), float(upper.crossing)
            return [(a, y0), (b, y0), (b, y1), (a, y1)]
        corners = []
        for line, xs in ((lower, (x0, x1)), (upper, (x1, x0))):
            slope, intercept = float(line.slope), float(line.intercept)
            corners.extend((x, slope * x + intercept) for x in xs)
        return corners

    def write(self, prepared: PreparedArrangement, path: str, k: Optional[int] = None) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.render(prepared, k))
