"""Bare-bones SVG scatter plots for the spectrum figures (no plotting dependency)."""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=60, right=20, top=30, bottom=45)


@dataclass
class Scatter:
    title: str
    xlabel: str
    ylabel: str
    points: list[tuple[float, float]] = field(default_factory=list)
    vlines: list[tuple[float, str]] = field(default_factory=list)  # (x, colour)
    markers: list[tuple[float, float]] = field(default_factory=list)  # highlighted points
    xlim: tuple[float, float] | None = None
    ylim: tuple[float, float] | None = None


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    step = (hi - lo) / count
    return [lo + i * step for i in range(count + 1)]


def render(fig: Scatter) -> str:
    xs = [x for x, _ in fig.points] + [x for x, _ in fig.vlines] + [x for x, _ in fig.markers]
    ys = [y for _, y in fig.points] + [y for _, y in fig.markers]
    x0, x1 = fig.xlim or (min(xs, default=0.0), max(xs, default=1.0))
    y0, y1 = fig.ylim or (min(ys, default=0.0), max(ys, default=1.0))
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def sx(x):
        return MARGIN["left"] + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return MARGIN["top"] + (1 - (y - y0) / (y1 - y0)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="18" text-anchor="middle" font-size="13">{escape(fig.title)}</text>',
        f'<rect x="{MARGIN["left"]}" y="{MARGIN["top"]}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x0, x1):
        out.append(f'<text x="{sx(t):.1f}" y="{HEIGHT - MARGIN["bottom"] + 15}" text-anchor="middle">{t:.2f}</text>')
    for t in _ticks(y0, y1):
        out.append(f'<text x="{MARGIN["left"] - 6}" y="{sy(t) + 4:.1f}" text-anchor="end">{t:.3g}</text>')
    out.append(f'<text x="{WIDTH / 2:.1f}" y="{HEIGHT - 8}" text-anchor="middle">{escape(fig.xlabel)}</text>')
    out.append(f'<text x="14" y="{HEIGHT / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 14 {HEIGHT / 2:.1f})">{escape(fig.ylabel)}</text>')
    for x, colour in fig.vlines:
        if x0 <= x <= x1:
            out.append(f'<line x1="{sx(x):.2f}" y1="{MARGIN["top"]}" x2="{sx(x):.2f}" '
                       f'y2="{MARGIN["top"] + ph}" stroke="{colour}" stroke-width="1"/>')
    for x, y in fig.points:
        out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2" fill="#1f4e9c"/>')
    for x, y in fig.markers:
        out.append(f'<text x="{sx(x):.2f}" y="{sy(y) + 4:.2f}" text-anchor="middle" fill="green" font-size="14">*</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def spectrum_figure(report) -> Scatter:
    """Eigenvalue (x) against representation index (y), with the leading value and Ramanujan bound marked."""
    pts = [(float(v), i + 1) for i, s in enumerate(report.spectra) for v in s]
    kind = "normalized" if report.normalized else "un-normalized"
    top = 1.0 if report.normalized else float(report.degree)
    lo = -top
    return Scatter(
        title=f"Cayley spectrum, {report.set_name}, SL2(Z/{report.p}^{report.n}) ({kind})",
        xlabel="eigenvalue", ylabel="representation index",
        points=pts, vlines=[(report.lambda1, "blue"), (report.ramanujan, "red"), (-report.ramanujan, "red")],
        xlim=(lo, top), ylim=(0, len(report.spectra) + 1),
    )


def schreier_figure(graph, normalized: bool = True) -> Scatter:
    deg = float(graph.spectrum[0]) or 1.0
    scale = 1 / deg if normalized else 1.0
    pts = [(float(v) * scale, 1.0) for v in graph.spectrum]
    bound = 2 * (deg - 1) ** 0.5 * scale
    return Scatter(title=f"Schreier graph on P^1, {graph.set_name} ({graph.size} vertices)",
                   xlabel="eigenvalue", ylabel="", points=pts,
                   vlines=[(graph.lambda1 * scale, "blue"), (bound, "red"), (-bound, "red")],
                   xlim=(-1.0 if normalized else -deg, 1.0 if normalized else deg), ylim=(0, 2))


def sweep_figure(sweep) -> Scatter:
    """Normalised lambda_1 per random pair (x) by trial (y); the mean is starred."""
    pts = [(v, i + 1) for i, v in enumerate(sweep.normalized)]
    mean = sweep.mean / sweep.degree
    bound = 2 * (sweep.degree - 1) ** 0.5 / sweep.degree
    return Scatter(title=f"Random pairs, Schreier graph, SL2(Z/{sweep.p}^{sweep.n})",
                   xlabel="normalized second eigenvalue", ylabel="trial",
                   points=pts, vlines=[(1.0, "red"), (bound, "red")],
                   markers=[(mean, len(pts) / 2)], xlim=(0.5, 1.02), ylim=(0, len(pts) + 1))
