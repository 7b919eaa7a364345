"""Figure rendering for audit reports.

Charges are exact rationals; the plots cast to float for display only.
matplotlib is imported lazily so library users without a figures request
never pay for it.
"""

from __future__ import annotations

from pathlib import Path

from .discharging import ChargeLedger


def render_audit_figures(
    ledgers: tuple[ChargeLedger, ...], outdir: str | Path
) -> list[Path]:
    """Write charge-evolution and final-distribution figures; returns paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    kinds = (
        ("vertex", lambda l: l.vertex_charge),
        ("face", lambda l: l.face_charge),
        ("bank", lambda l: l.bank_charge),
    )

    fig, axes = plt.subplots(1, 3, figsize=(12, 4), sharey=False)
    for ax, (kind, pick) in zip(axes, kinds):
        phases = [l.phase for l in ledgers]
        for i in sorted(pick(ledgers[0])):
            series = [float(pick(l)[i]) for l in ledgers]
            ax.plot(range(len(ledgers)), series, marker=".", alpha=0.5, lw=0.8)
        ax.set_xticks(range(len(ledgers)))
        ax.set_xticklabels(phases, rotation=30, fontsize=8)
        ax.axhline(0.0, color="k", lw=0.6)
        ax.set_title(f"{kind} charges")
    fig.suptitle("charge evolution through the rules")
    fig.tight_layout()
    path = outdir / "charge_evolution.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    final = ledgers[-1]
    values = []
    for kind, pick in kinds:
        for i in sorted(pick(final)):
            values.append(float(pick(final)[i]))
    ax.bar(range(len(values)), values, color="tab:blue")
    ax.axhline(0.0, color="k", lw=0.6)
    ax.set_title("final charges")
    ax.set_xticks([])
    ax.set_ylabel("charge")
    fig.tight_layout()
    path = outdir / "final_charges.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)
    return written
