"""Density profiles, entropy estimates and deficiency samples for the built-in sets."""
import argparse
from dataclasses import dataclass
from pathlib import Path

from infoflow.density import BUILTIN_SETS, density_profile, index_of, randomness_deficiency, shannon_entropy_estimate


@dataclass
class DensityConfig:
    max_n: int = 10**6
    out: Path = Path("results/density")


def run(cfg: DensityConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    rows = ["set,lower,upper,natural,entropy,deficiency_at_1000th"]
    for name, A in sorted(BUILTIN_SETS.items()):
        prof = density_profile(A, cfg.max_n)
        (cfg.out / f"{name}.csv").write_text(prof.to_csv())
        nat = "" if prof.natural is None else f"{prof.natural:.6f}"
        d = randomness_deficiency(A, index_of(A, 1000))
        rows.append(
            f"{name},{prof.lower:.6f},{prof.upper:.6f},{nat},{shannon_entropy_estimate(A, cfg.max_n):.6f},{d:.4f}"
        )
    (cfg.out / "summary.csv").write_text("\n".join(rows) + "\n")
    print("\n".join(rows))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=DensityConfig.max_n)
    ap.add_argument("--out", type=Path, default=DensityConfig.out)
    a = ap.parse_args()
    run(DensityConfig(a.max_n, a.out))
