#!/usr/bin/env python3
"""Regenerate the plot-ready data behind the bundled example scenarios.

Writes three CSV files into --outdir:

* junior_value_vs_sigma_v100.csv -- claim values over volatility for the
  solvent firm (V=100, faces 60/10): junior value decreasing in risk.
* junior_value_vs_sigma_v62.csv  -- the same sweep for the distressed
  firm (V=62): hump-shaped junior value peaking near sigma = 26.2%.
* chosen_risk_vs_asset_value.csv -- equilibrium risk chosen by junior
  creditors over asset value, for junior shares of 10/20/30% of a total
  debt face of 100 at a 10% pre-shift volatility.
"""

import argparse
from pathlib import Path

from subdebt import CapitalStructure, sweep_sigma, sweep_structure
from subdebt.sweeps import write_structure_csv, write_sweep_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("figure_data"))
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for asset_value, stem in ((100.0, "v100"), (62.0, "v62")):
        cs = CapitalStructure(asset_value, 60.0, 10.0, 0.10, 1.0, 0.01)
        table = sweep_sigma(cs, 0.01, 0.8, 200)
        path = args.outdir / f"junior_value_vs_sigma_{stem}.csv"
        with path.open("w") as stream:
            write_sweep_csv(table, stream)
        print(f"wrote {path}")

    tables = sweep_structure(
        total_face=100.0,
        junior_proportions=[0.10, 0.20, 0.30],
        v_lower=50.0,
        v_upper=100.0,
        steps=251,
        initial_sigma=0.10,
        maturity=1.0,
        rate=0.01,
    )
    path = args.outdir / "chosen_risk_vs_asset_value.csv"
    with path.open("w") as stream:
        write_structure_csv(tables, stream)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
