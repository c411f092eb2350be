#!/usr/bin/env python3
"""Tabulate every catalog induction: module, reduced dimension, induced
dimension, decomposition and the symbolic module label.

The parameter grids cover the distinguished points of each family plus a
few generic ones, so the table shows both the surviving inductions and
the collapses to zero.
"""

from fractions import Fraction

from zhuind import catalog
from zhuind.induct import induce

F = Fraction

GRIDS = {
    "heis_to_va1": [("heis_mod", (s,)) for s in (F(0), F(1), F(-1), F(2), F(5, 2))],
    "vb_to_va1": [("vb_mod", (s,)) for s in (F(0), F(1), F(-1), F(2))],
    "vir_to_va1": [("vir_mod", (k,)) for k in (F(0), F(1, 4), F(1), F(3, 7))],
    "va1_to_va2": [("va1_trivial", ()), ("va1_L_half", ())],
    "heis_to_va2": [("heis_mod", (s,)) for s in (F(0), F(1), F(2))],
    "vp_to_va2": [
        (fam, (t,))
        for fam in ("vp_mod_U0", "vp_mod_Uhalf")
        for t in (F(0), F(1), F(-1), F(1, 2), F(-1, 2), F(3))
    ],
}


def main() -> None:
    for mor_id, grid in GRIDS.items():
        m = catalog.morphism(mor_id)
        kernel = list(catalog.kernel_candidates(mor_id))
        irreducibles = catalog.irreducibles(m.target.name)
        print(f"== induction along {mor_id} ({m.source.name} -> {m.target.name})")
        for fam, params in grid:
            module = catalog.module(fam, params)
            r = induce(m, kernel, module, irreducibles, catalog.VOA_LABELS)
            print(
                f"   {module.label:16s} reduced dim {r.reduced_dim}  ->  dim {r.dim:2d}   "
                f"{str(r.decomposition):42s} {r.voa_label}"
            )
        print()


if __name__ == "__main__":
    main()
