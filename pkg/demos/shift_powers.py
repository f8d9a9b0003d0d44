"""Shift powers of oriented graphs: the 4-vertex path and the Descartes graphs.

Run: python demos/shift_powers.py
"""
from __future__ import annotations

from chibound import (
    build_descartes, clique_number, extract_from_shift, induced, min_direction_changes,
    shift_power, verify_acyclic_properties, verify_certificate, verify_shift_claims,
)
from chibound.constructions import directed_path


def main() -> None:
    path = directed_path(4)
    for p in (2, 3):
        Gp = shift_power(path, p)
        print(f"path on 4, p={p}: edges {Gp.edges()}  omega={clique_number(Gp)}")

    for k in (2, 3):
        og = build_descartes(k)
        report = verify_acyclic_properties(og, k)
        print(f"\nDescartes level {k}: {og.n} vertices, {len(og.arcs)} arcs")
        print("  contract:", {key: report.to_dict()[key] for key in ("A1", "A2", "A3", "A4")})
        if og.graph.num_edges > og.n - 1:
            print("  fewest direction changes on a cycle:", min_direction_changes(og))
        for p in (2, 3):
            if p > k:
                continue
            claims = verify_shift_claims(og, p, k=k)
            print(f"  p={p}: omega(G_p)={claims.omega}, subgraphs checked={claims.checked}, "
                  f"violations={len(claims.violations)}")

    og = build_descartes(3)
    X = [0, 3, 4, 5, 6]
    cert = extract_from_shift(og, 2, X)
    ok, _ = verify_certificate(induced(shift_power(og, 2), X), cert)
    print(f"\nwillow certificate for G_2[{X}] extracted from the orientation: valid={ok}")


if __name__ == "__main__":
    main()
