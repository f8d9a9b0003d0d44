"""Built-in willow certificates, checked, lifted to a larger modulus, and searched for.

Run: python demos/willow_certificates.py
"""
from __future__ import annotations

import time

from chibound import builtin_certificate, lift_modulus, make_pattern, search_certificate, verify_certificate

CASES = [
    ("p8bar", "comp-path:8", 5, None),
    ("c5bar", "comp-cycle:5", 5, None),
    ("c6bar", "comp-cycle:6", 5, None),
    ("cycle", "cycle:18", 4, 18),
    ("f6", "fan:6", 5, None),
    ("w6", "wheel:6", 5, None),
]


def main() -> None:
    print("built-in certificates")
    for name, graph, n, length in CASES:
        G = make_pattern(graph)
        cert = builtin_certificate(name, n, length)
        ok, _ = verify_certificate(G, cert)
        line = f"  {name:6} {graph:14} n={n}  nodes={cert.tree.nodes:2}  valid={ok}"
        if name in ("p8bar", "c5bar", "c6bar"):
            lifted = lift_modulus(cert)
            line += f"  lifted to n={lifted.modulus}: {verify_certificate(G, lifted)[0]}"
        print(line)

    print("\nbounded search, up to 3 extra nodes")
    for graph, n in (("cycle:6", 4), ("comp-cycle:7", 4), ("comp-path:9", 5)):
        G = make_pattern(graph)
        start = time.perf_counter()
        cert = search_certificate(G, n, 3)
        took = time.perf_counter() - start
        verdict = "certificate found" if cert else "no certificate in the bounded space"
        print(f"  {graph:14} n={n}: {verdict} ({took:.1f}s)")


if __name__ == "__main__":
    main()
