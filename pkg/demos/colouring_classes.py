"""Colouring graphs from the forbidden-pattern classes, with the budgets each run certifies.

Run: python demos/colouring_classes.py
"""
from __future__ import annotations

from chibound import (
    Graph, bowtie_partition, color_bowtie_free, color_lollipop_free, color_mkt_free,
    color_pineapple_free, make_pattern, substitute,
)


def show(label, result) -> None:
    col, report = result
    print(f"  {label:36} colours={col.count:2}  budget={report.bound_value}  ({report.bound_name})")


def main() -> None:
    petersen = make_pattern("petersen")
    K6 = Graph.complete(6)
    print("class colourers")
    show("K6, 2K3-free", color_mkt_free(K6, 2, 3))
    show("C5, paw-free", color_pineapple_free(make_pattern("cycle:5"), 3, 1))
    show("Petersen, bowtie-free", color_bowtie_free(petersen))

    # a 3-lollipop-free graph with a 2K3 module: the colourer splits it off
    G = substitute(make_pattern("path:4"), 1, make_pattern("twoK:3"))
    col, report = color_lollipop_free(G, 3)
    print(f"  {'P4 with a 2K3 module, lollipop-free':36} colours={col.count:2}  "
          f"budget={report.bound_value}  substitutions={report.inputs['substitutions']}")

    print("\nbowtie partition of K5")
    part = bowtie_partition(Graph.complete(5))
    for block, tag in zip(part.blocks, part.tags):
        print(f"  {sorted(block)}  {tag}")


if __name__ == "__main__":
    main()
