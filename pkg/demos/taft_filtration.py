"""Coradical filtration of Taft algebras T_N and the projection used for the layers.

Run: python3 demos/taft_filtration.py [N ...]
"""
import sys

from hopfkit import catalog
from hopfkit.coalgebra import coideal_projection, filtration
from hopfkit.exact_linalg.matrix import kernel
from hopfkit.hopf import antipode_order, grouplike_group

for N in [int(a) for a in sys.argv[1:]] or [2, 3, 4]:
    H = catalog.build("taft", {"N": N})
    f = filtration(H.coalgebra)
    killed = kernel(coideal_projection(H.coalgebra))
    print(f"T_{N}: dim {H.dim}, G = {grouplike_group(H).describe()}, ord S = {antipode_order(H)}")
    print(f"  stages {f.stage_dims}, layers {f.layer_dims}, projection kernel dim {killed.dim}")
    for n, table in sorted(f.isotypic.items()):
        print(f"  P_{n}: {len(table)} nonzero isotypic components, total dim {sum(table.values())}")
