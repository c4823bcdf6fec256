"""Normal forms of the antipode on the simple blocks of the dual of u_q(sl2).

Run: python3 demos/antipode_blocks.py
"""
from hopfkit import catalog
from hopfkit.coalgebra import simple_decomposition
from hopfkit.comatrix import verify_antipode_on_block
from hopfkit.exact_linalg.cyclotomic import format_coeff

H = catalog.build("uq_sl2_dual")
print(f"dual of u_q(sl2): dim {H.dim} over Q(zeta_{H.m})")
for block in simple_decomposition(H.coalgebra):
    rep = verify_antipode_on_block(H, block)
    print(f"\nblock {rep.block_index}: M*({rep.d}), ord S = {rep.order_S}")
    print("  S^2 eigenvalue ratios:", ", ".join(format_coeff(w) for w in rep.square.omegas))
    if rep.anti is None:
        print("  " + rep.note)
        continue
    a = rep.anti
    print(f"  anti form: a_+ = {a.a_plus}, a_- = {a.a_minus}, "
          f"lambdas = {[format_coeff(lam) for _, lam in a.blocks]}")
    if a.stefan_omega is not None:
        print("  d = 2, omega =", format_coeff(a.stefan_omega))
