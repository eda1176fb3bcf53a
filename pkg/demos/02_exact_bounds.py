"""Exact arithmetic in Q(sqrt d): the root u(x), the bound f_t and its shape."""

from fractions import Fraction

from cliquemax.algebra import compare, gen_binomial, u_of
from cliquemax.kkbounds import f_t, f_t_convexity_check, kk_clique_bound, kk_oracle

u = u_of(2)
print("u(2) =", u, "~", float(u))
print("C(u(2), 2) =", gen_binomial(u, 2), "(recovers x exactly)")
print("u(2) vs 5/2:", compare(u, Fraction(5, 2)).name)

for m in (6, 7, 9, 10):
    bound = kk_clique_bound(m, 3)
    print(f"m={m}: triangle bound {bound} ~ {float(bound):.4f}, exhaustive max on 8 vertices {kk_oracle(m, 3, 8)}")

for t in (4, 5, 6):
    print(f"f_{t}(10) = {f_t(10, t).value} ~ {float(f_t(10, t).value):.4f}")
    report = f_t_convexity_check(t, range(101))
    print(f"  convex on 0..100: {report.convex}, strictly past the knee: {report.strictly_convex_above}")
