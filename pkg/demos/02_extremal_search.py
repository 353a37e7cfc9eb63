"""Exact extremal values n_best(k) for small k, with all witnesses.

The search fixes {0, 1} in every candidate, restricts elements to
[0, n-1], and extends sets in increasing order with coverage-driven
pruning, so the witness lists are provably complete.
"""

from additive_bases import n2, n2k_exact, verify_extremal

print(" k   n_best   witnesses (complete list)            nodes")
for k in range(1, 9):
    res = n2k_exact(k)
    assert res.exhaustive
    shown = ", ".join("{" + ",".join(map(str, w.elements)) + "}" for w in res.witnesses)
    print(f"{k:2d}   {res.n_best:5d}    {shown:40s} {res.nodes_explored}")

# Certificates are cheap to check independently of the search.
res = n2k_exact(5)
best = res.witnesses[0]
print(f"\nwitness {best.elements} for k=5:")
print(f"  verify_extremal(..., {res.n_best})     -> {verify_extremal(best, res.n_best)}")
print(f"  verify_extremal(..., {res.n_best + 1}) -> {verify_extremal(best, res.n_best + 1)}")
print(f"  recomputed n(2,A) = {n2(best)}")
