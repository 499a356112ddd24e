"""Length bounds, the curve census, and the small-group lemma searcher.

The attainable length at each field size comes from maximizing the
construction cap over all admissible group orders; small fields are then
swept curve by curve to confirm every produced length respects #E / 2.
Finally the subset-sum lemma behind that length cap is probed
exhaustively on tiny groups, where its largeness hypothesis fails and
honest counterexamples appear.
"""

from ellcode import (AbelianGroupSpec, bound_table, lemma_max_search,
                     max_length_probe, realized_orders, feasible_orders)

print("length bounds (q, case, bound, achieved):")
for row in bound_table([16, 32, 64, 256, 25, 49, 289], achieve=True):
    print(f"  q={row.q:>3} {row.case:<14} bound {row.bound_n:>3} "
          f"achieved {row.achieved_n}")

print("\nadmissible orders equal realized orders on small fields:")
for q in (2, 3, 4, 5, 7, 8, 9):
    realized = realized_orders(q)
    feasible = sorted({n for n, _, _ in feasible_orders(q)})
    print(f"  q={q}: {realized} {'==' if realized == feasible else '!='} admissible")

print("\nper-curve probe over GF(8): max constructed n vs #E/2")
for row in max_length_probe(8):
    if row["certificates"]:
        print(f"  {row['curve']:<12} #E={row['order']:>2} "
              f"max n={row['max_n']} <= {row['bound']} ok={row['ok']}")

print("\nsubset-sum lemma on tiny groups (outside the largeness hypothesis):")
for d1, d2, n in [(1, 6, 4), (2, 2, 4), (1, 12, 8), (2, 6, 8)]:
    hits = lemma_max_search(AbelianGroupSpec(d1, d2), n)
    label = f"Z/{d2}" if d1 == 1 else f"Z/{d1} x Z/{d2}"
    print(f"  {label:<12} n={n:>2}: {len(hits)} counterexample(s)")
    for combo, g in hits[:2]:
        print(f"      A = {combo}  g = {g}")
