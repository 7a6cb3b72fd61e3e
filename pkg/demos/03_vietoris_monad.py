"""The upper-set monad on finite posets.

Enumerates upper sets, builds the reverse-containment space, checks the
monad laws across every labeled poset on up to four points, and shows
the irreducible members.
"""

from unitcat import all_posets, is_irreducible, upper_sets, verify_monad_laws, vietoris
from unitcat.posets import antichain, chain, mask_elements, unit_map, vee

print("== upper sets of small posets ==")
for name, P in (("2-chain", chain(2)), ("2-antichain", antichain(2)), ("vee", vee())):
    ups = [mask_elements(a) for a in upper_sets(P)]
    print(f"{name:12s} -> {ups}")

print("\n== the upper-set space of the 2-chain ==")
P = chain(2)
V = vietoris(P)
print("members (ascending bitmask):", [mask_elements(a) for a in V.members])
print("unit sends 0 to", mask_elements(unit_map(P)[0]), "and 1 to", mask_elements(unit_map(P)[1]))

print("\n== monad laws across every labeled poset on <= 4 points ==")
total = 0
for size in range(1, 5):
    batch = all_posets(size)
    for Q in batch:
        report = verify_monad_laws(Q)
        assert report.passed, report.failures
    total += len(batch)
    print(f"size {size}: {len(batch)} posets, all laws hold")
print("total posets checked:", total)

print("\n== irreducible upper sets are the empty one and the principal ones ==")
for a in upper_sets(vee()):
    print(f"{str(mask_elements(a)):12s} irreducible: {is_irreducible(vee(), a)}")
