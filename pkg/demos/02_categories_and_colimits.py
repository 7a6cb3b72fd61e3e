"""Finite [0,1]-categories and their finite colimit structure.

Builds a two-point category with an asymmetric 1/2 gap, a power space,
and the grid chain; then finds copowers, powers and weighted colimits by
carrier scan and runs the cocompleteness audits.
"""

from fractions import Fraction as F

from unitcat import (
    GridChain,
    bottom,
    copower,
    grid_chain_category,
    is_cauchy_complete_desk,
    is_finitely_cocomplete,
    lukasiewicz,
    natural_order,
    power_space,
    quasivariety_audit,
    upower,
    validate_vcategory,
    vcategory,
    vrelation,
    weighted_colimit,
    weighted_diagram,
)
from unitcat.vcat import from_poset, power_functions
from unitcat.posets import antichain

luk = lukasiewicz()

print("== a two-point category with a one-way 1/2 connection ==")
X = vcategory(luk, [["1", "1/2"], ["0", "1"]], labels=("p", "q"))
print(validate_vcategory(X).summary())
print("natural order rows:", natural_order(X))

print("\n== the grid chain Q_4 with structure hom ==")
gc = grid_chain_category(luk, 4)
print(validate_vcategory(gc).summary())
print("bottom element index:", bottom(gc))
print("copower 3/4 (x) 1/2 lands at:", gc.label(copower(gc, 3, F(1, 2))))
print("power   1/4 |^ 1/2 lands at:", gc.label(upower(gc, 1, F(1, 2))))

print("\n== a weighted colimit, found from its defining equation ==")
shape = from_poset(antichain(2), luk)
weight = vrelation(luk, [["1"], ["1/2"]])
diagram = weighted_diagram(shape, (2, 3), weight, gc)   # points 1/2 and 3/4
x0 = weighted_colimit(gc, diagram)
print("colimit of (1/2 weighted 1) v (3/4 weighted 1/2):", gc.label(x0))

print("\n== power spaces are finitely cocomplete ==")
ps = power_space(luk, 2, 2)
print("carrier:", [" ".join(map(str, f)) for f in power_functions(2, 2)][:4], "...")
audit = is_finitely_cocomplete(ps, GridChain(2))
print("bottom/joins/conical/copowers:", audit.has_bottom, audit.has_binary_joins,
      audit.joins_preserved_by_homming, audit.has_all_copowers)
print(quasivariety_audit(ps, GridChain(2)).summary())
print(is_cauchy_complete_desk(gc, 2, GridChain(4)).summary())
