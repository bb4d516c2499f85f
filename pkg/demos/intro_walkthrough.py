"""Walk through the dims 1,3,3,1 example: every formula and its witnesses."""

from quiverpoly import tableaux as tab
from quiverpoly.engine import Formula, compute
from quiverpoly.peelfs import delete_hom, enumerate_peelables, quiver_constants
from quiverpoly.pipedreams import enumerate_rp, render
from quiverpoly.quivercore import RankArray, codim, lace_from_rank, minimal_lacings, zelevinsky

r = RankArray.from_rows([[1], [1, 3], [1, 2, 3], [0, 1, 1, 1]])
z = zelevinsky(r)
print("dims", r.dims, "codim", codim(r))
print("lace array", {k: v for k, v in lace_from_rank(r).items() if v})
print("v(r) =", z.v)

print("\nminimal lacing diagrams")
for w in minimal_lacings(r):
    print("  ", "  ".join(map(str, w)))

print("\nreduced pipe dreams (+ marks D_Hom)")
for D in enumerate_rp(z.v):
    print(render(D, z.d, z.D_hom), end="\n\n")

print("peelable tableaux and their factor sequences")
for Q in enumerate_peelables(z.D_r):
    print(tab.render(Q).replace("\n", " / "), "->", delete_hom(Q, z))

print("\nquiver constants", quiver_constants(r))
for f in Formula:
    print(f"{f.value:20s}", compute(r, f).value.render(aliases=True))
