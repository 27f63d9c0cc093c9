"""Brute-force classification: enumerate every invariant submodule of the
ambient module with the requested subspace and quotient types, and sort
the survivors into isomorphism classes by hom-dimension fingerprints
against the catalog of small indecomposables."""

from lrlab.nilmod import direct_sum, realize_picket, realize_pole
from lrlab.oracle import enumerate_submodules, iso_fingerprint, s4_catalog
from lrlab.poles import Pole
from lrlab.tableaux import Shape, enumerate_tableaux, reading_word

catalog = s4_catalog(2)
print("catalog objects:", [name for name, _ in catalog])

# Two submodule types in N_(4,3,1): one isomorphism class per tableau.
two = enumerate_submodules(Shape((3, 1), (4, 3, 1), (3, 1)), 2)
print("\nshape (3,1)/(4,3,1)/(3,1):", two.total_submodules, "submodules")
for cls in two.classes:
    print("  word", reading_word(cls.tableau), "count", cls.submodule_count)

# The five-class example: 96 submodules, five classes spread 2/2/1 over
# the three tableaux.
five_shape = Shape((3, 1), (4, 3, 2, 1), (3, 2, 1))
five = enumerate_submodules(five_shape, 2)
print("\nshape (3,1)/(4,3,2,1)/(3,2,1):", five.total_submodules, "submodules,",
      len(five.classes), "classes")
for t in enumerate_tableaux(five_shape):
    print("  word", reading_word(t), "->", len(five.classes_of(t)), "classes")

# Fingerprints identify the classes with explicit direct sums.
M1 = direct_sum(realize_picket(4, 3, 2), realize_picket(3, 0, 2),
                realize_picket(2, 0, 2), realize_picket(1, 1, 2))
M12 = direct_sum(realize_pole(Pole((0, 2, 3), (4, 1)), 2),
                 realize_picket(3, 0, 2), realize_picket(2, 1, 2))
fp1, fp12 = iso_fingerprint(M1, catalog), iso_fingerprint(M12, catalog)
census_fps = {cls.fingerprint for cls in five.classes}
print("\nM1 found in census:", fp1 in census_fps)
print("M12 found in census:", fp12 in census_fps)
print("M1 and M12 distinguished:", fp1 != fp12)
