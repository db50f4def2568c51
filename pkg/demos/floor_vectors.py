"""Floor vectors: eigenvalues on the first floor, and a weight where only a
signed combination of higher-floor vectors lands in the module.

The first half takes a small dominant weight, prints its integer grid, and
confirms that each defined first-floor vector is scaled by its grid entry
under the diagonal-difference operator — the zero cell giving the zero
vector.  The second half reproduces the equal-entry phenomenon at (2,2):
each paired family alone refuses the defect division, while one signed
combination divides, is polynomial, and is primitive.
"""

from superinduce.floors_primitives import (
    divide_floor,
    fe_add,
    fe_eq,
    fe_neg,
    fe_scale,
    floor_is_polynomial,
    is_primitive,
    phi_floor,
    pi_IJ,
    pi_IJ_raw,
    pi_ij,
    search_module_combinations,
)
from superinduce.linkage import omega, omega_grid
from superinduce.superpoly import UsageError, ambient
from superinduce.weights_tableaux import make_weight, render_weight


def eigenvalue_walk():
    amb = ambient(2, 2)
    w = make_weight((2, 1), (1, 0))
    print(f"weight {render_weight(w)} has grid {omega_grid(w)}")
    for i in (1, 2):
        for j in (1, 2):
            try:
                vec = pi_ij(amb, w, i, j)
            except UsageError as exc:
                print(f"  cell ({i},{j}): undefined ({exc})")
                continue
            value = omega(w, i, j)
            scaled = fe_eq(phi_floor(vec), fe_scale(vec, value))
            tag = "vanishes" if value == 0 else f"eigenvalue {value}"
            print(f"  cell ({i},{j}): {tag}, exact {scaled}")
            assert scaled
    print()


def equal_entry_combination():
    amb = ambient(2, 2)
    w = make_weight((3, 3), (1, 0))
    I = (1, 2)
    raw_a, defect = pi_IJ_raw(amb, w, I, (1, 2))
    raw_b, _ = pi_IJ_raw(amb, w, I, (2, 1))
    print(f"weight {render_weight(w)}, families {I}|(1,2) and {I}|(2,1):")
    print(f"  single families in the module: "
          f"{pi_IJ(amb, w, I, (1, 2)) is not None}, "
          f"{pi_IJ(amb, w, I, (2, 1)) is not None}")
    combo = divide_floor(fe_add(fe_neg(raw_a), fe_neg(raw_b)), defect)
    assert combo is not None
    print(f"  signed combination divides: True, "
          f"polynomial {floor_is_polynomial(combo)}, primitive {is_primitive(combo)}")
    hits = search_module_combinations([raw_a, raw_b], defect)
    print(f"  bounded search finds multipliers {[coeffs for coeffs, _ in hits]}")


if __name__ == "__main__":
    eigenvalue_walk()
    equal_entry_combination()
