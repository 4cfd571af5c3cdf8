from __future__ import annotations

from liecharpoly.exact_poly import MultiPoly
from liecharpoly.orbital_factor import orbital_factor
from liecharpoly.reference_forms import (a2_fifteen, a2_generic_factor, b2_generic_coefficients,
                                         discrepancies, sl3_p_from_entries)

p = MultiPoly.variable("e2")


def test_discrepancy_inventory():
    found = {(d.source, d.mu, d.exponent) for d in discrepancies()}
    assert found == {
        ("sl3 line factor", (1, 0), 1),
        ("sl3 line factor", (0, 1), 1),
        ("sl3 15-dimensional module", (0, 4), 1),
        ("sl3 15-dimensional module", (2, 0), 1),
        ("sl3 15-dimensional module", (0, 1), 1),
        ("o5 line factor", (1, 0), None),
        ("o5 line factor", (1, 0), 0),
        ("o5 line factor", (0, 1), None),
    }


def test_p_sign_flip_resolves_the_sl3_line_discrepancies():
    for mu, printed in a2_fifteen().items():
        flipped = printed.substitute({"e2": -p})
        computed = orbital_factor("A2", mu).poly
        assert computed in (printed, flipped)


def test_generic_forms_match():
    assert orbital_factor("A2", (1, 1), symbolic=True).poly == a2_generic_factor()
    b2 = orbital_factor("B2", (1, 1), symbolic=True).poly.coefficients("z0")
    for k, printed in b2_generic_coefficients().items():
        assert b2[k] == printed


def test_p_from_entries_is_the_second_elementary_symmetric_function():
    z = {f"z{i}{j}": MultiPoly.variable(f"z{i}{j}") for i in range(1, 4) for j in range(1, 4)}
    diag = {"z12": 0, "z13": 0, "z21": 0, "z23": 0, "z31": 0, "z32": 0}
    e2 = sl3_p_from_entries(z).substitute(diag)
    # z11 h1 + z22 h2 has diagonal (z11, z22 - z11, -z22)
    a, b, c = z["z11"], z["z22"] - z["z11"], -z["z22"]
    assert e2 == a * b + a * c + b * c


def test_json_records():
    d = discrepancies()[0].to_json()
    assert {"source", "mu", "exponent", "printed", "computed", "note"} <= set(d)
