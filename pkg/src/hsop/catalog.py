"""Curated invariants and covariants of binary forms of degree 2..8.

Entries are transvectant chains with declared (degree, order). They are
checked for SL(2)-invariance and non-vanishing by the test-suite rather than
against closed formulas; they need not coincide with any particular
classical choice of generators.
"""
from __future__ import annotations

from hsop.chains import InvariantChain

__all__ = ["CATALOG", "catalog_for", "get_chain", "SEPTIMIC_ENV"]

# covariants of the septimic used throughout the n = 7 entries
SEPTIMIC_ENV = {
    "psi": "(f,f)_6",
    "psi1": "(f,f)_2",
    "psi2": "(f,f)_4",
    "psi3": "(psi2,psi2)_4",
}

_QUINTIC_ENV = {"H": "(f,f)_2", "i": "(f,f)_4", "j": "(f,i)_2", "tau": "(j,j)_2", "A": "(H,H)_2"}
_HESSIAN = {"H": "(f,f)_2"}

# (name, n, expression, degree, order, environment)
_ENTRIES = [
    ("n2.disc", 2, "(f,f)_2", 2, 0, None),
    ("n2.disc_sq", 2, "(f,f)_2^2", 4, 0, None),
    ("n3.hessian", 3, "H", 2, 2, _HESSIAN),
    ("n3.disc", 3, "(H,H)_2", 4, 0, _HESSIAN),
    ("n4.i", 4, "(f,f)_4", 2, 0, None),
    ("n4.j", 4, "(f,H)_4", 3, 0, _HESSIAN),
    ("n4.i2", 4, "(f,f)_4^2", 4, 0, None),
    ("n4.ij", 4, "(f,f)_4 * (f,H)_4", 5, 0, _HESSIAN),
    ("n4.j2", 4, "(f,H)_4^2", 6, 0, _HESSIAN),
    ("n4.i2j", 4, "(f,f)_4^2 * (f,H)_4", 7, 0, _HESSIAN),
    ("n5.i", 5, "i", 2, 2, _QUINTIC_ENV),
    ("n5.deg4", 5, "(i,i)_2", 4, 0, _QUINTIC_ENV),
    ("n5.deg8", 5, "(tau,i)_2", 8, 0, _QUINTIC_ENV),
    ("n5.deg12", 5, "(A,(A,A)_4)_8", 12, 0, _QUINTIC_ENV),
    ("n5.deg18", 5, "(i,((A,A)_2,(A,(H,H)_4)_1)_10)_2", 18, 0, _QUINTIC_ENV),
    ("n6.deg2", 6, "(f,f)_6", 2, 0, None),
    ("n6.deg4", 6, "(H,H)_8", 4, 0, _HESSIAN),
    ("n6.deg6", 6, "(H,(H,H)_4)_8", 6, 0, _HESSIAN),
    ("n6.deg10", 6, "(H,((H,H)_2,(H,H)_2)_8)_8", 10, 0, _HESSIAN),
    ("n6.deg15", 6, "(((f,H)_1,(H,H)_2)_6,((H,H)_2,(H,H)_2)_6)_12", 15, 0, _HESSIAN),
    ("n7.psi", 7, "psi", 2, 2, SEPTIMIC_ENV),
    ("n7.psi1", 7, "psi1", 2, 10, SEPTIMIC_ENV),
    ("n7.psi2", 7, "psi2", 2, 6, SEPTIMIC_ENV),
    ("n7.psi3", 7, "psi3", 4, 4, SEPTIMIC_ENV),
    ("n7.deg4", 7, "(psi,psi)_2", 4, 0, SEPTIMIC_ENV),
    ("n7.deg8a", 7, "(psi2,psi^3)_6", 8, 0, SEPTIMIC_ENV),
    ("n7.deg8b", 7, "(psi3,psi^2)_4", 8, 0, SEPTIMIC_ENV),
    ("n7.deg12", 7, "(psi1,psi^5)_10", 12, 0, SEPTIMIC_ENV),
    ("n7.deg14a", 7, "((psi2,psi3)_1,psi^4)_8", 14, 0, SEPTIMIC_ENV),
    ("n7.deg14b", 7, "(f*(f,psi2)_5,psi^5)_10", 14, 0, SEPTIMIC_ENV),
    ("n7.deg18a", 7, "((psi1,psi2)_1,psi^7)_14", 18, 0, SEPTIMIC_ENV),
    ("n7.deg18b", 7, "(f*((f,psi2)_5,psi2)_2,psi^6)_12", 18, 0, SEPTIMIC_ENV),
    ("n8.deg2", 8, "(f,f)_8", 2, 0, None),
    ("n8.deg3", 8, "(f,(f,f)_4)_8", 3, 0, None),
    ("n8.deg4", 8, "(H,H)_12", 4, 0, _HESSIAN),
    ("n8.deg5", 8, "(f,(H,H)_8)_8", 5, 0, _HESSIAN),
    ("n8.deg6", 8, "(H,(H,H)_6)_12", 6, 0, _HESSIAN),
    ("n8.deg7", 8, "((f,H)_4,(H,H)_6)_12", 7, 0, _HESSIAN),
]

CATALOG: dict[str, InvariantChain] = {
    name: InvariantChain.build(name, n, expr, deg, order, env) for name, n, expr, deg, order, env in _ENTRIES
}


def catalog_for(n: int, invariants_only: bool = True) -> list[InvariantChain]:
    return [c for c in CATALOG.values() if c.n == n and (c.is_invariant or not invariants_only)]


def get_chain(name: str) -> InvariantChain:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog chain {name!r}; known: {', '.join(sorted(CATALOG))}") from None
