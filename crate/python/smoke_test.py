"""Smoke test for the symcirc extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import numpy as np
from scipy.linalg import expm

import symcirc

PAULI = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
}


def dense(letters):
    out = np.eye(1)
    for l in letters:
        out = np.kron(out, PAULI[l])
    return out


def main():
    xy = symcirc.PauliString("XY")
    assert str(xy * symcirc.PauliString("YX")) == "ZZ"
    assert not symcirc.PauliString("XI").commutes_with(symcirc.PauliString("ZI"))
    assert np.allclose(np.array(xy.to_matrix()), dense("XY"))

    dims = [len(symcirc.build_basis(symcirc.SymmetryGroup.preset("full_swap", n))) for n in range(1, 6)]
    assert dims == [3, 9, 19, 34, 55], dims

    s3 = symcirc.SymmetryGroup.preset("full_swap", 3)
    assert s3.order == 6 and symcirc.burnside_dimension(s3) == 19
    pairs, residual, passed = symcirc.closure_report(s3)
    assert (pairs, passed) == (171, True) and residual < 1e-10

    h = symcirc.PauliSum.from_letters("XX ZZ")
    u = np.array(symcirc.exp_generator(h, 0.4))
    assert np.allclose(u, expm(-0.2j * (dense("XX") + dense("ZZ"))), atol=1e-12)
    circuit = symcirc.synthesize(h, 0.4)
    assert np.allclose(np.array(symcirc.circuit_to_matrix(circuit)), u, atol=1e-12)

    a = symcirc.random_invariant(s3, seed=5)
    ok, defect = symcirc.is_invariant(a, s3)
    assert ok, defect
    mid = symcirc.connectedness_path(a, 0.5)
    assert symcirc.is_invariant(mid, s3, 1e-8)[0]
    su = np.array(symcirc.project_to_su(a))
    assert abs(np.linalg.det(su) - 1) < 1e-10

    try:
        symcirc.synthesize(symcirc.PauliSum.from_letters("XYZ ZXY YZX XZY ZYX YXZ"), 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("three-letter sum should be refused")

    results = symcirc.verify(symcirc.SymmetryGroup.preset("full_swap", 2))
    assert all(r[1] for r in results), results
    print("smoke test passed")


if __name__ == "__main__":
    main()
