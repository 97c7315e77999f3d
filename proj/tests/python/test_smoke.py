"""Smoke test for the python bindings.

Usage: python test_smoke.py [dir-with-_core] [dir-with-qlef-package]
Runnable with a plain interpreter; uses assert, no test framework.
"""

import sys

for arg in sys.argv[1:3]:
    sys.path.insert(0, arg)

import qlef


def main():
    r = qlef.fdg(1, 0, 3)
    assert r["series"] == {"1": "1", "z": "7", "z^2": "28", "z^3": "84"}, r
    assert r["agree"] is True

    assert qlef.psi_integral([1, 1, 0, 0, 0]) == "2"

    inv = qlef.invariant(2, 1, [(2, 1)])
    assert inv["value"] == "-3", inv
    assert inv["vdim"] == 3

    twisted = qlef.invariant(2, 1, [(2, 1)], (-1, "-"))
    assert twisted["value"] == "-3", twisted

    tail = qlef.hypertail_dump("Q0", {"d1": 0, "d2": 2, "z": 3})
    assert tail["0,1,0,0"] == "-1", tail
    assert tail["0,1,1,1"] == "-10/l^2", tail

    rep = qlef.pipeline("p2")
    assert rep["value"] == "1", rep
    assert rep["lambda_power"] == -3

    nums = qlef.quintic_mirror(2)
    assert nums["n"][1] == "2875" and nums["n"][2] == "609250", nums

    res = qlef.verify("binomial")
    assert res and all(row["pass"] for row in res), res

    print("python smoke ok")


main()
