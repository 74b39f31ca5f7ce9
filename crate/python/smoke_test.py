"""Smoke test for the tcfa extension module.

Build with `cargo build --release -p tcfa-python --features extension-module`
and put target/release/libtcfa.so on the path as tcfa.so.
"""

import math
import sys

import tcfa


def main():
    a2, renormalized = tcfa.koszul_character(2, 1, 5)
    for k in range(1, 6):
        assert a2.dimension(k) == {(k, k): math.factorial(k - 1)}, a2.dimension(k)
    assert renormalized.dimension(1) == {(0, 0): 1}
    assert a2.sym_exp().sym_log() == a2

    a3, _ = tcfa.koszul_character(3, 1, 4)
    assert a3.dimension(2) == {}

    line = tcfa.Space.affine(1)
    conf = tcfa.conf_character(line, 2, 4)
    assert conf.total_dimension(3) == 6
    assert (2, 0, 0, {"[2]": 1}) in conf.pieces()

    assert tcfa.poincare(line, 2, 3) == {0: 1, 1: 3, 2: 2}
    plane = tcfa.Space.affine(2)
    e = tcfa.e_polynomial(plane, 3, 3)
    for q in (2, 3, 5):
        value = sum(c * q**x for x, c in e.items())
        assert value == tcfa.point_count(q, 2, 3, 3), (q, e)

    report = tcfa.stability_report(plane, "iterate", c0=0, max_degree=4)
    assert report["b"] == "1", report
    report = tcfa.stability_report(line, "toptriv", m=1, max_degree=4)
    assert report["b"] == "1/2", report

    space = tcfa.Space(1, [(0, 0, 2), (1, 0, 1)], trivial_multiplication=True)
    assert tcfa.Space.from_json(space.to_json()).classes() == space.classes()

    try:
        tcfa.koszul_character(1, 1, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("n = 1 accepted")

    results = tcfa.run_verify("oracle", 4)
    assert all(passed for _, passed, _ in results), results

    print(f"tcfa {tcfa.__version__}: smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
