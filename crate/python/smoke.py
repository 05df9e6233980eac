"""Smoke test for the Python bindings.

Build and install first:

    cd crates/python && maturin build --release -o dist && pip install dist/*.whl

then run ``python python/smoke.py``. Exits non-zero on the first mismatch.
"""

import kzduality as kz


def main():
    f = kz.f_mu([0, 2])
    assert f["n"] == 2
    assert [t["exp"] for t in f["terms"]] == [[0, 2], [1, 1]]
    assert kz.f_mu([0, 2], method="mpa") == f

    e = kz.e_mu([0, 1])
    assert e["terms"] == [{"exp": [0, 1], "num": [[1, 0, 0]], "den": [[1, 0, 0]]}]

    assert kz.reduce([0, 2], m=1, p=1) == {"(1,1)": "1-t"}

    table = kz.psi_table([0, 0, 2], m=1)
    assert table["epsilon"] == [0, 1, 1]
    assert len(table["entries"]) == 9

    assert kz.h_eval([1, 0, 1], [0, 2, 1]) == "t^2"
    assert kz.staircase([0, 2, 1], 2) == [3, 5, 4]

    report = kz.criterion(8)["report"]
    assert report["passed"], report

    try:
        kz.reduce([0, 2], m=0)
    except ValueError:
        pass
    else:
        raise AssertionError("m = 0 must be rejected")

    print("python bindings OK")


if __name__ == "__main__":
    main()
