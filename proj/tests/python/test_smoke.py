"""Smoke test for the _eqcoh extension module (run with PYTHONPATH set to
the build output directory)."""

import _eqcoh

CIRCLE = """
{
  "lie_algebra": {"preset": "abelian1"},
  "module": {"type": "point"},
  "truncation": 5,
  "invariance": "per-generator"
}
"""


def test_canonical_config_round_trip():
    once = _eqcoh.canonical_config(CIRCLE)
    assert _eqcoh.canonical_config(once) == once


def test_validate_clean():
    assert _eqcoh.validate(CIRCLE) == []


def test_checks_pass():
    for which in ["lemma3", "lemma4", "lemma5", "thm1", "thm2", "thm3"]:
        assert _eqcoh.check(CIRCLE, which) == [], which


def test_cohomology():
    tsv = _eqcoh.cohomology_tsv(CIRCLE)
    rows = [line.split("\t") for line in tsv.strip().split("\n")[1:]]
    assert [int(r[4]) for r in rows] == [1, 0, 1, 0, 1]


def test_apply():
    assert _eqcoh.apply(CIRCLE, "delta", "t1") == "p1"
    assert _eqcoh.apply(CIRCLE, "d_C", "p1") == "0"
    assert _eqcoh.apply(CIRCLE, "psi", "t1") == "t1"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(name, "ok")
