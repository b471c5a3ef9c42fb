#!/usr/bin/env python3
"""Smoke test for the algvar_py extension module.

Builds the cdylib if needed, stages it under an importable name, and runs a
quick pass over the main surface: builders, membership, cohomology, forms,
rigidity, counting, serialization, and the equivariance battery.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module() -> Path:
    lib = None
    for profile in ("release", "debug"):
        candidate = REPO / "target" / profile / "libalgvar_py.so"
        if candidate.exists():
            lib = candidate
            break
    if lib is None:
        print("building algvar-python (release)...")
        subprocess.run(
            ["cargo", "build", "--release", "-p", "algvar-python"],
            cwd=REPO,
            check=True,
        )
        lib = REPO / "target" / "release" / "libalgvar_py.so"
    stage = Path(tempfile.mkdtemp(prefix="algvar_py_"))
    shutil.copy2(lib, stage / "algvar_py.so")
    return stage


def check(label: str, ok: bool) -> bool:
    print(f"{'ok' if ok else 'FAIL':4} {label}")
    return ok


def main() -> int:
    sys.path.insert(0, str(stage_module()))
    import algvar_py as av

    results = []

    sl2 = av.Algebra.sl2()
    results.append(check("sl2 is a Lie law", sl2.is_lie() and sl2.is_leibniz()))
    results.append(check("sl2 bracket [h,e] = 2e", sl2.multiply([1, 0, 0], [0, 1, 0]) == ["0", "2", "0"]))

    killing = sl2.killing_form()
    results.append(check("sl2 Killing discriminant -128", killing["discriminant"] == "-128"))
    results.append(check("sl2 semisimple Lie point", sl2.is_semisimple_lie_point()))

    ce = sl2.cohomology("ce")
    results.append(check("sl2 CE: z2 = b2 = 6, h2 = 0", (ce["z2"], ce["b2"], ce["h2"]) == (6, 6, 0)))

    m2 = av.Algebra.matrix_algebra(2)
    hh = m2.cohomology("hochschild")
    results.append(check("M2(k) Hochschild: z2 = 13, h2 = 0", (hh["z2"], hh["h2"]) == (13, 0)))
    results.append(check("M2(k) separable", m2.is_separable()))
    results.append(check("M2(k) trace discriminant -16", m2.trace_form()["discriminant"] == "-16"))
    results.append(check("M2(k) fiber = 13", m2.fiber_as_dim() == 13))

    rig = m2.rigidity("alg")
    results.append(check(
        "M2(k) rigid, predicted 13",
        rig["orbit_open"] and rig["rigid_in_moduli"] and rig["predicted_dim"] == 13,
    ))

    dn = av.Algebra.dual_numbers()
    results.append(check("dual numbers commutative, not separable",
                         dn.is_commutative() and not dn.is_separable()))
    results.append(check("dual numbers deform (Harrison h2 > 0)",
                         dn.cohomology("harrison")["h2"] > 0))

    lb = av.Algebra.leibniz2()
    results.append(check("leibniz2: Leibniz but not Lie", lb.is_leibniz() and not lb.is_lie()))
    results.append(check("leibniz2 Killing degenerate", lb.killing_form()["discriminant"] == "0"))
    lb.check_operator_identities()
    results.append(check("leibniz2 operator identities hold", True))

    sum6 = sl2.direct_sum(av.Algebra.sl2())
    results.append(check("sl2+sl2 is Lie of dim 6", sum6.is_lie() and sum6.dim == 6))

    text = sl2.to_json()
    round_trip = av.Algebra.from_json(text)
    results.append(check("JSON round trip", round_trip.to_json() == text))

    custom = av.Algebra(2, [(1, 1, 0, "1")])
    results.append(check("custom table equals leibniz2 behavior",
                         custom.is_leibniz() and not custom.is_lie()))

    assoc = av.count_assoc(5, witnesses=True)
    results.append(check("count assoc(5) = 2 with witnesses",
                         assoc["value"] == 2 and assoc["witnesses"] == [["2", "1"], ["1", "1", "1", "1", "1"]]))
    lie14 = av.count_lie(14, witnesses=True)
    results.append(check("count lie(14) = 2 (G2 or A2+2*A1)", lie14["value"] == 2))

    laws = av.run_equivariance(7, dims=[2], trials=3)
    results.append(check("equivariance battery passes", all(l["passed"] for l in laws)))

    try:
        av.Algebra.leibniz2().cohomology("ce")
        results.append(check("off-variety input rejected", False))
    except ValueError:
        results.append(check("off-variety input rejected", True))

    failed = results.count(False)
    print(f"\n{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
