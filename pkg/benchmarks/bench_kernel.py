"""Benchmark: compiled kernel vs pure-Python kernel on the hot paths.

Runs representative exact-homology workloads once under each backend (the
backend is fixed at import time, so each measurement happens in a child
process with BCRES_KERNEL set) and prints a timing table.

    python benchmarks/bench_kernel.py
"""

import json
import os
import subprocess
import sys
import time

WORKLOADS = """
import time

from bcres.complexes import bc_complex
from bcres.corpus import standard_corpus
from bcres.ideals import component_ideal, polarize, power_ideal, stanley_reisner_ideal
from bcres.matroid import circuit_matroid, uniform_matroid
from bcres.resolutions import betti_hochster, betti_table
from bcres import _kernel

results = {"backend": _kernel.BACKEND}

corpus = [m for _, m in standard_corpus()][:120]
t0 = time.time()
for m in corpus:
    betti_table(stanley_reisner_ideal(bc_complex(m)))
results["corpus_betti_120"] = time.time() - t0

golden = circuit_matroid(6, [{4, 5, 6}, {1, 2, 3, 6}, {1, 2, 3, 4, 5}])
gideal = stanley_reisner_ideal(bc_complex(golden))
c4 = polarize(component_ideal(gideal, 4))
t0 = time.time()
betti_hochster(c4)
results["golden_component_deg4"] = time.time() - t0

u25 = stanley_reisner_ideal(bc_complex(uniform_matroid(2, 5)))
sq = polarize(power_ideal(u25, 2))
t0 = time.time()
betti_hochster(sq)
results["u25_square_power"] = time.time() - t0

u35 = stanley_reisner_ideal(bc_complex(uniform_matroid(3, 5)))
cube = polarize(power_ideal(u35, 3))
t0 = time.time()
betti_hochster(cube)
results["u35_cube_power"] = time.time() - t0

import json
print(json.dumps(results))
"""


def measure(backend):
    env = dict(os.environ, BCRES_KERNEL=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOADS], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    rows = []
    for backend in ("py", "c"):
        try:
            rows.append(measure(backend))
        except subprocess.CalledProcessError as exc:
            print("backend %r failed:\n%s" % (backend, exc.stderr))
            if backend == "c":
                print("compiled kernel not built; run: python setup.py build_ext --inplace")
                return 1
            raise
    keys = [k for k in rows[0] if k != "backend"]
    name_w = max(len(k) for k in keys)
    print("workload".ljust(name_w), "  python", "  compiled", "  speedup")
    for k in keys:
        py, cc = rows[0][k], rows[1][k]
        print(
            k.ljust(name_w),
            "%8.3fs" % py,
            "%8.3fs" % cc,
            "%8.1fx" % (py / cc if cc else float("inf")),
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
