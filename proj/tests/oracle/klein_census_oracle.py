# Copyright 2026 The Pentagram Atlas Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Klein-quadric pentagram census from explicit 8x8 Pauli matrices.

Shares no code with the C++ library: commutation, products and signs all come
from numpy matrix arithmetic. Compares the per-type counts against the frozen
values in derived.json and the type signatures against the golden table.

usage: klein_census_oracle.py DERIVED_JSON
"""

import collections
import csv
import itertools
import json
import pathlib
import sys

import numpy as np

PAULI = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
}
LABELS = ["".join(t) for t in itertools.product("IXYZ", repeat=3) if "".join(t) != "III"]
MATRIX = {l: np.kron(np.kron(PAULI[l[0]], PAULI[l[1]]), PAULI[l[2]]) for l in LABELS}


def commute(a, b):
    return np.allclose(MATRIX[a] @ MATRIX[b], MATRIX[b] @ MATRIX[a])


def product_sign(points):
    p = np.eye(8)
    for q in points:
        p = p @ MATRIX[q]
    if np.allclose(p, np.eye(8)):
        return 1
    if np.allclose(p, -np.eye(8)):
        return -1
    return None


def product_label(a, b):
    p = MATRIX[a] @ MATRIX[b]
    for l in LABELS:
        for phase in (1, -1, 1j, -1j):
            if np.allclose(p, phase * MATRIX[l]):
                return l
    raise ValueError(a + b)


def kind(label):
    return {2: "A", 1: "B", 0: "C"}[label.count("I")]


def plane_class(context):
    q = sorted(context)
    at_infinity = {product_label(q[0], q[k]) for k in (1, 2, 3)}
    points = list(context | at_infinity)
    lines = [t for t in itertools.combinations(points, 3) if product_sign(t) is not None]
    assert len(lines) == 7
    negative = sum(product_sign(t) == -1 for t in lines)
    census = collections.Counter(kind(p) for p in points)
    if negative == 3:
        return "neg"
    if negative == 4:
        return "a"
    if (census["A"], census["B"], census["C"]) == (1, 3, 3):
        return "b"
    if (census["A"], census["B"], census["C"]) == (3, 3, 1):
        return "c"
    raise ValueError(sorted(context))


def main():
    derived = json.loads(pathlib.Path(sys.argv[1]).read_text())
    golden_path = pathlib.Path(sys.argv[1]).with_name("table1.csv")
    golden = {}
    with golden_path.open() as f:
        for row in csv.DictReader(f):
            sig = tuple(int(row[c]) for c in ("C-", "O_A", "O_B", "O_C", "F-", "F+a", "F+b", "F+c"))
            golden[sig] = int(row["T"])

    symmetric = [l for l in LABELS if np.allclose(MATRIX[l], MATRIX[l].T)]
    assert len(symmetric) == 35, len(symmetric)

    contexts = []
    for q in itertools.combinations(symmetric, 4):
        if all(commute(a, b) for a, b in itertools.combinations(q, 2)):
            s = product_sign(q)
            if s is not None:
                contexts.append((frozenset(q), s))
    classes = {c: plane_class(c) for c, _ in contexts}
    n = len(contexts)
    adjacent = [[len(contexts[i][0] & contexts[j][0]) == 1 for j in range(n)] for i in range(n)]

    by_type = collections.Counter()

    def extend(chosen, candidates):
        if len(chosen) == 5:
            sets = [contexts[i][0] for i in chosen]
            meets = {frozenset(a & b) for a, b in itertools.combinations(sets, 2)}
            if len(meets) != 10:
                return
            points = frozenset().union(*sets)
            kinds = collections.Counter(kind(p) for p in points)
            planes = collections.Counter(classes[s] for s in sets)
            sig = (
                sum(contexts[i][1] == -1 for i in chosen),
                kinds["A"], kinds["B"], kinds["C"],
                planes["neg"], planes["a"], planes["b"], planes["c"],
            )
            by_type[golden[sig]] += 1
            return
        for j in candidates:
            extend(chosen + [j], [k for k in candidates if k > j and adjacent[j][k]])

    for i in range(n):
        extend([i], [k for k in range(i + 1, n) if adjacent[i][k]])

    expected = {int(t): k for t, k in derived["klein_computed"].items()}
    got = {t: by_type.get(t, 0) for t in range(1, 46)}
    failures = [f"type {t}: oracle {got[t]}, frozen {expected[t]}" for t in range(1, 46) if got[t] != expected[t]]
    total = sum(got.values())
    print(f"quadric contexts {n}, pentagrams {total}, types realized {sum(1 for v in got.values() if v)}")
    if total != 336:
        failures.append(f"total {total}, expected 336")
    for line in failures:
        print("FAIL", line)
    print("PASS" if not failures else "FAIL", "oracle census vs frozen per-type K")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
