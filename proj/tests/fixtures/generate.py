# Copyright 2026 The Symplectica Authors
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

"""Regenerates the CLI test fixtures.

Built with numpy from the explicit 4x4 real Dirac matrices, independently of
the library. Run from this directory: python3 generate.py
"""
import numpy as np
from scipy.linalg import expm

G0 = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], float)
G1 = np.array([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], float)
G2 = np.array([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], float)
G3 = np.diag([-1.0, 1.0, -1.0, 1.0])
GAMMA = [G0, G1, G2, G3, G0 @ G1, G0 @ G2, G0 @ G3, G2 @ G3, G3 @ G1, G1 @ G2]


def license_header():
    lines = []
    for line in open(__file__):
        if not line.startswith("#"):
            break
        lines.append(line)
    return "".join(lines)


HEADER = license_header()


def write(name, m, comment):
    with open(name, "w") as f:
        f.write(HEADER)
        f.write(f"# {comment}\n")
        for row in np.atleast_2d(m):
            f.write(" ".join(repr(float(x)) for x in row) + "\n")


def unit(n):
    j = np.zeros((2 * n, 2 * n))
    for p in range(n):
        j[2 * p, 2 * p + 1] = 1
        j[2 * p + 1, 2 * p] = -1
    return j


def embedded(k, tau, n, i, j):
    g = GAMMA[k]
    r = expm(g * tau / 2)
    m = np.eye(2 * n)
    idx = [2 * i, 2 * i + 1, 2 * j, 2 * j + 1]
    m[np.ix_(idx, idx)] = r
    return m


def constructed(omegas, factors, seed):
    rng = np.random.default_rng(seed)
    n = len(omegas)
    d = np.zeros((2 * n, 2 * n))
    for p, w in enumerate(omegas):
        d[2 * p, 2 * p + 1] = w
        d[2 * p + 1, 2 * p] = -w
    m = np.eye(2 * n)
    for _ in range(factors):
        i, j = sorted(rng.choice(n, 2, replace=False))
        m = m @ embedded(rng.integers(10), rng.uniform(-1, 1), n, i, j)
    return m @ d @ np.linalg.inv(m)


write("gamma0.txt", G0, "symplectic unit matrix")
write("identity4.txt", np.eye(4), "identity")
write("eta0_3.txt", 3 * unit(1), "3 eta0")
write("pure_vector.txt", G0 + 0.3 * G1, "energy 1, P = (0.3, 0, 0)")
write("bivector_complex.txt",
      GAMMA[4] + 0.5 * GAMMA[5] + 0.8 * GAMMA[7] + 0.3 * GAMMA[9],
      "pure bivector E = (1, 0.5, 0), B = (0.8, 0, 0.3)")
write("constructed4.txt", constructed([1.3, 0.6], 6, 1), "M0 D M0^-1, omega = (1.3, 0.6)")
write("constructed6.txt", constructed([1.0, 2.5, 0.7], 9, 2), "M0 D M0^-1, omega = (1, 2.5, 0.7)")
write("rotation4.txt", expm(G0), "exp(gamma0)")
write("coupled_map4.txt", expm(constructed([1.1, 0.45], 6, 3)), "one-turn map, tunes (1.1, 0.45)")
write("hyperbolic_map4.txt", expm(0.8 * G3 / 2), "boost, no matched beam")
with open("malformed.txt", "w") as f:
    f.write(HEADER)
    f.write("# second row is short\n0 1 0 0\n-1 0 0\n0 0 0 1\n0 0 -1 0\n")
with open("odd3.txt", "w") as f:
    f.write(HEADER)
    f.write("1 0 0\n0 1 0\n0 0 1\n")
