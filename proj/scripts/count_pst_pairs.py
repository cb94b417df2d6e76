#!/usr/bin/env python3
# Copyright 2026 The pstkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Counts vertex pairs with perfect state transfer in a graph6 corpus.

Purely numerical: scans (0, 3.2] with numpy and polishes every peak above
0.99. Used to pin expected counts in the test suite independently of the
exact certifier.
"""

import sys

import networkx as nx
import numpy as np
from scipy.optimize import minimize_scalar


def main(path):
    count = 0
    ts = np.arange(1, 3201) * 1e-3
    for line in open(path):
        line = line.strip()
        if not line:
            continue
        g = nx.from_graph6_bytes(line.encode())
        n = g.number_of_nodes()
        w, q = np.linalg.eigh(nx.to_numpy_array(g, nodelist=range(n)))
        phases = np.exp(1j * np.outer(ts, w))
        for u in range(n):
            for v in range(u + 1, n):
                c = q[u] * q[v]
                best = 0.0
                for i in np.where(np.abs(phases @ c) > 0.99)[0]:
                    r = minimize_scalar(lambda t: -abs(np.sum(c * np.exp(1j * t * w))),
                                        bounds=(ts[i] - 2e-3, ts[i] + 2e-3), method="bounded",
                                        options={"xatol": 1e-12})
                    best = max(best, -r.fun)
                if best > 1 - 1e-9:
                    count += 1
    print(count)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/graphs_le7.g6")
