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

"""Writes every graph on 1..7 vertices (up to isomorphism) as graph6."""

import sys

import networkx as nx


def main() -> None:
    out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        out.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main()
