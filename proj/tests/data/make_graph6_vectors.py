"""Regenerates graph6_vectors.txt with networkx as the reference encoder.

Each line: graph6 <TAB> n <TAB> edges as u-v pairs separated by spaces.
"""
import random

import networkx as nx


def make(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def main():
    rng = random.Random(20240611)
    graphs = [
        make(0, []),
        make(1, []),
        make(2, [(0, 1)]),
        make(5, [(i, 4) for i in range(4)]),
        make(10, list(nx.petersen_graph().edges())),
        make(62, [(i, j) for i in range(62) for j in range(i + 1, 62)]),
        make(63, [(i, i + 1) for i in range(62)]),
        make(70, [(i, (i + 1) % 70) for i in range(70)]),
    ]
    for n in (3, 6, 7, 9, 13, 20, 33, 64, 100):
        for p in (0.2, 0.5, 0.8):
            edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
            graphs.append(make(n, edges))
    with open("graph6_vectors.txt", "w") as out:
        for g in graphs:
            code = nx.to_graph6_bytes(g, header=False).decode().strip()
            edges = " ".join(f"{min(u, v)}-{max(u, v)}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
            out.write(f"{code}\t{g.number_of_nodes()}\t{edges}\n")


if __name__ == "__main__":
    main()
