#!/usr/bin/env python3
"""Regenerate the bundled adjacency files in data/ from LCF notation.

Each graph is checked to be distance-regular with the expected intersection
array before it is written. Output follows the `# drg-graph v1` format.
"""
import sys
from collections import deque
from pathlib import Path

BIGGS_SMITH_LCF = [
    16, 24, -38, 17, 34, 48, -19, 41, -35, 47, -20, 34, -36, 21, 14, 48, -16,
    -36, -43, 28, -17, 21, 29, -43, 46, -24, 28, -38, -14, -50, -45, 21, 8, 27,
    -21, 20, -37, 39, -34, -44, -8, 38, -21, 25, 15, -34, 18, -28, -41, 36, 8,
    -29, -21, -48, -28, -20, -47, 14, -8, -15, -27, 38, 24, -48, -18, 25, 38,
    31, -25, 24, -46, -14, 28, 11, 21, 35, -39, 43, 36, -38, 14, 50, 43, 36,
    -11, -36, -24, 45, 8, 19, -25, 38, 20, -24, -14, -21, -8, 44, -31, -38,
    -28, 37,
]

GRAPHS = {
    # name: (n, lcf jumps, repeats, expected (b, c))
    "foster": (90, [17, -9, 37, -37, 9, -17], 15,
               ([3, 2, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 2, 2, 2, 3])),
    "biggs_smith": (102, BIGGS_SMITH_LCF, 1,
                    ([3, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 1, 1, 3])),
    # Tutte 12-cage: incidence graph of the generalized hexagon of order 2.
    "gen_dodecagon_12": (126, [17, 27, -13, -59, -35, 35, -11, 13, -53, 53,
                               -27, 21, 57, 11, -21, -57, 59, -17], 7,
                         ([3, 2, 2, 2, 2, 2], [1, 1, 1, 1, 1, 3])),
}


def lcf_graph(n, jumps, repeats):
    adj = [set() for _ in range(n)]
    seq = jumps * repeats
    assert len(seq) == n
    for i in range(n):
        for j in ((i + 1) % n, (i + seq[i]) % n):
            adj[i].add(j)
            adj[j].add(i)
    return [sorted(a) for a in adj]


def intersection_array(adj):
    n = len(adj)
    found = None
    for x in range(n):
        dist = [-1] * n
        dist[x] = 0
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        diam = max(dist)
        b = [None] * (diam + 1)
        c = [None] * (diam + 1)
        for y in range(n):
            i = dist[y]
            cy = sum(1 for w in adj[y] if dist[w] == i - 1)
            by = sum(1 for w in adj[y] if dist[w] == i + 1)
            if b[i] is None:
                b[i], c[i] = by, cy
            elif (b[i], c[i]) != (by, cy):
                return None
        arr = (b[:-1], c[1:])
        if found is None:
            found = arr
        elif found != arr:
            return None
    return found


def render(name, adj):
    lines = ["# drg-graph v1", f"name={name}", f"n={len(adj)}"]
    lines += [f"{v}: " + " ".join(map(str, nb)) for v, nb in enumerate(adj)]
    return "\n".join(lines) + "\n"


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out.mkdir(parents=True, exist_ok=True)
    for name, (n, jumps, reps, expected) in GRAPHS.items():
        adj = lcf_graph(n, jumps, reps)
        got = intersection_array(adj)
        if got != expected:
            sys.exit(f"{name}: expected {expected}, got {got}")
        (out / f"{name}.drg").write_text(render(name, adj))
        print(f"wrote {name}.drg (n={n})")


if __name__ == "__main__":
    main()
