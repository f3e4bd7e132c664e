#!/usr/bin/env python3
"""Regenerate the group spec fixtures under data/."""
import itertools
import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def cyclic(n):
    return {"kind": "cyclic", "order": n}


def table(names, mul, gens):
    idx = {x: i for i, x in enumerate(names)}
    return {"kind": "table", "elements": names,
            "table": [[idx[mul(x, y)] for y in names] for x in names],
            "generators": gens}


def f20():
    # r^i s^j with s r s^-1 = r^2
    def name(i, j):
        r = "" if i == 0 else "r" if i == 1 else f"r{i}"
        s = "" if j == 0 else "s" if j == 1 else f"s{j}"
        return (r + s) or "1"
    elems = [(i, j) for j in range(4) for i in range(5)]
    names = [name(*e) for e in elems]
    back = {name(*e): e for e in elems}

    def mul(x, y):
        (i, j), (k, l) = back[x], back[y]
        return name((i + k * pow(2, j)) % 5, (j + l) % 4)
    return table(names, mul, ["r", "s"])


def s3():
    perms = list(itertools.permutations(range(3)))
    names = ["".join(map(str, p)) for p in perms]
    back = dict(zip(names, perms))

    def mul(x, y):
        p, q = back[x], back[y]
        return "".join(str(p[q[i]]) for i in range(3))
    return table(names, mul, ["102", "021"])


def spec(vertices, edges, **limits):
    out = {"vertices": [{"name": n, "group": g} for n, g in vertices],
           "edges": edges}
    if limits:
        out["limits"] = limits
    return out


def write(name, obj):
    (DATA / name).write_text(json.dumps(obj, indent=2) + "\n")


def main():
    path = [["a", "c"], ["b", "c"]]
    write("gamma_ex.json",
          spec([("a", cyclic(2)), ("b", cyclic(2)), ("c", cyclic(3))], path))
    write("gamma_s3.json",
          spec([("a", cyclic(2)), ("b", cyclic(2)), ("c", s3())], path))
    write("gamma_c3.json",
          spec([("a", cyclic(3)), ("b", cyclic(3)), ("c", cyclic(3))], path))
    write("frobenius.json",
          spec([("a", {"kind": "integers"}), ("b", {"kind": "integers"}),
                ("c", f20()), ("e", {"kind": "integers"})],
               path, bfs_states=1000000))
    write("frobenius_finite.json",
          spec([("a", cyclic(4)), ("b", cyclic(4)), ("c", f20()),
                ("e", cyclic(4))], path))
    write("shuffle4.json",
          spec([(f"u{i}", cyclic(3)) for i in range(1, 5)],
               [["u1", "u2"], ["u1", "u3"], ["u1", "u4"], ["u2", "u3"]]))

if __name__ == "__main__":
    main()
