"""Independent brute force for the values frozen in tests/oracles.rs.

Run: python3 brute_force.py > expected.txt
"""
import itertools

T, B = 0, 1


def derived(k, m, op):
    def f(*a):
        r = a[0]
        for x in a[1:]:
            r = (r + x) % k if op == "add" else (r * x) % k
        return r
    return f


def wired(mu, wires):
    def f(*S):
        out = []
        for kind, picks in wires:
            if kind == "I":
                s, c = picks
                out.append(S[s - 1][c])
            else:
                out.append(mu(*[S[s - 1][c] for s, c in picks]))
        return tuple(out)
    return f


def first_assoc_break(op, n, elems):
    for t in itertools.product(elems, repeat=2 * n - 1):
        res = [op(*(t[:p] + (op(*t[p:p + n]),) + t[p + n:])) for p in range(n)]
        for p in range(1, n):
            if res[p] != res[0]:
                return (t, (0, p), (res[0], res[p]))
    return None


QUIVERS = {
    "componentwise-3": (3, 3, 3, [("P", [(1, T), (2, T), (3, T)]), ("P", [(1, B), (2, B), (3, B)])]),
    "twisted-binary": (3, 2, 2, [("P", [(1, T), (2, B)]), ("P", [(2, T), (1, B)])]),
    "ternary-to-binary-a": (3, 3, 2, [("P", [(1, T), (1, B), (2, T)]), ("I", (2, B))]),
    "ternary-to-binary-b": (3, 3, 2, [("P", [(1, T), (2, B), (2, T)]), ("I", (1, B))]),
    "post-ternary": (3, 3, 3, [("P", [(1, T), (2, B), (3, T)]), ("P", [(1, B), (2, T), (3, B)])]),
    "scrambled-post-ternary": (3, 3, 3, [("P", [(1, B), (2, B), (3, T)]), ("P", [(1, T), (2, T), (3, B)])]),
    "post-5ary": (2, 5, 5, [("P", [(1, T), (2, B), (3, T), (4, B), (5, T)]), ("P", [(1, B), (2, T), (3, B), (4, T), (5, B)])]),
    "five-to-three-intact": (2, 5, 3, [("P", [(1, T), (2, B), (3, T), (1, B), (2, T)]), ("I", (3, B))]),
}

for name, (k, m, n, w) in QUIVERS.items():
    op = wired(derived(k, m, "add"), w)
    elems = list(itertools.product(range(k), repeat=2))
    print("assoc", name, f"z{k}-add-{m}", first_assoc_break(op, n, elems))

for name, k, m in [("post-ternary", 3, 3), ("post-5ary", 2, 5)]:
    op = wired(derived(k, m, "add"), QUIVERS[name][3])
    elems = list(itertools.product(range(k), repeat=2))
    tuples = list(itertools.product(elems, repeat=m))
    full = all(op(*t) == op(*p) for t in tuples for p in itertools.permutations(t))
    semi = all(op(*t) == op(*((t[-1],) + t[1:-1] + (t[0],))) for t in tuples)
    print("commutativity", name, f"z{k}-add-{m}", "full" if full else "semi" if semi else "none")


def iterate(mu, m, args):
    r = mu(*args[:m])
    i = m
    while i < len(args):
        r = mu(*((r,) + tuple(args[i:i + m - 1])))
        i += m - 1
    return r


def coincidence(k, m, op):
    mu = derived(k, m, op)
    E = range(k)
    D = list(itertools.product(E, repeat=2))

    def gauge(d1, d2):
        (a1, b1), (a2, b2) = d1, d2
        return any(
            mu(*([a1] * (m - 1) + [x])) == mu(*([a2] * (m - 1) + [y]))
            and mu(*([b1] * (m - 1) + [x])) == mu(*([b2] * (m - 1) + [y]))
            for x in E for y in E
        )

    def twist(d1, d2):
        (a1, b1), (a2, b2) = d1, d2
        return any(
            iterate(mu, m, [a1] * (m - 1) + [b2] * (m - 1) + [z]) == iterate(mu, m, [a2] * (m - 1) + [b1] * (m - 1) + [z])
            for z in E
        )

    same = all(gauge(a, b) == twist(a, b) for a in D for b in D)
    classes = {frozenset(b for b in D if twist(a, b)) for a in D}
    return same, len(classes)


for k, m, op in [(5, 3, "add"), (3, 2, "add"), (4, 3, "mul")]:
    print("coincidence", f"z{k}-{op}-{m}", coincidence(k, m, op))

for a, b in [(7, 10), (3, 10), (0, 10), (1, 10)]:
    arity = next(m for m in range(2, b + 2) if pow(a, m, b) == a % b)
    print("residue-arity", a, b, arity, [pow(a, m, b) for m in range(2, 6)])

# five-to-three-intact on res-7-10: top = a1 b2 a3 b1 a2, bottom = b3
S = [(7, 17), (7, 17), (7, 17)]
S_swapped = [(77, 187), (7, 17), (7, 17)]
for args in (S, S_swapped):
    (a1, b1), (a2, b2), (a3, b3) = args
    print("residue-swap", args[0], (a1 * b2 * a3 * b1 * a2, b3))
print("residue-swap-equivalent", 7 * 187 == 77 * 17)
print("residue-swap-results-equivalent", 99127 * 17 == 11994367 * 17)
