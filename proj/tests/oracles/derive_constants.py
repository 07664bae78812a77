"""Reference values frozen into the C++ tests.

Computed with numpy / networkx only, independently of the C++ code.
Run: python3 tests/oracles/derive_constants.py
"""
import itertools
import math

import networkx as nx
import numpy as np


def vector_measure(a):
    n = a.shape[0]
    e = np.ones(n) / math.sqrt(n)
    lam, u = np.linalg.eigh(a)
    w = (u.T @ e) ** 2
    atoms = {}
    for l, x in zip(lam, w):
        key = round(l, 8) + 0.0
        atoms[key] = atoms.get(key, 0.0) + x
    return {k: v for k, v in atoms.items() if v > 1e-12}


def moments(a, kmax):
    n = a.shape[0]
    e = np.ones(n) / math.sqrt(n)
    return [e @ np.linalg.matrix_power(a, k) @ e for k in range(kmax + 1)]


def hankel(m, d):
    return np.array([[m[i + j] for j in range(d + 1)] for i in range(d + 1)])


def adj(g):
    return nx.to_numpy_array(g, nodelist=sorted(g.nodes()))


print("# complete bipartite vector-state measures")
for m, n in [(1, 4), (2, 3), (3, 3)]:
    print((m, n), vector_measure(adj(nx.complete_bipartite_graph(m, n))))

print("# mixture law for C4 u K1, degree 2")
c4 = adj(nx.cycle_graph(4))
u = adj(nx.disjoint_union(nx.cycle_graph(4), nx.empty_graph(1)))
print(hankel(moments(u, 4), 2))
print(0.8 * hankel(moments(c4, 4), 2) + 0.2 * hankel([1, 0, 0, 0, 0], 2))

print("# Cov descriptor of S5, k = 2, centred")
s5 = adj(nx.star_graph(4))
e = np.ones(5) / math.sqrt(5)
cols = []
w = e.copy()
for _ in range(2):
    w = s5 @ w
    cols.append(w / np.linalg.norm(w))
x = np.column_stack(cols)
xc = x - x.mean(axis=1, keepdims=True)
print(xc.T @ xc / 5)

print("# Bhattacharyya diag(1,1) vs diag(4,4)")
print(0.5 * math.log(np.linalg.det(2.5 * np.eye(2)) / math.sqrt(1 * 16)))

print("# NCLM of K4, entry i = 2")
print(math.log((9 + 3) / 16))

print("# Top eigenvalues of K4 and Petersen")
print(sorted(np.linalg.eigvalsh(adj(nx.complete_graph(4))), reverse=True))
print(sorted(np.linalg.eigvalsh(adj(nx.petersen_graph())), reverse=True))


def gk3_bruteforce(g):
    counts = [0, 0, 0, 0]
    for t in itertools.combinations(g.nodes(), 3):
        counts[g.subgraph(t).number_of_edges()] += 1
    return counts


print("# GK3 counts (empty, one-edge, wedge, triangle)")
for name, g in [("C4", nx.cycle_graph(4)), ("K4", nx.complete_graph(4)), ("petersen", nx.petersen_graph()),
                ("paw+K1", nx.Graph([(0, 1), (0, 2), (1, 2), (2, 3), (4, 4)]))]:
    g.remove_edges_from(nx.selfloop_edges(g))
    print(name, gk3_bruteforce(g))


def wicker(a, b, k):
    la, ua = np.linalg.eigh(a)
    lb, ub = np.linalg.eigh(b)
    o = np.abs(ua.T @ ub)
    total = 0.0
    for i in range(len(la)):
        for j in range(len(lb)):
            if o[i, j] <= 1e-12 or (la[i] - lb[j]) ** 2 <= 1e-18:
                continue
            total += (la[i] - lb[j]) ** 2 / (la[i] + lb[j]) * o[i, j] ** k
    return total


print("# Wicker, k = 2")
p5 = adj(nx.path_graph(5))
c5 = adj(nx.cycle_graph(5))
print("P5 vs C5", wicker(p5, c5, 2))
shrikhande = nx.Graph()
for a, b in itertools.product(range(4), repeat=2):
    for da, db in [(0, 1), (1, 0), (1, 1)]:
        shrikhande.add_edge(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4)
rook = nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4))
rook = nx.convert_node_labels_to_integers(rook)
k16 = adj(nx.complete_graph(16))
print("Shrikhande vs K16", wicker(adj(shrikhande), k16, 2))
print("rook 4x4 vs K16", wicker(adj(rook), k16, 2))
print("Shrikhande vs rook", nx.is_isomorphic(shrikhande, rook))
print("P4 vs C4", wicker(adj(nx.path_graph(4)), c4, 2))
print("P4 vs C4, k = 3", wicker(adj(nx.path_graph(4)), c4, 3))
paw = adj(nx.Graph([(0, 1), (0, 2), (1, 2), (2, 3)]))
print("paw vs K4", wicker(paw, adj(nx.complete_graph(4)), 2))
print("petersen vs C10", wicker(adj(nx.petersen_graph()), adj(nx.cycle_graph(10)), 2))
