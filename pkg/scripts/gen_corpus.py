"""Regenerate the shipped corpus maps under src/fleischner/data (run from the repo root)."""
import math, networkx as nx, sys
sys.path.insert(0, "src")
from fleischner.corpus import map_from_ccw_neighbors
from fleischner.pmg import emit_pmg
from fleischner.planar_map import check_class_G

def ccw_from_pos(adj, pos):
    return {u: sorted(adj[u], key=lambda v: math.atan2(pos[v][1]-pos[u][1], pos[v][0]-pos[u][0])) for u in adj}

def poly(k, r, off=0.0):
    return [(r*math.cos(off+2*math.pi*i/k), r*math.sin(off+2*math.pi*i/k)) for i in range(k)]

out = {}
# theta: rotations (1,2,3)/(6,5,4), edges e_k = (k, k+3)
out["theta"] = "pmg 1\n# theta graph: two vertices joined by three parallel edges\nvertex 0 darts 1 2 3\nvertex 1 darts 6 5 4\nedge 1 1 4\nedge 2 2 5\nedge 3 3 6\nouter 1\n"

def build(name, edges, pos, outer, comment):
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v); adj.setdefault(v, []).append(u)
    m = map_from_ccw_neighbors(ccw_from_pos(adj, pos), outer)
    assert check_class_G(m).member, name
    out[name] = emit_pmg(m).replace("pmg 1\n", f"pmg 1\n# {comment}\n", 1)
    return m

p = poly(3, 2.0, math.pi/2)
build("k4", [(1,2),(1,3),(1,4),(2,3),(2,4),(3,4)], {1:p[0],2:p[1],3:p[2],4:(0,0)}, (1,2), "K4: outer triangle 1 2 3, vertex 4 inside")
P = poly(3, 2.0, math.pi/2); Q = poly(3, 1.0, math.pi/2)
pos = {1:P[0],2:P[1],3:P[2],4:Q[0],5:Q[1],6:Q[2]}
build("prism", [(1,2),(2,3),(1,3),(4,5),(5,6),(4,6),(1,4),(2,5),(3,6)], pos, (1,2), "triangular prism: triangles 1 2 3 and 4 5 6, rungs 1-4 2-5 3-6")
P = poly(4, 2.0, math.pi/4); Q = poly(4, 1.0, math.pi/4)
pos = {i+1: P[i] for i in range(4)} | {i+5: Q[i] for i in range(4)}
build("cube", [(1,2),(2,3),(3,4),(1,4),(5,6),(6,7),(7,8),(5,8),(1,5),(2,6),(3,7),(4,8)], pos, (1,2), "cube Q3: squares 1 2 3 4 and 5 6 7 8, rungs i-(i+4)")

G = nx.tutte_graph()
ok, emb = nx.check_planarity(G)
order = {v: list(reversed(list(emb.neighbors_cw_order(v)))) for v in G}
# choose the longest face as outer
from fleischner.planar_map import PlaneMultigraph
m0 = map_from_ccw_neighbors(order, (0, next(iter(order[0]))))
outer_face = max(m0.faces, key=lambda f: (len(f), -f.id))
d = outer_face.walk[0]
m = map_from_ccw_neighbors(order, (m0.tail(d), m0.head(d)))
assert check_class_G(m).member and m.is_simple() and m.n_vertices == 46 and m.n_edges == 69
out["tutte"] = emit_pmg(m).replace("pmg 1\n", "pmg 1\n# Tutte graph (46 vertices, 69 edges), vertex ids as in networkx.tutte_graph\n", 1)
for k, v in out.items():
    open(f"src/fleischner/data/{k}.pmg", "w").write(v)
    print(k, len(v.splitlines()))
print(sorted(len(f) for f in m.faces))
