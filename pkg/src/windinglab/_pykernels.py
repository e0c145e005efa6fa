"""Pure-Python kernels: interface walks, cluster searches, peeling, lifts.

This module is the reference backend.  A Cython extension with the same
public functions and identical semantics is preferred at import time
(see ``_backend``); every function here must stay bit-compatible with
its compiled twin.

All functions take a coloring descriptor ``desc`` as produced by
``Coloring.desc()``: a tuple (mode, mixed_stream, swap_xy, overrides).

Conventions baked in here:

* the annulus A(n, m) is the open site set {n < sup_norm <= m};
* interfaces are walks on lattice triangles crossing only bichromatic
  bonds whose two sites both lie in the annulus, started from triangles
  with one vertex in B(n), and never query colors outside the annulus;
* a crossing interface terminates at a triangle whose third vertex lies
  beyond radius m.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1

BLACK = 1
WHITE = 0

_OFFS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

_MAX_WALK_FACTOR = 16


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def site_color(desc, x: int, y: int) -> int:
    mode, stream_mixed, swap, overrides = desc
    if swap:
        x, y = y, x
    if overrides:
        ov = overrides.get((x, y))
        if ov is not None:
            return ov
    if mode == 1:
        return BLACK
    if mode == 2:
        return WHITE
    key = ((x & 0xFFFFFFFF) << 32) | (y & 0xFFFFFFFF)
    return (_mix64(key ^ stream_mixed) >> 63) & 1


def site_colors(desc, sites) -> list[int]:
    return [site_color(desc, x, y) for (x, y) in sites]


def _sup(x: int, y: int) -> int:
    ax = -x if x < 0 else x
    ay = -y if y < 0 else y
    return ax if ax > ay else ay


# --- triangle helpers -------------------------------------------------
#
# Triangles are (x, y, o): o=0 is the "up" triangle with vertices
# (x,y), (x+1,y), (x,y+1); o=1 is the "down" triangle with vertices
# (x+1,y), (x,y+1), (x+1,y+1).  Each lattice bond belongs to exactly
# two triangles.


def _tri_vertices(t):
    x, y, o = t
    if o == 0:
        return ((x, y), (x + 1, y), (x, y + 1))
    return ((x + 1, y), (x, y + 1), (x + 1, y + 1))


def _tri_centroid3(t):
    x, y, o = t
    if o == 0:
        return (3 * x + 1, 3 * y + 1)
    return (3 * x + 2, 3 * y + 2)


def _bond_triangles(a, b):
    """The two triangles sharing the bond {a, b}."""
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    if (dx, dy) in ((-1, 0), (0, -1), (1, -1)):
        ax, ay, dx, dy = bx, by, -dx, -dy
    if (dx, dy) == (1, 0):
        return (ax, ay, 0), (ax, ay - 1, 1)
    if (dx, dy) == (0, 1):
        return (ax, ay, 0), (ax - 1, ay, 1)
    if (dx, dy) == (-1, 1):
        return (ax - 1, ay, 0), (ax - 1, ay, 1)
    raise ValueError(f"not a lattice bond: {a}-{b}")


def _other_triangle(t, a, b):
    t1, t2 = _bond_triangles(a, b)
    return t2 if t1 == t else t1


def _third_vertex(t, a, b):
    for v in _tri_vertices(t):
        if v != a and v != b:
            return v
    raise ValueError("degenerate triangle")


def _incident_triangles(v):
    x, y = v
    return (
        (x, y, 0),
        (x - 1, y, 0),
        (x, y - 1, 0),
        (x - 1, y, 1),
        (x, y - 1, 1),
        (x - 1, y - 1, 1),
    )


# --- interface walks --------------------------------------------------


def _iter_ports(desc, n: int, m: int):
    """Triangles with exactly one vertex in B(n) whose opposite bond is a
    bichromatic annulus bond.  Yields (port_triangle, left, right, col_left)
    with the left/right orientation taken looking into the annulus."""
    ring = _ring_ccw(n)
    for v in ring:
        for t in _incident_triangles(v):
            verts = _tri_vertices(t)
            inner = [w for w in verts if _sup(w[0], w[1]) <= n]
            if len(inner) != 1 or inner[0] != v:
                continue
            a, b = [w for w in verts if w != v]
            if _sup(a[0], a[1]) > m or _sup(b[0], b[1]) > m:
                continue
            ca = site_color(desc, a[0], a[1])
            cb = site_color(desc, b[0], b[1])
            if ca == cb:
                continue
            nxt = _other_triangle(t, a, b)
            cx0, cy0 = _tri_centroid3(t)
            cx1, cy1 = _tri_centroid3(nxt)
            dirx, diry = cx1 - cx0, cy1 - cy0
            relx, rely = a[0] - b[0], a[1] - b[1]
            if dirx * rely - diry * relx > 0:
                yield t, a, b, ca
            else:
                yield t, b, a, cb


def _ring_ccw(r: int):
    if r == 0:
        return [(0, 0)]
    out = []
    out.extend((r, t) for t in range(0, r))
    out.extend((r - s, r) for s in range(0, 2 * r))
    out.extend((-r, r - t) for t in range(0, 2 * r))
    out.extend((-r + s, -r) for s in range(0, 2 * r))
    out.extend((r, -r + t) for t in range(0, r))
    return out


def _walk_interface(desc, n, m, port, left, right, col_left, record):
    """Walk one interface from its inner port until it exits the annulus.

    Returns (crossed, duals, lefts, rights, final_left, final_right)
    where duals/lefts/rights are populated only when ``record`` is true.
    """
    tri = _other_triangle(port, left, right)
    duals = []
    lefts = [left]
    rights = [right]
    cap = _MAX_WALK_FACTOR * (m + 2) * (m + 2)
    steps = 0
    while True:
        steps += 1
        if steps > cap:
            raise RuntimeError("interface walk exceeded step budget")
        if record:
            cx, cy = _tri_centroid3(tri)
            duals.append((cx / 3.0, cy / 3.0))
        c = _third_vertex(tri, left, right)
        sc = _sup(c[0], c[1])
        if sc <= n:
            return False, duals, lefts, rights, left, right
        if sc > m:
            return True, duals, lefts, rights, left, right
        if site_color(desc, c[0], c[1]) == col_left:
            if record and c != lefts[-1]:
                lefts.append(c)
            tri = _other_triangle(tri, c, right)
            left = c
        else:
            if record and c != rights[-1]:
                rights.append(c)
            tri = _other_triangle(tri, left, c)
            right = c


def count_crossing_interfaces(desc, n: int, m: int) -> int:
    count = 0
    for port, left, right, cl in _iter_ports(desc, n, m):
        crossed, *_ = _walk_interface(desc, n, m, port, left, right, cl, False)
        if crossed:
            count += 1
    return count


def trace_crossing_interfaces(desc, n: int, m: int):
    """Full records of the interfaces crossing A(n, m).

    Each record is a dict with the inner/outer endpoint bond midpoints,
    the triangle centroids along the walk, the left/right flanking site
    paths, and the color on the left.
    """
    out = []
    for port, left, right, cl in _iter_ports(desc, n, m):
        crossed, duals, lefts, rights, fl, fr = _walk_interface(
            desc, n, m, port, left, right, cl, True
        )
        if not crossed:
            continue
        out.append(
            {
                "inner_mid": ((left[0] + right[0]) / 2.0, (left[1] + right[1]) / 2.0),
                "outer_mid": ((fl[0] + fr[0]) / 2.0, (fl[1] + fr[1]) / 2.0),
                "duals": duals,
                "left_sites": lefts,
                "right_sites": rights,
                "left_color": cl,
            }
        )
    return out


# --- monochromatic cluster searches ----------------------------------


def _inner_adjacent_sites(n: int):
    """Annulus sites at radius n+1 adjacent to B(n), in ccw order."""
    out = []
    for v in _ring_ccw(n + 1):
        for dx, dy in _OFFS:
            if _sup(v[0] + dx, v[1] + dy) <= n:
                out.append(v)
                break
    return out


def mono_reaches(desc, n: int, m: int, color: int) -> bool:
    """True when a color path in the open annulus joins the inner-adjacent
    rim to the outer ring: the one-color arm event."""
    seeds = [
        s for s in _inner_adjacent_sites(n) if site_color(desc, s[0], s[1]) == color
    ]
    if not seeds:
        return False
    seen = set(seeds)
    queue = list(seeds)
    qi = 0
    while qi < len(queue):
        x, y = queue[qi]
        qi += 1
        if _sup(x, y) == m:
            return True
        for dx, dy in _OFFS:
            w = (x + dx, y + dy)
            if w in seen:
                continue
            if not n < _sup(w[0], w[1]) <= m:
                continue
            if site_color(desc, w[0], w[1]) != color:
                continue
            seen.add(w)
            queue.append(w)
    return False


def canonical_arm(desc, n: int, m: int, color: int):
    """Deterministic crossing arm in the closed annulus {n <= sup <= m}.

    Starts are tried on the inner ring in ccw-from-(n,0) order, then on
    the inner-adjacent rim at radius n+1 (same order); from each start a
    depth-first search with counterclockwise neighbor preference runs
    until the outer ring is touched.  Returns the stack of sites of the
    first successful search, or None.
    """
    starts = list(_ring_ccw(n)) + _inner_adjacent_sites(n)
    failed: set = set()
    for s0 in starts:
        if s0 in failed:
            continue
        if site_color(desc, s0[0], s0[1]) != color:
            continue
        arm = _leftmost_dfs(desc, n, m, color, s0, failed)
        if arm is not None:
            return arm
    return None


def _leftmost_dfs(desc, n, m, color, s0, failed):
    if _sup(s0[0], s0[1]) == m:
        return [s0]
    visited = {s0}
    # frames: (site, base_dir, next_k); directions tried ccw from base_dir
    stack = [(s0, 0, 0)]
    path = [s0]
    while stack:
        site, base, k = stack[-1]
        if k == 6:
            stack.pop()
            path.pop()
            continue
        stack[-1] = (site, base, k + 1)
        d = (base + k) % 6
        dx, dy = _OFFS[d]
        w = (site[0] + dx, site[1] + dy)
        if w in visited:
            continue
        if not n <= _sup(w[0], w[1]) <= m:
            continue
        if site_color(desc, w[0], w[1]) != color:
            continue
        visited.add(w)
        path.append(w)
        if _sup(w[0], w[1]) == m:
            return path
        stack.append((w, ((d + 3) % 6 + 1) % 6, 0))
    failed.update(visited)
    return None


def mono_bfs_path(desc, n: int, m: int, color: int, sources, targets):
    """Deterministic shortest color path in the open annulus from the
    source set to the target set (both given in priority order)."""
    tset = set(targets)
    parent: dict = {}
    queue = []
    for s in sources:
        if s in parent:
            continue
        if site_color(desc, s[0], s[1]) != color:
            continue
        parent[s] = None
        queue.append(s)
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        if u in tset:
            out = []
            w = u
            while w is not None:
                out.append(w)
                w = parent[w]
            out.reverse()
            return out
        for dx, dy in _OFFS:
            w = (u[0] + dx, u[1] + dy)
            if w in parent:
                continue
            if not n < _sup(w[0], w[1]) <= m:
                continue
            if site_color(desc, w[0], w[1]) != color:
                continue
            parent[w] = u
            queue.append(w)
    return None


# --- crossing-count peeling in the narrow sector rectangle ------------


def peel_crossing_count(desc, sites, near_lo, near_hi, n_inner: int, n_outer: int) -> int:
    """Maximum number of vertex-disjoint black ray-to-ray crossings of the
    sector rectangle, by innermost-first peeling.

    Each round finds the crossing hugging the inner-arc side (the black
    path inside the layer exposed by the white region grown from the
    inner side) and deletes its sites; rounds repeat until a white path
    from the inner side to the outer side shows no crossing remains.
    """
    k = len(sites)
    idx = {s: i for i, s in enumerate(sites)}
    colors = [site_color(desc, x, y) for (x, y) in sites]
    adj: list[list[int]] = [[] for _ in range(k)]
    inner_touch = [False] * k
    outer_touch = [False] * k
    for i, (x, y) in enumerate(sites):
        for dx, dy in _OFFS:
            w = (x + dx, y + dy)
            j = idx.get(w)
            if j is not None:
                adj[i].append(j)
            else:
                swn = _sup(w[0], w[1])
                if swn <= n_inner:
                    inner_touch[i] = True
                elif swn > n_outer:
                    outer_touch[i] = True
    count = 0
    while True:
        # white region grown from the inner-arc side
        wmark = [False] * k
        queue = [i for i in range(k) if colors[i] == WHITE and inner_touch[i]]
        for i in queue:
            wmark[i] = True
        qi = 0
        blocked = False
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if outer_touch[u]:
                blocked = True
            for v in adj[u]:
                if not wmark[v] and colors[v] == WHITE:
                    wmark[v] = True
                    queue.append(v)
        if blocked:
            return count
        exposed = [False] * k
        for i in range(k):
            if colors[i] != BLACK:
                continue
            if inner_touch[i]:
                exposed[i] = True
            else:
                for v in adj[i]:
                    if wmark[v]:
                        exposed[i] = True
                        break
        path = _rect_path(k, adj, exposed, near_lo, near_hi)
        if path is None:
            return count
        count += 1
        for i in path:
            colors[i] = WHITE


def _rect_path(k, adj, allowed, near_lo, near_hi):
    parent = [-2] * k
    queue = [i for i in range(k) if allowed[i] and near_lo[i]]
    for i in queue:
        parent[i] = -1
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        if near_hi[u]:
            out = []
            w = u
            while w != -1:
                out.append(w)
                w = parent[w]
            return out
        for v in adj[u]:
            if parent[v] == -2 and allowed[v]:
                parent[v] = u
                queue.append(v)
    return None


# --- universal-cover lift ---------------------------------------------


def lifted_sheet_range(desc, n: int, m: int, W: int, color: int):
    """Connectivity of the color subgraph of the open annulus lifted to
    the universal cover, cut along the positive x-axis.

    Seeds are the inner-adjacent rim sites on sheet 0; a bond crossing
    the cut counterclockwise raises the sheet by one.  Returns
    (found, w_min, w_max, exhausted, witness_min, witness_max) where the
    witnesses are projected site paths realizing the extreme sheets.
    """
    import math

    two_pi = 2.0 * math.pi
    seeds = [
        s for s in _inner_adjacent_sites(n) if site_color(desc, s[0], s[1]) == color
    ]
    if not seeds:
        return False, 0, 0, False, [], []
    parent: dict = {}
    queue = []
    for s in seeds:
        node = (s[0], s[1], 0)
        if node not in parent:
            parent[node] = None
            queue.append(node)
    qi = 0
    exhausted = False
    best: dict[int, tuple] = {}
    while qi < len(queue):
        x, y, w = queue[qi]
        qi += 1
        if _sup(x, y) == m:
            if w not in best:
                best[w] = (x, y, w)
        for dx, dy in _OFFS:
            vx, vy = x + dx, y + dy
            if not n < _sup(vx, vy) <= m:
                continue
            if site_color(desc, vx, vy) != color:
                continue
            au = math.atan2(y, x) % two_pi
            av = math.atan2(vy, vx) % two_pi
            cross = x * vy - y * vx
            dot = x * vx + y * vy
            delta = math.atan2(cross, dot)
            chi = int(round((au + delta - av) / two_pi))
            vw = w + chi
            if abs(vw) > W:
                exhausted = True
                continue
            node = (vx, vy, vw)
            if node in parent:
                continue
            parent[node] = (x, y, w)
            queue.append(node)
    if not best:
        return False, 0, 0, exhausted, [], []
    w_min = min(best)
    w_max = max(best)
    if abs(w_min) >= W or abs(w_max) >= W:
        # connectivity may continue beyond the window
        exhausted = exhausted or abs(w_min) == W or abs(w_max) == W
    return (
        True,
        w_min,
        w_max,
        exhausted,
        _chain(parent, best[w_min]),
        _chain(parent, best[w_max]),
    )


def _chain(parent, node):
    out = []
    while node is not None:
        out.append((node[0], node[1]))
        node = parent[node]
    out.reverse()
    return out
