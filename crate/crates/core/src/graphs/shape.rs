use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::ZdGraph;

/// Shape tag, assigned by the first matching rule in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum ShapeTag {
    Empty,
    SingleVertex,
    /// `K_n`, `n >= 2`.
    Complete {
        n: usize,
    },
    /// `K_{1,r}`, `r >= 2`.
    Star {
        r: usize,
    },
    /// `D_r + K_1 + K_1 + D_s` with `1 <= r <= s`.
    TwoStar {
        r: usize,
        s: usize,
    },
    /// `K_{m,n}` with `2 <= m <= n`.
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    OtherForest,
    HasCycle {
        girth: usize,
        triangle_free: bool,
        quadrilateral_free: bool,
    },
}

impl ShapeTag {
    /// Star in the wide sense: `K_{1,r}` for any `r >= 1`.
    pub fn is_star_like(&self) -> bool {
        matches!(self, ShapeTag::Star { .. } | ShapeTag::Complete { n: 2 })
    }
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ShapeTag::Empty => write!(f, "empty"),
            ShapeTag::SingleVertex => write!(f, "single-vertex"),
            ShapeTag::Complete { n } => write!(f, "complete n={n}"),
            ShapeTag::Star { r } => write!(f, "star r={r} (K_{{1,{r}}})"),
            ShapeTag::TwoStar { r: 1, s: 1 } => write!(f, "two-star r=1 s=1 (K1+K1+K1+K1)"),
            ShapeTag::TwoStar { r: 1, s } => write!(f, "two-star r=1 s={s} (K1+K1+K1+D_{s})"),
            ShapeTag::TwoStar { r, s } => write!(f, "two-star r={r} s={s} (D_{r}+K1+K1+D_{s})"),
            ShapeTag::CompleteBipartite { m, n } => {
                write!(f, "complete-bipartite m={m} n={n}")
            }
            ShapeTag::OtherForest => write!(f, "other-forest"),
            ShapeTag::HasCycle {
                girth,
                triangle_free,
                quadrilateral_free,
            } => write!(
                f,
                "cycle girth={girth} triangle-free={triangle_free} quadrilateral-free={quadrilateral_free}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// `None` for acyclic graphs.
    pub girth: Option<usize>,
    pub clique_number: usize,
    pub component_count: usize,
    /// Per vertex position; `None` when some vertex is unreachable.
    pub eccentricity: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphShape {
    #[serde(flatten)]
    pub tag: ShapeTag,
    pub diameter: Option<usize>,
    /// Diameter of each connected component, ordered by least vertex.
    pub component_diameters: Vec<usize>,
    pub component_count: usize,
    pub clique_number: usize,
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tag.fmt(f)
    }
}

fn bfs(g: &ZdGraph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have a distance");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn components(g: &ZdGraph) -> Vec<Vec<usize>> {
    let v = g.vertex_count();
    let mut seen = vec![false; v];
    let mut out = Vec::new();
    for s in 0..v {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = bfs(g, s)
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|_| i))
            .collect();
        for &i in &comp {
            seen[i] = true;
        }
        out.push(comp);
    }
    out
}

/// Shortest cycle length via BFS from every vertex.
fn girth(g: &ZdGraph) -> Option<usize> {
    let v = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..v {
        let mut dist = vec![usize::MAX; v];
        let mut parent = vec![usize::MAX; v];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Every maximal clique (Bron–Kerbosch with pivoting), as sorted vertex
/// positions.
pub fn maximal_cliques(g: &ZdGraph) -> Vec<Vec<usize>> {
    fn expand(
        g: &ZdGraph,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| g.adjacent(u, w)).count())
            .expect("p or x is nonempty");
        let mut p = p;
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&w| !g.adjacent(pivot, w))
            .collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if g.vertex_count() > 0 {
        expand(
            g,
            &mut Vec::new(),
            (0..g.vertex_count()).collect(),
            Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out
}

/// Exact clique number by branch and bound.
pub fn clique_number(g: &ZdGraph) -> usize {
    fn grow(g: &ZdGraph, size: usize, cands: &[usize], best: &mut usize) {
        if size + cands.len() <= *best {
            return;
        }
        if cands.is_empty() {
            *best = size;
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            if size + cands.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.adjacent(v, w))
                .collect();
            grow(g, size + 1, &next, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    grow(g, 0, &all, &mut best);
    best
}

pub fn graph_metrics(g: &ZdGraph) -> GraphMetrics {
    let v = g.vertex_count();
    let dists: Vec<Vec<Option<usize>>> = (0..v).map(|s| bfs(g, s)).collect();
    let eccentricity: Vec<Option<usize>> = dists
        .iter()
        .map(|row| row.iter().try_fold(0usize, |m, d| d.map(|d| m.max(d))))
        .collect();
    let diameter = eccentricity
        .iter()
        .try_fold(0usize, |m, e| e.map(|e| m.max(e)));
    GraphMetrics {
        diameter,
        girth: girth(g),
        clique_number: clique_number(g),
        component_count: components(g).len(),
        eccentricity,
    }
}

fn leaves_of(g: &ZdGraph, center: usize) -> Vec<usize> {
    g.neighbors(center).filter(|&w| g.degree(w) == 1).collect()
}

fn classify_tag(g: &ZdGraph, metrics: &GraphMetrics) -> ShapeTag {
    let v = g.vertex_count();
    let e = g.edge_count();
    if v == 0 {
        return ShapeTag::Empty;
    }
    if v == 1 {
        return ShapeTag::SingleVertex;
    }
    if e == v * (v - 1) / 2 {
        return ShapeTag::Complete { n: v };
    }
    let connected = metrics.component_count == 1;
    let tree = connected && e == v - 1;
    if tree {
        if let Some(c) = (0..v).find(|&c| g.degree(c) == v - 1) {
            debug_assert_eq!(leaves_of(g, c).len(), v - 1);
            return ShapeTag::Star { r: v - 1 };
        }
        // Two adjacent subcenters, every other vertex a leaf on one of them.
        let inner: Vec<usize> = (0..v).filter(|&i| g.degree(i) > 1).collect();
        if let [a, b] = inner[..] {
            if g.adjacent(a, b) {
                let la = leaves_of(g, a).len();
                let lb = leaves_of(g, b).len();
                if la >= 1 && lb >= 1 && la + lb + 2 == v {
                    return ShapeTag::TwoStar {
                        r: la.min(lb),
                        s: la.max(lb),
                    };
                }
            }
        }
    }
    if connected {
        if let Some((m, n)) = complete_bipartite_parts(g) {
            if m >= 2 && n >= 2 {
                return ShapeTag::CompleteBipartite {
                    m: m.min(n),
                    n: m.max(n),
                };
            }
        }
    }
    match metrics.girth {
        None => ShapeTag::OtherForest,
        Some(girth) => ShapeTag::HasCycle {
            girth,
            triangle_free: !g.contains_triangle(),
            quadrilateral_free: !g.contains_quadrilateral(),
        },
    }
}

/// Part sizes if the (connected) graph is complete bipartite.
fn complete_bipartite_parts(g: &ZdGraph) -> Option<(usize, usize)> {
    let v = g.vertex_count();
    let dist = bfs(g, 0);
    let side: Vec<bool> = dist
        .iter()
        .map(|d| d.map(|d| d % 2 == 1))
        .collect::<Option<_>>()?;
    for i in 0..v {
        for j in i + 1..v {
            if g.adjacent(i, j) != (side[i] != side[j]) {
                return None;
            }
        }
    }
    let m = side.iter().filter(|&&s| s).count();
    Some((v - m, m))
}

pub fn classify_shape(g: &ZdGraph) -> GraphShape {
    let metrics = graph_metrics(g);
    let tag = classify_tag(g, &metrics);
    let component_diameters = components(g)
        .iter()
        .map(|comp| {
            comp.iter()
                .filter_map(|&i| bfs(g, i).into_iter().flatten().max())
                .max()
                .unwrap_or(0)
        })
        .collect();
    GraphShape {
        tag,
        diameter: metrics.diameter,
        component_diameters,
        component_count: metrics.component_count,
        clique_number: metrics.clique_number,
    }
}
