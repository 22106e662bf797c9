//! The Seifert algorithm on a diagram: smoothing every crossing the
//! orientation-preserving way leaves the Seifert circles, which carry a
//! signed multigraph (one vertex per circle, one edge per crossing). The
//! 2-connected blocks of that graph decide homogeneity, and the circle
//! count gives the genus of the Seifert surface.

use super::{Diagram, DiagramError, EdgeId, Sign};

/// Signed multigraph on the Seifert circles; `edges[i]` corresponds to
/// crossing `i` of the diagram.
#[derive(Debug, Clone)]
pub struct SeifertGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, Sign)>,
}

#[derive(Debug, Clone)]
pub struct SeifertData {
    /// Partition of the diagram edges into Seifert circles. Crossing-free
    /// circles have no edges and are counted only in `s`.
    pub circles: Vec<Vec<EdgeId>>,
    /// Number of Seifert circles, crossing-free circles included.
    pub s: usize,
    pub graph: SeifertGraph,
    /// 2-connected components of the Seifert graph as sets of crossing
    /// indices; every crossing lies in exactly one block.
    pub blocks: Vec<Vec<usize>>,
    /// Genus of the surface the Seifert algorithm produces.
    pub genus: i64,
    /// Every block carries crossings of a single sign.
    pub homogeneous: bool,
    pub positive: bool,
    pub negative: bool,
    pub writhe: i64,
}

/// Runs the Seifert algorithm.
pub fn seifert(d: &Diagram) -> SeifertData {
    let n = d.edge_count() as usize;
    let mut uf = UnionFind::new(n);
    for c in d.crossings() {
        uf.union(c.under_in as usize, c.over_out as usize);
        uf.union(c.over_in as usize, c.under_out as usize);
    }

    // dense circle ids in order of smallest member edge
    let mut circle_id = vec![usize::MAX; n];
    let mut circles: Vec<Vec<EdgeId>> = Vec::new();
    for e in 0..n {
        let r = uf.find(e);
        if circle_id[r] == usize::MAX {
            circle_id[r] = circles.len();
            circles.push(Vec::new());
        }
        circle_id[e] = circle_id[r];
        circles[circle_id[e]].push(e as EdgeId);
    }

    let free = d.extra_loops() as usize;
    let vertex_count = circles.len() + free;
    let edges: Vec<(usize, usize, Sign)> = d
        .crossings()
        .iter()
        .map(|c| {
            (
                circle_id[c.under_in as usize],
                circle_id[c.over_in as usize],
                c.sign,
            )
        })
        .collect();
    let graph = SeifertGraph {
        vertex_count,
        edges,
    };
    let blocks = biconnected_blocks(&graph);
    let homogeneous = blocks.iter().all(|b| {
        b.iter()
            .map(|&e| graph.edges[e].2)
            .all(|s| s == graph.edges[b[0]].2)
    });
    let c = d.crossing_count();
    let positive = d.crossings().iter().all(|c| c.sign == Sign::Pos);
    let negative = d.crossings().iter().all(|c| c.sign == Sign::Neg);

    // Genus summed over connected pieces of the Seifert picture: a piece
    // with s_i circles, c_i crossings and mu_i link components contributes
    // (2 - (s_i - c_i) - mu_i) / 2.
    let mut piece = UnionFind::new(circles.len().max(1));
    for &(u, v, _) in &graph.edges {
        piece.union(u, v);
    }
    let mut s_per = vec![0i64; circles.len()];
    let mut c_per = vec![0i64; circles.len()];
    let mut mu_per = vec![0i64; circles.len()];
    for v in 0..circles.len() {
        s_per[piece.find(v)] += 1;
    }
    for &(u, _, _) in &graph.edges {
        c_per[piece.find(u)] += 1;
    }
    for comp in d.components() {
        let v = circle_id[comp[0] as usize];
        mu_per[piece.find(v)] += 1;
    }
    let mut genus = 0;
    for v in 0..circles.len() {
        if piece.find(v) == v {
            let two_g = 2 - (s_per[v] - c_per[v]) - mu_per[v];
            debug_assert!(two_g >= 0 && two_g % 2 == 0, "piece genus must be integral");
            genus += two_g / 2;
        }
    }
    // crossing-free circles are disks and contribute nothing

    debug_assert_eq!(graph.edges.len(), c);
    SeifertData {
        circles,
        s: vertex_count,
        graph,
        blocks,
        genus,
        homogeneous,
        positive,
        negative,
        writhe: d.writhe(),
    }
}

/// Exact-genus verdict for a knot diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusBound {
    /// The diagram is homogeneous, so its Seifert surface realizes the
    /// genus of the knot (and the weak genus).
    Certified(i64),
    /// Non-homogeneous diagram: the diagram genus only bounds from above.
    UpperBoundOnly(i64),
}

impl GenusBound {
    pub fn value(self) -> i64 {
        match self {
            GenusBound::Certified(g) | GenusBound::UpperBoundOnly(g) => g,
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(self, GenusBound::Certified(_))
    }
}

/// For a knot diagram, returns the diagram genus, certified as the exact
/// knot genus when the diagram is homogeneous.
pub fn certified_genus(d: &Diagram) -> Result<GenusBound, DiagramError> {
    let comps = d.component_count();
    if comps != 1 {
        return Err(DiagramError::NotAKnot(comps));
    }
    let s = seifert(d);
    Ok(if s.homogeneous {
        GenusBound::Certified(s.genus)
    } else {
        GenusBound::UpperBoundOnly(s.genus)
    })
}

/// 2-connected components of a multigraph, as sets of edge indices.
/// Self-loops form their own singleton blocks.
fn biconnected_blocks(g: &SeifertGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut blocks = Vec::new();
    for (i, &(u, v, _)) in g.edges.iter().enumerate() {
        if u == v {
            blocks.push(vec![i]);
        } else {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
    }

    const NONE: usize = usize::MAX;
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut timer = 0;

    // iterative DFS: (vertex, parent edge, adjacency cursor)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, NONE, 0));
        while let Some(&(u, pe, cur)) = frames.last() {
            if cur < adj[u].len() {
                frames.last_mut().expect("frame exists").2 += 1;
                let (v, eid) = adj[u][cur];
                if eid == pe {
                    continue;
                }
                if disc[v] == NONE {
                    stack.push(eid);
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    frames.push((v, eid, 0));
                } else if disc[v] < disc[u] {
                    stack.push(eid);
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // pop one block ending at the tree edge pe
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
