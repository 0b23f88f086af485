//! Half-edge multigraphs, the text graph format, connectivity and
//! spanning forests.
//!
//! Edge `i` owns half-edges `2i` and `2i + 1`; half-edge `2i` sits at the
//! first endpoint listed for the edge. The pairing involution is therefore
//! `h ^ 1` and never stored.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    endpoint: Vec<usize>,
}

impl Multigraph {
    /// Builds a multigraph from an edge list; `(a, a)` is a loop.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut endpoint = Vec::with_capacity(2 * edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({a}, {b}) refers to a vertex outside 0..{vertex_count}"
                )));
            }
            endpoint.push(a);
            endpoint.push(b);
        }
        Ok(Multigraph { vertex_count, endpoint })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.endpoint.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.endpoint.len()
    }

    /// The edge pairing involution.
    #[inline]
    pub fn pairing(&self, h: usize) -> usize {
        h ^ 1
    }

    #[inline]
    pub fn endpoint(&self, h: usize) -> usize {
        self.endpoint[h]
    }

    #[inline]
    pub fn edge_of(&self, h: usize) -> usize {
        h / 2
    }

    #[inline]
    pub fn half_edges(&self, e: usize) -> (usize, usize) {
        (2 * e, 2 * e + 1)
    }

    /// Endpoints in file order.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.endpoint[2 * e], self.endpoint[2 * e + 1])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.edge_count()).map(|e| self.edge_endpoints(e))
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edge_endpoints(e);
        a == b
    }

    /// Degree with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &v in &self.endpoint {
            deg[v] += 1;
        }
        deg
    }

    /// Symmetric matrix of edge multiplicities; the diagonal counts loops.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0; n]; n];
        for (a, b) in self.edges() {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    /// Half-edges attached to each vertex, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (h, &v) in self.endpoint.iter().enumerate() {
            inc[v].push(h);
        }
        inc
    }

    pub fn is_connected(&self) -> bool {
        components(self).component_count <= 1
    }

    /// Serialization in the line format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut out = format!("v {}\n", self.vertex_count);
        for (a, b) in self.edges() {
            out.push_str(&format!("e {a} {b}\n"));
        }
        out
    }

    /// Single-line form, directives separated by `;`.
    pub fn to_compact(&self) -> String {
        self.to_text().trim_end().replace('\n', ";")
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

/// Parses the line-oriented graph format:
///
/// ```text
/// # comment
/// v 3
/// e 0 1
/// e 1 2
/// e 2 0
/// ```
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let directive = fields.next().unwrap_or_default();
        let args: Vec<&str> = fields.collect();
        let number = |s: &str| -> Result<usize> {
            if s.starts_with('-') {
                return Err(err(line, format!("negative value `{s}`")));
            }
            s.parse::<usize>()
                .map_err(|_| err(line, format!("`{s}` is not a non-negative integer")))
        };
        match directive {
            "v" => {
                if vertex_count.is_some() {
                    return Err(err(line, "duplicate `v` directive".into()));
                }
                if !edges.is_empty() {
                    return Err(err(line, "`v` must precede every edge".into()));
                }
                if args.len() != 1 {
                    return Err(err(line, format!("`v` takes 1 argument, got {}", args.len())));
                }
                vertex_count = Some(number(args[0])?);
            }
            "e" => {
                let n = vertex_count
                    .ok_or_else(|| err(line, "edge declared before `v` directive".into()))?;
                if args.len() != 2 {
                    return Err(err(line, format!("`e` takes 2 arguments, got {}", args.len())));
                }
                let a = number(args[0])?;
                let b = number(args[1])?;
                for v in [a, b] {
                    if v >= n {
                        return Err(err(line, format!("vertex {v} out of range 0..{n}")));
                    }
                }
                edges.push((a, b));
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }

    let n = vertex_count.ok_or_else(|| err(0, "missing `v` directive".into()))?;
    Multigraph::from_edges(n, &edges)
}

/// Parses the `;`-separated single-line form produced by [`Multigraph::to_compact`].
pub fn parse_compact(text: &str) -> Result<Multigraph> {
    parse_graph(&text.replace(';', "\n"))
}

/// Designated tail half-edge for every edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    tail: Vec<usize>,
}

impl Orientation {
    pub fn from_tails(g: &Multigraph, tail: Vec<usize>) -> Result<Self> {
        if tail.len() != g.edge_count() {
            return Err(Error::SizeMismatch { expected: g.edge_count(), found: tail.len() });
        }
        for (e, &t) in tail.iter().enumerate() {
            if g.edge_of(t) != e || t >= g.half_edge_count() {
                return Err(Error::InvalidOrientation(format!(
                    "tail {t} of edge {e} is not one of its half-edges"
                )));
            }
        }
        Ok(Orientation { tail })
    }

    /// Builds an orientation from one bit per edge: `false` keeps the
    /// canonical tail, `true` flips it.
    pub fn from_flips(g: &Multigraph, flips: &[bool]) -> Result<Self> {
        if flips.len() != g.edge_count() {
            return Err(Error::SizeMismatch { expected: g.edge_count(), found: flips.len() });
        }
        let tail = flips.iter().enumerate().map(|(e, &f)| 2 * e + usize::from(f)).collect();
        Ok(Orientation { tail })
    }

    pub fn tail(&self, e: usize) -> usize {
        self.tail[e]
    }

    pub fn head(&self, e: usize) -> usize {
        self.tail[e] ^ 1
    }

    pub fn tails(&self) -> &[usize] {
        &self.tail
    }

    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }

    pub fn tail_vertex(&self, g: &Multigraph, e: usize) -> usize {
        g.endpoint(self.tail(e))
    }

    pub fn head_vertex(&self, g: &Multigraph, e: usize) -> usize {
        g.endpoint(self.head(e))
    }
}

/// The smaller half-edge of each edge is its tail.
pub fn reference_orientation(g: &Multigraph) -> Orientation {
    Orientation { tail: (0..g.edge_count()).map(|e| 2 * e).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

impl ComponentPartition {
    /// Smallest vertex of each component.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.component_count];
        for (v, &c) in self.component_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = v;
            }
        }
        reps
    }

    /// The permutation that a vertex permutation induces on component indices.
    pub fn induced_permutation(&self, vertex_perm: &[usize]) -> Vec<usize> {
        self.representatives()
            .into_iter()
            .map(|r| self.component_of[vertex_perm[r]])
            .collect()
    }
}

/// Components are numbered by their smallest vertex, ascending.
pub fn components(g: &Multigraph) -> ComponentPartition {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut component_of = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        component_of[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &h in &inc[u] {
                let w = g.endpoint(g.pairing(h));
                if component_of[w] == usize::MAX {
                    component_of[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    ComponentPartition { component_of, component_count: count }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningForest {
    pub tree_edges: BTreeSet<usize>,
    pub root_of_component: Vec<usize>,
    /// Tree edge joining each vertex to its parent; `None` at roots.
    pub parent_edge: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl SpanningForest {
    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree_edges.contains(&e)
    }

    pub fn non_tree_edges(&self, g: &Multigraph) -> Vec<usize> {
        (0..g.edge_count()).filter(|e| !self.tree_edges.contains(e)).collect()
    }

    /// The vertex on the other end of `v`'s parent edge.
    pub fn parent(&self, g: &Multigraph, v: usize) -> Option<usize> {
        self.parent_edge[v].map(|e| {
            let (a, b) = g.edge_endpoints(e);
            if a == v {
                b
            } else {
                a
            }
        })
    }
}

/// Forest rooted at the smallest vertex of each component.
pub fn spanning_forest(g: &Multigraph) -> SpanningForest {
    grow_forest(g, &components(g), None)
}

/// Same as [`spanning_forest`], except the component containing `root`
/// is grown from `root`.
pub fn spanning_forest_rooted(g: &Multigraph, root: usize) -> Result<SpanningForest> {
    if root >= g.vertex_count() {
        return Err(Error::InvalidGraph(format!("root {root} out of range")));
    }
    Ok(grow_forest(g, &components(g), Some(root)))
}

// Each component grows from its root by repeatedly adding the
// smallest-index edge leaving the visited set.
fn grow_forest(g: &Multigraph, parts: &ComponentPartition, root: Option<usize>) -> SpanningForest {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut roots = parts.representatives();
    if let Some(r) = root {
        roots[parts.component_of[r]] = r;
    }

    let mut visited = vec![false; n];
    let mut parent_edge = vec![None; n];
    let mut depth = vec![0; n];
    let mut tree_edges = BTreeSet::new();
    // frontier of (edge index, half-edge on the visited side)
    let mut frontier: BTreeSet<(usize, usize)> = BTreeSet::new();

    for &r in &roots {
        visited[r] = true;
        frontier.extend(inc[r].iter().map(|&h| (g.edge_of(h), h)));
        while let Some((e, h)) = frontier.pop_first() {
            let from = g.endpoint(h);
            let to = g.endpoint(g.pairing(h));
            if visited[to] {
                continue;
            }
            visited[to] = true;
            parent_edge[to] = Some(e);
            depth[to] = depth[from] + 1;
            tree_edges.insert(e);
            frontier.extend(inc[to].iter().map(|&h| (g.edge_of(h), h)));
        }
    }

    SpanningForest { tree_edges, root_of_component: roots, parent_edge, depth }
}
