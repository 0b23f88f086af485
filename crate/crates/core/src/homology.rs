//! The chain complex `C1 -> C0` of a multigraph, a fundamental-cycle basis
//! of `H1`, and the integer matrix an automorphism induces on it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::automorphism::{induced_signed_edge_perm, Automorphism};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::multigraph::{components, Multigraph, Orientation, SpanningForest};

/// `|V| x |E|`; column `e` is `head(e) - tail(e)`, zero for loops.
pub fn boundary_matrix(g: &Multigraph, o: &Orientation) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.vertex_count(), g.edge_count());
    for e in 0..g.edge_count() {
        let (t, h) = (o.tail_vertex(g, e), o.head_vertex(g, e));
        if t != h {
            m.set(t, e, BigInt::from(-1));
            m.set(h, e, BigInt::one());
        }
    }
    m
}

/// A 1-chain, one coefficient per edge.
pub type Chain = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    pub forest: SpanningForest,
    /// Basis index -> edge.
    pub non_tree_edges: Vec<usize>,
    pub cycles: Vec<Chain>,
    edge_count: usize,
    tails: Vec<usize>,
}

impl CycleBasis {
    pub fn dimension(&self) -> usize {
        self.cycles.len()
    }

    /// Coordinates of a cycle in this basis: its coefficients on the
    /// non-tree edges.
    pub fn coordinates(&self, z: &[i64]) -> Vec<i64> {
        self.non_tree_edges.iter().map(|&e| z[e]).collect()
    }

    fn check(&self, g: &Multigraph, o: &Orientation) -> Result<()> {
        if self.edge_count != g.edge_count() || self.forest.parent_edge.len() != g.vertex_count() {
            return Err(Error::BasisMismatch(format!(
                "basis built for {} edges / {} vertices, graph has {} / {}",
                self.edge_count,
                self.forest.parent_edge.len(),
                g.edge_count(),
                g.vertex_count()
            )));
        }
        if self.tails != o.tails() {
            return Err(Error::BasisMismatch("basis was built with a different orientation".into()));
        }
        Ok(())
    }
}

/// For each non-tree edge `t -> h`: the edge itself plus the tree path from
/// `h` back to `t`, tree edges signed by traversal direction.
pub fn fundamental_cycles(g: &Multigraph, o: &Orientation, f: &SpanningForest) -> Result<CycleBasis> {
    if f.parent_edge.len() != g.vertex_count() || o.len() != g.edge_count() {
        return Err(Error::BasisMismatch("forest or orientation does not match the graph".into()));
    }
    if f.tree_edges.len() + components(g).component_count != g.vertex_count() {
        return Err(Error::BasisMismatch("forest does not span the graph".into()));
    }
    let non_tree_edges = f.non_tree_edges(g);
    let mut cycles = Vec::with_capacity(non_tree_edges.len());
    for &e in &non_tree_edges {
        let mut z = vec![0i64; g.edge_count()];
        z[e] = 1;
        let (tail, head) = (o.tail_vertex(g, e), o.head_vertex(g, e));
        add_tree_path(g, o, f, head, tail, &mut z)?;
        cycles.push(z);
    }
    Ok(CycleBasis { forest: f.clone(), non_tree_edges, cycles, edge_count: g.edge_count(), tails: o.tails().to_vec() })
}

// Adds the tree path from `from` to `to` to `z`.
fn add_tree_path(g: &Multigraph, o: &Orientation, f: &SpanningForest, from: usize, to: usize, z: &mut [i64]) -> Result<()> {
    let (mut a, mut b) = (from, to);
    let mut down = Vec::new();
    while a != b {
        if f.depth[a] >= f.depth[b] {
            // step a -> parent(a)
            let e = f.parent_edge[a].ok_or_else(|| Error::BasisMismatch("endpoints lie in different trees".into()))?;
            z[e] += if o.tail_vertex(g, e) == a { 1 } else { -1 };
            a = f.parent(g, a).expect("parent edge implies parent");
        } else {
            let e = f.parent_edge[b].ok_or_else(|| Error::BasisMismatch("endpoints lie in different trees".into()))?;
            down.push((e, b));
            b = f.parent(g, b).expect("parent edge implies parent");
        }
    }
    // then parent(x) -> x for the recorded steps on the `to` side
    for (e, child) in down {
        z[e] += if o.head_vertex(g, e) == child { 1 } else { -1 };
    }
    Ok(())
}

/// Applies the signed edge action `e -> ε(e) · edge_perm(e)` to a chain.
pub fn push_chain(g: &Multigraph, o: &Orientation, a: &Automorphism, z: &[i64]) -> Chain {
    let s = induced_signed_edge_perm(g, o, a);
    let mut out = vec![0i64; z.len()];
    for (e, &c) in z.iter().enumerate() {
        if c != 0 {
            out[s.edge_perm[e]] += i64::from(s.edge_sign[e].value()) * c;
        }
    }
    out
}

/// Matrix of the automorphism on `H1` in the fundamental-cycle basis.
pub fn induced_h1_matrix(g: &Multigraph, o: &Orientation, b: &CycleBasis, a: &Automorphism) -> Result<IntMatrix> {
    b.check(g, o)?;
    if a.half_edge_perm().len() != g.half_edge_count() {
        return Err(Error::SizeMismatch { expected: g.half_edge_count(), found: a.half_edge_perm().len() });
    }
    let s = induced_signed_edge_perm(g, o, a);
    let d = b.dimension();
    let mut m = IntMatrix::zeros(d, d);
    let mut image = vec![0i64; g.edge_count()];
    for (j, z) in b.cycles.iter().enumerate() {
        image.iter_mut().for_each(|x| *x = 0);
        for (e, &c) in z.iter().enumerate() {
            if c != 0 {
                image[s.edge_perm[e]] += i64::from(s.edge_sign[e].value()) * c;
            }
        }
        for (i, &e) in b.non_tree_edges.iter().enumerate() {
            if image[e] != 0 {
                m.set(i, j, BigInt::from(image[e]));
            }
        }
    }
    Ok(m)
}

/// `∂z` as a vertex vector.
pub fn boundary_of(g: &Multigraph, o: &Orientation, z: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; g.vertex_count()];
    for (e, &c) in z.iter().enumerate() {
        out[o.head_vertex(g, e)] += c;
        out[o.tail_vertex(g, e)] -= c;
    }
    out
}

pub fn is_cycle(g: &Multigraph, o: &Orientation, z: &[i64]) -> bool {
    boundary_of(g, o, z).iter().all(Zero::is_zero)
}
