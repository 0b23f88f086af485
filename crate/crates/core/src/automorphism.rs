//! Automorphisms of a multigraph as half-edge permutations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, Orientation};
use crate::perm::{self, Sign};

/// A half-edge permutation commuting with the pairing, together with the
/// vertex permutation it covers.
///
/// The vertex map is kept alongside the half-edge map because isolated
/// vertices carry no half-edges and their images cannot be recovered from
/// it. Construction checks that the two agree everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    // Field order gives the derived `Ord` the enumeration order: vertex map first.
    vertex_perm: Vec<usize>,
    half_edge_perm: Vec<usize>,
}

impl Automorphism {
    pub fn new(g: &Multigraph, half_edge_perm: Vec<usize>, vertex_perm: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidAutomorphism(msg));
        if half_edge_perm.len() != g.half_edge_count() {
            return Err(Error::SizeMismatch { expected: g.half_edge_count(), found: half_edge_perm.len() });
        }
        if vertex_perm.len() != g.vertex_count() {
            return Err(Error::SizeMismatch { expected: g.vertex_count(), found: vertex_perm.len() });
        }
        if !perm::is_permutation(&half_edge_perm) {
            return bad("half-edge map is not a bijection".into());
        }
        if !perm::is_permutation(&vertex_perm) {
            return bad("vertex map is not a bijection".into());
        }
        for h in 0..g.half_edge_count() {
            if half_edge_perm[g.pairing(h)] != g.pairing(half_edge_perm[h]) {
                return bad(format!("does not commute with the pairing at half-edge {h}"));
            }
            if g.endpoint(half_edge_perm[h]) != vertex_perm[g.endpoint(h)] {
                return bad(format!("half-edge {h} is not carried along its vertex"));
            }
        }
        Ok(Automorphism { vertex_perm, half_edge_perm })
    }

    pub fn identity(g: &Multigraph) -> Self {
        Automorphism {
            vertex_perm: perm::identity(g.vertex_count()),
            half_edge_perm: perm::identity(g.half_edge_count()),
        }
    }

    pub fn half_edge_perm(&self) -> &[usize] {
        &self.half_edge_perm
    }

    pub fn vertex_perm(&self) -> &[usize] {
        &self.vertex_perm
    }

    pub fn is_identity(&self) -> bool {
        self.half_edge_perm.iter().enumerate().all(|(i, &x)| i == x)
            && self.vertex_perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// The unsigned edge permutation `|P_E|`.
    pub fn edge_perm(&self) -> Vec<usize> {
        self.half_edge_perm.iter().step_by(2).map(|&h| h / 2).collect()
    }
}

/// `(a ∘ b)`: apply `b`, then `a`.
pub fn compose(a: &Automorphism, b: &Automorphism) -> Result<Automorphism> {
    if a.half_edge_perm.len() != b.half_edge_perm.len() {
        return Err(Error::SizeMismatch { expected: a.half_edge_perm.len(), found: b.half_edge_perm.len() });
    }
    if a.vertex_perm.len() != b.vertex_perm.len() {
        return Err(Error::SizeMismatch { expected: a.vertex_perm.len(), found: b.vertex_perm.len() });
    }
    Ok(Automorphism {
        vertex_perm: perm::compose(&a.vertex_perm, &b.vertex_perm),
        half_edge_perm: perm::compose(&a.half_edge_perm, &b.half_edge_perm),
    })
}

pub fn invert(a: &Automorphism) -> Automorphism {
    Automorphism {
        vertex_perm: perm::invert(&a.vertex_perm),
        half_edge_perm: perm::invert(&a.half_edge_perm),
    }
}

/// `|P_E|` with the per-edge orientation signs `ε_P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedEdgePermutation {
    pub edge_perm: Vec<usize>,
    pub edge_sign: Vec<Sign>,
}

impl SignedEdgePermutation {
    pub fn sign_product(&self) -> Sign {
        self.edge_sign.iter().copied().product()
    }

    pub fn unsigned_sign(&self) -> Sign {
        perm::permutation_sign(&self.edge_perm)
    }
}

pub fn induced_signed_edge_perm(g: &Multigraph, o: &Orientation, a: &Automorphism) -> SignedEdgePermutation {
    debug_assert_eq!(o.len(), g.edge_count());
    let mut edge_perm = Vec::with_capacity(g.edge_count());
    let mut edge_sign = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let image = a.half_edge_perm[o.tail(e)];
        let f = g.edge_of(image);
        edge_perm.push(f);
        edge_sign.push(if image == o.tail(f) { Sign::Plus } else { Sign::Minus });
    }
    SignedEdgePermutation { edge_perm, edge_sign }
}

/// Every automorphism of `g`, exactly once, sorted by vertex map and then
/// half-edge map (so the identity comes first).
pub fn enumerate_automorphisms(g: &Multigraph) -> Vec<Automorphism> {
    let mut out = Vec::new();
    for_each_automorphism(g, |a| out.push(a));
    out.sort_unstable();
    out
}

/// Number of automorphisms, without materializing them.
pub fn count_automorphisms(g: &Multigraph) -> usize {
    let mut n = 0;
    for_each_automorphism(g, |_| n += 1);
    n
}

fn for_each_automorphism(g: &Multigraph, mut emit: impl FnMut(Automorphism)) {
    let search = VertexSearch::new(g);
    let n = g.vertex_count();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search.extend(0, &mut image, &mut used, &mut |vertex_perm| {
        extend_to_half_edges(g, &search.buckets, vertex_perm, &mut emit);
    });
}

struct VertexSearch {
    invariant: Vec<(usize, usize)>,
    mult: Vec<Vec<usize>>,
    /// Edges grouped by unordered endpoint pair `(min, max)`, ascending.
    buckets: BTreeMap<(usize, usize), Vec<usize>>,
}

impl VertexSearch {
    fn new(g: &Multigraph) -> Self {
        let mult = g.multiplicity_matrix();
        let invariant = g.degrees().into_iter().enumerate().map(|(v, d)| (d, mult[v][v])).collect();
        let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (e, (a, b)) in g.edges().enumerate() {
            buckets.entry((a.min(b), a.max(b))).or_default().push(e);
        }
        VertexSearch { invariant, mult, buckets }
    }

    fn extend(&self, v: usize, image: &mut Vec<usize>, used: &mut Vec<bool>, found: &mut impl FnMut(&[usize])) {
        let n = image.len();
        if v == n {
            found(image);
            return;
        }
        for x in 0..n {
            if used[x] || self.invariant[x] != self.invariant[v] {
                continue;
            }
            // Multiplicities to every already-placed vertex must be preserved;
            // loops at v are covered by the invariant.
            if (0..v).any(|w| self.mult[v][w] != self.mult[x][image[w]]) {
                continue;
            }
            image[v] = x;
            used[x] = true;
            self.extend(v + 1, image, used, found);
            used[x] = false;
        }
        image[v] = usize::MAX;
    }
}

// A choice for one bucket of parallel edges: which target edge each source
// edge goes to, and for loops whether the two half-edges are swapped.
struct BucketChoice<'a> {
    source: &'a [usize],
    target: &'a [usize],
    is_loop: bool,
}

fn extend_to_half_edges(
    g: &Multigraph,
    buckets: &BTreeMap<(usize, usize), Vec<usize>>,
    vertex_perm: &[usize],
    emit: &mut impl FnMut(Automorphism),
) {
    let choices: Vec<BucketChoice> = buckets
        .iter()
        .map(|(&(a, b), source)| {
            let (x, y) = (vertex_perm[a], vertex_perm[b]);
            let target = &buckets[&(x.min(y), x.max(y))];
            debug_assert_eq!(source.len(), target.len());
            BucketChoice { source, target, is_loop: a == b }
        })
        .collect();

    let mut half_edge_perm = vec![usize::MAX; g.half_edge_count()];
    assign_bucket(g, vertex_perm, &choices, 0, &mut half_edge_perm, emit);
}

fn assign_bucket(
    g: &Multigraph,
    vertex_perm: &[usize],
    choices: &[BucketChoice],
    k: usize,
    half_edge_perm: &mut Vec<usize>,
    emit: &mut impl FnMut(Automorphism),
) {
    let Some(choice) = choices.get(k) else {
        emit(Automorphism { vertex_perm: vertex_perm.to_vec(), half_edge_perm: half_edge_perm.clone() });
        return;
    };
    let m = choice.source.len();
    let mut taken = vec![false; m];
    match_edges(g, vertex_perm, choices, k, 0, &mut taken, half_edge_perm, emit);
}

#[allow(clippy::too_many_arguments)]
fn match_edges(
    g: &Multigraph,
    vertex_perm: &[usize],
    choices: &[BucketChoice],
    k: usize,
    i: usize,
    taken: &mut Vec<bool>,
    half_edge_perm: &mut Vec<usize>,
    emit: &mut impl FnMut(Automorphism),
) {
    let choice = &choices[k];
    if i == choice.source.len() {
        assign_bucket(g, vertex_perm, choices, k + 1, half_edge_perm, emit);
        return;
    }
    let e = choice.source[i];
    let (h0, h1) = g.half_edges(e);
    for j in 0..choice.target.len() {
        if taken[j] {
            continue;
        }
        taken[j] = true;
        let (t0, t1) = g.half_edges(choice.target[j]);
        if choice.is_loop {
            for (a, b) in [(t0, t1), (t1, t0)] {
                half_edge_perm[h0] = a;
                half_edge_perm[h1] = b;
                match_edges(g, vertex_perm, choices, k, i + 1, taken, half_edge_perm, emit);
            }
        } else {
            // The half-edge at v must land at vertex_perm[v].
            let (a, b) = if g.endpoint(t0) == vertex_perm[g.endpoint(h0)] { (t0, t1) } else { (t1, t0) };
            half_edge_perm[h0] = a;
            half_edge_perm[h1] = b;
            match_edges(g, vertex_perm, choices, k, i + 1, taken, half_edge_perm, emit);
        }
        taken[j] = false;
    }
}
