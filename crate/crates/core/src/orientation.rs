//! The two orientation characters of `Aut(G)`:
//!
//! * `theta_s(P) = sign(P_V) · ∏ ε_P(e)`, from the vertex permutation and
//!   the per-edge orientation signs;
//! * `theta_k(P) = sign(|P_E|) · sign(det P_E|H1)`, from the unsigned edge
//!   permutation and the induced action on first homology.
//!
//! The two agree on connected multigraphs. For disconnected ones,
//! `theta_k_extended` also multiplies by the sign of the permutation of
//! connected components. Both follow from the multiplicativity of
//! determinants along `0 -> H1 -> C1 -> C0 -> H0 -> 0`:
//! `det(H1) · det(C0) = det(C1) · det(H0)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::automorphism::{enumerate_automorphisms, induced_signed_edge_perm, Automorphism};
use crate::error::{Error, Result};
use crate::homology::{fundamental_cycles, induced_h1_matrix, CycleBasis};
use crate::matrix::{sign_of, IntMatrix};
use crate::multigraph::{components, reference_orientation, spanning_forest, Multigraph, Orientation};
use crate::perm::{permutation_sign, Sign};

/// Determinants of an automorphism on the spaces of the exact sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterminantFactors {
    /// Signed edge permutation on `C1`.
    #[serde(serialize_with = "ser_bigint")]
    pub chain_edges: BigInt,
    /// Vertex permutation on `C0`.
    #[serde(serialize_with = "ser_bigint")]
    pub chain_vertices: BigInt,
    /// Induced map on `H1`.
    #[serde(serialize_with = "ser_bigint")]
    pub homology: BigInt,
    /// Permutation of connected components, i.e. the action on `H0`.
    pub components: Sign,
    /// `homology · chain_vertices == chain_edges · components`
    pub relation_holds: bool,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaValue {
    pub theta_k: Sign,
    pub theta_s: Sign,
    pub agree: bool,
    pub h1_dimension: usize,
    pub diagnostics: Option<DeterminantFactors>,
}

impl ThetaValue {
    pub fn new(theta_k: Sign, theta_s: Sign, h1_dimension: usize, diagnostics: Option<DeterminantFactors>) -> Self {
        ThetaValue { theta_k, theta_s, agree: theta_k == theta_s, h1_dimension, diagnostics }
    }
}

pub fn theta_s(g: &Multigraph, o: &Orientation, a: &Automorphism) -> Sign {
    permutation_sign(a.vertex_perm()) * induced_signed_edge_perm(g, o, a).sign_product()
}

/// Only defined on connected graphs; see [`theta_k_extended`].
pub fn theta_k(g: &Multigraph, o: &Orientation, b: &CycleBasis, a: &Automorphism) -> Result<Sign> {
    let parts = components(g);
    if parts.component_count > 1 {
        return Err(Error::Disconnected { components: parts.component_count });
    }
    theta_k_unchecked(g, o, b, a)
}

pub fn theta_k_extended(g: &Multigraph, o: &Orientation, b: &CycleBasis, a: &Automorphism) -> Result<Sign> {
    let parts = components(g);
    let component_sign = permutation_sign(&parts.induced_permutation(a.vertex_perm()));
    Ok(theta_k_unchecked(g, o, b, a)? * component_sign)
}

fn theta_k_unchecked(g: &Multigraph, o: &Orientation, b: &CycleBasis, a: &Automorphism) -> Result<Sign> {
    let h1 = induced_h1_matrix(g, o, b, a)?.unimodular_det_sign()?;
    Ok(permutation_sign(&a.edge_perm()) * h1)
}

/// Computes the three chain/homology determinants as full matrix
/// determinants and checks `det(H1) = det(C1) / det(C0)`, corrected by the
/// component permutation when the graph is disconnected.
pub fn determinant_relation_check(
    g: &Multigraph,
    o: &Orientation,
    b: &CycleBasis,
    a: &Automorphism,
) -> Result<DeterminantFactors> {
    let s = induced_signed_edge_perm(g, o, a);
    let chain_edges = IntMatrix::signed_permutation(&s.edge_perm, &s.edge_sign).determinant()?;
    let chain_vertices = IntMatrix::permutation(a.vertex_perm()).determinant()?;
    let homology = induced_h1_matrix(g, o, b, a)?.determinant()?;
    let components = permutation_sign(&components(g).induced_permutation(a.vertex_perm()));
    let relation_holds = &homology * &chain_vertices == &chain_edges * BigInt::from(components.value());
    Ok(DeterminantFactors { chain_edges, chain_vertices, homology, components, relation_holds })
}

/// One record per automorphism in enumeration order, using the canonical
/// orientation and forest. Disconnected graphs use the extended variant.
pub fn verify_theorem(g: &Multigraph) -> Result<Vec<ThetaValue>> {
    let o = reference_orientation(g);
    let b = fundamental_cycles(g, &o, &spanning_forest(g))?;
    enumerate_automorphisms(g).iter().map(|a| evaluate(g, &o, &b, a)).collect()
}

/// Both characters plus the determinant factors for one automorphism.
/// `theta_k` here is always the extended form, which coincides with the
/// plain one on connected graphs.
pub fn evaluate(g: &Multigraph, o: &Orientation, b: &CycleBasis, a: &Automorphism) -> Result<ThetaValue> {
    let factors = determinant_relation_check(g, o, b, a)?;
    let h1 = sign_of(&factors.homology)?;
    let k = permutation_sign(&a.edge_perm()) * h1 * factors.components;
    Ok(ThetaValue::new(k, theta_s(g, o, a), b.dimension(), Some(factors)))
}

/// Whether some automorphism reverses the orientation.
pub fn has_odd_automorphism(g: &Multigraph) -> bool {
    let o = reference_orientation(g);
    enumerate_automorphisms(g).iter().any(|a| theta_s(g, &o, a) == Sign::Minus)
}
