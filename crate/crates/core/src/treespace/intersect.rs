use rayon::prelude::*;
use serde::Serialize;

use super::topology::{enumerate_topologies, TreeTopology};
use super::ultrametric::{positive_representative, UltrametricVector};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::fermat_weber::{fw_h_polytope, fw_polytope, FwResult, SampleMatrix};
use crate::ratgeom::{enumerate_vertices, VPolytope};
use crate::rational::{serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeIntersection {
    pub topology: TreeTopology,
    /// Canonical coordinates (first pair coordinate zero).
    pub polytope: VPolytope,
    pub dim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreespaceIntersection {
    pub n_leaves: usize,
    pub fw: FwResult,
    pub cones_tested: usize,
    /// Nonempty intersections only, in topology order.
    pub cones: Vec<ConeIntersection>,
    /// `-1` when no Fermat-Weber point is an ultrametric class.
    pub max_dim: i64,
    /// Union of the vertices of all nonempty intersections.
    #[serde(with = "serde_rational::matrix")]
    pub vertices: Vec<Vec<Rational>>,
    /// The single Fermat-Weber class in treespace, when there is exactly one.
    #[serde(with = "serde_rational::option_vec")]
    pub unique_point: Option<Vec<Rational>>,
}

impl TreespaceIntersection {
    /// Whether the unique point is the class of the all-one metric.
    pub fn unique_is_all_ones(&self) -> Option<bool> {
        self.unique_point.as_ref().map(|p| p.iter().all(|x| *x == Rational::from_integer(0.into())))
    }

    pub fn unique_representative(&self) -> Option<Vec<Rational>> {
        self.unique_point.as_deref().map(positive_representative)
    }
}

/// Fermat-Weber points of a tree sample that are themselves ultrametric
/// classes, cone by cone.
///
/// The cone constraints only compare coordinates, so a class `x + R·1` meets
/// a cone iff its canonical representative satisfies them; no extra scalar
/// variable is needed.
pub fn fw_intersect_treespace(trees: &[UltrametricVector], budgets: &Budgets) -> Result<TreespaceIntersection> {
    let Some(first) = trees.first() else {
        return Err(Error::InvalidInput("need at least one tree".into()));
    };
    let n_leaves = first.n_leaves;
    if let Some(t) = trees.iter().find(|t| t.n_leaves != n_leaves) {
        return Err(Error::DimensionMismatch { expected: n_leaves, found: t.n_leaves });
    }
    let topologies = enumerate_topologies(n_leaves, budgets)?;
    let rows: Vec<Vec<Rational>> = trees.iter().map(|t| t.coords.clone()).collect();
    let fw = fw_polytope(&SampleMatrix::from_raw(&rows)?)?;
    let fw_h = fw_h_polytope(&fw)?;
    let ambient = fw.polytope.ambient_dim;
    let results = topologies
        .par_iter()
        .map(|t| {
            let mut h = fw_h.clone();
            h.extend(t.quotient_cone().constraints().iter().cloned())?;
            let reduced = enumerate_vertices(&h)?;
            let vertices = reduced
                .vertices
                .iter()
                .map(|v| {
                    let mut p = vec![Rational::from_integer(0.into())];
                    p.extend_from_slice(v);
                    p
                })
                .collect();
            let polytope = VPolytope::from_points(ambient, vertices)?;
            Ok(ConeIntersection { topology: t.clone(), dim: polytope.affine_dim, polytope })
        })
        .collect::<Result<Vec<_>>>()?;
    let cones: Vec<ConeIntersection> = results.into_iter().filter(|c| !c.polytope.is_empty()).collect();
    let max_dim = cones.iter().map(|c| c.dim).max().unwrap_or(-1);
    let mut vertices: Vec<Vec<Rational>> = cones.iter().flat_map(|c| c.polytope.vertices.iter().cloned()).collect();
    vertices.sort();
    vertices.dedup();
    let unique_point = (max_dim == 0 && vertices.len() == 1).then(|| vertices[0].clone());
    Ok(TreespaceIntersection {
        n_leaves,
        fw,
        cones_tested: topologies.len(),
        cones,
        max_dim,
        vertices,
        unique_point,
    })
}
