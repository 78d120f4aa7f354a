//! Cones of the fan and the position of a dimension vector in it.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::tree::{enumerate_trees, tilting_of_tree, PlaneTree};
use crate::error::{Error, Result};
use crate::generic::generic_by_levels;
use crate::linalg::{determinant, solve};
use crate::model::{DimensionVector, Segment};

/// Cone spanned by the dimension vectors of a list of segments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub segments: Vec<Segment>,
    pub generators: Vec<DimensionVector>,
}

impl Cone {
    pub fn from_segments(t: usize, segments: Vec<Segment>) -> Self {
        let generators = segments
            .iter()
            .map(|s| {
                DimensionVector::new((1..=t).map(|l| u32::from(s.covers(l))).collect())
                    .expect("t >= 1")
            })
            .collect();
        Self {
            segments,
            generators,
        }
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// `t × k` matrix whose columns are the generators.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let t = self.generators.first().map_or(0, DimensionVector::len);
        (1..=t)
            .map(|l| {
                self.generators
                    .iter()
                    .map(|g| i64::from(g.get(l)))
                    .collect()
            })
            .collect()
    }

    /// Determinant of the generator matrix; meaningful for full cones only.
    pub fn determinant(&self) -> i128 {
        determinant(&self.matrix())
    }

    /// Coordinates of `d` in the generators of a full cone, if they are integral.
    pub fn coordinates(&self, d: &DimensionVector) -> Option<Vec<i64>> {
        let rhs: Vec<i64> = d.entries().iter().map(|&x| i64::from(x)).collect();
        solve(&self.matrix(), &rhs)?
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
            .collect()
    }
}

/// `σ_T`, spanned by the summands of `M_T`.
pub fn cone_of_tree(tree: &PlaneTree) -> Cone {
    let m = tilting_of_tree(tree);
    Cone::from_segments(tree.t(), m.segments().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub tree: String,
    pub tilting: String,
    pub coordinates: Vec<i64>,
}

/// Where a dimension vector sits in the fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Location {
    pub d: DimensionVector,
    /// Cone on the distinct summands of `M(d)`.
    pub minimal_cone: Cone,
    /// Every full cone containing `d`, with the coordinates of `d` in it.
    pub trees: Vec<Membership>,
    pub generic: bool,
    #[serde(skip)]
    pub plane_trees: Vec<PlaneTree>,
}

/// Solves for the coordinates of `d` in every full cone and keeps the
/// non-negative solutions.
pub fn locate(d: &DimensionVector, tree_t_max: usize) -> Result<Location> {
    d.require_sincere()?;
    let t = d.len();
    let trees = enumerate_trees(t, tree_t_max)?;
    let mut members = Vec::new();
    let mut plane_trees = Vec::new();
    for tree in trees {
        let cone = cone_of_tree(&tree);
        let coordinates = cone
            .coordinates(d)
            .ok_or_else(|| Error::RankShape(format!("cone of {tree} is not unimodular")))?;
        if coordinates.iter().all(|x| !x.is_negative()) {
            members.push(Membership {
                tree: tree.to_string(),
                tilting: tilting_of_tree(&tree).to_string(),
                coordinates,
            });
            plane_trees.push(tree);
        }
    }
    let generic = members.len() == 1
        && members[0]
            .coordinates
            .iter()
            .all(|x| !x.is_zero() && *x > 0);
    Ok(Location {
        d: d.clone(),
        minimal_cone: Cone::from_segments(t, generic_by_levels(d).segments().collect()),
        trees: members,
        generic,
        plane_trees,
    })
}

/// Component index pairs read off the walls of the unique cone containing a generic `d`.
pub fn components_via_fan(d: &DimensionVector, tree_t_max: usize) -> Result<Vec<(usize, usize)>> {
    let location = locate(d, tree_t_max)?;
    if !location.generic {
        return Err(Error::NotGeneric(d.to_string()));
    }
    let mut pairs: Vec<(usize, usize)> = location.plane_trees[0]
        .neighbors()
        .iter()
        .map(|n| n.component_pair())
        .collect();
    pairs.sort();
    Ok(pairs)
}
