//! Full binary plane trees with `t + 1` leaves and their tilting multisegments.
//!
//! Leaves are numbered `0..=t` left to right. An internal vertex whose leaves
//! are `a..=b` gives the segment `[a+1, b]`; its label is `m + 1` where the
//! left child holds the leaves `a..=m`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homext::ext_dim;
use crate::model::{Multisegment, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneTree {
    Leaf,
    Node(Box<PlaneTree>, Box<PlaneTree>),
}

/// One internal vertex, located by its leaf interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InternalVertex {
    pub first_leaf: usize,
    pub last_leaf: usize,
    /// Last leaf of the left child.
    pub split: usize,
    pub depth: usize,
}

impl InternalVertex {
    pub fn segment(&self) -> Segment {
        Segment::new(self.first_leaf + 1, self.last_leaf).expect("at least two leaves")
    }

    pub fn label(&self) -> usize {
        self.split + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// A tree reached by one rotation, with the segment pair that was exchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbor {
    pub tree: PlaneTree,
    pub removed: Segment,
    pub added: Segment,
    /// `(removed, added)` ordered as `[a,b], [c,d]` with `a < c <= b+1 < d+1`.
    pub pair: (Segment, Segment),
}

impl Neighbor {
    /// The index pair `(c − 1, b + 1)` of the component this wall belongs to.
    pub fn component_pair(&self) -> (usize, usize) {
        let (first, second) = self.pair;
        (second.start() - 1, first.end() + 1)
    }
}

impl PlaneTree {
    pub fn node(left: PlaneTree, right: PlaneTree) -> Self {
        Self::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf => 1,
            Self::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// `t`, the number of internal vertices.
    pub fn t(&self) -> usize {
        self.leaf_count() - 1
    }

    /// Internal vertices in preorder.
    pub fn internal_vertices(&self) -> Vec<InternalVertex> {
        fn go(tree: &PlaneTree, first: usize, depth: usize, out: &mut Vec<InternalVertex>) {
            if let PlaneTree::Node(l, r) = tree {
                let left_leaves = l.leaf_count();
                let split = first + left_leaves - 1;
                let slot = out.len();
                out.push(InternalVertex {
                    first_leaf: first,
                    last_leaf: 0,
                    split,
                    depth,
                });
                go(l, first, depth + 1, out);
                go(r, split + 1, depth + 1, out);
                out[slot].last_leaf = first + tree.leaf_count() - 1;
            }
        }
        let mut out = Vec::new();
        go(self, 0, 0, &mut out);
        out
    }

    fn rotate(&self, path: &[Side], child: Side) -> PlaneTree {
        match (self, path.split_first()) {
            (Self::Node(l, r), Some((Side::Left, rest))) => {
                Self::node(l.rotate(rest, child), (**r).clone())
            }
            (Self::Node(l, r), Some((Side::Right, rest))) => {
                Self::node((**l).clone(), r.rotate(rest, child))
            }
            (Self::Node(l, r), None) => match (child, &**l, &**r) {
                (Side::Left, Self::Node(a, b), c) => {
                    Self::node((**a).clone(), Self::node((**b).clone(), c.clone()))
                }
                (Side::Right, a, Self::Node(b, c)) => {
                    Self::node(Self::node(a.clone(), (**b).clone()), (**c).clone())
                }
                _ => unreachable!("rotation at a leaf child"),
            },
            (Self::Leaf, _) => unreachable!("path runs through a leaf"),
        }
    }

    fn internal_paths(&self) -> Vec<Vec<Side>> {
        fn go(tree: &PlaneTree, path: &mut Vec<Side>, out: &mut Vec<Vec<Side>>) {
            if let PlaneTree::Node(l, r) = tree {
                out.push(path.clone());
                path.push(Side::Left);
                go(l, path, out);
                path.pop();
                path.push(Side::Right);
                go(r, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// One neighbor per non-root internal vertex: rotate the edge to its parent.
    pub fn neighbors(&self) -> Vec<Neighbor> {
        let own = tilting_of_tree(self);
        self.internal_paths()
            .into_iter()
            .filter_map(|path| {
                let (&child, parent) = path.split_last()?;
                let tree = self.rotate(parent, child);
                let other = tilting_of_tree(&tree);
                let removed = own.segments().find(|s| other.multiplicity(*s) == 0)?;
                let added = other.segments().find(|s| own.multiplicity(*s) == 0)?;
                let pair = if ext_dim(removed, added) == 1 {
                    (removed, added)
                } else {
                    (added, removed)
                };
                Some(Neighbor {
                    tree,
                    removed,
                    added,
                    pair,
                })
            })
            .collect()
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf => f.write_str("o"),
            Self::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

/// All full binary plane trees with `t + 1` leaves.
///
/// Trees are listed by decreasing size of the left subtree, recursively.
pub fn enumerate_trees(t: usize, max: usize) -> Result<Vec<PlaneTree>> {
    if t > max {
        return Err(Error::TreeBoundExceeded { t, max });
    }
    let mut by_size: Vec<Vec<PlaneTree>> = vec![vec![PlaneTree::Leaf]];
    for n in 1..=t {
        let mut trees = Vec::new();
        for left in (0..n).rev() {
            for l in &by_size[left] {
                for r in &by_size[n - 1 - left] {
                    trees.push(PlaneTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(trees);
    }
    Ok(by_size.swap_remove(t))
}

/// `M_T`: one segment per internal vertex.
pub fn tilting_of_tree(tree: &PlaneTree) -> Multisegment {
    let mut m = Multisegment::new(tree.t().max(1)).expect("t >= 1");
    for v in tree.internal_vertices() {
        m.add(v.segment(), 1).expect("segment inside 1..=t");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homext::is_rigid;

    fn leaf() -> PlaneTree {
        PlaneTree::Leaf
    }

    #[test]
    fn two_trees_for_t_two() {
        let trees = enumerate_trees(2, 12).unwrap();
        assert_eq!(trees.len(), 2);
        let sets: Vec<String> = trees
            .iter()
            .map(|t| tilting_of_tree(t).to_string())
            .collect();
        assert_eq!(sets, ["[1,1]+[1,2]", "[1,2]+[2,2]"]);
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|t| enumerate_trees(t, 12).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(
            enumerate_trees(13, 12),
            Err(Error::TreeBoundExceeded { t: 13, max: 12 })
        );
    }

    #[test]
    fn labels_and_segments() {
        let tree = PlaneTree::node(PlaneTree::node(leaf(), leaf()), leaf());
        let v = tree.internal_vertices();
        assert_eq!(v[0].segment(), Segment::new(1, 2).unwrap());
        assert_eq!(v[0].label(), 2);
        assert_eq!(v[1].segment(), Segment::new(1, 1).unwrap());
        assert_eq!(v[1].label(), 1);
        assert_eq!(tree.to_string(), "((o,o),o)");
    }

    #[test]
    fn t_two_neighbors_swap() {
        let trees = enumerate_trees(2, 12).unwrap();
        let n = trees[0].neighbors();
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].tree, trees[1]);
        let (a, b) = (Segment::new(1, 1).unwrap(), Segment::new(2, 2).unwrap());
        assert_eq!(n[0].pair, (a, b));
        assert_eq!(n[0].component_pair(), (1, 2));
    }

    #[test]
    fn tiltings_are_rigid_and_distinct() {
        for t in 1..=5 {
            let trees = enumerate_trees(t, 12).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for tree in &trees {
                let m = tilting_of_tree(tree);
                assert!(is_rigid(&m));
                assert_eq!(m.distinct_count(), t);
                assert!(seen.insert(m.to_string()));
                assert_eq!(tree.neighbors().len(), t - 1);
            }
        }
    }
}
