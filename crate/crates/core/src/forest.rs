//! Numbered, labeled binary forests.
//!
//! Tree `t` of a forest lives on the unit cube `S_t`. An interior vertex
//! labeled `d` halves its region across dimension `d`; the left child is the
//! lower half. Leaves carry brick numbers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pattern::{DyadicBrick, Pattern, PatternError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("leaf numbers are not a bijection onto 0..{0}")]
    BadNumbering(usize),
    #[error("vertex order is not a listing of the interior vertices")]
    NotAnOrder,
    #[error("vertex order visits a child before its parent")]
    AncestryViolated,
    #[error("label {label} out of range 1..={n}")]
    BadLabel { label: usize, n: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Tree {
    Leaf { num: usize },
    Node { label: usize, left: Box<Tree>, right: Box<Tree> },
}

impl Tree {
    pub fn leaf(num: usize) -> Tree {
        Tree::Leaf { num }
    }

    pub fn node(label: usize, left: Tree, right: Tree) -> Tree {
        Tree::Node { label, left: Box::new(left), right: Box::new(right) }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf { .. })
    }

    pub fn label(&self) -> Option<usize> {
        match self {
            Tree::Leaf { .. } => None,
            Tree::Node { label, .. } => Some(*label),
        }
    }

    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf { .. } => None,
            Tree::Node { left, right, .. } => Some((left, right)),
        }
    }

    pub fn carets(&self) -> usize {
        match self {
            Tree::Leaf { .. } => 0,
            Tree::Node { left, right, .. } => 1 + left.carets() + right.carets(),
        }
    }

    pub fn max_label(&self) -> usize {
        match self {
            Tree::Leaf { .. } => 0,
            Tree::Node { label, left, right } => (*label).max(left.max_label()).max(right.max_label()),
        }
    }

    /// Leaf numbers in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf { num } => out.push(*num),
            Tree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// Replace leaf numbers, left to right, by successive values of `nums`.
    pub fn renumbered(&self, nums: &mut impl Iterator<Item = usize>) -> Tree {
        match self {
            Tree::Leaf { .. } => Tree::leaf(nums.next().expect("too few numbers")),
            Tree::Node { label, left, right } => {
                let l = left.renumbered(nums);
                let r = right.renumbered(nums);
                Tree::node(*label, l, r)
            }
        }
    }

    /// Root labeled `d`, or both subtrees fully divided across `d`. A leaf is
    /// not fully divided across any dimension.
    pub fn fully_divided(&self, d: usize) -> bool {
        match self {
            Tree::Leaf { .. } => false,
            Tree::Node { label, left, right } => *label == d || (left.fully_divided(d) && right.fully_divided(d)),
        }
    }

    /// A vertex labeled `l` is non-normalized when its subtree is fully divided
    /// across some dimension smaller than `l`.
    pub fn vertex_normalized(&self) -> bool {
        match self {
            Tree::Leaf { .. } => true,
            Tree::Node { label, left, right } => !(1..*label).any(|d| left.fully_divided(d) && right.fully_divided(d)),
        }
    }

    pub fn is_normalized(&self) -> bool {
        match self {
            Tree::Leaf { .. } => true,
            Tree::Node { left, right, .. } => self.vertex_normalized() && left.is_normalized() && right.is_normalized(),
        }
    }

    /// Exchange the root label with the common label of both children:
    /// `(k, (d, a, b), (d, c, e))` becomes `(d, (k, a, c), (k, b, e))`.
    /// The numbered pattern is unchanged; this is the cross relation.
    pub fn rotate_root(self) -> Tree {
        match self {
            Tree::Node { label: k, left, right } => match (*left, *right) {
                (Tree::Node { label: d, left: a, right: b }, Tree::Node { label: d2, left: c, right: e })
                    if d == d2 =>
                {
                    Tree::node(d, Tree::node(k, *a, *c), Tree::node(k, *b, *e))
                }
                (l, r) => Tree::node(k, l, r),
            },
            leaf => leaf,
        }
    }

    /// Rewrite a subtree fully divided across `d` so its root is labeled `d`.
    /// Returns `None` if the subtree is not fully divided across `d`.
    pub fn pull_up(self, d: usize) -> Option<Tree> {
        match self {
            Tree::Leaf { .. } => None,
            Tree::Node { label, .. } if label == d => Some(self),
            Tree::Node { label, left, right } => {
                let l = left.pull_up(d)?;
                let r = right.pull_up(d)?;
                Some(Tree::node(label, l, r).rotate_root())
            }
        }
    }

    /// Recursive normalization: normalize both subtrees, then repair the root
    /// with the minimal dimension across which it is fully divided.
    pub fn normalize(self) -> Tree {
        match self {
            Tree::Leaf { .. } => self,
            Tree::Node { label, left, right } => {
                let l = left.normalize();
                let r = right.normalize();
                match (1..label).find(|&d| l.fully_divided(d) && r.fully_divided(d)) {
                    None => Tree::node(label, l, r),
                    Some(d) => {
                        let l = l.pull_up(d).expect("fully divided");
                        let r = r.pull_up(d).expect("fully divided");
                        match Tree::node(label, l, r).rotate_root() {
                            Tree::Node { label, left, right } => Tree::node(label, left.normalize(), right.normalize()),
                            leaf => leaf,
                        }
                    }
                }
            }
        }
    }

    /// Labels of the interior left-edge vertices, top to bottom.
    pub fn left_spine(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut t = self;
        while let Tree::Node { label, left, .. } = t {
            out.push(*label);
            t = left;
        }
        out
    }

    /// Subtree at `path` (`false` = left).
    pub fn at(&self, path: &[bool]) -> Option<&Tree> {
        path.iter().try_fold(self, |t, &right| t.children().map(|(l, r)| if right { r } else { l }))
    }

    pub(crate) fn at_mut(&mut self, path: &[bool]) -> Option<&mut Tree> {
        let mut t = self;
        for &right in path {
            t = match t {
                Tree::Leaf { .. } => return None,
                Tree::Node { left, right: r, .. } => {
                    if right {
                        r
                    } else {
                        left
                    }
                }
            };
        }
        Some(t)
    }

    /// Paths of the interior vertices in preorder.
    pub fn preorder_paths(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        self.walk_preorder(&mut Vec::new(), &mut out);
        out
    }

    fn walk_preorder(&self, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if let Tree::Node { left, right, .. } = self {
            out.push(path.clone());
            path.push(false);
            left.walk_preorder(path, out);
            path.pop();
            path.push(true);
            right.walk_preorder(path, out);
            path.pop();
        }
    }

    /// Bricks of the leaves as `(number, brick)` pairs, with the tree sitting on
    /// `region`.
    pub fn bricks(&self, region: &DyadicBrick) -> Result<Vec<(usize, DyadicBrick)>, PatternError> {
        let mut out = Vec::new();
        self.collect_bricks(region, &mut out)?;
        Ok(out)
    }

    fn collect_bricks(&self, region: &DyadicBrick, out: &mut Vec<(usize, DyadicBrick)>) -> Result<(), PatternError> {
        match self {
            Tree::Leaf { num } => out.push((*num, region.clone())),
            Tree::Node { label, left, right } => {
                if *label == 0 || *label > region.dim() {
                    return Err(PatternError::BadDimension { dim: *label, n: region.dim() });
                }
                let (lo, hi) = region.halves(*label)?;
                left.collect_bricks(&lo, out)?;
                right.collect_bricks(&hi, out)?;
            }
        }
        Ok(())
    }
}

/// Identifies an interior vertex: tree index plus path from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub tree: usize,
    pub path: Vec<bool>,
}

/// A linear order on the interior vertices of a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(pub Vec<VertexId>);

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Forest {
    pub trees: Vec<Tree>,
}

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(|t| t.carets() + 1).sum()
    }

    pub fn carets(&self) -> usize {
        self.trees.iter().map(Tree::carets).sum()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.trees.iter().flat_map(|t| t.leaves()).collect()
    }

    pub fn check_numbering(&self) -> Result<(), ForestError> {
        let leaves = self.leaves();
        let mut seen = vec![false; leaves.len()];
        for &l in &leaves {
            if l >= leaves.len() || std::mem::replace(&mut seen[l], true) {
                return Err(ForestError::BadNumbering(leaves.len()));
            }
        }
        Ok(())
    }

    /// True if the leaves are numbered 0, 1, 2, … from left to right.
    pub fn left_right_numbered(&self) -> bool {
        self.leaves().iter().enumerate().all(|(k, &l)| k == l)
    }

    pub fn is_normalized(&self) -> bool {
        self.trees.iter().all(Tree::is_normalized)
    }

    pub fn normalize(self) -> Forest {
        Forest { trees: self.trees.into_iter().map(Tree::normalize).collect() }
    }

    /// Drop trailing single-leaf trees that carry the last numbers in order;
    /// they stand for untouched cubes.
    pub fn trimmed(mut self) -> Forest {
        while self.trees.len() > 1 {
            match self.trees.last() {
                Some(Tree::Leaf { num }) if *num + 1 == self.leaf_count() => {
                    self.trees.pop();
                }
                _ => break,
            }
        }
        self
    }

    /// Depth-first, leftmost-root-first vertex order.
    pub fn canonical_order(&self) -> VertexOrder {
        VertexOrder(
            self.trees
                .iter()
                .enumerate()
                .flat_map(|(t, tree)| tree.preorder_paths().into_iter().map(move |path| VertexId { tree: t, path }))
                .collect(),
        )
    }

    pub fn check_order(&self, order: &VertexOrder) -> Result<(), ForestError> {
        let mut all: Vec<VertexId> = self.canonical_order().0;
        let mut given = order.0.clone();
        all.sort();
        given.sort();
        if all != given {
            return Err(ForestError::NotAnOrder);
        }
        let mut placed = std::collections::HashSet::new();
        for v in &order.0 {
            if !v.path.is_empty() {
                let parent = VertexId { tree: v.tree, path: v.path[..v.path.len() - 1].to_vec() };
                if !placed.contains(&parent) {
                    return Err(ForestError::AncestryViolated);
                }
            }
            placed.insert(v.clone());
        }
        Ok(())
    }

    /// The numbered pattern of the forest in dimension `n`.
    pub fn to_pattern(&self, n: usize) -> Result<Pattern, ForestError> {
        self.check_numbering()?;
        let mut bricks = vec![None; self.leaf_count()];
        for (t, tree) in self.trees.iter().enumerate() {
            for (num, b) in tree.bricks(&DyadicBrick::whole(t, n))? {
                bricks[num] = Some(b);
            }
        }
        Ok(Pattern::from_parts_unchecked(n, self.trees.len(), bricks.into_iter().map(Option::unwrap).collect()))
    }

    /// The normalized forest of a numbered pattern: each region is split across
    /// the smallest dimension whose midplane cuts no brick.
    pub fn normalized_of(pattern: &Pattern) -> Forest {
        let trees = (0..pattern.cubes())
            .map(|cube| {
                let members: Vec<usize> = (0..pattern.len()).filter(|&j| pattern.bricks()[j].cube == cube).collect();
                guillotine_tree(pattern, &DyadicBrick::whole(cube, pattern.dim()), &members)
                    .expect("patterns are subdivided by halving cuts")
            })
            .collect();
        Forest { trees }
    }
}

/// Tree for the bricks `members` of `pattern` that tile `region`, cutting
/// across the smallest admissible dimension first.
pub(crate) fn guillotine_tree(pattern: &Pattern, region: &DyadicBrick, members: &[usize]) -> Option<Tree> {
    if let [only] = members {
        return (pattern.bricks()[*only] == *region).then(|| Tree::leaf(*only));
    }
    if members.is_empty() {
        return None;
    }
    for d in 1..=region.dim() {
        let Ok((lo, hi)) = region.halves(d) else { continue };
        let (lo_m, hi_m): (Vec<usize>, Vec<usize>) = members.iter().partition(|&&j| pattern.bricks()[j].within(&lo));
        if hi_m.iter().all(|&j| pattern.bricks()[j].within(&hi)) && !lo_m.is_empty() && !hi_m.is_empty() {
            let l = guillotine_tree(pattern, &lo, &lo_m)?;
            let r = guillotine_tree(pattern, &hi, &hi_m)?;
            return Some(Tree::node(d, l, r));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caret(d: usize) -> Tree {
        Tree::node(d, Tree::leaf(0), Tree::leaf(1))
    }

    #[test]
    fn fully_divided_cases() {
        assert!((1..=3).all(|d| !Tree::leaf(0).fully_divided(d)));
        assert!(caret(2).fully_divided(2));
        assert!(!caret(2).fully_divided(1));
        let t = Tree::node(1, caret(2), caret(2));
        assert!(t.fully_divided(1) && t.fully_divided(2) && !t.fully_divided(3));
        let lopsided = Tree::node(1, caret(2), Tree::leaf(2));
        assert!(!lopsided.fully_divided(2));
    }

    #[test]
    fn normalized_cases() {
        let all_ones = Tree::node(1, caret(1), Tree::node(1, caret(1), Tree::leaf(5)));
        assert!(all_ones.is_normalized());
        assert!(!Tree::node(2, caret(1), caret(1)).is_normalized());
        assert!(Tree::node(1, caret(2), caret(2)).is_normalized());
        assert!(!Tree::node(3, caret(2), caret(2)).is_normalized());
        assert!(Tree::node(3, caret(2), caret(1)).is_normalized());
    }

    #[test]
    fn rotation_keeps_pattern() {
        let t = Tree::node(2, Tree::node(1, Tree::leaf(0), Tree::leaf(1)), Tree::node(1, Tree::leaf(2), Tree::leaf(3)));
        let f = Forest::new(vec![t.clone()]);
        let r = Forest::new(vec![t.normalize()]);
        assert_eq!(r.trees[0].label(), Some(1));
        assert_eq!(r.trees[0].leaves(), vec![0, 2, 1, 3]);
        assert_eq!(f.to_pattern(2).unwrap(), r.to_pattern(2).unwrap());
        assert!(r.is_normalized());
    }

    #[test]
    fn pull_up_requires_division() {
        assert!(caret(1).pull_up(2).is_none());
        assert_eq!(caret(2).pull_up(2), Some(caret(2)));
    }

    #[test]
    fn order_validation() {
        let f = Forest::new(vec![Tree::node(1, Tree::leaf(0), caret(2).renumbered(&mut (1..3)))]);
        assert!(f.check_order(&f.canonical_order()).is_ok());
        let mut rev = f.canonical_order();
        rev.0.reverse();
        assert_eq!(f.check_order(&rev), Err(ForestError::AncestryViolated));
        assert_eq!(f.check_order(&VertexOrder(vec![])), Err(ForestError::NotAnOrder));
    }

    #[test]
    fn canonical_tree_of_pattern() {
        let p = Pattern::base(2, 1).unwrap().cut(0, 2).unwrap().cut(1, 1).unwrap().cut(0, 1).unwrap();
        let f = Forest::normalized_of(&p);
        assert!(f.is_normalized());
        assert_eq!(f.to_pattern(2).unwrap(), p);
        assert_eq!(f.trees[0].label(), Some(1));
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&caret(2)).unwrap();
        assert_eq!(s, r#"{"label":2,"left":{"num":0},"right":{"num":1}}"#);
        let back: Tree = serde_json::from_str(&s).unwrap();
        assert_eq!(back, caret(2));
    }
}
