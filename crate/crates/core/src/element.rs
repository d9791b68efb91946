//! Elements of nV as pairs of equal-length numbered patterns on one cube.
//!
//! An element sends domain brick `j` affinely (coordinate-wise) onto range
//! brick `j`. Equality is semantic: two elements are equal when they define the
//! same map, whatever pattern pairs represent them.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::forest::{Forest, Tree};
use crate::pattern::{common_refinement, Address, BitString, DyadicBrick, Pattern, PatternError};

#[derive(Debug, Clone, Serialize)]
pub struct Element {
    dim: usize,
    domain: Pattern,
    range: Pattern,
}

#[derive(Deserialize)]
struct RawElement {
    dim: usize,
    domain: Pattern,
    range: Pattern,
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawElement::deserialize(d)?;
        if raw.domain.dim() != raw.dim {
            return Err(serde::de::Error::custom(PatternError::DimensionMismatch(raw.domain.dim(), raw.dim)));
        }
        Element::new(raw.domain, raw.range).map_err(serde::de::Error::custom)
    }
}

impl Element {
    pub fn new(domain: Pattern, range: Pattern) -> Result<Self, PatternError> {
        if domain.dim() != range.dim() {
            return Err(PatternError::DimensionMismatch(domain.dim(), range.dim()));
        }
        if domain.cubes() != 1 || range.cubes() != 1 {
            return Err(PatternError::NotSingleCube);
        }
        if domain.len() != range.len() {
            return Err(PatternError::LengthMismatch(domain.len(), range.len()));
        }
        Ok(Element { dim: domain.dim(), domain, range })
    }

    pub fn identity(dim: usize) -> Result<Self, PatternError> {
        let p = Pattern::base(dim, 1)?;
        Ok(Element { dim, domain: p.clone(), range: p })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> &Pattern {
        &self.domain
    }

    pub fn range(&self) -> &Pattern {
        &self.range
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn inverse(&self) -> Element {
        Element { dim: self.dim, domain: self.range.clone(), range: self.domain.clone() }
    }

    /// "Apply `self`, then `next`."
    pub fn then(&self, next: &Element) -> Result<Element, PatternError> {
        if self.dim != next.dim {
            return Err(PatternError::DimensionMismatch(self.dim, next.dim));
        }
        let r = common_refinement(&self.range, &next.domain)?;
        let mut domain = Vec::with_capacity(r.pattern.len());
        let mut range = Vec::with_capacity(r.pattern.len());
        for (cell, (&a, &b)) in r.pattern.bricks().iter().zip(r.in_a.iter().zip(&r.in_b)) {
            domain.push(cell.transport(&self.range.bricks()[a], &self.domain.bricks()[a]));
            range.push(cell.transport(&next.domain.bricks()[b], &next.range.bricks()[b]));
        }
        let domain = Pattern::from_parts_unchecked(self.dim, 1, domain);
        let range = Pattern::from_parts_unchecked(self.dim, 1, range);
        Ok(Element { dim: self.dim, domain, range })
    }

    /// Image of a brick lying inside a single domain brick.
    pub fn image_of(&self, b: &DyadicBrick) -> Option<DyadicBrick> {
        let j = self.domain.containing(b)?;
        Some(b.transport(&self.domain.bricks()[j], &self.range.bricks()[j]))
    }

    /// Semantic equality via the common refinement of both domains.
    pub fn same_map(&self, other: &Element) -> Result<bool, PatternError> {
        if self.dim != other.dim {
            return Err(PatternError::DimensionMismatch(self.dim, other.dim));
        }
        let r = common_refinement(&self.domain, &other.domain)?;
        Ok(r.pattern.bricks().iter().zip(r.in_a.iter().zip(&r.in_b)).all(|(cell, (&a, &b))| {
            cell.transport(&self.domain.bricks()[a], &self.range.bricks()[a])
                == cell.transport(&other.domain.bricks()[b], &other.range.bricks()[b])
        }))
    }

    pub fn is_identity(&self) -> bool {
        self.domain.bricks().iter().zip(self.range.bricks()).all(|(a, b)| a == b)
    }

    /// Prefix substitution on a Cantor-set address.
    pub fn apply(&self, a: &Address) -> Result<Address, PatternError> {
        if a.dim() != self.dim {
            return Err(PatternError::AddressDimension { got: a.dim(), expected: self.dim });
        }
        let j = self
            .domain
            .bricks()
            .iter()
            .position(|b| b.intervals.iter().zip(&a.0).all(|(iv, bits)| bits.starts_with(&iv.address())))
            .ok_or(PatternError::AddressTooShallow)?;
        let from = &self.domain.bricks()[j];
        let to = &self.range.bricks()[j];
        let coords = from
            .intervals
            .iter()
            .zip(&to.intervals)
            .zip(&a.0)
            .map(|((f, t), bits)| {
                let mut out = t.address().0;
                out.extend_from_slice(&bits.0[f.depth as usize..]);
                BitString(out)
            })
            .collect();
        Ok(Address(coords))
    }

    /// Halve domain brick `j` and range brick `j` across `d`; the map is unchanged.
    pub fn refine(&self, j: usize, d: usize) -> Result<Element, PatternError> {
        Ok(Element { dim: self.dim, domain: self.domain.cut(j, d)?, range: self.range.cut(j, d)? })
    }

    /// Repeatedly merge bricks `j`, `k` that are sibling leaves, `j` first, in
    /// the trees of both domain and range, renormalizing the trees between
    /// rounds. The result represents the same map; it need not be the unique
    /// smallest representative.
    pub fn reduced(&self) -> Element {
        let tree = |p: &Pattern| Forest::normalized_of(p).trees.swap_remove(0);
        let (mut dom, mut ran) = (tree(&self.domain), tree(&self.range));
        loop {
            let mut merged_any = false;
            loop {
                let dp = sibling_leaves(&dom);
                let rp = sibling_leaves(&ran);
                let merges: Vec<_> = dp.iter().filter_map(|(pair, path)| Some((*pair, path, rp.get(pair)?))).collect();
                if merges.is_empty() {
                    break;
                }
                for ((j, _, _), dpath, rpath) in merges {
                    *dom.at_mut(dpath).expect("caret") = Tree::leaf(j);
                    *ran.at_mut(rpath).expect("caret") = Tree::leaf(j);
                }
                merged_any = true;
            }
            if !merged_any {
                break;
            }
            dom = dom.normalize();
            ran = ran.normalize();
        }
        // Close the gaps left by merged numbers, keeping their order.
        let mut kept = dom.leaves();
        kept.sort_unstable();
        let rank: HashMap<usize, usize> = kept.iter().enumerate().map(|(r, &j)| (j, r)).collect();
        let pattern = |t: &Tree| {
            let nums: Vec<usize> = t.leaves().iter().map(|j| rank[j]).collect();
            Forest::new(vec![t.renumbered(&mut nums.into_iter())]).to_pattern(self.dim).expect("valid tree")
        };
        Element { dim: self.dim, domain: pattern(&dom), range: pattern(&ran) }
    }

    /// Renumber both sides so the domain bricks appear in address order.
    pub fn canonical_numbering(&self) -> Element {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.domain.bricks()[a].address_cmp(&self.domain.bricks()[b]));
        Element { dim: self.dim, domain: self.domain.permuted(&order), range: self.range.permuted(&order) }
    }
}

/// Carets whose children are both leaves: `(left, right, label)` to path.
fn sibling_leaves(t: &Tree) -> HashMap<(usize, usize, usize), Vec<bool>> {
    t.preorder_paths()
        .into_iter()
        .filter_map(|path| match t.at(&path)? {
            Tree::Node { label, left, right } => match (&**left, &**right) {
                (Tree::Leaf { num: a }, Tree::Leaf { num: b }) => Some(((*a, *b, *label), path)),
                _ => None,
            },
            Tree::Leaf { .. } => None,
        })
        .collect()
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_map(other).unwrap_or(false)
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain: {}\nrange:  {}", self.domain, self.range)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(cuts: &[(usize, usize)], n: usize) -> Pattern {
        cuts.iter().fold(Pattern::base(n, 1).unwrap(), |p, &(i, d)| p.cut(i, d).unwrap())
    }

    fn bakers() -> Element {
        Element::new(pat(&[(0, 1)], 2), pat(&[(0, 2)], 2)).unwrap()
    }

    #[test]
    fn identity_laws() {
        let g = bakers();
        let e = Element::identity(2).unwrap();
        assert_eq!(g.then(&e).unwrap(), g);
        assert_eq!(e.then(&g).unwrap(), g);
        assert!(g.then(&g.inverse()).unwrap().is_identity() || g.then(&g.inverse()).unwrap() == e);
        assert_eq!(e.inverse(), e);
        assert_eq!(g.inverse().inverse(), g);
        assert_ne!(g, e);
    }

    #[test]
    fn inverse_of_bakers_map() {
        let inv = bakers().inverse();
        assert_eq!(inv.domain(), &pat(&[(0, 2)], 2));
        assert_eq!(inv.range(), &pat(&[(0, 1)], 2));
    }

    #[test]
    fn apply_bakers_map() {
        let a = Address::parse(&["01", "1"]).unwrap();
        assert_eq!(bakers().apply(&a).unwrap(), Address::parse(&["1", "01"]).unwrap());
        let e = Element::identity(2).unwrap();
        assert_eq!(e.apply(&a).unwrap(), a);
        let shallow = Address::parse(&["", "1"]).unwrap();
        assert_eq!(bakers().apply(&shallow), Err(PatternError::AddressTooShallow));
        assert!(matches!(bakers().apply(&Address::parse(&["0"]).unwrap()), Err(PatternError::AddressDimension { .. })));
    }

    #[test]
    fn refinement_invariance() {
        let g = bakers();
        let h = g.refine(1, 2).unwrap().refine(0, 1).unwrap();
        assert_eq!(g, h);
        assert_eq!(h.reduced().len(), 2);
        assert!(Element::identity(3).unwrap().refine(0, 2).unwrap().reduced().is_identity());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Element::new(pat(&[(0, 1)], 2), pat(&[], 2)), Err(PatternError::LengthMismatch(2, 1))));
        assert!(matches!(Element::new(pat(&[], 2), pat(&[], 3)), Err(PatternError::DimensionMismatch(2, 3))));
        assert!(bakers().then(&Element::identity(3).unwrap()).is_err());
    }
}
