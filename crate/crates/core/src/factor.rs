//! Words for elements, shaped `L · M · R`.
//!
//! For an element with `N` bricks and `k = N - 1`, `L` is the `C*X*` word of
//! the normalized range tree, `R⁻¹` that of the normalized domain tree, and
//! `M` permutes the bricks of the staircase `s_{0,1}^k` using `π` and `π̄`.

use serde::Serialize;

use crate::element::Element;
use crate::forest::Forest;
use crate::group::{convert_swaps, multiply, word_evaluate, GroupError, GroupLetter, GroupWord};
use crate::monoid::swap_word;
use crate::trunk::tree_word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "as_string")]
    pub l: GroupWord,
    #[serde(serialize_with = "as_string")]
    pub m: GroupWord,
    #[serde(serialize_with = "as_string")]
    pub r: GroupWord,
}

fn as_string<S: serde::Serializer>(w: &GroupWord, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(w)
}

impl Factorization {
    pub fn word(&self) -> GroupWord {
        self.l.concat(&self.m).concat(&self.r)
    }

    /// The element of [`Factorization::word`], computed as the product of the
    /// three evaluated factors. Partial products of the whole word can need
    /// far deeper bricks than the factors themselves.
    pub fn evaluate(&self, n: usize) -> Result<Element, GroupError> {
        let l = word_evaluate(&self.l, n)?;
        let m = word_evaluate(&self.m, n)?;
        let r = word_evaluate(&self.r, n)?;
        multiply(&multiply(&l, &m)?, &r)
    }

    /// `L` and `R⁻¹` are `C*X*` with increasing C indices and `M` uses only
    /// `π`, `π̄`.
    pub fn well_shaped(&self) -> bool {
        let cx = |w: &GroupWord| {
            let g = w.letters.iter().position(|l| !l.is_c()).unwrap_or(w.len());
            let (cs, xs) = w.letters.split_at(g);
            cs.windows(2).all(|p| p[0].index() < p[1].index())
                && cs.iter().all(|l| matches!(l, GroupLetter::C { inv: false, .. }))
                && xs.iter().all(|l| matches!(l, GroupLetter::X { inv: false, .. }))
        };
        cx(&self.l)
            && cx(&self.r.inverse())
            && self.m.letters.iter().all(|l| matches!(l, GroupLetter::Pi { .. } | GroupLetter::PiBar { .. }))
    }
}

pub fn factor_element(g: &Element) -> Factorization {
    let g = g.reduced();
    let range_tree = &Forest::normalized_of(g.range()).trees[0];
    let domain_tree = &Forest::normalized_of(g.domain()).trees[0];
    // Left-right position of each brick number in either tree.
    let position = |leaves: Vec<usize>| {
        let mut pos = vec![0; leaves.len()];
        for (p, &num) in leaves.iter().enumerate() {
            pos[num] = p;
        }
        pos
    };
    let alpha = position(range_tree.leaves());
    let beta = position(domain_tree.leaves());
    let mut order = vec![0; g.len()];
    for j in 0..g.len() {
        order[beta[j]] = alpha[j];
    }
    Factorization {
        l: tree_word(range_tree),
        m: convert_swaps(&swap_word(&order), g.len() - 1),
        r: tree_word(domain_tree).inverse(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{c, pi, pibar, x};

    #[test]
    fn identity_gives_empty_word() {
        for n in 1..=3 {
            let f = factor_element(&Element::identity(n).unwrap());
            assert!(f.word().is_empty());
            let e = Element::identity(n).unwrap().refine(0, n).unwrap().refine(1, 1).unwrap();
            assert!(factor_element(&e).word().is_empty());
        }
    }

    #[test]
    fn single_c_round_trip() {
        let g = word_evaluate(&vec![c(1, 2)].into(), 2).unwrap();
        let f = factor_element(&g);
        assert_eq!(f.word(), vec![c(1, 2)].into());
        assert!(f.well_shaped());
    }

    #[test]
    fn mixed_round_trip() {
        let w: GroupWord = vec![pibar(0), x(0, 2), c(2, 3), pi(1), x(1, 1).inverse()].into();
        let g = word_evaluate(&w, 3).unwrap();
        let f = factor_element(&g);
        assert!(f.well_shaped());
        assert_eq!(word_evaluate(&f.word(), 3).unwrap(), g);
    }
}
