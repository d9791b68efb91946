//! Trunks of labeled trees and the complexity descent on `C*X*` words.
//!
//! A word `C_{i_0,d_0} ⋯ C_{i_g,d_g} X_{j_1,e_1} ⋯ X_{j_l,e_l}` with
//! `i_0 < ⋯ < i_g` evaluates to `(P, s_{0,1}^k)` where `P` is the pattern of a
//! single tree with leaves numbered left to right: its *primary tree*. The C's
//! label the left spine (the trunk), each X cuts the leaf in right-left
//! position `j`.

use std::cmp::Ordering;
use std::fmt;

use crate::element::Element;
use crate::forest::{Forest, Tree};
use crate::group::{c, convert_swaps, x, GroupError, GroupLetter, GroupWord};
use crate::monoid::{swap_word, Cut, MonoidWord};

/// A tree split into its left spine and the subtrees hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrunkDecomposition {
    /// Labels of the spine carets, top-down.
    pub labels: Vec<usize>,
    /// Right child of each spine caret, top-down.
    pub attached: Vec<Tree>,
    /// The leftmost leaf.
    pub base: Tree,
}

impl TrunkDecomposition {
    pub fn of(t: &Tree) -> Self {
        let mut labels = Vec::new();
        let mut attached = Vec::new();
        let mut cur = t;
        while let Tree::Node { label, left, right } = cur {
            labels.push(*label);
            attached.push((**right).clone());
            cur = left;
        }
        TrunkDecomposition { labels, attached, base: cur.clone() }
    }

    /// Number of trunk carets.
    pub fn m(&self) -> usize {
        self.labels.len()
    }

    /// Spine positions with a label other than 1, with their labels.
    pub fn c_positions(&self) -> Vec<(usize, usize)> {
        self.labels.iter().enumerate().filter(|(_, &d)| d != 1).map(|(i, &d)| (i, d)).collect()
    }

    pub fn attached_carets(&self) -> usize {
        self.attached.iter().map(Tree::carets).sum()
    }

    pub fn reconstruct(&self) -> Tree {
        self.labels
            .iter()
            .zip(&self.attached)
            .rev()
            .fold(self.base.clone(), |below, (&label, right)| Tree::node(label, below, right.clone()))
    }

    pub fn complexity(&self) -> Complexity {
        Complexity(self.labels.clone())
    }
}

pub fn trunk_decompose(t: &Tree) -> TrunkDecomposition {
    TrunkDecomposition::of(t)
}

/// Left-spine label word, ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complexity(pub Vec<usize>);

impl Ord for Complexity {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Complexity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&d| d > 9) { "." } else { "" };
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

pub fn complexity(t: &Tree) -> Complexity {
    Complexity(t.left_spine())
}

/// Staircase `s_{0,1}^k` on the unit cube.
pub fn staircase(k: usize, n: usize) -> Result<Element, GroupError> {
    let p = MonoidWord::new(n, vec![Cut { i: 0, d: 1 }; k]).pattern_on(1)?;
    Ok(Element::new(p.clone(), p)?)
}

/// The element `(P, s_{0,1}^k)` for a tree whose leaves are taken in left-right
/// order, ignoring their numbers.
pub fn tree_element(t: &Tree, n: usize) -> Result<Element, GroupError> {
    let t = t.renumbered(&mut (0..));
    let range = Forest::new(vec![t.clone()]).to_pattern(n).map_err(|e| GroupError::Hypothesis(e.to_string()))?;
    let domain = staircase(t.carets(), n)?.domain().clone();
    Ok(Element::new(domain, range)?)
}

/// `C*X*` word evaluating to [`tree_element`]: one C per non-1 spine label,
/// then one X per off-spine caret in depth-first order, left to right.
pub fn tree_word(t: &Tree) -> GroupWord {
    let trunk = TrunkDecomposition::of(t);
    let mut letters: Vec<GroupLetter> = trunk.c_positions().into_iter().map(|(i, d)| c(i, d)).collect();
    let mut cur: Vec<&Tree> = vec![&trunk.base];
    cur.extend(trunk.attached.iter().rev());
    let mut p = 0;
    while p < cur.len() {
        if let Tree::Node { label, left, right } = cur[p] {
            letters.push(x(cur.len() - 1 - p, *label));
            cur.splice(p..=p, [&**left, &**right]);
        } else {
            p += 1;
        }
    }
    letters.into()
}

/// Split a tree whose leaf numbers are a permutation into `body · perm`:
/// `body` is [`tree_word`] of the shape and `perm` a word in `π`, `π̄` such
/// that the product equals `(P, s_{0,1}^k)` with `P` numbered by the leaves.
pub fn numbered_tree_word(t: &Tree) -> (GroupWord, GroupWord) {
    let nums = t.leaves();
    let mut order = vec![0; nums.len()];
    for (pos, &num) in nums.iter().enumerate() {
        order[num] = pos;
    }
    (tree_word(t), convert_swaps(&swap_word(&order), t.carets()))
}

/// Primary tree of a `C*X*` word, leaves numbered left to right.
pub fn primary_tree(w: &GroupWord) -> Result<Tree, GroupError> {
    let split = w.letters.iter().position(|l| !l.is_c()).unwrap_or(w.len());
    let (cs, xs) = w.letters.split_at(split);
    let mut labels = Vec::new();
    let mut last = None;
    for &l in cs {
        let GroupLetter::C { i, d, inv: false } = l else {
            return Err(GroupError::Hypothesis(format!("{l} in the C prefix")));
        };
        if last.is_some_and(|j| j >= i) {
            return Err(GroupError::Hypothesis("C indices must increase".into()));
        }
        last = Some(i);
        labels.resize(i + 1, 1);
        labels[i] = d;
    }
    let mut t = labels.iter().rev().fold(Tree::leaf(0), |below, &d| Tree::node(d, below, Tree::leaf(0)));
    // Leaf paths, left to right.
    let mut leaves: Vec<Vec<bool>> = (0..=labels.len())
        .map(|k| if k == 0 { vec![false; labels.len()] } else { [vec![false; labels.len() - k], vec![true]].concat() })
        .collect();
    for &l in xs {
        let GroupLetter::X { i, d, inv: false } = l else {
            return Err(GroupError::Hypothesis(format!("{l} in the X suffix")));
        };
        while leaves.len() < i + 2 {
            let path = leaves[0].clone();
            *t.at_mut(&path).expect("leaf") = Tree::node(1, Tree::leaf(0), Tree::leaf(0));
            leaves.splice(0..=0, [[path.clone(), vec![false]].concat(), [path, vec![true]].concat()]);
        }
        let p = leaves.len() - 1 - i;
        let path = leaves[p].clone();
        *t.at_mut(&path).expect("leaf") = Tree::node(d, Tree::leaf(0), Tree::leaf(0));
        leaves.splice(p..=p, [[path.clone(), vec![false]].concat(), [path, vec![true]].concat()]);
    }
    Ok(t.renumbered(&mut (0..)))
}

/// One descent step: `L = body · permutation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrunkStep {
    pub body: GroupWord,
    pub permutation: GroupWord,
    pub before: Complexity,
    pub after: Complexity,
}

impl TrunkStep {
    pub fn word(&self) -> GroupWord {
        self.body.concat(&self.permutation)
    }
}

/// Repair the lowest non-normalized trunk vertex of the primary tree of `w`.
/// Returns `None` when every trunk vertex is normalized. The subtrees off the
/// trunk must already be normalized.
pub fn lower_trunk_complexity(w: &GroupWord) -> Result<Option<TrunkStep>, GroupError> {
    lower_tree(&primary_tree(w)?)
}

fn lower_tree(t: &Tree) -> Result<Option<TrunkStep>, GroupError> {
    let Some(t2) = repair_lowest(t)? else { return Ok(None) };
    let (body, permutation) = numbered_tree_word(&t2);
    Ok(Some(TrunkStep { body, permutation, before: complexity(t), after: complexity(&t2) }))
}

/// Rotate at the lowest non-normalized trunk vertex, pulling the minimal
/// fully divided dimension up to it. Leaf numbers travel with their bricks.
fn repair_lowest(t: &Tree) -> Result<Option<Tree>, GroupError> {
    let trunk = TrunkDecomposition::of(t);
    if !trunk.attached.iter().all(Tree::is_normalized) {
        return Err(GroupError::Hypothesis("primary tree is not normalized off the trunk".into()));
    }
    let Some(r) = (0..trunk.m()).rev().find(|&r| !t.at(&vec![false; r]).is_some_and(Tree::vertex_normalized)) else {
        return Ok(None);
    };
    let mut t2 = t.clone();
    let slot = t2.at_mut(&vec![false; r]).expect("trunk vertex");
    let Tree::Node { label, left, right } = std::mem::replace(slot, Tree::leaf(0)) else { unreachable!() };
    let d = (1..label).find(|&d| left.fully_divided(d) && right.fully_divided(d)).expect("non-normalized vertex");
    let (l, rr) = (left.pull_up(d).expect("fully divided"), right.pull_up(d).expect("fully divided"));
    *slot = Tree::node(label, l, rr).rotate_root();
    Ok(Some(t2))
}

/// Normalize every subtree hanging off the trunk; the trunk is untouched.
pub fn normalize_off_trunk(t: &Tree) -> Tree {
    let mut trunk = TrunkDecomposition::of(t);
    for a in &mut trunk.attached {
        *a = a.clone().normalize();
    }
    trunk.reconstruct()
}

/// Iterate the descent step, renormalizing off the trunk in between, until
/// the trunk is normalized. Returns `body · permutation` equal to `w` and the
/// complexities visited.
pub fn descend_trunk(w: &GroupWord) -> Result<(GroupWord, GroupWord, Vec<Complexity>), GroupError> {
    let mut t = normalize_off_trunk(&primary_tree(w)?);
    let mut trace = vec![complexity(&t)];
    while let Some(next) = repair_lowest(&t)? {
        t = normalize_off_trunk(&next);
        trace.push(complexity(&t));
    }
    let (body, permutation) = numbered_tree_word(&t);
    Ok((body, permutation, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::word_evaluate;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn caret(d: usize) -> Tree {
        Tree::node(d, Tree::leaf(0), Tree::leaf(1))
    }

    fn random_cx_word(rng: &mut impl Rng, n: usize) -> GroupWord {
        let mut letters = Vec::new();
        let mut i = 0;
        if n >= 2 {
            for _ in 0..rng.gen_range(0..3) {
                i += rng.gen_range(0..3);
                letters.push(c(i, rng.gen_range(2..=n)));
                i += 1;
            }
        }
        for _ in 0..rng.gen_range(0..6) {
            letters.push(x(rng.gen_range(0..5), rng.gen_range(1..=n)));
        }
        letters.into()
    }

    #[test]
    fn decomposition_examples() {
        let stairs = Tree::node(1, Tree::node(1, caret(1), Tree::leaf(2)), Tree::leaf(3));
        let d = trunk_decompose(&stairs);
        assert_eq!(d.labels, vec![1, 1, 1]);
        assert!(d.c_positions().is_empty());
        assert_eq!(d.attached_carets(), 0);
        assert_eq!(complexity(&stairs).to_string(), "111");

        let t = Tree::node(2, caret(1), Tree::leaf(2));
        let d = trunk_decompose(&t);
        assert_eq!(d.labels, vec![2, 1]);
        assert_eq!(d.c_positions(), vec![(0, 2)]);
        assert_eq!(complexity(&t).to_string(), "21");

        let t = Tree::node(1, Tree::leaf(0), caret(2));
        let d = trunk_decompose(&t);
        assert_eq!(d.attached_carets(), 1);
        assert_eq!(d.reconstruct(), t);
    }

    #[test]
    fn length_lex() {
        let k = |v: &[usize]| Complexity(v.to_vec());
        assert!(k(&[1, 2]) < k(&[2, 1]));
        assert!(k(&[2, 1]) < k(&[1, 1, 1]));
        assert!(k(&[3]) < k(&[1, 1]));
    }

    #[test]
    fn primary_tree_matches_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=3);
            let w = random_cx_word(&mut rng, n);
            let t = primary_tree(&w).unwrap();
            let e = word_evaluate(&w, n).unwrap();
            assert_eq!(tree_element(&t, n).unwrap(), e, "{w}");
            assert_eq!(word_evaluate(&tree_word(&t), n).unwrap(), e, "{w}");
            let d = trunk_decompose(&t);
            for (k, &(i, dd)) in d.c_positions().iter().enumerate() {
                assert_eq!(w.letters[k], c(i, dd));
            }
            // Spine length from the letter indices.
            let g = w.c_count();
            let mut m = if g > 0 { w.letters[g - 1].index() + 1 } else { 0 };
            for (j, l) in w.letters.iter().enumerate().skip(g) {
                m = m.max((l.index() + g + 2).saturating_sub(j + 1));
            }
            assert_eq!(d.m(), m, "{w}");
        }
    }

    #[test]
    fn numbered_split() {
        let t = Tree::node(1, Tree::node(2, Tree::leaf(2), Tree::leaf(0)), Tree::node(3, Tree::leaf(3), Tree::leaf(1)));
        let (body, perm) = numbered_tree_word(&t);
        let pattern = Forest::new(vec![t.clone()]).to_pattern(3).unwrap();
        let e = Element::new(staircase(3, 3).unwrap().domain().clone(), pattern).unwrap();
        assert_eq!(word_evaluate(&body.concat(&perm), 3).unwrap(), e);
    }

    #[test]
    fn all_one_trunk_is_a_noop() {
        assert_eq!(lower_trunk_complexity(&vec![x(2, 2), x(0, 1)].into()).unwrap(), None);
    }

    #[test]
    fn lowering_with_first_dimension() {
        let w: GroupWord = vec![c(0, 2), x(0, 1), x(2, 1)].into();
        let t = primary_tree(&w).unwrap();
        assert_eq!(complexity(&t).to_string(), "21");
        let step = lower_trunk_complexity(&w).unwrap().unwrap();
        assert!(step.after < step.before);
        assert_eq!(step.after.to_string(), "12");
        assert_eq!(word_evaluate(&step.word(), 2).unwrap(), word_evaluate(&w, 2).unwrap());
    }

    #[test]
    fn lowering_swaps_labels() {
        let w: GroupWord = vec![c(0, 3), c(1, 2), x(0, 2)].into();
        let step = lower_trunk_complexity(&w).unwrap().unwrap();
        assert_eq!(step.before.0, vec![3, 2]);
        assert_eq!(step.after.0, vec![2, 3]);
        assert_eq!(word_evaluate(&step.word(), 3).unwrap(), word_evaluate(&w, 3).unwrap());
        assert!(step.permutation.letters.iter().all(|l| matches!(l, GroupLetter::Pi { .. })));
    }

    #[test]
    fn off_trunk_hypothesis() {
        let w: GroupWord = vec![x(0, 2), x(0, 1), x(2, 1)].into();
        assert!(matches!(lower_trunk_complexity(&w), Err(GroupError::Hypothesis(_))));
    }

    #[test]
    fn descent_terminates() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(2..=3);
            let w = tree_word(&normalize_off_trunk(&primary_tree(&random_cx_word(&mut rng, n)).unwrap()));
            let (body, perm, trace) = descend_trunk(&w).unwrap();
            assert!(trace.windows(2).all(|p| p[1] < p[0]), "{w}");
            assert_eq!(word_evaluate(&body.concat(&perm), n).unwrap(), word_evaluate(&w, n).unwrap(), "{w}");
            assert!(primary_tree(&body).unwrap().is_normalized());
        }
    }
}
