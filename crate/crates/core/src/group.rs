//! The group nV over the generators `X_{i,d}`, `C_{i,d}`, `π_i`, `π̄_i`.
//!
//! Each generator is a pair of cut/swap words `(p, q)` evaluated on the unit
//! cube: the domain is the pattern of `q`, the range the pattern of `p`. Words
//! multiply like fractions `p q⁻¹`, so in a product `g h` the right factor is
//! applied first.

use std::fmt;

use thiserror::Error;

use crate::element::Element;
use crate::monoid::{Cut, MonoidError, MonoidLetter, MonoidWord, Swap};
use crate::pattern::{DyadicBrick, DyadicInterval, Pattern, PatternError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("letter {letter} is not valid in dimension {n}")]
    BadLetter { letter: GroupLetter, n: usize },
    #[error("relation ({family}) does not apply: {why}")]
    SideCondition { family: String, why: String },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLetter {
    X { i: usize, d: usize, inv: bool },
    C { i: usize, d: usize, inv: bool },
    Pi { i: usize },
    PiBar { i: usize },
}

pub use GroupLetter::{Pi, PiBar};

pub fn x(i: usize, d: usize) -> GroupLetter {
    GroupLetter::X { i, d, inv: false }
}

pub fn x_inv(i: usize, d: usize) -> GroupLetter {
    GroupLetter::X { i, d, inv: true }
}

pub fn c(i: usize, d: usize) -> GroupLetter {
    GroupLetter::C { i, d, inv: false }
}

pub fn c_inv(i: usize, d: usize) -> GroupLetter {
    GroupLetter::C { i, d, inv: true }
}

pub fn pi(i: usize) -> GroupLetter {
    Pi { i }
}

pub fn pibar(i: usize) -> GroupLetter {
    PiBar { i }
}

impl GroupLetter {
    pub fn inverse(self) -> GroupLetter {
        match self {
            GroupLetter::X { i, d, inv } => GroupLetter::X { i, d, inv: !inv },
            GroupLetter::C { i, d, inv } => GroupLetter::C { i, d, inv: !inv },
            other => other,
        }
    }

    pub fn index(self) -> usize {
        match self {
            GroupLetter::X { i, .. } | GroupLetter::C { i, .. } | Pi { i } | PiBar { i } => i,
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            GroupLetter::X { d, .. } | GroupLetter::C { d, .. } => d,
            _ => 1,
        }
    }

    /// `X⁻¹` or `C⁻¹`; `π`, `π̄` are their own inverses and never count.
    pub fn is_inverse(self) -> bool {
        matches!(self, GroupLetter::X { inv: true, .. } | GroupLetter::C { inv: true, .. })
    }

    pub fn inverse_free(self) -> GroupLetter {
        if self.is_inverse() {
            self.inverse()
        } else {
            self
        }
    }

    pub fn is_c(self) -> bool {
        matches!(self, GroupLetter::C { .. })
    }

    pub fn check(self, n: usize) -> Result<(), GroupError> {
        let ok = match self {
            GroupLetter::X { d, .. } => (1..=n).contains(&d),
            GroupLetter::C { d, .. } => (2..=n).contains(&d),
            _ => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(GroupError::BadLetter { letter: self, n })
        }
    }

    /// The defining pair `(p, q)` of monoid words, for the positive letter.
    pub fn word_pair(self, n: usize) -> (MonoidWord, MonoidWord) {
        let stairs = |k: usize| vec![Cut { i: 0, d: 1 }; k];
        let with = |mut v: Vec<MonoidLetter>, l: MonoidLetter| {
            v.push(l);
            v
        };
        let (p, q) = match self {
            GroupLetter::X { i, d, .. } => (with(stairs(i + 1), Cut { i: 1, d }), stairs(i + 2)),
            GroupLetter::C { i, d, .. } => (with(stairs(i), Cut { i: 0, d }), stairs(i + 1)),
            Pi { i } => (with(stairs(i + 2), Swap { i: 1 }), stairs(i + 2)),
            PiBar { i } => (with(stairs(i + 1), Swap { i: 0 }), stairs(i + 1)),
        };
        (MonoidWord::new(n, p), MonoidWord::new(n, q))
    }

    pub fn element(self, n: usize) -> Result<Element, GroupError> {
        self.check(n)?;
        let (p, q) = self.word_pair(n);
        let e = Element::new(q.pattern_on(1)?, p.pattern_on(1)?)?;
        Ok(match self {
            GroupLetter::X { inv: true, .. } | GroupLetter::C { inv: true, .. } => e.inverse(),
            _ => e,
        })
    }
}

impl fmt::Display for GroupLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupLetter::X { i, d, inv } => write!(f, "X{i}.{d}{}", if inv { "^-1" } else { "" }),
            GroupLetter::C { i, d, inv } => write!(f, "C{i}.{d}{}", if inv { "^-1" } else { "" }),
            Pi { i } => write!(f, "pi{i}"),
            PiBar { i } => write!(f, "pibar{i}"),
        }
    }
}

/// Element of a generator in dimension `n`.
pub fn generator_element(g: GroupLetter, n: usize) -> Result<Element, GroupError> {
    g.element(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    pub letters: Vec<GroupLetter>,
}

impl GroupWord {
    pub fn new(letters: Vec<GroupLetter>) -> Self {
        GroupWord { letters }
    }

    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn max_dimension(&self) -> usize {
        self.letters.iter().map(|l| l.dimension()).max().unwrap_or(1)
    }

    /// Number of `C` and `C⁻¹` letters.
    pub fn c_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_c()).count()
    }

    /// Drop adjacent inverse pairs, including `π π` and `π̄ π̄`.
    pub fn freely_reduced(&self) -> GroupWord {
        let mut out: Vec<GroupLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord { letters: out }
    }

    pub fn evaluate(&self, n: usize) -> Result<Element, GroupError> {
        word_evaluate(self, n)
    }
}

impl From<Vec<GroupLetter>> for GroupWord {
    fn from(letters: Vec<GroupLetter>) -> Self {
        GroupWord { letters }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Group product `g h`: apply `h`, then `g`.
pub fn multiply(g: &Element, h: &Element) -> Result<Element, GroupError> {
    Ok(h.then(g)?)
}

/// Product of the generators of `w`; the rightmost letter acts first.
pub fn word_evaluate(w: &GroupWord, n: usize) -> Result<Element, GroupError> {
    let mut acc = Element::identity(n)?;
    let mut reduced_len = 32;
    let mut end = w.len();
    while end > 0 {
        let start =
            (0..end).rev().take_while(|&k| matches!(w.letters[k], Pi { .. } | PiBar { .. })).last().unwrap_or(end);
        let next = match (end - start >= 2).then(|| staircase_permutation(&w.letters[start..end], n)).flatten() {
            Some(e) => {
                end = start;
                e?
            }
            None => {
                end -= 1;
                w.letters[end].element(n)?
            }
        };
        acc = acc.then(&next)?;
        if acc.len() > 2 * reduced_len {
            acc = acc.reduced();
            reduced_len = acc.len().max(32);
        }
    }
    Ok(acc.reduced())
}

/// A run of `π`, `π̄` letters as one permutation of the bricks of a staircase
/// `s_{0,1}^p`, provided every `π̄_i` in it has `i = p - 1`.
fn staircase_permutation(run: &[GroupLetter], n: usize) -> Option<Result<Element, GroupError>> {
    let p = run
        .iter()
        .map(|l| match *l {
            Pi { i } => i + 2,
            PiBar { i } => i + 1,
            _ => 0,
        })
        .max()?;
    if run.iter().any(|l| matches!(*l, PiBar { i } if i + 1 != p)) {
        return None;
    }
    // `image[q]` is the position that staircase brick `q` ends up at;
    // `at[v]` inverts it.
    let mut image: Vec<usize> = (0..=p).collect();
    let mut at: Vec<usize> = (0..=p).collect();
    for l in run.iter().rev() {
        let (a, b) = match *l {
            Pi { i } => (p - i - 1, p - i),
            _ => (0, 1),
        };
        let (qa, qb) = (at[a], at[b]);
        image.swap(qa, qb);
        at.swap(a, b);
    }
    Some((|| {
        let stairs = MonoidWord::new(n, vec![Cut { i: 0, d: 1 }; p]).pattern_on(1)?;
        Ok(Element::new(stairs.clone(), stairs.permuted(&image))?)
    })())
}

/// The homomorphism `s_{i,d} ↦ X_{i,d}`, `σ_i ↦ π_i`.
pub fn monoid_image(w: &MonoidWord) -> GroupWord {
    GroupWord {
        letters: w
            .letters
            .iter()
            .map(|l| match *l {
                Cut { i, d } => x(i, d),
                Swap { i } => pi(i),
            })
            .collect(),
    }
}

/// The letter equal to `(s_{0,1}^p σ_j, s_{0,1}^p)`: `π̄_{p-1}` for `j = 0`,
/// otherwise `π_{p-j-1}`. Requires `j < p`.
pub fn sigma_letter(j: usize, p: usize) -> GroupLetter {
    debug_assert!(j < p);
    if j == 0 {
        pibar(p - 1)
    } else {
        pi(p - j - 1)
    }
}

/// Letterwise image of a swap word acting on the staircase `s_{0,1}^p`.
pub fn convert_swaps(swaps: &[MonoidLetter], p: usize) -> GroupWord {
    swaps
        .iter()
        .filter_map(|l| match *l {
            Swap { i } => Some(sigma_letter(i, p)),
            Cut { .. } => None,
        })
        .collect::<Vec<_>>()
        .into()
}

/// `C_{r,d} ∼ C_{r+1,d} X_{r,d} π_{r+1} X_{r,1}⁻¹`.
pub fn subscript_raise_c(r: usize, d: usize) -> GroupWord {
    vec![c(r + 1, d), x(r, d), pi(r + 1), x_inv(r, 1)].into()
}

/// `π̄_r ∼ π_r π̄_{r+1} X_{r,1}⁻¹`.
pub fn subscript_raise_pibar(r: usize) -> GroupWord {
    vec![pi(r), pibar(r + 1), x_inv(r, 1)].into()
}

/// `π̄_r ∼ X_{r,1} π̄_{r+1} π_r`.
pub fn subscript_raise_pibar_alt(r: usize) -> GroupWord {
    vec![x(r, 1), pibar(r + 1), pi(r)].into()
}

/// `C_{m,d} = (π̄_m X_{m,d} π̄_{m+1} π_m)(X_{m,d} π_{m+1} X_{m,1}⁻¹)`.
pub fn c_definition(m: usize, d: usize) -> GroupWord {
    vec![pibar(m), x(m, d), pibar(m + 1), pi(m), x(m, d), pi(m + 1), x_inv(m, 1)].into()
}

/// Conjugation form of a letter with index `i ≥ 2` over index-0/1 letters:
/// `Y_i = X_{0,1}^{1-i} Y_1 X_{0,1}^{i-1}`.
pub fn conjugation_form(letter: GroupLetter) -> GroupWord {
    let i = letter.index();
    if i < 2 || letter.is_c() {
        return vec![letter].into();
    }
    let lowered = match letter {
        GroupLetter::X { d, inv, .. } => GroupLetter::X { i: 1, d, inv },
        Pi { .. } => pi(1),
        PiBar { .. } => pibar(1),
        other => other,
    };
    let mut letters = vec![x_inv(0, 1); i - 1];
    letters.push(lowered);
    letters.extend(std::iter::repeat_n(x(0, 1), i - 1));
    letters.into()
}

/// Replace every `C^{±1}` by its defining word.
pub fn expand_c(w: &GroupWord) -> GroupWord {
    let mut letters = Vec::new();
    for &l in &w.letters {
        match l {
            GroupLetter::C { i, d, inv } => {
                let def = c_definition(i, d);
                letters.extend(if inv { def.inverse() } else { def }.letters);
            }
            other => letters.push(other),
        }
    }
    letters.into()
}

/// Swap the corner bricks `[0,½)^n` and `[½,1)^n`, fixing the rest of the
/// `2^n`-cell grid.
pub fn corner_swap(n: usize) -> Result<Element, GroupError> {
    let mut grid = Pattern::base(n, 1)?;
    for d in 1..=n {
        for j in (0..grid.len()).rev() {
            grid.cut_in_place(j, d)?;
        }
    }
    let half = DyadicInterval::UNIT;
    let low = DyadicBrick { cube: 0, intervals: vec![half.lower_half(); n] };
    let high = DyadicBrick { cube: 0, intervals: vec![half.upper_half(); n] };
    let a = grid.bricks().iter().position(|b| *b == low).expect("grid cell");
    let b = grid.bricks().iter().position(|b| *b == high).expect("grid cell");
    let mut order: Vec<usize> = (0..grid.len()).collect();
    order.swap(a, b);
    Ok(Element::new(grid.clone(), grid.permuted(&order))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(o: u64, d: u32) -> DyadicInterval {
        DyadicInterval::new(o, d).unwrap()
    }

    fn b2(x: (u64, u32), y: (u64, u32)) -> DyadicBrick {
        DyadicBrick { cube: 0, intervals: vec![iv(x.0, x.1), iv(y.0, y.1)] }
    }

    #[test]
    fn x02_coordinates() {
        let e = x(0, 2).element(2).unwrap();
        assert_eq!(e.domain().bricks(), &[b2((0, 2), (0, 0)), b2((1, 2), (0, 0)), b2((1, 1), (0, 0))]);
        assert_eq!(e.range().bricks(), &[b2((0, 1), (0, 0)), b2((1, 1), (0, 1)), b2((1, 1), (1, 1))]);
    }

    #[test]
    fn bakers_map_coordinates() {
        let e = c(0, 2).element(2).unwrap();
        assert_eq!(e.domain().bricks(), &[b2((0, 1), (0, 0)), b2((1, 1), (0, 0))]);
        assert_eq!(e.range().bricks(), &[b2((0, 0), (0, 1)), b2((0, 0), (1, 1))]);
    }

    #[test]
    fn letter_validity() {
        assert!(c(0, 1).element(2).is_err());
        assert!(x(0, 3).element(2).is_err());
        assert!(pi(3).element(1).is_ok());
    }

    #[test]
    fn involutions() {
        for g in [pi(0), pi(2), pibar(0), pibar(3)] {
            assert!(word_evaluate(&vec![g, g].into(), 2).unwrap().is_identity());
        }
        assert!(word_evaluate(&GroupWord::empty(), 3).unwrap().is_identity());
    }

    #[test]
    fn subscript_raising() {
        let eq = |a: GroupWord, b: GroupWord, n| word_evaluate(&a, n).unwrap() == word_evaluate(&b, n).unwrap();
        assert!(eq(vec![c(0, 2)].into(), subscript_raise_c(0, 2), 2));
        assert!(eq(vec![c(3, 3)].into(), subscript_raise_c(3, 3), 3));
        assert!(eq(vec![pibar(0)].into(), subscript_raise_pibar(0), 2));
        assert!(eq(vec![pibar(0)].into(), subscript_raise_pibar_alt(0), 2));
    }

    #[test]
    fn corner_swap_examples() {
        for n in 1..=3 {
            let s = corner_swap(n).unwrap();
            assert!(s.then(&s).unwrap().is_identity());
        }
        assert_eq!(corner_swap(1).unwrap(), word_evaluate(&vec![pibar(0)].into(), 1).unwrap());
        let s = corner_swap(2).unwrap();
        let fixed = b2((0, 1), (1, 1));
        assert_eq!(s.image_of(&fixed), Some(fixed));
    }

    #[test]
    fn conjugation_and_c_definitions() {
        for i in 2..=6 {
            for g in [x(i, 1), x(i, 2), x_inv(i, 2), pi(i), pibar(i)] {
                assert_eq!(word_evaluate(&vec![g].into(), 2).unwrap(), word_evaluate(&conjugation_form(g), 2).unwrap());
            }
        }
        for m in 0..=4 {
            for d in 2..=3 {
                let e = word_evaluate(&vec![c(m, d)].into(), 3).unwrap();
                assert_eq!(e, word_evaluate(&c_definition(m, d), 3).unwrap());
                assert_eq!(e.inverse(), word_evaluate(&expand_c(&vec![c_inv(m, d)].into()), 3).unwrap());
            }
        }
    }

    #[test]
    fn commutator_steps() {
        let eq = |a: Vec<GroupLetter>, b: Vec<GroupLetter>| {
            word_evaluate(&a.into(), 3).unwrap() == word_evaluate(&b.into(), 3).unwrap()
        };
        for i in 1..=3 {
            assert!(eq(vec![pi(0), x(0, i), pi(0), x_inv(0, i)], vec![x(1, i), pi(0), pi(1), pi(0), x_inv(0, i)]));
            assert!(!eq(vec![pi(0), x(0, i), pi(0), x_inv(0, i)], vec![x(1, i), pi(1), x_inv(0, i)]));
            for q in 1..=4 {
                assert!(eq(vec![x_inv(q, i), x_inv(0, 1), x(q, i), x(0, 1)], vec![x_inv(q, i), x(q + 1, i)]));
            }
            assert!(eq(vec![x(0, 1), x(1, i), x(0, i)], vec![x(0, i), x(1, 1), x(0, 1), pi(1)]) || i == 1);
        }
    }

    #[test]
    fn sigma_conversion_oracle() {
        for p in 1..=8 {
            let stairs = vec![Cut { i: 0, d: 1 }; p];
            let q = MonoidWord::new(1, stairs.clone()).pattern().unwrap();
            for j in 0..p {
                let mut w = stairs.clone();
                w.push(Swap { i: j });
                let e = Element::new(q.clone(), MonoidWord::new(1, w).pattern().unwrap()).unwrap();
                assert_eq!(e, word_evaluate(&vec![sigma_letter(j, p)].into(), 1).unwrap(), "p={p} j={j}");
            }
        }
    }

    #[test]
    fn permutation_runs_match_letterwise_product() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let len = rng.gen_range(0..12);
            let w: GroupWord = (0..len)
                .map(|_| if rng.gen_bool(0.7) { pi(rng.gen_range(0..5)) } else { pibar(rng.gen_range(0..5)) })
                .collect::<Vec<_>>()
                .into();
            let mut slow = Element::identity(2).unwrap();
            for l in w.letters.iter().rev() {
                slow = slow.then(&l.element(2).unwrap()).unwrap();
            }
            assert_eq!(word_evaluate(&w, 2).unwrap(), slow, "{w}");
        }
        let top: GroupWord = vec![pi(0), pibar(3), pi(2), pi(1), pibar(3)].into();
        let mut slow = Element::identity(1).unwrap();
        for l in top.letters.iter().rev() {
            slow = slow.then(&l.element(1).unwrap()).unwrap();
        }
        assert_eq!(word_evaluate(&top, 1).unwrap(), slow);
    }
}
