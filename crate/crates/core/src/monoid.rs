//! The monoid of numbered patterns: words in cuts `s_{i,d}` and swaps `σ_i`,
//! their forests, the defining relations (M1)–(M6), and normalization.

use std::fmt;

use thiserror::Error;

use crate::forest::{Forest, ForestError, Tree, VertexId, VertexOrder};
use crate::pattern::{Pattern, PatternError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error("relation {0} does not apply: {1}")]
    SideCondition(String, String),
    #[error("relation side does not match the word at position {0}")]
    NoMatch(usize),
    #[error("cube S_{cube} is not fully divided across dimension {dim}")]
    NotFullyDivided { cube: usize, dim: usize },
    #[error("dimension {dim} out of range 1..={n}")]
    BadDimension { dim: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidLetter {
    /// `s_{i,d}`: halve brick `i` across dimension `d`.
    Cut { i: usize, d: usize },
    /// `σ_i`: exchange the numbers `i` and `i + 1`.
    Swap { i: usize },
}

pub use MonoidLetter::{Cut, Swap};

impl fmt::Display for MonoidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut { i, d } => write!(f, "s{i}.{d}"),
            Swap { i } => write!(f, "sig{i}"),
        }
    }
}

impl MonoidLetter {
    pub fn is_cut(&self) -> bool {
        matches!(self, Cut { .. })
    }

    /// Number of bricks the letter needs to be applicable.
    fn needs(&self) -> usize {
        match *self {
            Cut { i, .. } => i + 1,
            Swap { i } => i + 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidWord {
    pub dim: usize,
    pub letters: Vec<MonoidLetter>,
}

impl fmt::Display for MonoidWord {
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

impl MonoidWord {
    pub fn new(dim: usize, letters: Vec<MonoidLetter>) -> Self {
        MonoidWord { dim, letters }
    }

    pub fn empty(dim: usize) -> Self {
        MonoidWord { dim, letters: Vec::new() }
    }

    pub fn check(&self) -> Result<(), MonoidError> {
        for l in &self.letters {
            if let Cut { d, .. } = *l {
                if d == 0 || d > self.dim {
                    return Err(MonoidError::BadDimension { dim: d, n: self.dim });
                }
            }
        }
        Ok(())
    }

    /// Number of cut letters; invariant under (M1)–(M6).
    pub fn length(&self) -> usize {
        self.letters.iter().filter(|l| l.is_cut()).count()
    }

    /// Smallest cube count on which every letter is applicable.
    pub fn cubes_needed(&self) -> usize {
        let mut bricks = 1usize;
        let mut cubes = 1usize;
        for l in &self.letters {
            if l.needs() > bricks {
                cubes += l.needs() - bricks;
                bricks = l.needs();
            }
            if l.is_cut() {
                bricks += 1;
            }
        }
        cubes
    }

    /// Fold the letters over the base pattern on `cubes` cubes, leftmost first.
    pub fn pattern_on(&self, cubes: usize) -> Result<Pattern, MonoidError> {
        let mut p = Pattern::base(self.dim, cubes)?;
        for l in &self.letters {
            match *l {
                Cut { i, d } => p.cut_in_place(i, d)?,
                Swap { i } => p.swap_in_place(i)?,
            }
        }
        Ok(p)
    }

    /// The pattern on the fewest cubes that make the word applicable.
    pub fn pattern(&self) -> Result<Pattern, MonoidError> {
        self.pattern_on(self.cubes_needed())
    }

    /// Numbered, labeled forest of the word, with cubes grown on demand.
    pub fn forest(&self) -> Result<Forest, MonoidError> {
        self.check()?;
        let mut trees = vec![Tree::leaf(0)];
        let mut slots: Vec<VertexId> = vec![VertexId { tree: 0, path: vec![] }];
        for l in &self.letters {
            while slots.len() < l.needs() {
                slots.push(VertexId { tree: trees.len(), path: vec![] });
                trees.push(Tree::leaf(0));
            }
            match *l {
                Cut { i, d } => {
                    let v = slots[i].clone();
                    *trees[v.tree].at_mut(&v.path).expect("slot points at a leaf") =
                        Tree::node(d, Tree::leaf(0), Tree::leaf(0));
                    let mut lo = v.clone();
                    lo.path.push(false);
                    let mut hi = v;
                    hi.path.push(true);
                    slots.splice(i..=i, [lo, hi]);
                }
                Swap { i } => slots.swap(i, i + 1),
            }
        }
        for (num, v) in slots.iter().enumerate() {
            *trees[v.tree].at_mut(&v.path).expect("slot points at a leaf") = Tree::leaf(num);
        }
        Ok(Forest::new(trees))
    }

    /// The cut prefix and swap suffix, if the word is shaped `Cut* Swap*`.
    pub fn split_cuts_swaps(&self) -> Option<(&[MonoidLetter], &[MonoidLetter])> {
        let k = self.letters.iter().position(|l| !l.is_cut()).unwrap_or(self.letters.len());
        let (cuts, swaps) = self.letters.split_at(k);
        swaps.iter().all(|l| !l.is_cut()).then_some((cuts, swaps))
    }

    /// Monoid equality: same numbered pattern once both sides cover the same cubes.
    pub fn same_element(&self, other: &MonoidWord) -> Result<bool, MonoidError> {
        let cubes = self.cubes_needed().max(other.cubes_needed());
        Ok(self.pattern_on(cubes)? == other.pattern_on(cubes)?)
    }
}

/// The cut word realizing `forest` with carets created in `order`, followed by
/// the canonical swap word for the leaf numbering.
pub fn forest_to_word(forest: &Forest, order: &VertexOrder, dim: usize) -> Result<MonoidWord, MonoidError> {
    forest.check_numbering()?;
    forest.check_order(order)?;
    // Current leaves, left to right across trees.
    let mut leaves: Vec<VertexId> = (0..forest.trees.len()).map(|t| VertexId { tree: t, path: vec![] }).collect();
    let mut letters = Vec::with_capacity(order.0.len());
    for v in &order.0 {
        let i = leaves.iter().position(|x| x == v).expect("ancestry-respecting order reaches a leaf");
        let d = forest.trees[v.tree].at(&v.path).and_then(Tree::label).expect("interior vertex");
        if d == 0 || d > dim {
            return Err(MonoidError::BadDimension { dim: d, n: dim });
        }
        letters.push(Cut { i, d });
        let mut lo = v.clone();
        lo.path.push(false);
        let mut hi = v.clone();
        hi.path.push(true);
        leaves.splice(i..=i, [lo, hi]);
    }
    // After the cuts, the leaf at position p carries number p; the target
    // arrangement puts the brick numbered `num` at slot `num`.
    let nums = forest.leaves();
    let mut target = vec![0; nums.len()];
    for (pos, &num) in nums.iter().enumerate() {
        target[num] = pos;
    }
    letters.extend(swap_word(&target));
    Ok(MonoidWord { dim, letters })
}

/// Canonical word of a forest: depth-first, leftmost root first.
pub fn canonical_word(forest: &Forest, dim: usize) -> Result<MonoidWord, MonoidError> {
    forest_to_word(forest, &forest.canonical_order(), dim)
}

/// Lexicographically least reduced word of adjacent swaps turning the
/// arrangement `0, 1, …, N-1` into `target` (slot `j` ends up holding the item
/// `target[j]`).
pub fn swap_word(target: &[usize]) -> Vec<MonoidLetter> {
    let mut rank = vec![0; target.len()];
    for (slot, &item) in target.iter().enumerate() {
        rank[item] = slot;
    }
    let mut current: Vec<usize> = (0..target.len()).collect();
    let mut out = Vec::new();
    loop {
        match (0..current.len().saturating_sub(1)).find(|&i| rank[current[i]] > rank[current[i + 1]]) {
            Some(i) => {
                current.swap(i, i + 1);
                out.push(Swap { i });
            }
            None => return out,
        }
    }
}

/// The permutation effected by a swap-only word, as a target arrangement.
pub fn swap_arrangement(swaps: &[MonoidLetter], len: usize) -> Vec<usize> {
    let mut current: Vec<usize> = (0..len).collect();
    for l in swaps {
        if let Swap { i } = *l {
            current.swap(i, i + 1);
        }
    }
    current
}

/// Reduce the swap letters of a swap-only word to the canonical reduced word.
pub fn canonical_swaps(swaps: &[MonoidLetter]) -> Vec<MonoidLetter> {
    let len = swaps.iter().map(|l| l.needs()).max().unwrap_or(0);
    swap_word(&swap_arrangement(swaps, len))
}

/// Normalize a word: the output has the same pattern and length, is shaped
/// `Cut* Swap*`, and its forest is normalized.
pub fn normalize_word(w: &MonoidWord) -> Result<MonoidWord, MonoidError> {
    let forest = w.forest()?.normalize();
    canonical_word(&forest, w.dim)
}

/// Rewrite `w` to a word of the same pattern that begins with `s_{i,d}`,
/// provided cube `S_i` is fully divided across `d`.
pub fn pull_up_dimension(w: &MonoidWord, i: usize, d: usize) -> Result<MonoidWord, MonoidError> {
    if w.letters.first() == Some(&Cut { i, d }) {
        return Ok(w.clone());
    }
    let mut forest = w.forest()?;
    if i >= forest.trees.len() {
        return Err(MonoidError::NotFullyDivided { cube: i, dim: d });
    }
    let tree = std::mem::replace(&mut forest.trees[i], Tree::leaf(0));
    forest.trees[i] = tree.pull_up(d).ok_or(MonoidError::NotFullyDivided { cube: i, dim: d })?;
    let mut order = forest.canonical_order();
    let root = VertexId { tree: i, path: vec![] };
    order.0.retain(|v| *v != root);
    order.0.insert(0, root);
    forest_to_word(&forest, &order, w.dim)
}

/// One instance of a defining relation of the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonoidRelation {
    /// `s_{j,d'} s_{i,d} = s_{i,d} s_{j+1,d'}`, `i < j`.
    M1 { i: usize, j: usize, d: usize, d2: usize },
    /// `σ_i σ_i = 1`.
    M2 { i: usize },
    /// `σ_i σ_j = σ_j σ_i`, `|i - j| ≥ 2`.
    M3 { i: usize, j: usize },
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`.
    M4 { i: usize },
    /// `σ_j s_{i,d} = s_{i,d} σ_{j+1}`, `i < j`.
    M5a { i: usize, j: usize, d: usize },
    /// `σ_j s_{j,d} = s_{j+1,d} σ_j σ_{j+1}`.
    M5b { j: usize, d: usize },
    /// `σ_j s_{j+1,d} = s_{j,d} σ_{j+1} σ_j`.
    M5c { j: usize, d: usize },
    /// `σ_j s_{i,d} = s_{i,d} σ_j`, `i > j + 1`.
    M5d { i: usize, j: usize, d: usize },
    /// `s_{i,d} s_{i+1,d'} s_{i,d'} = s_{i,d'} s_{i+1,d} s_{i,d} σ_{i+1}`, `d ≠ d'`.
    M6 { i: usize, d: usize, d2: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl MonoidRelation {
    pub fn tag(&self) -> &'static str {
        match self {
            MonoidRelation::M1 { .. } => "M1",
            MonoidRelation::M2 { .. } => "M2",
            MonoidRelation::M3 { .. } => "M3",
            MonoidRelation::M4 { .. } => "M4",
            MonoidRelation::M5a { .. } => "M5a",
            MonoidRelation::M5b { .. } => "M5b",
            MonoidRelation::M5c { .. } => "M5c",
            MonoidRelation::M5d { .. } => "M5d",
            MonoidRelation::M6 { .. } => "M6",
        }
    }

    /// Both sides, after checking the side conditions against dimension `n`.
    pub fn sides(&self, n: usize) -> Result<(Vec<MonoidLetter>, Vec<MonoidLetter>), MonoidError> {
        use MonoidRelation::*;
        let bad = |why: &str| Err(MonoidError::SideCondition(self.tag().into(), why.into()));
        let dims_ok = |ds: &[usize]| ds.iter().all(|&d| d >= 1 && d <= n);
        Ok(match *self {
            M1 { i, j, d, d2 } => {
                if i >= j {
                    return bad("needs i < j");
                }
                if !dims_ok(&[d, d2]) {
                    return bad("dimension out of range");
                }
                (vec![Cut { i: j, d: d2 }, Cut { i, d }], vec![Cut { i, d }, Cut { i: j + 1, d: d2 }])
            }
            M2 { i } => (vec![Swap { i }, Swap { i }], vec![]),
            M3 { i, j } => {
                if i.abs_diff(j) < 2 {
                    return bad("needs |i - j| >= 2");
                }
                (vec![Swap { i }, Swap { i: j }], vec![Swap { i: j }, Swap { i }])
            }
            M4 { i } => (
                vec![Swap { i }, Swap { i: i + 1 }, Swap { i }],
                vec![Swap { i: i + 1 }, Swap { i }, Swap { i: i + 1 }],
            ),
            M5a { i, j, d } => {
                if i >= j {
                    return bad("needs i < j");
                }
                if !dims_ok(&[d]) {
                    return bad("dimension out of range");
                }
                (vec![Swap { i: j }, Cut { i, d }], vec![Cut { i, d }, Swap { i: j + 1 }])
            }
            M5b { j, d } => {
                if !dims_ok(&[d]) {
                    return bad("dimension out of range");
                }
                (vec![Swap { i: j }, Cut { i: j, d }], vec![Cut { i: j + 1, d }, Swap { i: j }, Swap { i: j + 1 }])
            }
            M5c { j, d } => {
                if !dims_ok(&[d]) {
                    return bad("dimension out of range");
                }
                (vec![Swap { i: j }, Cut { i: j + 1, d }], vec![Cut { i: j, d }, Swap { i: j + 1 }, Swap { i: j }])
            }
            M5d { i, j, d } => {
                if i <= j + 1 {
                    return bad("needs i > j + 1");
                }
                if !dims_ok(&[d]) {
                    return bad("dimension out of range");
                }
                (vec![Swap { i: j }, Cut { i, d }], vec![Cut { i, d }, Swap { i: j }])
            }
            M6 { i, d, d2 } => {
                if d == d2 {
                    return bad("needs d != d'");
                }
                if !dims_ok(&[d, d2]) {
                    return bad("dimension out of range");
                }
                (
                    vec![Cut { i, d }, Cut { i: i + 1, d: d2 }, Cut { i, d: d2 }],
                    vec![Cut { i, d: d2 }, Cut { i: i + 1, d }, Cut { i, d }, Swap { i: i + 1 }],
                )
            }
        })
    }

    /// Every admissible instance with all indices at most `bound` in dimension `n`.
    pub fn instances(n: usize, bound: usize) -> Vec<MonoidRelation> {
        use MonoidRelation::*;
        let mut out = Vec::new();
        let dims = 1..=n;
        for i in 0..=bound {
            out.push(M2 { i });
            out.push(M4 { i });
            for j in 0..=bound {
                if i.abs_diff(j) >= 2 {
                    out.push(M3 { i, j });
                }
            }
            for d in dims.clone() {
                out.push(M5b { j: i, d });
                out.push(M5c { j: i, d });
                for j in 0..=bound {
                    if i < j {
                        out.push(M5a { i, j, d });
                        for d2 in dims.clone() {
                            out.push(M1 { i, j, d, d2 });
                        }
                    }
                    if i > j + 1 {
                        out.push(M5d { i, j, d });
                    }
                }
                for d2 in dims.clone() {
                    if d != d2 {
                        out.push(M6 { i, d, d2 });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for MonoidRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Apply one relation at `pos`, replacing the matched side by the other.
pub fn apply_relation(
    w: &MonoidWord,
    rel: MonoidRelation,
    dir: Direction,
    pos: usize,
) -> Result<MonoidWord, MonoidError> {
    let (lhs, rhs) = rel.sides(w.dim)?;
    let (from, to) = match dir {
        Direction::Forward => (lhs, rhs),
        Direction::Backward => (rhs, lhs),
    };
    if pos > w.letters.len() || w.letters.len() - pos < from.len() || w.letters[pos..pos + from.len()] != from[..] {
        return Err(MonoidError::NoMatch(pos));
    }
    let mut letters = w.letters.clone();
    letters.splice(pos..pos + from.len(), to);
    Ok(MonoidWord { dim: w.dim, letters })
}
