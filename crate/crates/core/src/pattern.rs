//! Dyadic bricks and numbered patterns.
//!
//! A brick is a product of half-open dyadic intervals inside one unit cube
//! `S_cube`. A pattern is an ordered list of bricks that partitions a run of
//! unit cubes `S_0 .. S_{k-1}`; a brick's position in the list is its number.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Offsets of dyadic intervals.
pub type Offset = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("cube count mismatch: {0} vs {1}")]
    CubeMismatch(usize, usize),
    #[error("brick index {index} out of range for pattern with {len} bricks")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension {dim} out of range 1..={n}")]
    BadDimension { dim: usize, n: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("cube count must be at least 1")]
    ZeroCubes,
    #[error("interval offset {offset} does not fit depth {depth}")]
    BadInterval { offset: Offset, depth: u32 },
    #[error("bricks do not partition the cubes: {0}")]
    NotPartition(String),
    #[error("cube {0} is not subdivided by successive halving cuts")]
    NotGuillotine(usize),
    #[error("domain and range have different brick counts ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("elements must live on a single cube")]
    NotSingleCube,
    #[error("address has {got} coordinates, expected {expected}")]
    AddressDimension { got: usize, expected: usize },
    #[error("address too shallow to locate a unique brick")]
    AddressTooShallow,
}

/// The interval `[offset / 2^depth, (offset + 1) / 2^depth)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicInterval {
    pub offset: Offset,
    pub depth: u32,
}

impl DyadicInterval {
    pub const UNIT: DyadicInterval = DyadicInterval { offset: BigUint::ZERO, depth: 0 };

    pub fn new(offset: impl Into<Offset>, depth: u32) -> Result<Self, PatternError> {
        let offset = offset.into();
        if offset.bits() > u64::from(depth) {
            return Err(PatternError::BadInterval { offset, depth });
        }
        Ok(DyadicInterval { offset, depth })
    }

    pub fn lower_half(&self) -> Self {
        DyadicInterval { offset: &self.offset << 1u32, depth: self.depth + 1 }
    }

    pub fn upper_half(&self) -> Self {
        DyadicInterval { offset: (&self.offset << 1u32) | BigUint::one(), depth: self.depth + 1 }
    }

    /// True if `self` is contained in `other`.
    pub fn within(&self, other: &DyadicInterval) -> bool {
        self.depth >= other.depth && (&self.offset >> (self.depth - other.depth)) == other.offset
    }

    /// Intersection of two dyadic intervals: the deeper one if nested, else empty.
    pub fn meet(&self, other: &DyadicInterval) -> Option<DyadicInterval> {
        if self.within(other) {
            Some(self.clone())
        } else if other.within(self) {
            Some(other.clone())
        } else {
            None
        }
    }

    /// Position of `self` inside `outer`, expressed as an interval of the unit.
    /// Requires `self.within(outer)`.
    pub fn relative_to(&self, outer: &DyadicInterval) -> DyadicInterval {
        let depth = self.depth - outer.depth;
        DyadicInterval { offset: &self.offset - (&outer.offset << depth), depth }
    }

    /// Image of the unit-relative interval `rel` inside `self`.
    pub fn embed(&self, rel: &DyadicInterval) -> DyadicInterval {
        DyadicInterval { offset: (&self.offset << rel.depth) | &rel.offset, depth: self.depth + rel.depth }
    }

    pub fn address(&self) -> BitString {
        BitString((0..self.depth).rev().map(|b| self.offset.bit(u64::from(b))).collect())
    }

    /// Lexicographic order of the binary addresses (a proper prefix sorts first).
    pub fn address_cmp(&self, other: &DyadicInterval) -> Ordering {
        let common = self.depth.min(other.depth);
        let a = &self.offset >> (self.depth - common);
        let b = &other.offset >> (other.depth - common);
        a.cmp(&b).then(self.depth.cmp(&other.depth))
    }

    pub fn from_address(bits: &BitString) -> Self {
        let offset = bits.0.iter().fold(BigUint::ZERO, |acc, &b| (acc << 1u32) | BigUint::from(u8::from(b)));
        DyadicInterval { offset, depth: bits.len() as u32 }
    }
}

/// A finite bitstring; bit `0` selects the lower half.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString(pub Vec<bool>);

impl BitString {
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(BitString)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn starts_with(&self, prefix: &BitString) -> bool {
        self.0.starts_with(&prefix.0)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BitString::parse(&s).ok_or_else(|| serde::de::Error::custom("bitstring must contain only 0 and 1"))
    }
}

/// Serialized as the binary address, e.g. `"01"` for `[1/4, 1/2)`.
impl Serialize for DyadicInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.address().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DyadicInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(DyadicInterval::from_address(&BitString::deserialize(d)?))
    }
}

/// A point prefix of the n-fold Cantor set: one bitstring per dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Address(pub Vec<BitString>);

impl Address {
    pub fn parse(coords: &[&str]) -> Option<Self> {
        coords.iter().map(|s| BitString::parse(s)).collect::<Option<Vec<_>>>().map(Address)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "\"{b}\"")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicBrick {
    pub cube: usize,
    pub intervals: Vec<DyadicInterval>,
}

impl DyadicBrick {
    pub fn whole(cube: usize, n: usize) -> Self {
        DyadicBrick { cube, intervals: vec![DyadicInterval::UNIT; n] }
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    /// Lower and upper halves across dimension `d` (1-based).
    pub fn halves(&self, d: usize) -> Result<(DyadicBrick, DyadicBrick), PatternError> {
        if d == 0 || d > self.dim() {
            return Err(PatternError::BadDimension { dim: d, n: self.dim() });
        }
        let iv = &self.intervals[d - 1];
        let mut lo = self.clone();
        let mut hi = self.clone();
        lo.intervals[d - 1] = iv.lower_half();
        hi.intervals[d - 1] = iv.upper_half();
        Ok((lo, hi))
    }

    pub fn within(&self, other: &DyadicBrick) -> bool {
        self.cube == other.cube && self.intervals.iter().zip(&other.intervals).all(|(a, b)| a.within(b))
    }

    /// Dyadic bricks are laminar per coordinate, so the meet is a brick or empty.
    pub fn meet(&self, other: &DyadicBrick) -> Option<DyadicBrick> {
        if self.cube != other.cube {
            return None;
        }
        let intervals =
            self.intervals.iter().zip(&other.intervals).map(|(a, b)| a.meet(b)).collect::<Option<Vec<_>>>()?;
        Some(DyadicBrick { cube: self.cube, intervals })
    }

    /// Affine transport: the part of `self` sitting at `self` inside `from`
    /// is moved to the corresponding part of `to`. Requires `self.within(from)`.
    pub fn transport(&self, from: &DyadicBrick, to: &DyadicBrick) -> DyadicBrick {
        let intervals = self
            .intervals
            .iter()
            .zip(&from.intervals)
            .zip(&to.intervals)
            .map(|((s, f), t)| t.embed(&s.relative_to(f)))
            .collect();
        DyadicBrick { cube: to.cube, intervals }
    }

    /// Volume as `2^-total_depth`; returned as the total depth.
    pub fn total_depth(&self) -> u32 {
        self.intervals.iter().map(|iv| iv.depth).sum()
    }

    pub fn address(&self) -> Address {
        Address(self.intervals.iter().map(|iv| iv.address()).collect())
    }

    /// Order by cube, then lexicographically by per-dimension addresses.
    pub fn address_cmp(&self, other: &DyadicBrick) -> Ordering {
        self.cube.cmp(&other.cube).then_with(|| {
            self.intervals
                .iter()
                .zip(&other.intervals)
                .map(|(a, b)| a.address_cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl fmt::Display for DyadicBrick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}:", self.cube)?;
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "[{}/2^{},{}/2^{})", iv.offset, iv.depth, &iv.offset + 1u32, iv.depth)?;
        }
        Ok(())
    }
}

/// A numbered partition of `S_0 ∪ … ∪ S_{cubes-1}` into dyadic bricks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Pattern {
    dim: usize,
    cubes: usize,
    bricks: Vec<DyadicBrick>,
}

#[derive(Deserialize)]
struct RawPattern {
    dim: usize,
    cubes: usize,
    bricks: Vec<DyadicBrick>,
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPattern::deserialize(d)?;
        Pattern::from_bricks(raw.dim, raw.cubes, raw.bricks).map_err(serde::de::Error::custom)
    }
}

impl Pattern {
    /// The base pattern: brick `j` is the whole cube `S_j`.
    pub fn base(dim: usize, cubes: usize) -> Result<Self, PatternError> {
        if dim == 0 {
            return Err(PatternError::ZeroDimension);
        }
        if cubes == 0 {
            return Err(PatternError::ZeroCubes);
        }
        Ok(Pattern { dim, cubes, bricks: (0..cubes).map(|c| DyadicBrick::whole(c, dim)).collect() })
    }

    /// Validates that `bricks` partition the cubes and that each cube's
    /// partition is reachable by halving cuts. From dimension 3 on, dyadic
    /// partitions without any halving cut exist.
    pub fn from_bricks(dim: usize, cubes: usize, bricks: Vec<DyadicBrick>) -> Result<Self, PatternError> {
        if dim == 0 {
            return Err(PatternError::ZeroDimension);
        }
        if cubes == 0 {
            return Err(PatternError::ZeroCubes);
        }
        for b in &bricks {
            if b.dim() != dim {
                return Err(PatternError::DimensionMismatch(b.dim(), dim));
            }
            if b.cube >= cubes {
                return Err(PatternError::NotPartition(format!("brick {b} lies outside the cubes")));
            }
            for iv in &b.intervals {
                DyadicInterval::new(iv.offset.clone(), iv.depth)?;
            }
        }
        let pattern = Pattern { dim, cubes, bricks };
        pattern.check_partition()?;
        for cube in 0..cubes {
            let members: Vec<usize> = (0..pattern.len()).filter(|&j| pattern.bricks[j].cube == cube).collect();
            if crate::forest::guillotine_tree(&pattern, &DyadicBrick::whole(cube, dim), &members).is_none() {
                return Err(PatternError::NotGuillotine(cube));
            }
        }
        Ok(pattern)
    }

    /// Checks pairwise disjointness and that volumes add up to the cube count.
    pub fn check_partition(&self) -> Result<(), PatternError> {
        if self.bricks.len() < self.cubes {
            return Err(PatternError::NotPartition("fewer bricks than cubes".into()));
        }
        for (a, ba) in self.bricks.iter().enumerate() {
            for bb in &self.bricks[a + 1..] {
                if ba.meet(bb).is_some() {
                    return Err(PatternError::NotPartition(format!("{ba} overlaps {bb}")));
                }
            }
        }
        let max = self.bricks.iter().map(|b| b.total_depth()).max().unwrap_or(0);
        let volume: BigUint = self.bricks.iter().map(|b| BigUint::one() << (max - b.total_depth())).sum();
        if volume != BigUint::from(self.cubes) << max {
            return Err(PatternError::NotPartition("volumes do not add up".into()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cubes(&self) -> usize {
        self.cubes
    }

    pub fn bricks(&self) -> &[DyadicBrick] {
        &self.bricks
    }

    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    fn check_dim(&self, d: usize) -> Result<(), PatternError> {
        if d == 0 || d > self.dim {
            Err(PatternError::BadDimension { dim: d, n: self.dim })
        } else {
            Ok(())
        }
    }

    /// Halve brick `i` across dimension `d`. The lower half keeps number `i`,
    /// the upper half becomes `i + 1`, later bricks shift up by one.
    pub fn cut(&self, i: usize, d: usize) -> Result<Pattern, PatternError> {
        let mut p = self.clone();
        p.cut_in_place(i, d)?;
        Ok(p)
    }

    pub fn cut_in_place(&mut self, i: usize, d: usize) -> Result<(), PatternError> {
        self.check_dim(d)?;
        if i >= self.bricks.len() {
            return Err(PatternError::IndexOutOfRange { index: i, len: self.bricks.len() });
        }
        let (lo, hi) = self.bricks[i].halves(d)?;
        self.bricks[i] = lo;
        self.bricks.insert(i + 1, hi);
        Ok(())
    }

    /// Exchange the numbers of bricks `i` and `i + 1`.
    pub fn swap(&self, i: usize) -> Result<Pattern, PatternError> {
        let mut p = self.clone();
        p.swap_in_place(i)?;
        Ok(p)
    }

    pub fn swap_in_place(&mut self, i: usize) -> Result<(), PatternError> {
        if i + 1 >= self.bricks.len() {
            return Err(PatternError::IndexOutOfRange { index: i + 1, len: self.bricks.len() });
        }
        self.bricks.swap(i, i + 1);
        Ok(())
    }

    /// Append whole cubes until the pattern covers `cubes` cubes. New cubes are
    /// numbered after every existing brick.
    pub fn extend_cubes(&mut self, cubes: usize) {
        while self.cubes < cubes {
            self.bricks.push(DyadicBrick::whole(self.cubes, self.dim));
            self.cubes += 1;
        }
    }

    /// Renumber: brick `j` of the result is brick `order[j]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Pattern {
        Pattern { dim: self.dim, cubes: self.cubes, bricks: order.iter().map(|&j| self.bricks[j].clone()).collect() }
    }

    /// Bricks sorted into canonical address order, forgetting the numbering.
    pub fn unnumbered(&self) -> Vec<DyadicBrick> {
        let mut v = self.bricks.clone();
        v.sort_by(|a, b| a.address_cmp(b));
        v
    }

    /// Index of the brick containing `b`, if any.
    pub fn containing(&self, b: &DyadicBrick) -> Option<usize> {
        self.bricks.iter().position(|c| b.within(c))
    }

    pub(crate) fn from_parts_unchecked(dim: usize, cubes: usize, bricks: Vec<DyadicBrick>) -> Pattern {
        Pattern { dim, cubes, bricks }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, b) in self.bricks.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "#{j}={b}")?;
        }
        Ok(())
    }
}

/// Result of [`common_refinement`]: the refined pattern plus, for every refined
/// brick, the number of its containing brick in each input.
#[derive(Debug, Clone)]
pub struct Refinement {
    pub pattern: Pattern,
    pub in_a: Vec<usize>,
    pub in_b: Vec<usize>,
}

/// All nonempty pairwise intersections of bricks of `a` and `b`, in address order.
pub fn common_refinement(a: &Pattern, b: &Pattern) -> Result<Refinement, PatternError> {
    if a.dim != b.dim {
        return Err(PatternError::DimensionMismatch(a.dim, b.dim));
    }
    if a.cubes != b.cubes {
        return Err(PatternError::CubeMismatch(a.cubes, b.cubes));
    }
    let mut cells = Vec::new();
    for cube in 0..a.cubes {
        let ra: Vec<usize> = (0..a.len()).filter(|&j| a.bricks[j].cube == cube).collect();
        let rb: Vec<usize> = (0..b.len()).filter(|&j| b.bricks[j].cube == cube).collect();
        refine_region(a, b, DyadicBrick::whole(cube, a.dim), ra, rb, &mut cells);
    }
    cells.sort_by(|x, y| x.0.address_cmp(&y.0));
    let (bricks, (in_a, in_b)): (Vec<_>, (Vec<_>, Vec<_>)) = cells.into_iter().map(|(m, x, y)| (m, (x, y))).unzip();
    Ok(Refinement { pattern: Pattern { dim: a.dim, cubes: a.cubes, bricks }, in_a, in_b })
}

/// Split `region` along halving cuts until one side has a single brick
/// there. `ra`, `rb` list the bricks meeting `region`.
fn refine_region(
    a: &Pattern,
    b: &Pattern,
    region: DyadicBrick,
    ra: Vec<usize>,
    rb: Vec<usize>,
    out: &mut Vec<(DyadicBrick, usize, usize)>,
) {
    if let [only] = ra[..] {
        out.extend(rb.iter().map(|&j| (b.bricks[j].meet(&region).expect("meets region"), only, j)));
        return;
    }
    if let [only] = rb[..] {
        out.extend(ra.iter().map(|&j| (a.bricks[j].meet(&region).expect("meets region"), j, only)));
        return;
    }
    // Bricks strictly inside `region` along `d` fall into one half.
    let side = |brick: &DyadicBrick, d: usize| {
        let (iv, r) = (&brick.intervals[d - 1], &region.intervals[d - 1]);
        (iv.depth > r.depth).then(|| iv.offset.bit(u64::from(iv.depth - r.depth - 1)))
    };
    let cut = (1..=a.dim)
        .find(|&d| ra.iter().all(|&j| side(&a.bricks[j], d).is_some()))
        .or_else(|| (1..=a.dim).find(|&d| rb.iter().all(|&j| side(&b.bricks[j], d).is_some())));
    let Some(d) = cut else {
        for &ia in &ra {
            for &ib in &rb {
                if let Some(m) = a.bricks[ia].meet(&b.bricks[ib]) {
                    out.push((m, ia, ib));
                }
            }
        }
        return;
    };
    let split = |p: &Pattern, members: &[usize]| {
        let (mut lo, mut hi) = (Vec::new(), Vec::new());
        for &j in members {
            match side(&p.bricks[j], d) {
                Some(false) => lo.push(j),
                Some(true) => hi.push(j),
                None => {
                    lo.push(j);
                    hi.push(j);
                }
            }
        }
        (lo, hi)
    };
    let (a_lo, a_hi) = split(a, &ra);
    let (b_lo, b_hi) = split(b, &rb);
    let (lo, hi) = region.halves(d).expect("valid dimension");
    refine_region(a, b, lo, a_lo, b_lo, out);
    refine_region(a, b, hi, a_hi, b_hi, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(o: u64, d: u32) -> DyadicInterval {
        DyadicInterval::new(o, d).unwrap()
    }

    fn brick(ivs: &[(u64, u32)]) -> DyadicBrick {
        DyadicBrick { cube: 0, intervals: ivs.iter().map(|&(o, d)| iv(o, d)).collect() }
    }

    #[test]
    fn base_patterns() {
        let p = Pattern::base(2, 1).unwrap();
        assert_eq!(p.bricks(), &[DyadicBrick::whole(0, 2)]);
        let p = Pattern::base(3, 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.bricks()[1].cube, 1);
        assert_eq!(Pattern::base(1, 1).unwrap().bricks()[0].intervals, vec![DyadicInterval::UNIT]);
        assert_eq!(Pattern::base(0, 1), Err(PatternError::ZeroDimension));
    }

    #[test]
    fn cut_numbering() {
        let p = Pattern::base(2, 1).unwrap().cut(0, 1).unwrap();
        assert_eq!(p.bricks()[0], brick(&[(0, 1), (0, 0)]));
        assert_eq!(p.bricks()[1], brick(&[(1, 1), (0, 0)]));
        let q = p.cut(1, 2).unwrap();
        assert_eq!(q.bricks()[1], brick(&[(1, 1), (0, 1)]));
        assert_eq!(q.bricks()[2], brick(&[(1, 1), (1, 1)]));
        let r = p.cut(0, 1).unwrap();
        let firsts: Vec<_> = r.bricks().iter().map(|b| b.intervals[0].clone()).collect();
        assert_eq!(firsts, vec![iv(0, 2), iv(1, 2), iv(1, 1)]);
        assert!(r.check_partition().is_ok());
    }

    #[test]
    fn cut_errors() {
        let p = Pattern::base(2, 1).unwrap();
        assert!(matches!(p.cut(1, 1), Err(PatternError::IndexOutOfRange { .. })));
        assert!(matches!(p.cut(0, 3), Err(PatternError::BadDimension { .. })));
        assert!(matches!(p.cut(0, 0), Err(PatternError::BadDimension { .. })));
        assert!(p.swap(0).is_err());
    }

    #[test]
    fn swaps() {
        let p = Pattern::base(2, 1).unwrap().cut(0, 1).unwrap();
        let s = p.swap(0).unwrap();
        assert_eq!(s.bricks()[0], p.bricks()[1]);
        assert_eq!(s.swap(0).unwrap(), p);
        let t = p.cut(1, 2).unwrap();
        let lhs = t.swap(0).unwrap().swap(1).unwrap().swap(0).unwrap();
        let rhs = t.swap(1).unwrap().swap(0).unwrap().swap(1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn refinement_of_halves() {
        let v = Pattern::base(2, 1).unwrap().cut(0, 1).unwrap();
        let h = Pattern::base(2, 1).unwrap().cut(0, 2).unwrap();
        let r = common_refinement(&v, &h).unwrap();
        assert_eq!(
            r.pattern.bricks(),
            &[brick(&[(0, 1), (0, 1)]), brick(&[(0, 1), (1, 1)]), brick(&[(1, 1), (0, 1)]), brick(&[(1, 1), (1, 1)]),]
        );
        assert_eq!(r.in_a, vec![0, 0, 1, 1]);
        assert_eq!(r.in_b, vec![0, 1, 0, 1]);
        assert!(r.pattern.check_partition().is_ok());
    }

    #[test]
    fn refinement_identities() {
        let p = Pattern::base(2, 1).unwrap().cut(0, 1).unwrap().cut(1, 2).unwrap().swap(0).unwrap();
        let r = common_refinement(&p, &p).unwrap();
        assert_eq!(r.in_a, r.in_b);
        assert_eq!(r.pattern.unnumbered(), p.unnumbered());
        let r = common_refinement(&p, &Pattern::base(2, 1).unwrap()).unwrap();
        assert_eq!(r.pattern.unnumbered(), p.unnumbered());
        assert!(r.in_b.iter().all(|&j| j == 0));
        let q = Pattern::base(3, 1).unwrap();
        assert!(matches!(common_refinement(&p, &q), Err(PatternError::DimensionMismatch(2, 3))));
    }

    #[test]
    fn from_bricks_validation() {
        let ok = Pattern::from_bricks(1, 1, vec![brick(&[(1, 1)]), brick(&[(0, 1)])]);
        assert!(ok.is_ok());
        let gap = Pattern::from_bricks(1, 1, vec![brick(&[(1, 1)])]);
        assert!(matches!(gap, Err(PatternError::NotPartition(_))));
        let overlap = Pattern::from_bricks(1, 1, vec![brick(&[(0, 0)]), brick(&[(0, 1)])]);
        assert!(matches!(overlap, Err(PatternError::NotPartition(_))));
    }

    #[test]
    fn pinwheel_is_rejected() {
        let pinwheel = vec![
            brick(&[(0, 0), (0, 1), (0, 1)]),
            brick(&[(0, 1), (0, 0), (1, 1)]),
            brick(&[(1, 1), (1, 1), (0, 0)]),
            brick(&[(0, 1), (1, 1), (0, 1)]),
            brick(&[(1, 1), (0, 1), (1, 1)]),
        ];
        assert_eq!(Pattern::from_bricks(3, 1, pinwheel), Err(PatternError::NotGuillotine(0)));
    }

    #[test]
    fn address_order() {
        assert_eq!(iv(0, 1).address_cmp(&iv(0, 2)), Ordering::Less);
        assert_eq!(iv(1, 2).address_cmp(&iv(1, 1)), Ordering::Less);
        assert_eq!(iv(2, 2).address().to_string(), "10");
        assert_eq!(DyadicInterval::new(2u32, 1), Err(PatternError::BadInterval { offset: 2u32.into(), depth: 1 }));
    }
}
