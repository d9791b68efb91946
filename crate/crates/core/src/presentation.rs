//! Finite presentations of the monoid group and of nV, their semantic
//! verification, and abelianization by Smith normal form.
//!
//! Monoid-group relators are stored through the letter correspondence
//! `s_{i,d} ↔ X_{i,d}`, `σ_i ↔ π_i` and printed with monoid names; they are
//! verified as monoid equalities, never through nV.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::group::{conjugation_form, expand_c, pi, pibar, x, x_inv, GroupError, GroupLetter, GroupWord};
use crate::monoid::{MonoidLetter, MonoidRelation, MonoidWord};
use crate::relations::GroupRelation;
use crate::snf::{elementary_divisors, is_trivial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("dimension must be at least {min}, got {n}")]
    BadDimension { n: usize, min: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    /// The group of fractions of the pattern monoid.
    #[serde(rename = "monoid")]
    MonoidGroup,
    #[serde(rename = "nV")]
    NV,
    /// nV's table with dimensions up to a bound, read as a truncation of ωV.
    #[serde(rename = "omegaV")]
    OmegaV,
    /// Free abelian group on two letters; a negative control.
    #[serde(rename = "control")]
    Control,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::MonoidGroup => "monoid",
            GroupKind::NV => "nV",
            GroupKind::OmegaV => "omegaV",
            GroupKind::Control => "control",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub family: String,
    /// Monoid family this relator is the image of, for nV relators coming
    /// from the monoid group.
    pub image_of: Option<&'static str>,
    pub params: Vec<(&'static str, usize)>,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub kind: GroupKind,
    /// Dimension, or the dimension bound for ωV.
    pub n: usize,
    pub generators: Vec<GroupLetter>,
    pub relators: Vec<Relator>,
    pub warnings: Vec<String>,
}

fn rel(family: &str, params: Vec<(&'static str, usize)>, lhs: Vec<GroupLetter>, rhs: Vec<GroupLetter>) -> Relator {
    Relator { family: family.into(), image_of: None, params, lhs: lhs.into(), rhs: rhs.into() }
}

fn n1_warning(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["n = 1: every family needing a dimension d ≥ 2 is empty; counts are reported, not asserted".into()]
    } else {
        vec![]
    }
}

/// Relators of the monoid group, table order, tagged `M1`…`M6`.
fn monoid_relators(n: usize) -> Vec<Relator> {
    let mut out = Vec::new();
    let conj = |i: usize, k: usize, d: usize, d2: usize| {
        rel(
            "M1",
            vec![("i", i), ("k", k), ("d", d), ("d'", d2)],
            vec![x_inv(i, d), x(i + k, d2), x(i, d)],
            vec![x(i + k + 1, d2)],
        )
    };
    for k in 1..=2 {
        for d2 in 1..=n {
            out.push(conj(1, k, 1, d2));
        }
    }
    for i in 0..=1 {
        for k in 1..=2 {
            for d in 2..=n {
                for d2 in 1..=n {
                    out.push(conj(i, k, d, d2));
                }
            }
        }
    }
    for i in 0..=1 {
        out.push(rel("M2", vec![("i", i)], vec![pi(i), pi(i)], vec![]));
    }
    for i in 0..=1 {
        for k in 2..=3 {
            out.push(rel("M3", vec![("i", i), ("k", k)], vec![pi(i), pi(i + k)], vec![pi(i + k), pi(i)]));
        }
    }
    for i in 0..=1 {
        out.push(rel("M4", vec![("i", i)], vec![pi(i), pi(i + 1), pi(i)], vec![pi(i + 1), pi(i), pi(i + 1)]));
    }
    let m5a = |i: usize, k: usize, d: usize| {
        rel("M5a", vec![("i", i), ("k", k), ("d", d)], vec![pi(i + k), x(i, d)], vec![x(i, d), pi(i + k + 1)])
    };
    for k in 1..=2 {
        out.push(m5a(1, k, 1));
    }
    for i in 0..=1 {
        for k in 1..=2 {
            for d in 2..=n {
                out.push(m5a(i, k, d));
            }
        }
    }
    for i in 0..=1 {
        for d in 1..=n {
            out.push(rel("M5b", vec![("i", i), ("d", d)], vec![pi(i), x(i, d)], vec![x(i + 1, d), pi(i), pi(i + 1)]));
        }
    }
    for i in 0..=1 {
        for k in 2..=3 {
            for d in 1..=n {
                out.push(rel(
                    "M5d",
                    vec![("i", i), ("k", k), ("d", d)],
                    vec![pi(i), x(i + k, d)],
                    vec![x(i + k, d), pi(i)],
                ));
            }
        }
    }
    for i in 0..=1 {
        for d in 1..=n {
            for d2 in d + 1..=n {
                out.push(rel(
                    "M6",
                    vec![("i", i), ("d", d), ("d'", d2)],
                    vec![x(i, d), x(i + 1, d2), x(i, d2)],
                    vec![x(i, d2), x(i + 1, d), x(i, d), pi(i + 1)],
                ));
            }
        }
    }
    out
}

/// nV family number of the image of a monoid family.
fn image_family(tag: &str) -> &'static str {
    match tag {
        "M1" => "1",
        "M2" => "12",
        "M3" => "8",
        "M4" => "9",
        "M5a" => "2",
        "M5b" => "3",
        "M5d" => "4",
        "M6" => "7",
        other => unreachable!("no monoid family {other}"),
    }
}

/// The relators of nV beyond the monoid-group images, table order.
fn extra_relations(n: usize) -> Vec<GroupRelation> {
    use GroupRelation::*;
    let mut out = Vec::new();
    for k in 1..=2 {
        out.push(R5 { q: k + 1, m: 1, d: 1 });
    }
    for m in 0..=1 {
        for k in 1..=2 {
            for d in 2..=n {
                out.push(R5 { q: m + k, m, d });
            }
        }
    }
    for m in 0..=1 {
        for k in 2..=3 {
            out.push(R10 { q: m + k, m });
        }
    }
    out.extend((0..=1).map(|m| R11 { m }));
    out.extend((0..=1).map(|m| R13 { m }));
    out.extend((0..=1).map(|m| R6 { m }));
    for m in 0..=1 {
        for d in 2..=n {
            out.push(R14 { m, d });
        }
    }
    for k in 1..=2 {
        for d in 2..=n {
            out.push(R15 { q: k + 1, m: 1, d, d2: 1 });
        }
    }
    for m in 0..=1 {
        for k in 1..=2 {
            for d in 2..=n {
                for d2 in 2..=n {
                    out.push(R15 { q: m + k, m, d, d2 });
                }
            }
        }
    }
    for m in 0..=1 {
        for d in 2..=n {
            out.push(R16 { m, d });
        }
    }
    for m in 0..=1 {
        for k in 2..=3 {
            for d in 2..=n {
                out.push(R17 { q: m, m: m + k, d });
            }
        }
    }
    for m in 0..=1 {
        for d in 2..=n {
            for d2 in 2..d {
                out.push(R18 { m, d, d2 });
            }
        }
    }
    out
}

pub fn present_monoid_group(n: usize) -> Result<Presentation, PresentationError> {
    if n < 1 {
        return Err(PresentationError::BadDimension { n, min: 1 });
    }
    let mut generators: Vec<GroupLetter> = (0..=1).flat_map(|i| (1..=n).map(move |d| x(i, d))).collect();
    generators.extend([pi(0), pi(1)]);
    Ok(Presentation {
        kind: GroupKind::MonoidGroup,
        n,
        generators,
        relators: monoid_relators(n),
        warnings: n1_warning(n),
    })
}

#[allow(non_snake_case)]
pub fn present_nV(n: usize) -> Result<Presentation, PresentationError> {
    let mut p = present_monoid_group(n)?;
    p.kind = GroupKind::NV;
    p.generators.extend([pibar(0), pibar(1)]);
    for r in &mut p.relators {
        let tag = ["M1", "M2", "M3", "M4", "M5a", "M5b", "M5d", "M6"].into_iter().find(|&t| t == r.family);
        r.image_of = tag;
        r.family = image_family(&r.family).into();
    }
    for g in extra_relations(n) {
        let (lhs, rhs) = g.sides(n)?;
        p.relators.push(Relator { family: g.family().to_string(), image_of: None, params: g.params(), lhs, rhs });
    }
    Ok(p)
}

#[allow(non_snake_case)]
pub fn present_omegaV(d_max: usize) -> Result<Presentation, PresentationError> {
    if d_max < 2 {
        return Err(PresentationError::BadDimension { n: d_max, min: 2 });
    }
    let mut p = present_nV(d_max)?;
    p.kind = GroupKind::OmegaV;
    p.warnings.push(format!("truncation: dimension parameters range over 1..={d_max} only"));
    Ok(p)
}

/// Free abelian group on `X0.1`, `X1.1`: one commutator relator.
pub fn free_abelian_control() -> Presentation {
    Presentation {
        kind: GroupKind::Control,
        n: 1,
        generators: vec![x(0, 1), x(1, 1)],
        relators: vec![rel("commutator", vec![], vec![x(0, 1), x(1, 1)], vec![x(1, 1), x(0, 1)])],
        warnings: vec![],
    }
}

/// `2n + 2` and `5n² + 7n + 6`.
pub fn monoid_group_counts(n: usize) -> (usize, usize) {
    (2 * n + 2, 5 * n * n + 7 * n + 6)
}

/// `2n + 4` and `10n² + 10n + 10`.
pub fn nv_counts(n: usize) -> (usize, usize) {
    (2 * n + 4, 10 * n * n + 10 * n + 10)
}

/// Rewrite a word over the generators with indices 0 and 1 only: `C` by its
/// definition, higher indices by conjugating with `X_{0,1}`.
pub fn over_generators(w: &GroupWord) -> GroupWord {
    expand_c(w).letters.iter().flat_map(|&l| conjugation_form(l).letters).collect::<Vec<_>>().into()
}

impl Presentation {
    pub fn counts(&self) -> (usize, usize) {
        (self.generators.len(), self.relators.len())
    }

    /// The closed-form counts for this kind, if it has them.
    pub fn expected_counts(&self) -> Option<(usize, usize)> {
        match self.kind {
            GroupKind::MonoidGroup => Some(monoid_group_counts(self.n)),
            GroupKind::NV | GroupKind::OmegaV => Some(nv_counts(self.n)),
            GroupKind::Control => None,
        }
    }

    pub fn letter_text(&self, l: GroupLetter) -> String {
        match (self.kind, l) {
            (GroupKind::MonoidGroup, GroupLetter::X { i, d, inv }) => {
                format!("s{i}.{d}{}", if inv { "^-1" } else { "" })
            }
            (GroupKind::MonoidGroup, GroupLetter::Pi { i }) => format!("sig{i}"),
            _ => l.to_string(),
        }
    }

    pub fn word_text(&self, w: &GroupWord) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters.iter().map(|&l| self.letter_text(l)).collect::<Vec<_>>().join(" ")
    }

    /// Relator table, one line per relator with its family tag.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let (g, r) = self.counts();
        let _ = writeln!(s, "# {} n={} generators={} relators={}", self.kind.name(), self.n, g, r);
        for w in &self.warnings {
            let _ = writeln!(s, "# warning: {w}");
        }
        let gens: Vec<String> = self.generators.iter().map(|&l| self.letter_text(l)).collect();
        let _ = writeln!(s, "generators: {}", gens.join(" "));
        for rel in &self.relators {
            let params: Vec<String> = rel.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let tag = match rel.image_of {
                Some(m) => format!("({}) from {m}", rel.family),
                None => format!("({})", rel.family),
            };
            let _ = writeln!(
                s,
                "{tag:<14} {:<22} {} = {}",
                params.join(" "),
                self.word_text(&rel.lhs),
                self.word_text(&rel.rhs)
            );
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let relators: Vec<Value> = self
            .relators
            .iter()
            .map(|r| {
                let params: serde_json::Map<String, Value> =
                    r.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                let mut v = json!({
                    "family": r.family,
                    "params": params,
                    "lhs": self.word_text(&r.lhs),
                    "rhs": self.word_text(&r.rhs),
                });
                if let Some(m) = r.image_of {
                    v["image_of"] = json!(m);
                }
                if self.kind != GroupKind::MonoidGroup && r.lhs.c_count() + r.rhs.c_count() > 0 {
                    v["lhs_expanded"] = json!(self.word_text(&expand_c(&r.lhs)));
                    v["rhs_expanded"] = json!(self.word_text(&expand_c(&r.rhs)));
                }
                v
            })
            .collect();
        json!({
            "group": self.kind,
            "n": self.n,
            "warnings": self.warnings,
            "generators": self.generators.iter().map(|&l| self.letter_text(l)).collect::<Vec<_>>(),
            "relators": relators,
        })
    }

    /// GAP input defining the finitely presented group `G`, every relator
    /// rewritten over the generators.
    pub fn to_gap(&self) -> String {
        let name = |l: GroupLetter| self.letter_text(GroupLetter::inverse_free(l)).replace('.', "_");
        let gap_word = |w: &GroupWord| {
            if w.is_empty() {
                return "One(F)".to_string();
            }
            w.letters
                .iter()
                .map(|&l| if l.is_inverse() { format!("{}^-1", name(l)) } else { name(l) })
                .collect::<Vec<_>>()
                .join("*")
        };
        let mut s = String::new();
        let names: Vec<String> = self.generators.iter().map(|&l| format!("\"{}\"", name(l))).collect();
        let _ = writeln!(s, "F := FreeGroup({});;", names.join(", "));
        for (k, &l) in self.generators.iter().enumerate() {
            let _ = writeln!(s, "{} := F.{};;", name(l), k + 1);
        }
        let _ = writeln!(s, "rels := [");
        let rows: Vec<String> = self
            .relators
            .iter()
            .map(|r| format!("  ({}) / ({})", gap_word(&over_generators(&r.lhs)), gap_word(&over_generators(&r.rhs))))
            .collect();
        let _ = writeln!(s, "{}\n];;", rows.join(",\n"));
        let _ = writeln!(s, "G := F / rels;;");
        s
    }

    fn check_relator(&self, r: &Relator) -> Result<(), String> {
        match self.kind {
            GroupKind::MonoidGroup => {
                let (l, rr) = positive_form(&r.lhs, &r.rhs).ok_or("relator does not clear to positive words")?;
                let (l, rr) = (MonoidWord::new(self.n, l), MonoidWord::new(self.n, rr));
                match l.same_element(&rr) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err("sides give different patterns".into()),
                    Err(e) => Err(e.to_string()),
                }
            }
            _ => {
                let eq = |a: &GroupWord, b: &GroupWord| -> Result<bool, GroupError> {
                    Ok(a.evaluate(self.n)? == b.evaluate(self.n)?)
                };
                match eq(&r.lhs, &r.rhs) {
                    Ok(true) => {}
                    Ok(false) => return Err("sides evaluate to different elements".into()),
                    Err(e) => return Err(e.to_string()),
                }
                match eq(&over_generators(&r.lhs), &over_generators(&r.rhs)) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err("sides differ once rewritten over the generators".into()),
                    Err(e) => Err(e.to_string()),
                }
            }
        }
    }
}

/// Clear inverse letters at either end of `lhs` onto `rhs`; `None` if some
/// remain, or if `rhs` has any.
fn positive_form(lhs: &GroupWord, rhs: &GroupWord) -> Option<(Vec<MonoidLetter>, Vec<MonoidLetter>)> {
    let mut l = lhs.letters.clone();
    let mut r = rhs.letters.clone();
    while l.first().is_some_and(|g| g.is_inverse()) {
        r.insert(0, l.remove(0).inverse());
    }
    while l.last().is_some_and(|g| g.is_inverse()) {
        r.push(l.pop().unwrap().inverse());
    }
    let monoid = |w: &[GroupLetter]| -> Option<Vec<MonoidLetter>> {
        w.iter()
            .map(|&g| match g {
                GroupLetter::X { i, d, inv: false } => Some(MonoidLetter::Cut { i, d }),
                GroupLetter::Pi { i } => Some(MonoidLetter::Swap { i }),
                _ => None,
            })
            .collect()
    };
    Some((monoid(&l)?, monoid(&r)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub family: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check every relator semantically.
pub fn verify_presentation(p: &Presentation) -> VerificationReport {
    let failures = p
        .relators
        .par_iter()
        .enumerate()
        .filter_map(|(index, r)| {
            p.check_relator(r).err().map(|reason| Failure { index, family: r.family.clone(), reason })
        })
        .collect();
    VerificationReport { checked: p.relators.len(), failures }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCount {
    pub family: String,
    pub instances: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub n: usize,
    pub bound: usize,
    pub families: Vec<FamilyCount>,
    /// Up to a few failing instances, for display.
    pub examples: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failures == 0)
    }

    pub fn instances(&self, family: &str) -> usize {
        self.families.iter().find(|f| f.family == family).map_or(0, |f| f.instances)
    }
}

/// Exhaustive check of families (1)–(18) and (M1)–(M6) with every index at
/// most `bound` and every admissible dimension.
pub fn verify_families(n: usize, bound: usize) -> FamilyReport {
    let mut families = Vec::new();
    let mut examples = Vec::new();
    for f in 1..=18 {
        let inst = GroupRelation::instances(f, n, bound);
        let bad: Vec<String> =
            inst.par_iter().filter(|r| !matches!(r.holds(n), Ok(true))).map(|r| format!("{r:?}")).collect();
        families.push(FamilyCount { family: f.to_string(), instances: inst.len(), failures: bad.len() });
        examples.extend(bad.into_iter().take(3));
    }
    let monoid = MonoidRelation::instances(n, bound);
    for tag in ["M1", "M2", "M3", "M4", "M5a", "M5b", "M5c", "M5d", "M6"] {
        let inst: Vec<&MonoidRelation> = monoid.iter().filter(|r| r.tag() == tag).collect();
        let bad: Vec<String> = inst
            .par_iter()
            .filter(|r| {
                let ok = r.sides(n).and_then(|(l, rr)| MonoidWord::new(n, l).same_element(&MonoidWord::new(n, rr)));
                !matches!(ok, Ok(true))
            })
            .map(|r| r.to_string())
            .collect();
        families.push(FamilyCount { family: tag.into(), instances: inst.len(), failures: bad.len() });
        examples.extend(bad.into_iter().take(3));
    }
    FamilyReport { n, bound, families, examples }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianizationReport {
    pub rows: usize,
    pub cols: usize,
    #[serde(serialize_with = "as_strings")]
    pub divisors: Vec<BigInt>,
    pub trivial: bool,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

/// Exponent sums of the formal word `lhs · rhs⁻¹` over the generators, one row per relator.
pub fn relation_matrix(p: &Presentation) -> Vec<Vec<i64>> {
    let column = |l: GroupLetter| {
        let base = GroupLetter::inverse_free(l);
        p.generators.iter().position(|&g| g == base).expect("letters rewritten over generators")
    };
    p.relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; p.generators.len()];
            for (side, sign) in [(&r.lhs, 1), (&r.rhs, -1)] {
                for &l in &over_generators(side).letters {
                    row[column(l)] += if l.is_inverse() { -sign } else { sign };
                }
            }
            row
        })
        .collect()
}

pub fn abelianize(p: &Presentation) -> AbelianizationReport {
    let m = relation_matrix(p);
    let cols = p.generators.len();
    let divisors = elementary_divisors(&m, cols);
    AbelianizationReport { rows: m.len(), cols, trivial: is_trivial(&divisors), divisors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_formulas() {
        for n in 1..=6 {
            let m = present_monoid_group(n).unwrap();
            assert_eq!(m.counts(), monoid_group_counts(n), "monoid n={n}");
            let v = present_nV(n).unwrap();
            assert_eq!(v.counts(), nv_counts(n), "nV n={n}");
            assert_eq!(v.warnings.is_empty(), n > 1);
        }
        assert_eq!(present_nV(2).unwrap().counts(), (8, 70));
        assert_eq!(present_nV(3).unwrap().counts(), (10, 130));
        assert_eq!(present_nV(4).unwrap().counts(), (12, 210));
        assert_eq!(present_monoid_group(2).unwrap().counts(), (6, 40));
        assert_eq!(present_monoid_group(3).unwrap().counts(), (8, 72));
        assert!(present_nV(0).is_err());
        assert!(present_omegaV(1).is_err());
    }

    #[test]
    fn omega_truncation_matches_nv() {
        for d in 2..=3 {
            let o = present_omegaV(d).unwrap();
            let v = present_nV(d).unwrap();
            assert_eq!(o.relators, v.relators);
            assert_eq!(o.counts(), nv_counts(d));
        }
    }

    #[test]
    fn small_presentations_verify() {
        for p in [present_monoid_group(2).unwrap(), present_nV(2).unwrap()] {
            let report = verify_presentation(&p);
            assert!(report.passed(), "{:?}", report.failures);
        }
    }

    #[test]
    fn corrupted_relator_is_reported() {
        for mut p in [present_monoid_group(2).unwrap(), present_nV(2).unwrap()] {
            p.relators[3].rhs = p.relators[3].rhs.concat(&vec![pi(0)].into());
            let report = verify_presentation(&p);
            assert_eq!(report.failures.len(), 1);
            assert_eq!(report.failures[0].index, 3);
        }
    }

    #[test]
    fn positive_form_moves_inverses() {
        let (l, r) = positive_form(&vec![x_inv(0, 2), x(1, 1), x(0, 2)].into(), &vec![x(2, 1)].into()).unwrap();
        assert_eq!(l, vec![MonoidLetter::Cut { i: 1, d: 1 }, MonoidLetter::Cut { i: 0, d: 2 }]);
        assert_eq!(r, vec![MonoidLetter::Cut { i: 0, d: 2 }, MonoidLetter::Cut { i: 2, d: 1 }]);
        assert!(positive_form(&vec![x(0, 1), x_inv(1, 1), x(0, 1)].into(), &GroupWord::empty()).is_none());
    }

    #[test]
    fn abelianization() {
        let a = abelianize(&present_nV(2).unwrap());
        assert!(a.trivial);
        assert_eq!((a.rows, a.cols), (70, 8));
        let c = abelianize(&free_abelian_control());
        assert!(!c.trivial);
        assert_eq!(c.divisors, vec![BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn gap_and_json_render() {
        let p = present_nV(2).unwrap();
        let gap = p.to_gap();
        assert!(gap.starts_with("F := FreeGroup(\"X0_1\""));
        assert_eq!(gap.matches(") / (").count(), 70);
        let j = p.to_json();
        assert_eq!(j["generators"].as_array().unwrap().len(), 8);
        assert_eq!(j["relators"].as_array().unwrap().len(), 70);
        let m = present_monoid_group(2).unwrap();
        assert_eq!(m.word_text(&m.relators[0].lhs), "s1.1^-1 s2.1 s1.1");
    }

    #[test]
    fn families_small_bound() {
        let r = verify_families(3, 3);
        assert!(r.passed(), "{:?}", r.examples);
        assert!(r.instances("18") > 0);
        assert_eq!(verify_families(2, 3).instances("18"), 0);
    }
}
