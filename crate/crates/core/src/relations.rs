//! Relation families (1)–(18) of nV as parameterized word pairs.

use serde::Serialize;

use crate::group::{c, pi, pibar, x, GroupError, GroupWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum GroupRelation {
    /// `X_{q,d} X_{m,d'} = X_{m,d'} X_{q+1,d}`, `m < q`.
    R1 { q: usize, m: usize, d: usize, d2: usize },
    /// `π_q X_{m,d} = X_{m,d} π_{q+1}`, `m < q`.
    R2 { q: usize, m: usize, d: usize },
    /// `π_q X_{q,d} = X_{q+1,d} π_q π_{q+1}`.
    R3 { q: usize, d: usize },
    /// `π_q X_{m,d} = X_{m,d} π_q`, `m > q + 1`.
    R4 { q: usize, m: usize, d: usize },
    /// `π̄_q X_{m,d} = X_{m,d} π̄_{q+1}`, `m < q`.
    R5 { q: usize, m: usize, d: usize },
    /// `π̄_m X_{m,1} = π_m π̄_{m+1}`.
    R6 { m: usize },
    /// `X_{m,d} X_{m+1,d'} X_{m,d'} = X_{m,d'} X_{m+1,d} X_{m,d} π_{m+1}`, `d ≠ d'`.
    R7 { m: usize, d: usize, d2: usize },
    /// `π_q π_m = π_m π_q`, `|m - q| ≥ 2`.
    R8 { q: usize, m: usize },
    /// `π_m π_{m+1} π_m = π_{m+1} π_m π_{m+1}`.
    R9 { m: usize },
    /// `π̄_q π_m = π_m π̄_q`, `q ≥ m + 2`.
    R10 { q: usize, m: usize },
    /// `π_m π̄_{m+1} π_m = π̄_{m+1} π_m π̄_{m+1}`.
    R11 { m: usize },
    /// `π_m² = 1`.
    R12 { m: usize },
    /// `π̄_m² = 1`.
    R13 { m: usize },
    /// `π̄_m X_{m,d} = C_{m+1,d} π_m π̄_{m+1}`, `d ≥ 2`.
    R14 { m: usize, d: usize },
    /// `C_{q,d} X_{m,d'} = X_{m,d'} C_{q+1,d}`, `m < q`, `d ≥ 2`.
    R15 { q: usize, m: usize, d: usize, d2: usize },
    /// `C_{m,d} X_{m,1} = X_{m,d} C_{m+2,d} π_{m+1}`, `d ≥ 2`.
    R16 { m: usize, d: usize },
    /// `π_q C_{m,d} = C_{m,d} π_q`, `m > q + 1`, `d ≥ 2`.
    R17 { q: usize, m: usize, d: usize },
    /// `C_{m,d} X_{m,d'} C_{m+2,d'} = C_{m,d'} X_{m,d} C_{m+2,d} π_{m+1}`, `1 < d' < d`.
    R18 { m: usize, d: usize, d2: usize },
}

use GroupRelation::*;

impl GroupRelation {
    pub fn family(&self) -> usize {
        match self {
            R1 { .. } => 1,
            R2 { .. } => 2,
            R3 { .. } => 3,
            R4 { .. } => 4,
            R5 { .. } => 5,
            R6 { .. } => 6,
            R7 { .. } => 7,
            R8 { .. } => 8,
            R9 { .. } => 9,
            R10 { .. } => 10,
            R11 { .. } => 11,
            R12 { .. } => 12,
            R13 { .. } => 13,
            R14 { .. } => 14,
            R15 { .. } => 15,
            R16 { .. } => 16,
            R17 { .. } => 17,
            R18 { .. } => 18,
        }
    }

    /// Named parameters, in declaration order.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            R1 { q, m, d, d2 } | R15 { q, m, d, d2 } => vec![("q", q), ("m", m), ("d", d), ("d'", d2)],
            R2 { q, m, d } | R4 { q, m, d } | R5 { q, m, d } | R17 { q, m, d } => {
                vec![("q", q), ("m", m), ("d", d)]
            }
            R3 { q, d } => vec![("q", q), ("d", d)],
            R6 { m } | R9 { m } | R11 { m } | R12 { m } | R13 { m } => vec![("m", m)],
            R7 { m, d, d2 } | R18 { m, d, d2 } => vec![("m", m), ("d", d), ("d'", d2)],
            R8 { q, m } | R10 { q, m } => vec![("q", q), ("m", m)],
            R14 { m, d } | R16 { m, d } => vec![("m", m), ("d", d)],
        }
    }

    fn side_condition(&self, n: usize) -> Result<(), String> {
        let dim = |d: usize| (1..=n).contains(&d);
        let cdim = |d: usize| (2..=n).contains(&d);
        let ok = |b: bool, why: &str| if b { Ok(()) } else { Err(why.to_string()) };
        if n == 0 {
            return Err("n must be at least 1".into());
        }
        match *self {
            R1 { q, m, d, d2 } => ok(m < q && dim(d) && dim(d2), "needs m < q and 1 ≤ d, d' ≤ n"),
            R2 { q, m, d } | R5 { q, m, d } => ok(m < q && dim(d), "needs m < q and 1 ≤ d ≤ n"),
            R3 { d, .. } => ok(dim(d), "needs 1 ≤ d ≤ n"),
            R4 { q, m, d } => ok(m > q + 1 && dim(d), "needs m > q + 1 and 1 ≤ d ≤ n"),
            R7 { d, d2, .. } => ok(d != d2 && dim(d) && dim(d2), "needs d ≠ d' in 1..=n"),
            R8 { q, m } => ok(q.abs_diff(m) >= 2, "needs |m - q| ≥ 2"),
            R10 { q, m } => ok(q >= m + 2, "needs q ≥ m + 2"),
            R14 { d, .. } | R16 { d, .. } => ok(cdim(d), "needs 2 ≤ d ≤ n"),
            R15 { q, m, d, d2 } => ok(m < q && cdim(d) && dim(d2), "needs m < q, 2 ≤ d ≤ n, 1 ≤ d' ≤ n"),
            R17 { q, m, d } => ok(m > q + 1 && cdim(d), "needs m > q + 1 and 2 ≤ d ≤ n"),
            R18 { d, d2, .. } => ok(1 < d2 && d2 < d && d <= n, "needs 1 < d' < d ≤ n"),
            R6 { .. } | R9 { .. } | R11 { .. } | R12 { .. } | R13 { .. } => Ok(()),
        }
    }

    /// The two sides as words over the generators.
    pub fn sides(&self, n: usize) -> Result<(GroupWord, GroupWord), GroupError> {
        self.side_condition(n).map_err(|why| GroupError::SideCondition { family: self.family().to_string(), why })?;
        let (l, r) = match *self {
            R1 { q, m, d, d2 } => (vec![x(q, d), x(m, d2)], vec![x(m, d2), x(q + 1, d)]),
            R2 { q, m, d } => (vec![pi(q), x(m, d)], vec![x(m, d), pi(q + 1)]),
            R3 { q, d } => (vec![pi(q), x(q, d)], vec![x(q + 1, d), pi(q), pi(q + 1)]),
            R4 { q, m, d } => (vec![pi(q), x(m, d)], vec![x(m, d), pi(q)]),
            R5 { q, m, d } => (vec![pibar(q), x(m, d)], vec![x(m, d), pibar(q + 1)]),
            R6 { m } => (vec![pibar(m), x(m, 1)], vec![pi(m), pibar(m + 1)]),
            R7 { m, d, d2 } => (vec![x(m, d), x(m + 1, d2), x(m, d2)], vec![x(m, d2), x(m + 1, d), x(m, d), pi(m + 1)]),
            R8 { q, m } => (vec![pi(q), pi(m)], vec![pi(m), pi(q)]),
            R9 { m } => (vec![pi(m), pi(m + 1), pi(m)], vec![pi(m + 1), pi(m), pi(m + 1)]),
            R10 { q, m } => (vec![pibar(q), pi(m)], vec![pi(m), pibar(q)]),
            R11 { m } => (vec![pi(m), pibar(m + 1), pi(m)], vec![pibar(m + 1), pi(m), pibar(m + 1)]),
            R12 { m } => (vec![pi(m), pi(m)], vec![]),
            R13 { m } => (vec![pibar(m), pibar(m)], vec![]),
            R14 { m, d } => (vec![pibar(m), x(m, d)], vec![c(m + 1, d), pi(m), pibar(m + 1)]),
            R15 { q, m, d, d2 } => (vec![c(q, d), x(m, d2)], vec![x(m, d2), c(q + 1, d)]),
            R16 { m, d } => (vec![c(m, d), x(m, 1)], vec![x(m, d), c(m + 2, d), pi(m + 1)]),
            R17 { q, m, d } => (vec![pi(q), c(m, d)], vec![c(m, d), pi(q)]),
            R18 { m, d, d2 } => {
                (vec![c(m, d), x(m, d2), c(m + 2, d2)], vec![c(m, d2), x(m, d), c(m + 2, d), pi(m + 1)])
            }
        };
        Ok((l.into(), r.into()))
    }

    /// Every admissible instance of `family` in dimension `n` with all
    /// indices at most `bound`.
    pub fn instances(family: usize, n: usize, bound: usize) -> Vec<GroupRelation> {
        let idx = 0..=bound;
        let dims = 1..=n;
        let mut out = Vec::new();
        let mut push = |r: GroupRelation| {
            if r.side_condition(n).is_ok() {
                out.push(r);
            }
        };
        match family {
            1 | 15 => {
                for q in idx.clone() {
                    for m in 0..q {
                        for d in dims.clone() {
                            for d2 in dims.clone() {
                                push(if family == 1 { R1 { q, m, d, d2 } } else { R15 { q, m, d, d2 } });
                            }
                        }
                    }
                }
            }
            2 | 4 | 5 | 17 => {
                for q in idx.clone() {
                    for m in idx.clone() {
                        for d in dims.clone() {
                            push(match family {
                                2 => R2 { q, m, d },
                                4 => R4 { q, m, d },
                                5 => R5 { q, m, d },
                                _ => R17 { q, m, d },
                            });
                        }
                    }
                }
            }
            3 => {
                for q in idx.clone() {
                    for d in dims.clone() {
                        push(R3 { q, d });
                    }
                }
            }
            6 | 9 | 11 | 12 | 13 => {
                for m in idx.clone() {
                    push(match family {
                        6 => R6 { m },
                        9 => R9 { m },
                        11 => R11 { m },
                        12 => R12 { m },
                        _ => R13 { m },
                    });
                }
            }
            7 | 18 => {
                for m in idx.clone() {
                    for d in dims.clone() {
                        for d2 in dims.clone() {
                            push(if family == 7 { R7 { m, d, d2 } } else { R18 { m, d, d2 } });
                        }
                    }
                }
            }
            8 | 10 => {
                for q in idx.clone() {
                    for m in idx.clone() {
                        push(if family == 8 { R8 { q, m } } else { R10 { q, m } });
                    }
                }
            }
            14 | 16 => {
                for m in idx.clone() {
                    for d in dims.clone() {
                        push(if family == 14 { R14 { m, d } } else { R16 { m, d } });
                    }
                }
            }
            _ => {}
        }
        out
    }

    /// All families at once.
    pub fn all_instances(n: usize, bound: usize) -> Vec<GroupRelation> {
        (1..=18).flat_map(|f| GroupRelation::instances(f, n, bound)).collect()
    }

    /// Whether both sides evaluate to the same element.
    pub fn holds(&self, n: usize) -> Result<bool, GroupError> {
        let (l, r) = self.sides(n)?;
        Ok(l.evaluate(n)? == r.evaluate(n)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{word_evaluate, GroupWord};

    #[test]
    fn examples() {
        let (l, r) = R3 { q: 1, d: 2 }.sides(2).unwrap();
        assert_eq!(l.to_string(), "pi1 X1.2");
        assert_eq!(r.to_string(), "X2.2 pi1 pi2");
        let (l, r) = R14 { m: 0, d: 2 }.sides(2).unwrap();
        assert_eq!(l.to_string(), "pibar0 X0.2");
        assert_eq!(r.to_string(), "C1.2 pi0 pibar1");
        assert!(R18 { m: 0, d: 2, d2: 2 }.sides(3).is_err());
        assert!(R18 { m: 0, d: 2, d2: 3 }.sides(3).is_err());
        assert!(R1 { q: 1, m: 1, d: 1, d2: 1 }.sides(2).is_err());
        assert!(GroupRelation::instances(18, 2, 6).is_empty());
        assert!(!GroupRelation::instances(18, 3, 6).is_empty());
    }

    #[test]
    fn named_instances_hold() {
        assert!(R16 { m: 0, d: 2 }.holds(2).unwrap());
        assert!(R7 { m: 0, d: 1, d2: 2 }.holds(2).unwrap());
    }

    // Reading words with the leftmost letter acting first breaks the
    // relations; the rightmost-first reading satisfies all of them.
    #[test]
    fn leftmost_first_reading_fails() {
        let reversed = |w: &GroupWord| GroupWord::new(w.letters.iter().rev().copied().collect());
        let failures = GroupRelation::all_instances(2, 2)
            .into_iter()
            .filter(|r| {
                let (l, rr) = r.sides(2).unwrap();
                word_evaluate(&reversed(&l), 2).unwrap() != word_evaluate(&reversed(&rr), 2).unwrap()
            })
            .count();
        assert!(failures > 0);
    }

    #[test]
    fn all_families_small() {
        for n in 1..=3 {
            for r in GroupRelation::all_instances(n, 3) {
                assert!(r.holds(n).unwrap(), "{r:?} n={n}");
            }
        }
    }
}
