//! The acceptance suite: one [`Check`] per criterion, each self-timed.
//! Random inputs come from a seeded ChaCha generator.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::element::Element;
use crate::factor::factor_element;
use crate::group::{c, pi, pibar, sigma_letter, word_evaluate, GroupLetter, GroupWord};
use crate::monoid::{normalize_word, Cut, MonoidLetter, MonoidWord, Swap};
use crate::pattern::Pattern;
use crate::presentation::{
    abelianize, free_abelian_control, monoid_group_counts, nv_counts, present_monoid_group, present_nV,
    verify_families, verify_presentation,
};
use crate::trunk::{descend_trunk, lower_trunk_complexity, normalize_off_trunk, primary_tree, staircase, tree_word};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {:<24} {:>8.2}s  {}", self.name, self.seconds, self.detail)
    }
}

fn timed(name: &'static str, limit: Option<Duration>, body: impl FnOnce() -> Result<String, String>) -> Check {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; over the {}s limit", limit.as_secs());
        }
    }
    Check { name, passed, detail, seconds: elapsed.as_secs_f64() }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A letter of nV with index at most `imax`, any kind, either sign.
pub fn random_letter(rng: &mut impl Rng, n: usize, imax: usize) -> GroupLetter {
    let i = rng.gen_range(0..=imax);
    let inv = rng.gen_bool(0.5);
    match rng.gen_range(0..4) {
        1 if n >= 2 => GroupLetter::C { i, d: rng.gen_range(2..=n), inv },
        0 | 1 => GroupLetter::X { i, d: rng.gen_range(1..=n), inv },
        2 => pi(i),
        _ => pibar(i),
    }
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize, imax: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, n, imax)).collect::<Vec<_>>().into()
}

/// A `C*X*` word with increasing C indices.
pub fn random_cx_word(rng: &mut impl Rng, n: usize) -> GroupWord {
    let mut letters = Vec::new();
    let mut i = 0;
    if n >= 2 {
        for _ in 0..rng.gen_range(0..4) {
            i += rng.gen_range(0..3);
            letters.push(c(i, rng.gen_range(2..=n)));
            i += 1;
        }
    }
    for _ in 0..rng.gen_range(0..7) {
        letters.push(GroupLetter::X { i: rng.gen_range(0..5), d: rng.gen_range(1..=n), inv: false });
    }
    letters.into()
}

/// A cut-only monoid word on one cube.
pub fn random_cut_word(rng: &mut impl Rng, n: usize, max_len: usize) -> MonoidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|k| Cut { i: rng.gen_range(0..=k), d: rng.gen_range(1..=n) }).collect();
    MonoidWord::new(n, letters)
}

/// Random (M1) and (M6) rewrites; the pattern is unchanged.
pub fn scramble(w: &MonoidWord, rng: &mut impl Rng, steps: usize) -> MonoidWord {
    let mut l = w.letters.clone();
    for _ in 0..steps {
        if l.len() < 2 {
            break;
        }
        let p = rng.gen_range(0..l.len() - 1);
        match (l[p], l[p + 1], l.get(p + 2).copied()) {
            // s_{j,d'} s_{i,d} → s_{i,d} s_{j+1,d'}
            (Cut { i: j, d: d2 }, Cut { i, d }, _) if i < j => {
                l.splice(p..p + 2, [Cut { i, d }, Cut { i: j + 1, d: d2 }]);
            }
            // and back
            (Cut { i, d }, Cut { i: j, d: d2 }, _) if j > i + 1 => {
                l.splice(p..p + 2, [Cut { i: j - 1, d: d2 }, Cut { i, d }]);
            }
            (Cut { i, d }, Cut { i: i1, d: d2 }, Some(Cut { i: i2, d: d3 }))
                if i1 == i + 1 && i2 == i && d3 == d2 && d != d2 =>
            {
                l.splice(p..p + 3, [Cut { i, d: d2 }, Cut { i: i + 1, d }, Cut { i, d }, Swap { i: i + 1 }]);
            }
            _ => {}
        }
    }
    MonoidWord::new(w.dim, l)
}

pub fn presentation_counts() -> Check {
    timed("presentation counts", None, || {
        let mut worst = Duration::ZERO;
        for n in 2..=6 {
            let t = Instant::now();
            let m = present_monoid_group(n).map_err(|e| e.to_string())?;
            worst = worst.max(t.elapsed());
            let t = Instant::now();
            let v = present_nV(n).map_err(|e| e.to_string())?;
            worst = worst.max(t.elapsed());
            ensure(m.counts() == monoid_group_counts(n), || format!("monoid group n={n}: {:?}", m.counts()))?;
            ensure(v.counts() == nv_counts(n), || format!("nV n={n}: {:?}", v.counts()))?;
        }
        ensure(worst < Duration::from_secs(1), || format!("slowest emission {worst:?}"))?;
        Ok(format!("n=2..6 exact, slowest emission {:.1}ms", worst.as_secs_f64() * 1e3))
    })
}

pub fn relator_soundness() -> Check {
    timed("relator soundness", Some(Duration::from_secs(30)), || {
        let mut total = 0;
        for n in 2..=4 {
            for p in [present_monoid_group(n), present_nV(n)] {
                let p = p.map_err(|e| e.to_string())?;
                let r = verify_presentation(&p);
                ensure(r.passed(), || format!("{:?} n={n}: {:?}", p.kind, r.failures))?;
                total += r.checked;
            }
        }
        Ok(format!("{total} relators, n=2..4"))
    })
}

pub fn family_soundness() -> Check {
    timed("family soundness", Some(Duration::from_secs(300)), || {
        let mut total = 0;
        for n in 1..=4 {
            let r = verify_families(n, 6);
            ensure(r.passed(), || format!("n={n}: {:?}", r.examples))?;
            total += r.families.iter().map(|f| f.instances).sum::<usize>();
            if n == 2 {
                ensure(r.instances("18") == 0, || "(18) not vacuous at n=2".into())?;
            }
            if n == 3 {
                ensure(r.instances("18") > 0, || "(18) vacuous at n=3".into())?;
            }
        }
        Ok(format!("{total} instances, indices ≤ 6, n ≤ 4"))
    })
}

/// All cut-only words of exactly `len` letters on one cube.
fn cut_words(n: usize, len: usize) -> Vec<MonoidWord> {
    let mut words = vec![vec![]];
    for k in 0..len {
        words = words
            .into_iter()
            .flat_map(|w: Vec<MonoidLetter>| {
                (0..=k).flat_map(move |i| (1..=n).map(move |d| (i, d))).map(move |(i, d)| {
                    let mut w = w.clone();
                    w.push(Cut { i, d });
                    w
                })
            })
            .collect();
    }
    words.into_iter().map(|l| MonoidWord::new(n, l)).collect()
}

fn normal_form_of(w: &MonoidWord) -> Result<MonoidWord, String> {
    let nw = normalize_word(w).map_err(|e| e.to_string())?;
    let cubes = w.cubes_needed().max(nw.cubes_needed());
    let same = nw.pattern_on(cubes).map_err(|e| e.to_string())? == w.pattern_on(cubes).map_err(|e| e.to_string())?;
    ensure(same, || format!("normalize changed the pattern of {w}"))?;
    ensure(nw.length() == w.length(), || format!("normalize changed the length of {w}"))?;
    ensure(nw.forest().map_err(|e| e.to_string())?.is_normalized(), || format!("{nw} is not normalized"))?;
    Ok(nw)
}

pub fn normal_form_uniqueness(seed: u64) -> Check {
    timed("normal-form uniqueness", None, || {
        let mut exhaustive = 0;
        for n in 1..=3 {
            let mut classes: HashMap<Pattern, MonoidWord> = HashMap::new();
            for len in 0..=4 {
                for w in cut_words(n, len) {
                    let nw = normal_form_of(&w)?;
                    let key = w.pattern().map_err(|e| e.to_string())?;
                    let forest = nw.forest().map_err(|e| e.to_string())?;
                    if let Some(rep) = classes.get(&key) {
                        ensure(rep.forest().map_err(|e| e.to_string())? == forest, || {
                            format!("{w} and {rep} normalize apart")
                        })?;
                    } else {
                        classes.insert(key, nw);
                    }
                    exhaustive += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inputs: Vec<(MonoidWord, MonoidWord)> = (0..10_000)
            .map(|_| {
                let n = rng.gen_range(1..=3);
                let w = random_cut_word(&mut rng, n, 12);
                let v = scramble(&w, &mut rng, 40);
                (w, v)
            })
            .collect();
        inputs.par_iter().try_for_each(|(w, v)| {
            let (a, b) = (normal_form_of(w)?, normal_form_of(v)?);
            ensure(a.forest().ok() == b.forest().ok(), || format!("{w} and {v} normalize apart"))
        })?;
        Ok(format!("{exhaustive} exhaustive words (length ≤ 4, n ≤ 3), 10000 random pairs (length ≤ 12)"))
    })
}

pub fn complexity_descent(seed: u64) -> Check {
    timed("complexity descent", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Only inputs whose primary tree has a non-normalized trunk vertex.
        let mut inputs = Vec::new();
        while inputs.len() < 1000 {
            let n = rng.gen_range(2..=3);
            let Ok(t) = primary_tree(&random_cx_word(&mut rng, n)) else { continue };
            let w = tree_word(&normalize_off_trunk(&t));
            if matches!(lower_trunk_complexity(&w), Ok(Some(_))) {
                inputs.push((n, w));
            }
        }
        let steps: usize = inputs
            .par_iter()
            .map(|(n, w)| -> Result<usize, String> {
                let n = *n;
                let err = |e: crate::group::GroupError| e.to_string();
                let mut cur = w.clone();
                let mut steps = 0;
                while let Some(step) = lower_trunk_complexity(&cur).map_err(err)? {
                    ensure(step.after < step.before, || format!("{cur}: {} → {}", step.before, step.after))?;
                    let same = word_evaluate(&step.word(), n).map_err(err)? == word_evaluate(&cur, n).map_err(err)?;
                    ensure(same, || format!("step on {cur} changed the element"))?;
                    cur = tree_word(&normalize_off_trunk(&primary_tree(&step.body).map_err(err)?));
                    steps += 1;
                    ensure(steps < 10_000, || format!("{w}: no termination"))?;
                }
                let trunk_ok = primary_tree(&cur).map_err(err)?.is_normalized();
                ensure(trunk_ok, || format!("{w} ends at {cur}, not normalized"))?;
                let (body, perm, _) = descend_trunk(w).map_err(err)?;
                let same = word_evaluate(&body.concat(&perm), n).map_err(err)? == word_evaluate(w, n).map_err(err)?;
                ensure(same, || format!("descent changed the element of {w}"))?;
                Ok(steps)
            })
            .sum::<Result<usize, String>>()?;
        Ok(format!("1000 inputs with a non-normalized trunk, {steps} strict descent steps"))
    })
}

pub fn factorization(seed: u64) -> Check {
    timed("factorization", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inputs: Vec<(usize, GroupWord)> = (0..10_000)
            .map(|_| {
                let n = rng.gen_range(1..=3);
                (n, random_word(&mut rng, n, 15, 3))
            })
            .collect();
        let max_len = inputs
            .par_iter()
            .map(|(n, w)| -> Result<usize, String> {
                let g = w.evaluate(*n).map_err(|e| e.to_string())?;
                let f = factor_element(&g);
                ensure(f.well_shaped(), || format!("{w}: badly shaped {}", f.word()))?;
                let back = word_evaluate(&f.word(), *n).map_err(|e| e.to_string())?;
                ensure(back == g, || format!("{w}: factor does not evaluate back"))?;
                Ok(f.word().len())
            })
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))?;
        Ok(format!("10000 words (length ≤ 15, n ≤ 3), longest factor word {max_len} letters"))
    })
}

pub fn abelianization() -> Check {
    timed("abelianization", Some(Duration::from_secs(10)), || {
        for n in 2..=5 {
            let p = present_nV(n).map_err(|e| e.to_string())?;
            let a = abelianize(&p);
            ensure(a.trivial && a.divisors.len() == p.generators.len(), || {
                format!("n={n}: divisors {:?}", a.divisors)
            })?;
        }
        let control = abelianize(&free_abelian_control());
        ensure(!control.trivial, || "control came out trivial".into())?;
        let zeros = control.divisors.iter().all(|d| d == &0.into());
        ensure(zeros, || format!("control divisors {:?}", control.divisors))?;
        Ok("n=2..5 all divisors 1; control (0, 0)".into())
    })
}

/// `(s^p σ_j, s^p)` against the letter it converts to, `0 ≤ j < p ≤ 8`.
pub fn conversion_oracle() -> Check {
    timed("conversion oracle", None, || {
        let mut count = 0;
        for n in 1..=2 {
            for p in 1..=8 {
                let stairs = staircase(p, n).map_err(|e| e.to_string())?;
                for j in 0..p {
                    let range = stairs.range().swap(j).map_err(|e| e.to_string())?;
                    let direct = Element::new(stairs.domain().clone(), range).map_err(|e| e.to_string())?;
                    let letter = sigma_letter(j, p);
                    let via = word_evaluate(&vec![letter].into(), n).map_err(|e| e.to_string())?;
                    ensure(direct == via, || format!("j={j}, p={p}: not {letter}"))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} cases, 0 ≤ j < p ≤ 8, n = 1, 2"))
    })
}

/// Every criterion, in order.
pub fn run_all(seed: u64) -> Vec<Check> {
    vec![
        presentation_counts(),
        relator_soundness(),
        family_soundness(),
        normal_form_uniqueness(seed),
        complexity_descent(seed),
        factorization(seed),
        abelianization(),
        conversion_oracle(),
    ]
}
