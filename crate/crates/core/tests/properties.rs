use proptest::prelude::*;
use thompson_nv::factor::factor_element;
use thompson_nv::group::{multiply, pi, pibar, word_evaluate, GroupLetter, GroupWord};
use thompson_nv::monoid::{apply_relation, normalize_word, Direction, MonoidRelation, MonoidWord};
use thompson_nv::pattern::BitString;
use thompson_nv::relations::GroupRelation;
use thompson_nv::{Address, DyadicInterval, Element};

const N: usize = 3;

fn letter() -> impl Strategy<Value = GroupLetter> {
    (0usize..4, 0usize..3, 1usize..=N, any::<bool>()).prop_map(|(k, i, d, inv)| match k {
        0 => GroupLetter::X { i, d, inv },
        1 => GroupLetter::C { i, d: d.max(2), inv },
        2 => pi(i),
        _ => pibar(i),
    })
}

fn word(max: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(letter(), 0..=max).prop_map(GroupWord::from)
}

fn eval(w: &GroupWord) -> Element {
    word_evaluate(w, N).unwrap()
}

fn address() -> impl Strategy<Value = Address> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), 24), N)
        .prop_map(|c| Address(c.into_iter().map(BitString).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn evaluation_is_a_homomorphism(u in word(6), v in word(6)) {
        prop_assert_eq!(eval(&u.concat(&v)), multiply(&eval(&u), &eval(&v)).unwrap());
    }

    #[test]
    fn group_laws(u in word(5), v in word(5), w in word(5)) {
        let (a, b, c) = (eval(&u), eval(&v), eval(&w));
        let left = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
        let right = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let id = Element::identity(N).unwrap();
        prop_assert_eq!(multiply(&a, &a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(multiply(&id, &a).unwrap(), a.clone());
        prop_assert_eq!(eval(&u.inverse()), a.inverse());
    }

    #[test]
    fn apply_respects_products(u in word(6), v in word(6), a in address()) {
        // In `g h`, h acts first.
        let (g, h) = (eval(&u), eval(&v));
        let gh = multiply(&g, &h).unwrap();
        if let (Ok(ha), Ok(direct)) = (h.apply(&a), gh.apply(&a)) {
            if let Ok(gha) = g.apply(&ha) {
                prop_assert_eq!(gha, direct);
            }
        }
    }

    #[test]
    fn reduction_and_refinement_keep_the_map(u in word(8), j in 0usize..4, d in 1usize..=N) {
        let g = eval(&u);
        prop_assert_eq!(g.reduced(), g.clone());
        prop_assert!(g.reduced().len() <= g.len());
        let j = j % g.len();
        prop_assert_eq!(g.refine(j, d).unwrap(), g);
    }

    #[test]
    fn relation_sides_are_interchangeable_in_context(
        u in word(4),
        v in word(4),
        pick in any::<prop::sample::Index>(),
    ) {
        let all = GroupRelation::all_instances(N, 4);
        let r = all[pick.index(all.len())];
        let (l, rr) = r.sides(N).unwrap();
        prop_assert_eq!(eval(&u.concat(&l).concat(&v)), eval(&u.concat(&rr).concat(&v)), "{:?}", r);
    }

    #[test]
    fn monoid_rewrites_keep_the_pattern(
        pick in any::<prop::sample::Index>(),
        prefix in prop::collection::vec((0usize..3, 1usize..=N), 0..4),
        forward in any::<bool>(),
    ) {
        let all = MonoidRelation::instances(N, 4);
        let rel = all[pick.index(all.len())];
        let (l, r) = rel.sides(N).unwrap();
        let mut letters: Vec<_> = prefix.iter().map(|&(i, d)| thompson_nv::monoid::Cut { i, d }).collect();
        let pos = letters.len();
        letters.extend(if forward { l } else { r });
        let w = MonoidWord::new(N, letters);
        let dir = if forward { Direction::Forward } else { Direction::Backward };
        let out = apply_relation(&w, rel, dir, pos).unwrap();
        prop_assert!(out.same_element(&w).unwrap());
        prop_assert_eq!(out.length(), w.length());
    }

    #[test]
    fn normalization_is_idempotent(cuts in prop::collection::vec((0usize..6, 1usize..=N), 0..10)) {
        let letters = cuts.iter().enumerate().map(|(k, &(i, d))| thompson_nv::monoid::Cut { i: i % (k + 1), d }).collect();
        let w = MonoidWord::new(N, letters);
        let once = normalize_word(&w).unwrap();
        prop_assert_eq!(normalize_word(&once).unwrap(), once.clone());
        prop_assert!(once.same_element(&w).unwrap());
    }

    #[test]
    fn factorization_round_trips(u in word(10)) {
        let g = eval(&u);
        let f = factor_element(&g);
        prop_assert!(f.well_shaped());
        prop_assert_eq!(word_evaluate(&f.word(), N).unwrap(), g);
    }

    #[test]
    fn element_json_round_trips(u in word(8)) {
        let g = eval(&u);
        let back: Element = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn interval_json_round_trips(bits in prop::collection::vec(any::<bool>(), 0..200)) {
        let iv = DyadicInterval::from_address(&BitString(bits));
        let s = serde_json::to_string(&iv).unwrap();
        let back: DyadicInterval = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, iv);
    }
}
