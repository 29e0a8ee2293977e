//! Formula syntax, provable equivalence in cone models, and orthoframe
//! closure structure.

use std::collections::BTreeMap;

use conelab::frame::{frame_from_ortholattice, FiniteOrthoframe, PointSet};
use conelab::lattice::catalogue;
use conelab::logic::{check_derivation, derive_bounded, eval_in_cone_model, Calculus, Formula, Sequent};
use conelab::random::{random_cone, substream};
use conelab::PolyCone;
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("A"), Just("B"), Just("C"), Just("p1")].prop_map(Formula::atom);
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.or(b)),
        ]
    })
}

fn frame(max: usize) -> impl Strategy<Value = FiniteOrthoframe> {
    (1usize..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            FiniteOrthoframe::new((0..n).map(|i| format!("x{i}")).collect(), &pairs).unwrap()
        })
    })
}

fn subset(s: PointSet, t: PointSet) -> bool {
    s & !t == 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn formula_round_trip(f in formula()) {
        prop_assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn sequent_round_trip(gamma in prop::collection::vec(formula(), 1..4), a in formula()) {
        let s = Sequent { gamma, succedent: a };
        prop_assert_eq!(Sequent::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn star_is_a_galois_connection(f in frame(7), y in any::<u64>(), z in any::<u64>()) {
        let all = f.all();
        let (y, z) = (y & all, z & all);
        prop_assert_eq!(subset(y, f.star(z)), subset(z, f.star(y)));
        if subset(y, z) {
            prop_assert!(subset(f.star(z), f.star(y)));
            prop_assert!(subset(f.closure(y), f.closure(z)));
        }
        let c = f.closure(y);
        prop_assert!(subset(y, c));
        prop_assert_eq!(f.closure(c), c);
        prop_assert!(f.is_closed(f.star(y)));
    }

    #[test]
    fn closed_sets_form_an_ortholattice(f in frame(6)) {
        let l = f.closed_set_lattice().unwrap();
        prop_assert_eq!(l.lattice.len(), l.sets.len());
        for &s in &l.sets {
            prop_assert!(f.is_closed(s));
        }
    }
}

#[test]
fn lattice_images_preserve_operations() {
    for name in ["O6", "MC8", "MO(2)", "boolean(3)", "product(O6,boolean(1))"] {
        let l = catalogue(name).unwrap();
        let (f, img) = frame_from_ortholattice(&l).unwrap();
        for a in l.elements() {
            assert_eq!(img[l.comp(a)], f.star(img[a]), "{name}");
            for b in l.elements() {
                assert_eq!(img[l.meet(a, b)], img[a] & img[b], "{name}");
                assert_eq!(img[l.join(a, b)], f.closure(img[a] | img[b]), "{name}");
                assert_eq!(l.leq(a, b), subset(img[a], img[b]), "{name}");
            }
        }
    }
}

const EQUIVALENT: &[(&str, &str)] = &[
    ("A & B", "B & A"),
    ("A | B", "B | A"),
    ("~~A", "A"),
    ("~(A & B)", "~A | ~B"),
    ("~(A | B)", "~A & ~B"),
    ("A & (A | B)", "A"),
    ("A | (A & B)", "A"),
    ("A & (B & C)", "(A & B) & C"),
    ("A & ~A", "B & ~B"),
];

/// Provably equivalent formulas denote the same cone.
#[test]
fn provable_equivalents_agree_on_cones() {
    let mut rng = substream(11, 0);
    for (i, (l, r)) in EQUIVALENT.iter().enumerate() {
        let (a, b) = (Formula::parse(l).unwrap(), Formula::parse(r).unwrap());
        for (x, y) in [(&a, &b), (&b, &a)] {
            let d = derive_bounded(&Sequent::new(x.clone(), y.clone()), Calculus::Omin, 16)
                .unwrap_or_else(|| panic!("no derivation of {x} |- {y}"));
            check_derivation(&d, Calculus::Omin).unwrap();
        }
        for k in 0..60 {
            let dim = 2 + k % 2;
            let assign: BTreeMap<String, PolyCone> = ["A", "B", "C"]
                .iter()
                .map(|n| (n.to_string(), random_cone(&mut rng, dim)))
                .collect();
            let va = eval_in_cone_model(&assign, &a).unwrap();
            let vb = eval_in_cone_model(&assign, &b).unwrap();
            assert!(va.same_set(&vb).unwrap(), "pair {i}: {l} vs {r}");
        }
    }
}
