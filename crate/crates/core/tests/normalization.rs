use ibh_core::foam_complex::{
    apply, normalize, normalize_by, raw_grade, rewrites, BottomCircle, FoamComponent,
    FoamGenerator, FoamSum, Piece, RawFoam, RawTerm, Rule, TopCircle,
};
use ibh_core::surface_diagram::{H1Class, Sign, Smoothing, State};
use proptest::prelude::*;

fn class() -> H1Class {
    H1Class(vec![1])
}

fn state() -> State {
    State(vec![Smoothing::Negative])
}

fn trivial(circle: usize) -> TopCircle {
    TopCircle::trivial(circle)
}

fn essential(circle: usize, orientation: Option<Sign>) -> TopCircle {
    TopCircle {
        circle,
        essential: Some(class()),
        orientation,
    }
}

fn bottom(sign: Sign) -> BottomCircle {
    BottomCircle {
        class: class(),
        sign,
    }
}

fn component(dots: u32, top: Vec<TopCircle>, bottom: Vec<BottomCircle>) -> FoamComponent {
    FoamComponent {
        genus: 0,
        dots,
        top,
        bottom,
    }
}

fn generator(pieces: Vec<Piece>) -> FoamGenerator {
    FoamGenerator {
        state: state(),
        pieces,
    }
}

#[test]
fn dotted_compressible_annulus_becomes_two_dotted_disks() {
    let c = component(1, vec![trivial(0), trivial(1)], vec![]);
    assert_eq!(c.euler(), 0);
    let out = normalize(&RawFoam::surface(state(), vec![c])).unwrap();
    assert_eq!(
        out,
        FoamSum::single(generator(vec![Piece::DottedDisk, Piece::DottedDisk]), 1)
    );
}

#[test]
fn unoriented_top_annulus_averages_orientations() {
    let c = component(0, vec![essential(0, None), essential(1, None)], vec![]);
    let out = normalize(&RawFoam::surface(state(), vec![c])).unwrap();
    let plus_minus = generator(vec![
        Piece::Annulus(Sign::Plus),
        Piece::Annulus(Sign::Minus),
    ]);
    let minus_plus = generator(vec![
        Piece::Annulus(Sign::Minus),
        Piece::Annulus(Sign::Plus),
    ]);
    assert_eq!(
        out,
        [(plus_minus, 1), (minus_plus, 1)].into_iter().collect()
    );
}

#[test]
fn dotted_incompressible_annulus_vanishes() {
    let c = component(1, vec![essential(0, None), essential(1, None)], vec![]);
    assert!(normalize(&RawFoam::surface(state(), vec![c]))
        .unwrap()
        .is_zero());
}

#[test]
fn bottom_annulus_is_removed() {
    let annulus = component(0, vec![], vec![bottom(Sign::Plus), bottom(Sign::Minus)]);
    let disk = component(0, vec![trivial(0)], vec![]);
    let out = normalize(&RawFoam::surface(state(), vec![annulus, disk])).unwrap();
    assert_eq!(out, FoamSum::single(generator(vec![Piece::Disk]), 1));
}

#[test]
fn negative_euler_pants_vanish() {
    let pants = component(
        0,
        vec![essential(0, Some(Sign::Plus))],
        vec![bottom(Sign::Plus), bottom(Sign::Minus)],
    );
    assert_eq!(pants.euler(), -1);
    assert!(normalize(&RawFoam::surface(state(), vec![pants]))
        .unwrap()
        .is_zero());
}

#[test]
fn closed_torus_is_an_unreachable_shape() {
    let torus = FoamComponent {
        genus: 1,
        dots: 0,
        top: vec![],
        bottom: vec![],
    };
    let err = normalize(&RawFoam::surface(state(), vec![torus])).unwrap_err();
    assert!(matches!(err, ibh_core::Error::UnreachableShape(_)));
}

#[test]
fn neck_cut_keeps_existing_dots_on_the_remainder() {
    let c = component(1, vec![trivial(0), trivial(1)], vec![]);
    let term = RawTerm {
        coefficient: 3,
        components: vec![c],
    };
    let rw = rewrites(&term.components)
        .into_iter()
        .find(|r| r.rule == Rule::NeckCut)
        .unwrap();
    let out = apply(&term, &rw);
    assert_eq!(out.len(), 2);
    let dots: Vec<Vec<u32>> = out
        .iter()
        .map(|t| t.components.iter().map(|c| c.dots).collect())
        .collect();
    assert_eq!(dots, vec![vec![1, 1], vec![0, 2]]);
    assert!(out.iter().all(|t| t.coefficient == 3));
}

/// Component shapes every rule sequence reduces to normal form, each
/// capping the next free top circle ids.
#[derive(Debug, Clone)]
enum Shape {
    Disk(u32),
    Annulus(Sign),
    Sphere(u32),
    Tube(u32),
    Pants(u32),
    AnnulusWithTrivialTop(Sign, u32),
    TopAnnulus(u32),
    BottomAnnulus,
    EssentialPants(u32),
}

fn shape() -> impl Strategy<Value = Shape> {
    let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
    prop_oneof![
        (0u32..3).prop_map(Shape::Disk),
        sign.clone().prop_map(Shape::Annulus),
        (0u32..3).prop_map(Shape::Sphere),
        (0u32..3).prop_map(Shape::Tube),
        (0u32..2).prop_map(Shape::Pants),
        (sign, 0u32..2).prop_map(|(s, d)| Shape::AnnulusWithTrivialTop(s, d)),
        (0u32..2).prop_map(Shape::TopAnnulus),
        Just(Shape::BottomAnnulus),
        (0u32..2).prop_map(Shape::EssentialPants),
    ]
}

fn build(shapes: &[Shape]) -> Vec<FoamComponent> {
    let mut next = 0;
    let mut take = || {
        next += 1;
        next - 1
    };
    shapes
        .iter()
        .map(|s| match *s {
            Shape::Disk(d) => component(d, vec![trivial(take())], vec![]),
            Shape::Annulus(sign) => {
                component(0, vec![essential(take(), Some(sign))], vec![bottom(sign)])
            }
            Shape::Sphere(d) => component(d, vec![], vec![]),
            Shape::Tube(d) => component(d, vec![trivial(take()), trivial(take())], vec![]),
            Shape::Pants(d) => component(
                d,
                vec![trivial(take()), trivial(take()), trivial(take())],
                vec![],
            ),
            Shape::AnnulusWithTrivialTop(sign, d) => component(
                d,
                vec![trivial(take()), essential(take(), Some(sign))],
                vec![bottom(sign)],
            ),
            Shape::TopAnnulus(d) => component(
                d,
                vec![essential(take(), None), essential(take(), None)],
                vec![],
            ),
            Shape::BottomAnnulus => {
                component(0, vec![], vec![bottom(Sign::Plus), bottom(Sign::Minus)])
            }
            Shape::EssentialPants(d) => component(
                d,
                vec![essential(take(), Some(Sign::Plus))],
                vec![bottom(Sign::Plus), bottom(Sign::Minus)],
            ),
        })
        .collect()
}

proptest! {
    #[test]
    fn rule_order_does_not_matter(shapes in prop::collection::vec(shape(), 1..5), picks in prop::collection::vec(any::<usize>(), 64)) {
        let raw = RawFoam::surface(state(), build(&shapes));
        let reference = normalize(&raw).unwrap();
        let mut k = 0;
        let other = normalize_by(&raw, |_| { k += 1; picks[k % picks.len()] }).unwrap();
        prop_assert_eq!(other, reference);
    }

    #[test]
    fn every_rewrite_preserves_the_grading(shapes in prop::collection::vec(shape(), 1..5)) {
        let components = build(&shapes);
        let mut pending = vec![RawTerm { coefficient: 1, components }];
        while let Some(term) = pending.pop() {
            let before = raw_grade(&state(), &term.components);
            let options = rewrites(&term.components);
            for (k, rw) in options.iter().enumerate() {
                let produced = apply(&term, rw);
                for t in &produced {
                    prop_assert_eq!(&raw_grade(&state(), &t.components), &before, "{:?}", rw.rule);
                }
                if k == 0 {
                    pending.extend(produced);
                }
            }
        }
    }

    #[test]
    fn normal_forms_cap_every_top_circle(shapes in prop::collection::vec(shape(), 1..5)) {
        let components = build(&shapes);
        let circles: usize = components.iter().map(|c| c.top.len()).sum();
        let out = normalize(&RawFoam::surface(state(), components)).unwrap();
        for (g, c) in out.iter() {
            prop_assert!(c != 0);
            prop_assert_eq!(g.pieces.len(), circles);
        }
    }
}
