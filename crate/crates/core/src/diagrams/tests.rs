use std::collections::BTreeMap;

use super::*;

fn braid(n: usize, w: &[i32]) -> LinkDiagram {
    BraidWord::new(n, w.to_vec()).unwrap().closure()
}

fn all(n: usize, p: CablePattern) -> BTreeMap<usize, CablePattern> {
    (0..n).map(|c| (c, p)).collect()
}

#[test]
fn parse_examples() {
    match parse_diagram("braid:2:[1,1,1]").unwrap() {
        ParsedInput::Braid(b) => assert_eq!((b.strands(), b.word()), (2, &[1, 1, 1][..])),
        other => panic!("{other:?}"),
    }
    let u = parse_diagram("O:1").unwrap().into_diagram();
    assert_eq!((u.crossing_count(), u.component_count()), (0, 1));
    assert!(matches!(parse_diagram("X[1,2,3,4]"), Err(DiagramError::Validation(_))));
    assert!(matches!(parse_diagram("X[1,2,3]"), Err(DiagramError::Parse { .. })));
    assert!(matches!(parse_diagram("braid:2:[2]"), Err(DiagramError::Validation(_))));
    assert!(matches!(parse_diagram("Y[1]"), Err(DiagramError::Parse { .. })));
}

#[test]
fn text_and_json_round_trip() {
    for d in [braid(2, &[1, 1, 1]), braid(3, &[1, -2, 1, -2]), LinkDiagram::unlink(2), braid(2, &[1, 1]).unoriented()] {
        let t = d.to_string();
        assert_eq!(parse_diagram(&t).unwrap().into_diagram(), d, "{t}");
        let j = diagram_to_json(&d);
        assert_eq!(diagram_from_json(&j).unwrap().into_diagram(), d, "{j}");
    }
    let b = diagram_from_json(r#"{"strands":2,"word":[1,1,1]}"#).unwrap();
    assert!(matches!(b, ParsedInput::Braid(_)));
}

#[test]
fn orientation_is_checked() {
    // edge 1 would enter the crossing twice
    assert!(parse_diagram("X[1,1,2,2];orient:[+]").is_ok());
    assert!(parse_diagram("X[1,2,2,1];orient:[+]").is_err());
}

#[test]
fn braid_closures() {
    let u = braid(1, &[]);
    assert_eq!((u.crossing_count(), u.component_count()), (0, 1));
    let t = braid(2, &[1, 1, 1]);
    assert_eq!(t.crossing_count(), 3);
    assert_eq!(t.component_count(), 1);
    let w = t.writhe_data().unwrap();
    assert_eq!((w.total, w.diagonal), (3, 3));
    let h = braid(2, &[1, 1]);
    let w = h.writhe_data().unwrap();
    assert_eq!(h.component_count(), 2);
    assert_eq!((w.total, w.diagonal), (2, 0));
    assert_eq!(w.linking, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(t.mirror().writhe().unwrap(), -3);
    assert_eq!(braid(3, &[1]).component_count(), 2);
}

#[test]
fn kinks() {
    let u1 = LinkDiagram::unknot().add_kinks(0, 1).unwrap();
    assert_eq!((u1.crossing_count(), u1.writhe().unwrap(), u1.component_count()), (1, 1, 1));
    let u3 = LinkDiagram::unknot().add_kinks(0, -3).unwrap();
    assert_eq!((u3.crossing_count(), u3.writhe().unwrap(), u3.component_count()), (3, -3, 1));
    let t = braid(2, &[1, 1, 1]);
    let t0 = t.add_kinks(0, -3).unwrap();
    assert_eq!((t0.crossing_count(), t0.writhe().unwrap(), t0.component_count()), (6, 0, 1));
    assert_eq!(t.add_kinks(0, 0).unwrap(), t);
    assert_eq!(t.add_kinks(1, 1), Err(DiagramError::UnknownComponent(1)));
    let un = LinkDiagram::unknot().unoriented().add_kinks(0, 2).unwrap();
    assert_eq!((un.crossing_count(), un.component_count()), (2, 1));
}

#[test]
fn mirror_union_sum() {
    let t = braid(2, &[1, 1, 1]);
    assert_eq!(t.mirror().mirror(), t);
    let uu = LinkDiagram::unknot().disjoint_union(&LinkDiagram::unknot()).unwrap();
    assert_eq!(uu.component_count(), 2);
    let granny = t.connected_sum(0, &t, 0).unwrap();
    assert_eq!(granny.component_count(), 1);
    assert_eq!(granny.writhe().unwrap(), 6);
    let h = braid(2, &[1, 1]);
    let s = h.connected_sum(1, &t, 0).unwrap();
    assert_eq!(s.component_count(), 2);
    assert_eq!(s.writhe().unwrap(), 5);
    assert!(matches!(t.connected_sum(0, &t.unoriented(), 0), Err(DiagramError::OrientationMismatch(_))));
    let with_loop = t.connected_sum(0, &LinkDiagram::unknot(), 0).unwrap();
    assert_eq!(with_loop, t);
}

#[test]
fn deletion() {
    let h = braid(2, &[1, 1]);
    let k = h.delete_components(&[1]).unwrap();
    assert_eq!((k.crossing_count(), k.free_loops()), (0, 1));
    let l = braid(3, &[1, 1, 2, 2]).delete_components(&[0]).unwrap();
    assert_eq!((l.crossing_count(), l.component_count()), (2, 2));
}

#[test]
fn cable_examples() {
    let u = LinkDiagram::unknot().unoriented();
    let c = u.cable2(&all(1, CablePattern::Parallel2), CableMode::Parallel).unwrap();
    assert_eq!((c.crossing_count(), c.component_count()), (0, 2));
    let c = u.cable2(&all(1, CablePattern::Twist(-1)), CableMode::Parallel).unwrap();
    assert_eq!((c.crossing_count(), c.component_count()), (1, 1));
    let t = braid(2, &[1, 1, 1]);
    let c = t.cable2(&all(1, CablePattern::Parallel2), CableMode::Antiparallel).unwrap();
    assert_eq!((c.crossing_count(), c.component_count(), c.writhe().unwrap()), (12, 2, 0));
    let c = t.cable2(&all(1, CablePattern::Parallel2), CableMode::Parallel).unwrap();
    assert_eq!((c.crossing_count(), c.component_count(), c.writhe().unwrap()), (12, 2, 12));
    let c = t.cable2(&all(1, CablePattern::Twist(3)), CableMode::Parallel).unwrap();
    assert_eq!((c.crossing_count(), c.component_count(), c.writhe().unwrap()), (15, 1, 15));
    let c = t.unoriented().cable2(&all(1, CablePattern::Turnback), CableMode::Parallel).unwrap();
    assert_eq!((c.crossing_count(), c.component_count()), (12, 1));
    assert_eq!(t.cable2(&BTreeMap::new(), CableMode::Parallel), Err(DiagramError::PatternMissing(0)));
    assert!(t.cable2(&all(1, CablePattern::Turnback), CableMode::Parallel).is_err());
    assert!(t.cable2(&all(1, CablePattern::Twist(1)), CableMode::Antiparallel).is_err());
    assert!(t.cable2(&all(1, CablePattern::Twist(2)), CableMode::Antiparallel).is_ok());
}

#[test]
fn cable_with_deleted_components() {
    let h = braid(2, &[1, 1]);
    let mut p = all(2, CablePattern::Parallel2);
    p.insert(1, CablePattern::Delete);
    let c = h.cable2(&p, CableMode::Antiparallel).unwrap();
    assert_eq!((c.crossing_count(), c.free_loops()), (0, 2));
}

#[test]
fn expansions() {
    let u = LinkDiagram::unknot();
    let e = homfly_adjoint_expansion(&u).unwrap();
    assert_eq!(e.len(), 2);
    assert_eq!(e[0], (-1, LinkDiagram::empty()));
    assert_eq!((e[1].0, e[1].1.component_count()), (1, 2));
    let signs: Vec<i64> = homfly_adjoint_expansion(&LinkDiagram::unlink(2)).unwrap().iter().map(|t| t.0).collect();
    assert_eq!(signs, vec![1, -1, -1, 1]);
    let e = homfly_adjoint_expansion(&LinkDiagram::empty()).unwrap();
    assert_eq!(e, vec![(1, LinkDiagram::empty())]);

    let k = kauffman_adjoint_expansion(&u).unwrap();
    assert_eq!(k.len(), 3);
    let sum = k.iter().fold(crate::rings::RatFunc::zero(), |acc, (c, _)| &acc + c);
    let s = crate::rings::RatFunc::var(crate::rings::Var::S);
    let a = crate::rings::RatFunc::var(crate::rings::Var::Alpha);
    let sinv = s.pow(-1).unwrap();
    let one = crate::rings::RatFunc::one();
    let inner = &(&s - &one) - &(&(&s - &sinv) / &(&(&a * &sinv) + &one)).unwrap();
    assert_eq!(sum, (&inner / &(&s + &sinv)).unwrap());
    assert_eq!(kauffman_adjoint_expansion(&braid(2, &[1, 1])).unwrap().len(), 9);
}
