use num_integer::Integer;
use supervogan::catalog::{build_simple_system, full_root_set};
use supervogan::dynkin::{affine_of, compute_marks, diagram_of};
use supervogan::oracle::check_kernel;
use supervogan::roots::Vector;
use supervogan::{FamilyId, Q};

fn expected_marks(f: &FamilyId) -> Option<Vec<u32>> {
    let twos = |k: u32| vec![2; k as usize];
    Some(match *f {
        FamilyId::A { m, n } => vec![1; (m + n + 2) as usize],
        FamilyId::B { m, n } => [vec![1], twos(m + n)].concat(),
        FamilyId::BZero { n } => [vec![1], twos(n)].concat(),
        FamilyId::D { m, n } => [vec![1], twos(m + n - 2), vec![1, 1]].concat(),
        FamilyId::C { n } => [vec![1, 1], twos(n - 2), vec![1]].concat(),
        FamilyId::D21 { .. } => vec![1, 2, 1, 1],
        FamilyId::F4 | FamilyId::G3 => return None,
    })
}

fn alphas() -> Vec<Q> {
    vec![
        Q::from(1),
        Q::from(2),
        Q::new(1, 2),
        Q::new(-3, 5),
        Q::from(7),
    ]
}

#[test]
fn labeled_mark_patterns_up_to_four() {
    let mut seen = 0;
    for f in FamilyId::sweep(4, &alphas()) {
        let Some(want) = expected_marks(&f) else {
            continue;
        };
        let ad = affine_of(&f).unwrap();
        assert_eq!(ad.marks, want, "{f}");
        seen += 1;
    }
    assert!(seen > 40);
}

#[test]
fn kernel_relation_from_scratch() {
    for f in FamilyId::sweep(4, &alphas()) {
        let ad = affine_of(&f).unwrap();
        let mut sum = Vector::zero();
        for (r, &a) in ad.diagram.roots.iter().zip(&ad.marks) {
            sum = &sum + &r.vector.scale(Q::from(a as i64));
        }
        assert!(sum.is_zero(), "{f}: {sum}");
        assert!(ad.marks.iter().all(|&a| a > 0));
        assert_eq!(ad.marks.iter().fold(0u32, |g, a| g.gcd(a)), 1, "{f}");
        assert_eq!(compute_marks(&ad).unwrap(), ad.marks);
        assert!(check_kernel(&ad), "{f}");
    }
}

#[test]
fn exceptional_marks() {
    assert_eq!(affine_of(&FamilyId::F4).unwrap().marks, [1, 2, 3, 2, 1]);
    assert_eq!(affine_of(&FamilyId::G3).unwrap().marks, [1, 2, 4, 2]);
}

/// Root counts against the dimensions of the even part and the odd module.
#[test]
fn root_counts() {
    for f in FamilyId::sweep(4, &[Q::from(2)]) {
        let (even, odd) = full_root_set(&f).unwrap();
        let (e, o) = match f {
            FamilyId::A { m, n } => {
                let (a, b) = (m + 1, n + 1);
                (a * (a - 1) + b * (b - 1), 2 * a * b)
            }
            FamilyId::B { m, n } => (2 * m * m + 2 * n * n, 2 * n * (2 * m + 1)),
            FamilyId::BZero { n } => (2 * n * n, 2 * n),
            FamilyId::C { n } => (2 * (n - 1) * (n - 1), 4 * (n - 1)),
            FamilyId::D { m, n } => (2 * m * (m - 1) + 2 * n * n, 4 * m * n),
            FamilyId::D21 { .. } => (6, 8),
            FamilyId::F4 => (20, 16),
            FamilyId::G3 => (14, 14),
        };
        assert_eq!((even.len() as u32, odd.len() as u32), (e, o), "{f}");
    }
}

#[test]
fn finite_diagrams_are_connected() {
    for f in FamilyId::sweep(4, &[Q::from(2)]) {
        let d = diagram_of(&build_simple_system(&f).unwrap());
        assert!(d.is_connected(), "{f}");
        assert!(affine_of(&f).unwrap().diagram.is_connected(), "{f}");
    }
}
