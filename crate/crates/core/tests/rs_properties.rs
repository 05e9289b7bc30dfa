use proptest::prelude::*;
use tableau_sign::harness::Harness;
use tableau_sign::rs::{extract, insert, rs, rs_inverse};
use tableau_sign::shape::partitions;
use tableau_sign::tableau::enumerate_syt;
use tableau_sign::{Permutation, Shape, Sign, Tableau};

/// SYTs with every entry doubled, so odd values reach every relative position.
fn doubled_tableaux(max_n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let doubled: Vec<u32> = (1..=n as u32).map(|x| 2 * x).collect();
        for s in partitions(n) {
            out.extend(enumerate_syt(&s).map(|t| t.relabel(&doubled)));
        }
    }
    out
}

#[test]
fn insertion_sign_factor() {
    for t in doubled_tableaux(8) {
        for a in (1..=2 * t.size() as u32 + 1).step_by(2) {
            let out = insert(&t, a).unwrap();
            assert_eq!(out.result.shape().size(), t.size() + 1);
            assert_eq!(out.result.shape().without_corner(out.new_cell).as_ref(), Some(t.shape()));
            assert_eq!(out.result.reading_word().sign(), out.sign_factor() * t.reading_word().sign());
        }
    }
}

#[test]
fn extraction_inverts_insertion() {
    for t in doubled_tableaux(8) {
        for a in (1..=2 * t.size() as u32 + 1).step_by(2) {
            let out = insert(&t, a).unwrap();
            assert_eq!(extract(&out.result, out.new_cell).unwrap(), (t.clone(), a));
        }
    }
}

#[test]
fn second_insertion_lands_right_iff_larger() {
    for t in doubled_tableaux(7) {
        let values: Vec<u32> = (1..=2 * t.size() as u32 + 1).step_by(2).collect();
        for &a in &values {
            let first = insert(&t, a).unwrap();
            for &b in values.iter().filter(|&&b| b != a) {
                let second = insert(&first.result, b).unwrap();
                assert_eq!(second.new_cell.col > first.new_cell.col, a < b, "T={t:?} a={a} b={b}");
            }
        }
    }
}

#[test]
fn sign_transfer_exhaustive() {
    for n in 0..=7 {
        for pi in Permutation::all(n) {
            let (p, q) = rs(&pi);
            assert_eq!(p.shape(), q.shape());
            assert!(p.is_standard() && q.is_standard());
            let predicted = Sign::from_parity(p.shape().v_count()) * p.sign() * q.sign();
            assert_eq!(pi.sign(), predicted, "{pi}");
        }
    }
}

#[test]
fn round_trip_exhaustive() {
    for n in 0..=6 {
        for pi in Permutation::all(n) {
            let (p, q) = rs(&pi);
            assert_eq!(rs_inverse(&p, &q).unwrap(), pi);
        }
    }
}

#[test]
fn involutions_have_symmetric_images() {
    for n in 0..=8 {
        for pi in Permutation::all(n).filter(Permutation::is_involution) {
            let (p, q) = rs(&pi);
            assert_eq!(p, q, "{pi}");
            let odd_columns = p.shape().conjugate().parts().iter().filter(|&&c| c % 2 == 1).count();
            assert_eq!(pi.fixed_points(), odd_columns, "{pi}");
            assert_eq!(pi.sign(), Sign::from_parity(p.shape().v_count()));
        }
    }
}

#[test]
fn word_insertion_bijection() {
    let h = Harness::new();
    for n in 0..=8 {
        for s in partitions(n) {
            for k in 0..=4 {
                let r = h.verify_word_insertion(&s, k).unwrap();
                assert!(r.pass, "{s} k={k}: {} vs {:?}", r.computed, r.expected);
            }
        }
    }
}

#[test]
fn sigma_closed_form_small() {
    let h = Harness::new();
    for i in 0..=12 {
        for j in 0..=i {
            assert!(h.verify_lemma_sigma(i, j).unwrap().pass, "i={i} j={j}");
        }
    }
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn shape(max_n: usize) -> impl Strategy<Value = Shape> {
    prop::collection::vec(1usize..8, 0..max_n).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Shape::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn rs_round_trip(pi in permutation(12)) {
        let (p, q) = rs(&pi);
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), pi);
    }

    #[test]
    fn rs_sign_transfer(pi in permutation(12)) {
        let (p, q) = rs(&pi);
        let predicted = Sign::from_parity(p.shape().v_count()) * p.sign() * q.sign();
        prop_assert_eq!(pi.sign(), predicted);
    }

    #[test]
    fn conjugate_round_trip(s in shape(10)) {
        prop_assert_eq!(s.conjugate().conjugate(), s.clone());
        let (b, w) = s.color_counts();
        prop_assert_eq!(b + w, s.size());
        prop_assert_eq!(s.conjugate().d_count(), s.d_count());
    }

    #[test]
    fn shape_text_round_trip(s in shape(10)) {
        let text = s.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(text.parse::<Shape>().unwrap(), s);
    }
}
