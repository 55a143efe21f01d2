use homlie::exactlin::scalar::{frac, int, is_zero_vec};
use homlie::exactlin::{nullspace, rref, Matrix, Scalar, Subspace, Vector};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(scalar(), r * c)
            .prop_map(move |d| Matrix::from_row_major(r, c, d).unwrap())
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(scalar(), n), 0..=max)
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_keeps_rank(m in matrix(5, 5)) {
        let (r, rank) = rref(&m);
        let (r2, rank2) = rref(&r);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rank + nullspace(&m).dim(), m.cols());
    }

    #[test]
    fn nullspace_vectors_are_killed(m in matrix(4, 6)) {
        for v in nullspace(&m).basis_vectors() {
            prop_assert!(is_zero_vec(&m.mul_vec(&v).unwrap()));
        }
    }

    #[test]
    fn span_is_basis_independent(vs in vectors(4, 5), c in scalar()) {
        let a = Subspace::span(4, &vs).unwrap();
        // Add a combination of existing vectors and reverse the order.
        let mut more: Vec<Vector> = vs.iter().rev().cloned().collect();
        if vs.len() >= 2 {
            more.push(vs[0].iter().zip(&vs[1]).map(|(x, y)| x + &c * y).collect());
        }
        prop_assert_eq!(&a, &Subspace::span(4, &more).unwrap());
        for v in &vs {
            prop_assert!(a.contains(v).unwrap());
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(u in vectors(5, 4), w in vectors(5, 4)) {
        let a = Subspace::span(5, &u).unwrap();
        let b = Subspace::span(5, &w).unwrap();
        let s = a.sum(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a).unwrap() && i.is_subspace_of(&b).unwrap());
        prop_assert!(a.is_subspace_of(&s).unwrap() && b.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn coordinates_round_trip(vs in vectors(4, 4), coeffs in prop::collection::vec(scalar(), 4)) {
        let a = Subspace::span(4, &vs).unwrap();
        let k = a.dim();
        let v = a.from_coordinates(&coeffs[..k]).unwrap();
        prop_assert_eq!(a.coordinates(&v).unwrap(), Some(coeffs[..k].to_vec()));
    }
}

#[test]
fn annihilator_is_orthogonal_complement() {
    let a = Subspace::span(3, &[vec![int(1), int(2), int(0)]]).unwrap();
    let ann = a.annihilator();
    assert_eq!(ann.dim(), 2);
    for w in ann.basis_vectors() {
        let dot: Scalar = w
            .iter()
            .zip([int(1), int(2), int(0)])
            .map(|(x, y)| x * y)
            .sum();
        assert_eq!(dot, int(0));
    }
}
