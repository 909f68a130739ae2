//! Randomized properties of the field, matrix and support routines.

use hookline_groups::field::Field;
use hookline_groups::matrix::Matrix;
use hookline_groups::support::support;
use proptest::prelude::*;

fn field_and_elems() -> impl Strategy<Value = (u64, u8, u8, u8)> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16]).prop_flat_map(|q| {
        let e = 0..q as u8;
        (Just(q), e.clone(), e.clone(), e)
    })
}

fn invertible(k: &Field, n: usize, entries: &[u8]) -> Option<Matrix> {
    let m = Matrix::new(n, entries.iter().map(|&v| v % k.q() as u8).collect()).ok()?;
    (m.det(k) != 0).then_some(m)
}

proptest! {
    #[test]
    fn field_axioms((q, a, b, c) in field_and_elems()) {
        let k = Field::new(q).unwrap();
        prop_assert_eq!(k.add(a, b), k.add(b, a));
        prop_assert_eq!(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(k.mul(a, k.inv(a)), 1);
        }
    }

    #[test]
    fn support_is_a_class_function(
        q in prop::sample::select(vec![2u64, 3, 4, 5]),
        n in 2usize..=4,
        xs in prop::collection::vec(any::<u8>(), 16),
        ys in prop::collection::vec(any::<u8>(), 16),
    ) {
        let k = Field::new(q).unwrap();
        let x = invertible(&k, n, &xs[..n * n]);
        let y = invertible(&k, n, &ys[..n * n]);
        prop_assume!(x.is_some() && y.is_some());
        let (x, y) = (x.unwrap(), y.unwrap());
        let conj = y.mul(&k, &x).mul(&k, &y.inverse(&k).unwrap());
        prop_assert_eq!(support(&k, &x), support(&k, &conj));
        prop_assert_eq!(support(&k, &x) == 0, x.is_scalar());
    }

    #[test]
    fn multiplication_associates(
        q in prop::sample::select(vec![2u64, 3, 4, 7]),
        xs in prop::collection::vec(any::<u8>(), 27),
    ) {
        let k = Field::new(q).unwrap();
        let m = |s: &[u8]| Matrix::new(3, s.iter().map(|&v| v % q as u8).collect()).unwrap();
        let (a, b, c) = (m(&xs[0..9]), m(&xs[9..18]), m(&xs[18..27]));
        prop_assert_eq!(a.mul(&k, &b).mul(&k, &c), a.mul(&k, &b.mul(&k, &c)));
    }
}
