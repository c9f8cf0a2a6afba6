use exactla::{enumerate_affine, solve_affine, Field, LaError, Matrix, Scalar};
use proptest::prelude::*;

fn gf(p: u32, v: u32) -> Scalar {
    Scalar::from_i64(Field::Prime(p), v as i64)
}

fn matrix_gf(p: u32, rows: usize, cols: usize, vals: &[u32]) -> Matrix {
    Matrix::new(Field::Prime(p), rows, cols, vals.iter().map(|&v| gf(p, v)).collect()).unwrap()
}

/// Every vector of GF(p)^n, in lexicographic order.
fn all_vectors(p: u32, n: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            for x in 0..p {
                let mut w = v.clone();
                w.push(gf(p, x));
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn gf2_system() -> impl Strategy<Value = (usize, usize, Vec<u32>, Vec<u32>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        (Just(r), Just(c), prop::collection::vec(0u32..2, r * c), prop::collection::vec(0u32..2, r))
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(r in 1usize..5, c in 1usize..5, seed in prop::collection::vec(-6i64..7, 16)) {
        let f = Field::Rational;
        let m = Matrix::new(f, r, c, seed[..r * c].iter().map(|&v| Scalar::from_i64(f, v)).collect()).unwrap();
        let (once, piv) = m.rref();
        let (twice, piv2) = once.rref();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(&piv, &piv2);
        prop_assert!(piv.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rref_is_idempotent_mod_5(r in 1usize..5, c in 1usize..5, seed in prop::collection::vec(0u32..5, 16)) {
        let m = matrix_gf(5, r, c, &seed[..r * c]);
        let (once, _) = m.rref();
        prop_assert_eq!(once.rref().0, once);
    }

    #[test]
    fn solve_affine_matches_brute_force((r, c, a, b) in gf2_system()) {
        let m = matrix_gf(2, r, c, &a);
        let rhs: Vec<Scalar> = b.iter().map(|&v| gf(2, v)).collect();
        let brute: Vec<Vec<Scalar>> = all_vectors(2, c)
            .into_iter()
            .filter(|x| m.mul_vec(x).unwrap() == rhs)
            .collect();
        match solve_affine(&m, &rhs) {
            Err(LaError::NoSolution) => prop_assert!(brute.is_empty()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
            Ok(space) => {
                prop_assert_eq!(Matrix::from_columns(Field::Prime(2), c, &space.kernel_basis).unwrap().rank(), space.dim());
                let mut got: Vec<Vec<Scalar>> = enumerate_affine(&space, 1 << 10).unwrap().collect();
                let mut want = brute;
                got.sort_by_key(|v| v.iter().map(|s| s.residue()).collect::<Vec<_>>());
                want.sort_by_key(|v| v.iter().map(|s| s.residue()).collect::<Vec<_>>());
                prop_assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn rational_products_are_exact(a in prop::collection::vec(1i64..i64::MAX, 1..6)) {
        let f = Field::Rational;
        let prod = a.iter().fold(f.one(), |acc, &x| &acc * &Scalar::from_i64(f, x));
        let back = a.iter().fold(prod, |acc, &x| &acc * &Scalar::from_i64(f, x).inv().unwrap());
        prop_assert!(back.is_one());
    }
}
