use algmod::{solve_sep_idempotent, AlgebraHom, StructureAlgebra};
use coring::{find_invariant_grouplikes, sweedler_coring, verify_grouplike, GrouplikeElement};
use exactla::{vector, Field, Scalar};
use findim::LinMap;
use proptest::prelude::*;

const GF2: Field = Field::Prime(2);

fn homs() -> Vec<(&'static str, AlgebraHom)> {
    let k2 = StructureAlgebra::product(GF2, 2);
    let m2 = StructureAlgebra::matrix(GF2, 2);
    let ut = StructureAlgebra::upper_triangular(GF2);
    let diag = LinMap::from_images(k2.space.clone(), m2.space.clone(), &[vector::unit(GF2, 4, 0), vector::unit(GF2, 4, 3)]).unwrap();
    let ut_diag = LinMap::from_images(k2.space.clone(), ut.space.clone(), &[vector::unit(GF2, 3, 0), vector::unit(GF2, 3, 2)]).unwrap();
    vec![
        ("k -> k", AlgebraHom::identity(&StructureAlgebra::ground(GF2))),
        ("k -> k2", AlgebraHom::unit_of(&k2)),
        ("k -> dual", AlgebraHom::unit_of(&StructureAlgebra::dual_numbers(GF2))),
        ("k -> gauss", AlgebraHom::unit_of(&StructureAlgebra::gaussian(GF2))),
        ("k -> ut", AlgebraHom::unit_of(&ut)),
        ("k2 -> ut", AlgebraHom::new(k2.clone(), ut.clone(), ut_diag).unwrap()),
        ("k2 -> m2", AlgebraHom::new(k2, m2.clone(), diag).unwrap()),
        ("m2 -> m2", AlgebraHom::identity(&m2)),
        ("k -> m2", AlgebraHom::unit_of(&m2)),
    ]
}

#[test]
fn grouplikes_are_heavy_idempotents() {
    for (name, phi) in homs() {
        let c = sweedler_coring(&phi).unwrap();
        let grouplikes = find_invariant_grouplikes(&c, 1 << 20).unwrap();
        let idempotents = solve_sep_idempotent(&phi, &AlgebraHom::identity(&phi.target), 1 << 20).unwrap();
        let ids: Vec<Vec<Scalar>> = idempotents.solutions.into_iter().map(|e| e.element).collect();
        assert_eq!(grouplikes.solutions, ids, "{name}");
        assert_eq!(grouplikes.linear.is_some(), idempotents.classical.is_some(), "{name}");
        for x in grouplikes.solutions {
            assert!(verify_grouplike(&GrouplikeElement { coring: c.clone(), vector: x }).unwrap().passed(), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn perturbed_one_tensor_one_is_rejected(which in 0usize..8, flip in 0usize..16) {
        let (_, phi) = &homs()[which];
        let id = AlgebraHom::identity(&phi.target);
        let s = &phi.target;
        let c = sweedler_coring(&id).unwrap();
        let sq = algmod::SepContext::new(&id, &id).unwrap();
        let mut x = sq.project(&vector::tensor(&s.unit, &s.unit)).unwrap();
        let i = flip % x.len();
        x[i] = &x[i] + &GF2.one();
        let ok = verify_grouplike(&GrouplikeElement { coring: c.clone(), vector: x.clone() }).unwrap().passed();
        let found = find_invariant_grouplikes(&c, 1 << 16).unwrap();
        prop_assert_eq!(ok, found.solutions.contains(&x));
    }
}
