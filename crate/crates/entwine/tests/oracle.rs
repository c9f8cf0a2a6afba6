//! Sweedler-sum oracles over raw structure constants, compared against the
//! composed-map checkers and the solvers.

use algmod::{AlgebraHom, SepContext, StructureAlgebra};
use coring::StructureCoalgebra;
use entwine::{
    check_entwining, check_family, check_lambda, check_omega, solve_theta, solve_zeta, test_family, theta_harness,
    verify_theta, verify_zeta, zeta_harness, EntwiningStructure, ThetaMap, ZetaMap,
};
use exactla::{Field, Matrix, Scalar};
use findim::{BasedSpace, LinMap};
use proptest::prelude::*;

const P: u32 = 2;
const GF2: Field = Field::Prime(P);

/// Structure constants mod `P`.
struct Raw {
    a: usize,
    c: usize,
    /// `m[i][j][k]`: coefficient of `e_k` in `e_i e_j`
    m: Vec<Vec<Vec<u32>>>,
    unit: Vec<u32>,
    /// `d[i][j][k]`: coefficient of `c_j ⊗ c_k` in `Δ c_i`
    d: Vec<Vec<Vec<u32>>>,
    eps: Vec<u32>,
}

fn res(s: &Scalar) -> u32 {
    s.residue().unwrap()
}

impl Raw {
    fn new(alg: &StructureAlgebra, coalg: &StructureCoalgebra) -> Raw {
        let (a, c) = (alg.dim(), coalg.dim());
        let m = (0..a)
            .map(|i| (0..a).map(|j| alg.mult.image(i * a + j).iter().map(res).collect()).collect())
            .collect();
        let d = (0..c)
            .map(|i| {
                let img = coalg.comult.image(i);
                (0..c).map(|j| (0..c).map(|k| res(&img[j * c + k])).collect()).collect()
            })
            .collect();
        Raw {
            a,
            c,
            m,
            unit: alg.unit.iter().map(res).collect(),
            d,
            eps: (0..c).map(|i| res(&coalg.counit.image(i)[0])).collect(),
        }
    }
}

/// `ψ[c][a][a'][c']`: coefficient of `a' ⊗ c'` in `ψ(c ⊗ a)`.
type Psi = Vec<Vec<Vec<Vec<u32>>>>;

fn psi_from_bits(r: &Raw, bits: u64) -> Psi {
    let (a, c) = (r.a, r.c);
    let mut psi = vec![vec![vec![vec![0; c]; a]; a]; c];
    for ci in 0..c {
        for ai in 0..a {
            for ap in 0..a {
                for cp in 0..c {
                    let bit = ((ci * a + ai) * a + ap) * c + cp;
                    psi[ci][ai][ap][cp] = ((bits >> bit) & 1) as u32;
                }
            }
        }
    }
    psi
}

fn psi_map(r: &Raw, psi: &Psi) -> LinMap {
    let (a, c) = (r.a, r.c);
    let mut mat = Matrix::zeros(GF2, a * c, c * a);
    for ci in 0..c {
        for ai in 0..a {
            for ap in 0..a {
                for cp in 0..c {
                    mat.set(ap * c + cp, ci * a + ai, Scalar::from_i64(GF2, psi[ci][ai][ap][cp] as i64));
                }
            }
        }
    }
    LinMap::from_matrix(mat)
}

fn entwining_holds(r: &Raw, psi: &Psi) -> bool {
    let (a, c) = (r.a, r.c);
    for x in 0..c {
        // ent2 and ent4
        for ap in 0..a {
            for cp in 0..c {
                let lhs: u32 = (0..a).map(|u| r.unit[u] * psi[x][u][ap][cp]).sum::<u32>() % P;
                let rhs = if cp == x { r.unit[ap] } else { 0 };
                if lhs != rhs {
                    return false;
                }
            }
        }
        for ai in 0..a {
            for ap in 0..a {
                let lhs: u32 = (0..c).map(|cp| psi[x][ai][ap][cp] * r.eps[cp]).sum::<u32>() % P;
                if lhs != r.eps[x] * u32::from(ap == ai) % P {
                    return false;
                }
            }
        }
        // ent1
        for ai in 0..a {
            for bi in 0..a {
                let mut lhs = vec![vec![0u32; c]; a];
                for k in 0..a {
                    for ap in 0..a {
                        for cp in 0..c {
                            lhs[ap][cp] += r.m[ai][bi][k] * psi[x][k][ap][cp];
                        }
                    }
                }
                let mut rhs = vec![vec![0u32; c]; a];
                for a1 in 0..a {
                    for c1 in 0..c {
                        if psi[x][ai][a1][c1] == 0 {
                            continue;
                        }
                        for b1 in 0..a {
                            for c2 in 0..c {
                                if psi[c1][bi][b1][c2] == 0 {
                                    continue;
                                }
                                for k in 0..a {
                                    rhs[k][c2] += r.m[a1][b1][k];
                                }
                            }
                        }
                    }
                }
                if !eq2(&lhs, &rhs) {
                    return false;
                }
            }
        }
        // ent3
        for ai in 0..a {
            let mut lhs = vec![vec![vec![0u32; c]; c]; a];
            for ap in 0..a {
                for cp in 0..c {
                    for j in 0..c {
                        for k in 0..c {
                            lhs[ap][j][k] += psi[x][ai][ap][cp] * r.d[cp][j][k];
                        }
                    }
                }
            }
            let mut rhs = vec![vec![vec![0u32; c]; c]; a];
            for j in 0..c {
                for k in 0..c {
                    if r.d[x][j][k] == 0 {
                        continue;
                    }
                    for a1 in 0..a {
                        for k1 in 0..c {
                            for a2 in 0..a {
                                for j1 in 0..c {
                                    rhs[a2][j1][k1] += r.d[x][j][k] * psi[k][ai][a1][k1] * psi[j][a1][a2][j1];
                                }
                            }
                        }
                    }
                }
            }
            if !lhs.iter().zip(&rhs).all(|(l, r)| eq2(l, r)) {
                return false;
            }
        }
    }
    true
}

fn eq2(l: &[Vec<u32>], r: &[Vec<u32>]) -> bool {
    l.iter().zip(r).all(|(x, y)| x.iter().zip(y).all(|(p, q)| p % P == q % P))
}

/// `θ[x][y][a]`, stored as the solver's coordinates `(x*c + y)*a + k`.
fn theta_at(r: &Raw, th: &[u32], x: usize, y: usize, k: usize) -> u32 {
    th[(x * r.c + y) * r.a + k]
}

/// E4.4, E4.5, E4.6 as Sweedler sums.
fn theta_oracle(r: &Raw, psi: &Psi, th: &[u32]) -> [bool; 3] {
    let (a, c) = (r.a, r.c);
    let mut ok = [true; 3];
    for x in 0..c {
        for y in 0..c {
            let mut lhs = vec![vec![0u32; c]; a];
            let mut rhs = vec![vec![0u32; c]; a];
            for j in 0..c {
                for k in 0..c {
                    for t in 0..a {
                        lhs[t][k] += r.d[y][j][k] * theta_at(r, th, x, j, t);
                        for ap in 0..a {
                            for cp in 0..c {
                                rhs[ap][cp] += r.d[x][j][k] * theta_at(r, th, k, y, t) * psi[j][t][ap][cp];
                            }
                        }
                    }
                }
            }
            ok[0] &= eq2(&lhs, &rhs);
        }
        for t in 0..a {
            let lhs: u32 = (0..c).flat_map(|j| (0..c).map(move |k| (j, k))).map(|(j, k)| r.d[x][j][k] * theta_at(r, th, j, k, t)).sum();
            ok[1] &= lhs % P == r.eps[x] * r.unit[t] % P;
        }
    }
    for x in 0..c {
        for y in 0..c {
            for z in 0..c {
                let mut lhs = vec![vec![0u32; c]; a];
                let mut rhs = vec![vec![0u32; c]; a];
                for p in 0..c {
                    for q in 0..c {
                        let dz = r.d[z][p][q];
                        if dz == 0 {
                            continue;
                        }
                        for t in 0..a {
                            rhs[t][q] += r.eps[y] * dz * theta_at(r, th, x, p, t);
                        }
                        for b in 0..a {
                            let t1 = theta_at(r, th, y, p, b);
                            if t1 == 0 {
                                continue;
                            }
                            for b1 in 0..a {
                                for x1 in 0..c {
                                    let w = dz * t1 * psi[x][b][b1][x1];
                                    if w == 0 {
                                        continue;
                                    }
                                    for rr in 0..c {
                                        for s in 0..c {
                                            for b2 in 0..a {
                                                let w2 = w * r.d[q][rr][s] * theta_at(r, th, x1, rr, b2);
                                                for t in 0..a {
                                                    lhs[t][s] += w2 * r.m[b1][b2][t];
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                ok[2] &= eq2(&lhs, &rhs);
            }
        }
    }
    ok
}

/// `ζ[c][u][v]` stored as `(c*a + u)*a + v`.
fn zeta_at(r: &Raw, z: &[u32], ci: usize, u: usize, v: usize) -> u32 {
    z[(ci * r.a + u) * r.a + v]
}

/// E4.9, E4.10, E4.11 as Sweedler sums.
fn zeta_oracle(r: &Raw, psi: &Psi, z: &[u32]) -> [bool; 3] {
    let (a, c) = (r.a, r.c);
    let mut ok = [true; 3];
    for ci in 0..c {
        for ai in 0..a {
            let mut lhs = vec![vec![0u32; a]; a];
            let mut rhs = vec![vec![0u32; a]; a];
            for u in 0..a {
                for v in 0..a {
                    for w in 0..a {
                        lhs[u][w] += zeta_at(r, z, ci, u, v) * r.m[v][ai][w];
                    }
                }
            }
            for ap in 0..a {
                for cp in 0..c {
                    for u in 0..a {
                        for v in 0..a {
                            for w in 0..a {
                                rhs[w][v] += psi[ci][ai][ap][cp] * zeta_at(r, z, cp, u, v) * r.m[ap][u][w];
                            }
                        }
                    }
                }
            }
            ok[0] &= eq2(&lhs, &rhs);
        }
        for w in 0..a {
            let s: u32 = (0..a).flat_map(|u| (0..a).map(move |v| (u, v))).map(|(u, v)| zeta_at(r, z, ci, u, v) * r.m[u][v][w]).sum();
            ok[1] &= s % P == r.eps[ci] * r.unit[w] % P;
        }
        let mut lhs = vec![vec![vec![0u32; a]; a]; a];
        let mut rhs = vec![vec![vec![0u32; a]; a]; a];
        for i in 0..c {
            for j in 0..c {
                let dc = r.d[ci][i][j];
                if dc == 0 {
                    continue;
                }
                for u in 0..a {
                    for v in 0..a {
                        let zj = zeta_at(r, z, j, u, v);
                        if zj == 0 {
                            continue;
                        }
                        for mid in 0..a {
                            rhs[u][mid][v] += dc * r.eps[i] * zj * r.unit[mid];
                        }
                        for k in 0..c {
                            for l in 0..c {
                                let w = dc * zj * r.d[i][k][l] * r.eps[k];
                                if w == 0 {
                                    continue;
                                }
                                for u1 in 0..a {
                                    for l1 in 0..c {
                                        let w1 = w * psi[l][u][u1][l1];
                                        if w1 == 0 {
                                            continue;
                                        }
                                        for s in 0..a {
                                            for t in 0..a {
                                                let w2 = w1 * zeta_at(r, z, l1, s, t);
                                                for x in 0..a {
                                                    lhs[u1][s][x] += w2 * r.m[t][v][x];
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        ok[2] &= lhs.iter().zip(&rhs).all(|(l, r)| eq2(l, r));
    }
    ok
}

fn to_scalars(v: &[u32]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_i64(GF2, x as i64)).collect()
}

fn bits(n: usize, k: u64) -> Vec<u32> {
    (0..n).map(|i| ((k >> i) & 1) as u32).collect()
}

/// `k[x]/x^2` dualised: `Δ1 = 1⊗1`, `Δx = 1⊗x + x⊗1`.
fn primitive(f: Field) -> StructureCoalgebra {
    let space = BasedSpace::with_labels(f, vec!["1".into(), "x".into()]).unwrap();
    StructureCoalgebra::from_table(
        space,
        |i| {
            let mut v = exactla::vector::zeros(f, 4);
            if i == 0 {
                v[0] = f.one();
            } else {
                v[1] = f.one();
                v[2] = f.one();
            }
            v
        },
        |i| if i == 0 { f.one() } else { f.zero() },
    )
    .unwrap()
}

fn pairs() -> Vec<(String, StructureAlgebra, StructureCoalgebra)> {
    let algebras = [
        ("k", StructureAlgebra::ground(GF2)),
        ("k2", StructureAlgebra::product(GF2, 2)),
        ("dual", StructureAlgebra::dual_numbers(GF2)),
    ];
    let coalgebras =
        [("k", StructureCoalgebra::ground(GF2)), ("g2", StructureCoalgebra::grouplike(GF2, 2)), ("prim", primitive(GF2))];
    let mut out = Vec::new();
    for (an, a) in &algebras {
        for (cn, c) in &coalgebras {
            out.push((format!("A={an}, C={cn}"), a.clone(), c.clone()));
        }
    }
    out
}

/// Every entwining over GF(2) for each pair, found by the oracle.
fn all_entwinings() -> Vec<(String, EntwiningStructure, Raw, Psi)> {
    let mut out = Vec::new();
    for (name, a, c) in pairs() {
        let r = Raw::new(&a, &c);
        let n = (r.a * r.c) * (r.a * r.c);
        for k in 0..(1u64 << n) {
            let psi = psi_from_bits(&r, k);
            if entwining_holds(&r, &psi) {
                let e = EntwiningStructure::new(a.clone(), c.clone(), psi_map(&r, &psi)).unwrap();
                out.push((format!("{name}, ψ#{k}"), e, Raw::new(&a, &c), psi));
            }
        }
    }
    out
}

#[test]
fn entwining_checker_matches_oracle_on_every_psi_of_small_pairs() {
    for (name, a, c) in pairs() {
        let r = Raw::new(&a, &c);
        let n = (r.a * r.c) * (r.a * r.c);
        if n > 4 {
            continue;
        }
        for k in 0..(1u64 << n) {
            let psi = psi_from_bits(&r, k);
            let e = EntwiningStructure::new(a.clone(), c.clone(), psi_map(&r, &psi)).unwrap();
            assert_eq!(check_entwining(&e).passed(), entwining_holds(&r, &psi), "{name} ψ#{k}");
        }
    }
}

#[test]
fn found_entwinings_pass_the_checker() {
    let all = all_entwinings();
    // the flip is always among them, and A = k2 with C = g2 has others
    assert!(all.len() > pairs().len());
    for (name, e, _, _) in &all {
        assert!(check_entwining(e).passed(), "{name}");
        assert!(check_family(&test_family(e).unwrap()).passed(), "{name}");
    }
}

#[test]
fn theta_solver_equals_brute_force() {
    for (name, e, r, psi) in all_entwinings() {
        let n = r.a * r.c * r.c;
        let expected: Vec<Vec<Scalar>> = (0..(1u64 << n))
            .map(|k| bits(n, k))
            .filter(|th| theta_oracle(&r, &psi, th).iter().all(|&b| b))
            .map(|th| to_scalars(&th))
            .collect();
        let mut got: Vec<Vec<Scalar>> = solve_theta(&e, 1 << 20).unwrap().solutions.iter().map(|t| t.unknowns()).collect();
        let mut want = expected.clone();
        got.sort_by_key(|v| v.iter().map(|s| s.residue().unwrap()).collect::<Vec<_>>());
        want.sort_by_key(|v| v.iter().map(|s| s.residue().unwrap()).collect::<Vec<_>>());
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn zeta_solver_equals_brute_force() {
    for (name, e, r, psi) in all_entwinings() {
        let n = r.c * r.a * r.a;
        let expected: Vec<Vec<Scalar>> = (0..(1u64 << n))
            .map(|k| bits(n, k))
            .filter(|z| zeta_oracle(&r, &psi, z).iter().all(|&b| b))
            .map(|z| to_scalars(&z))
            .collect();
        let mut got: Vec<Vec<Scalar>> = solve_zeta(&e, 1 << 20).unwrap().solutions.iter().map(|z| z.unknowns()).collect();
        let mut want = expected.clone();
        got.sort_by_key(|v| v.iter().map(|s| s.residue().unwrap()).collect::<Vec<_>>());
        want.sort_by_key(|v| v.iter().map(|s| s.residue().unwrap()).collect::<Vec<_>>());
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn solutions_induce_omega_and_lambda_elements_and_pass_the_harness() {
    for (name, e, _, _) in all_entwinings() {
        for th in solve_theta(&e, 1 << 20).unwrap().solutions {
            assert!(check_omega(&th.omega_image()).passed(), "{name}");
            let h = theta_harness(&th).unwrap();
            assert!(h.passed(), "{name}: {:?}", h.failing_tags());
        }
        for z in solve_zeta(&e, 1 << 20).unwrap().solutions {
            assert!(check_lambda(&z.lambda_image()).passed(), "{name}");
            let h = zeta_harness(&z).unwrap();
            assert!(h.passed(), "{name}: {:?}", h.failing_tags());
        }
    }
}

#[test]
fn harness_verdict_matches_verifier_on_every_map() {
    for (name, e, r, _) in all_entwinings().into_iter().filter(|(_, e, _, _)| e.coalgebra.dim() == 2 && e.algebra.dim() == 1) {
        let n = r.a * r.c * r.c;
        for k in 0..(1u64 << n) {
            let th = ThetaMap::from_unknowns(&e, &to_scalars(&bits(n, k))).unwrap();
            assert_eq!(theta_harness(&th).unwrap().passed(), verify_theta(&th).passed(), "{name} θ#{k}");
        }
    }
    for (name, e, r, _) in all_entwinings().into_iter().filter(|(_, e, _, _)| e.coalgebra.dim() == 1 && e.algebra.dim() == 2) {
        let n = r.c * r.a * r.a;
        for k in 0..(1u64 << n) {
            let z = ZetaMap::from_unknowns(&e, &to_scalars(&bits(n, k))).unwrap();
            assert_eq!(zeta_harness(&z).unwrap().passed(), verify_zeta(&z).passed(), "{name} ζ#{k}");
        }
    }
}

#[test]
fn restriction_to_ground_coalgebra_matches_idempotents() {
    let algebras = [
        StructureAlgebra::ground(GF2),
        StructureAlgebra::product(GF2, 2),
        StructureAlgebra::dual_numbers(GF2),
        StructureAlgebra::gaussian(Field::Prime(3)),
    ];
    for a in algebras {
        let f = a.field();
        let e = EntwiningStructure::swap(a.clone(), StructureCoalgebra::ground(f)).unwrap();
        let ctx = SepContext::new(&AlgebraHom::unit_of(&a), &AlgebraHom::identity(&a)).unwrap();
        let n = a.dim() * a.dim();
        let elements = f.elements().unwrap();
        let q = elements.len() as u64;
        for k in 0..q.pow(n as u32) {
            let x: Vec<Scalar> = (0..n).map(|i| elements[((k / q.pow(i as u32)) % q) as usize].clone()).collect();
            let zr = verify_zeta(&ZetaMap::from_unknowns(&e, &x).unwrap());
            let sr = ctx.verify(&ctx.project(&x).unwrap()).unwrap();
            assert_eq!(zr.passed(), sr.passed());
            assert_eq!(zr.passed_tag("E4.9"), sr.passed_tag("Eq1"));
            assert_eq!(zr.passed_tag("E4.10"), sr.passed_tag("Eq2"));
            if sr.passed_tag("Eq1") {
                assert_eq!(zr.passed_tag("E4.11"), sr.passed_tag("Eq3"));
            }
        }
    }
}

fn random_entwining() -> impl Strategy<Value = usize> {
    0..64usize
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verifiers_match_oracles(idx in random_entwining(), seed in any::<u64>()) {
        let all = all_entwinings_cached();
        let (name, e, r, psi) = &all[idx % all.len()];
        let nt = r.a * r.c * r.c;
        let th = bits(nt, seed);
        let rep = verify_theta(&ThetaMap::from_unknowns(e, &to_scalars(&th)).unwrap());
        let want = theta_oracle(r, psi, &th);
        for (tag, w) in ["E4.4", "E4.5", "E4.6"].iter().zip(want) {
            prop_assert_eq!(rep.passed_tag(tag), w, "{} {}", name, tag);
        }
        let nz = r.c * r.a * r.a;
        let z = bits(nz, seed.rotate_left(17));
        let rep = verify_zeta(&ZetaMap::from_unknowns(e, &to_scalars(&z)).unwrap());
        let want = zeta_oracle(r, psi, &z);
        for (tag, w) in ["E4.9", "E4.10", "E4.11"].iter().zip(want) {
            prop_assert_eq!(rep.passed_tag(tag), w, "{} {}", name, tag);
        }
    }

    #[test]
    fn mutated_psi_matches_oracle(idx in random_entwining(), flips in proptest::collection::vec(0..16usize, 1..3)) {
        let all = all_entwinings_cached();
        let (name, e, r, psi) = &all[idx % all.len()];
        let mut bad = psi.clone();
        let (a, c) = (r.a, r.c);
        for fl in flips {
            let fl = fl % (a * c * a * c);
            let (ci, rest) = (fl / (a * a * c), fl % (a * a * c));
            let (ai, rest) = (rest / (a * c), rest % (a * c));
            let (ap, cp) = (rest / c, rest % c);
            bad[ci][ai][ap][cp] ^= 1;
        }
        let mutated = EntwiningStructure::new(e.algebra.clone(), e.coalgebra.clone(), psi_map(r, &bad)).unwrap();
        prop_assert_eq!(check_entwining(&mutated).passed(), entwining_holds(r, &bad), "{}", name);
    }
}

fn all_entwinings_cached() -> &'static Vec<(String, EntwiningStructure, Raw, Psi)> {
    static CELL: std::sync::OnceLock<Vec<(String, EntwiningStructure, Raw, Psi)>> = std::sync::OnceLock::new();
    CELL.get_or_init(all_entwinings)
}

#[test]
fn corpus_is_not_only_flips() {
    let all = all_entwinings_cached();
    let flips = all.iter().filter(|(_, e, _, _)| *e == EntwiningStructure::swap(e.algebra.clone(), e.coalgebra.clone()).unwrap()).count();
    assert_eq!(flips, pairs().len());
    let twisted_theta = all
        .iter()
        .filter(|(_, e, _, _)| e.coalgebra.dim() > 1 && !solve_theta(e, 1 << 20).unwrap().solutions.is_empty())
        .count();
    let twisted_zeta = all
        .iter()
        .filter(|(_, e, _, _)| e.algebra.dim() > 1 && !solve_zeta(e, 1 << 20).unwrap().solutions.is_empty())
        .count();
    assert!(all.len() > 2 * flips && twisted_theta > 2 && twisted_zeta > 2);
}
