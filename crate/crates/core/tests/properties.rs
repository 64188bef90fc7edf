use std::collections::BTreeSet;
use std::sync::OnceLock;

use lattice_solids::diophantine::eisenstein_norm;
use lattice_solids::vector::signed_permutations;
use lattice_solids::{
    complete_to_cube, compose, cube_to_octahedron, enumerate_triples, fourth_vertices, in_plane_lattice, is_irreducible,
    octahedron_to_cube, omega, solve_rs, suitable_rs, tier_of, tier_representations, triangle, verify_regular, zeta_eta,
    Cube, Int, IntVector3, RationalMatrix3, Solid, Tier, TripleSolution,
};
use num_integer::Integer;
use proptest::prelude::*;

fn planes() -> &'static [TripleSolution] {
    static PLANES: OnceLock<Vec<TripleSolution>> = OnceLock::new();
    PLANES.get_or_init(|| {
        enumerate_triples(25)
            .unwrap()
            .iter()
            .flat_map(TripleSolution::expand)
            .collect()
    })
}

fn plane() -> impl Strategy<Value = TripleSolution> {
    (0..planes().len()).prop_map(|i| planes()[i].clone())
}

fn mn() -> impl Strategy<Value = (i64, i64)> {
    (-30i64..=30, -30i64..=30).prop_filter("nonzero", |p| *p != (0, 0))
}

fn brute_triples(d_max: i64) -> BTreeSet<(i64, i64, i64, i64)> {
    let mut out = BTreeSet::new();
    for d in 1..=d_max {
        let target = 3 * d * d;
        for a in 0..=d * 2 {
            for b in a..=d * 2 {
                let rest = target - a * a - b * b;
                if rest < b * b {
                    break;
                }
                let c = (rest as f64).sqrt().round() as i64;
                if c * c == rest && a.gcd(&b).gcd(&c).gcd(&d) == 1 {
                    out.insert((d, a, b, c));
                }
            }
        }
    }
    out
}

#[test]
fn triples_match_brute_force_up_to_25() {
    let got: BTreeSet<_> = enumerate_triples(25)
        .unwrap()
        .iter()
        .map(|t| {
            let f = |x: &Int| i64::try_from(x).unwrap();
            (f(t.d()), f(t.a()), f(t.b()), f(t.c()))
        })
        .collect();
    assert_eq!(got, brute_triples(25));
}

#[test]
fn tier_representations_match_brute_force() {
    for tier in 1..=50i64 {
        let mut want = Vec::new();
        if tier % 2 == 1 {
            for a in 0..=2 * tier {
                for b in a..=2 * tier {
                    for c in b..=2 * tier {
                        if a * a + b * b + c * c == 3 * tier * tier && a.gcd(&b).gcd(&c).gcd(&tier) == 1 {
                            want.push([Int::from(a), Int::from(b), Int::from(c)]);
                        }
                    }
                }
            }
        }
        assert_eq!(tier_representations(tier as u64).unwrap(), want, "tier {tier}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_is_closed_and_primitive(t in plane()) {
        let d2 = t.d() * t.d();
        prop_assert_eq!(t.normal().norm_sq(), Int::from(3) * d2);
        let orbit: BTreeSet<_> = t.expand().into_iter().collect();
        prop_assert!(orbit.contains(&t));
        prop_assert!(orbit.iter().all(|u| u.canonical() == t.canonical()));
        prop_assert!(t.a().is_odd() && t.b().is_odd() && t.c().is_odd());
    }

    #[test]
    fn omega_is_closed_under_units(k in 1i64..200) {
        let k = Int::from(k);
        let pairs = omega(&k).unwrap();
        prop_assert_eq!(pairs.len() % 6, 0);
        let set: BTreeSet<(Int, Int)> = pairs.iter().map(|p| (p.m().clone(), p.n().clone())).collect();
        for (m, n) in &set {
            prop_assert_eq!(eisenstein_norm(m, n), &k * &k);
            prop_assert!(set.contains(&(-m, -n)));
            prop_assert!(set.contains(&(n.clone(), m.clone())));
            prop_assert!(set.contains(&(m - n, m.clone())));
        }
    }

    #[test]
    fn rs_pairs_solve_their_equation(q in 1i64..5000) {
        let q = Int::from(q);
        for p in solve_rs(&q).unwrap() {
            prop_assert_eq!(&p.s * &p.s + Int::from(3) * &p.r * &p.r, Int::from(2) * &q);
        }
    }

    #[test]
    fn generators_have_the_triangle_gram(t in plane()) {
        let ze = zeta_eta(&t, &suitable_rs(&t).unwrap()).unwrap();
        let d2 = t.d() * t.d();
        prop_assert_eq!(ze.zeta.norm_sq(), Int::from(2) * &d2);
        prop_assert_eq!(ze.eta.norm_sq(), Int::from(2) * &d2);
        prop_assert_eq!(ze.zeta.dot(&ze.eta), d2);
        prop_assert!(ze.zeta.dot(&t.normal()) == Int::from(0) && ze.eta.dot(&t.normal()) == Int::from(0));
    }

    #[test]
    fn triangles_are_equilateral_in_plane(t in plane(), (m, n) in mn()) {
        let ze = zeta_eta(&t, &suitable_rs(&t).unwrap()).unwrap();
        let (m, n) = (Int::from(m), Int::from(n));
        let tri = triangle(&ze, &m, &n).unwrap();
        let side = Int::from(2) * t.d() * t.d() * eisenstein_norm(&m, &n);
        prop_assert_eq!(&tri.side_sq, &side);
        prop_assert_eq!(tri.p.dist_sq(&tri.q), side);
        prop_assert!(in_plane_lattice(&tri.p, &t) && in_plane_lattice(&tri.q, &t));
    }

    #[test]
    fn apex_candidates_are_regular_and_complete(t in plane(), k in 1i64..12, pick in any::<prop::sample::Index>()) {
        let ze = zeta_eta(&t, &suitable_rs(&t).unwrap()).unwrap();
        let k = Int::from(k);
        let pairs = omega(&k).unwrap();
        let pair = pick.get(&pairs);
        let fv = fourth_vertices(&ze, pair.m(), pair.n(), &k).unwrap();
        let expected = if k.is_multiple_of(&Int::from(3)) { 2 } else { 1 };
        prop_assert_eq!(fv.candidates.len(), expected);
        for tetra in fv.tetrahedra().unwrap() {
            prop_assert!(verify_regular(&Solid::Tetrahedron(tetra.vertices().clone())));
            let cube = complete_to_cube(&tetra).unwrap();
            prop_assert_eq!(cube.side(), &(t.d() * &k));
            prop_assert!(verify_regular(&Solid::Cube(cube.vertices().clone())));
            let octa = cube_to_octahedron(&cube);
            prop_assert!(verify_regular(&Solid::Octahedron(octa.vertices().clone())));
            let back = octahedron_to_cube(&octa).unwrap();
            prop_assert_eq!(back, cube.scale(&Int::from(2)).unwrap());
            if is_irreducible(&cube) {
                prop_assert!(cube.side().is_odd());
            }
            let m = lattice_solids::matrix_from_cube(&cube).unwrap();
            prop_assert!(m.is_orthogonal());
            prop_assert!(tier_of(&m).0 <= cube.side().clone());
        }
    }

    #[test]
    fn orthogonal_group_is_closed(t in plane(), u in plane(), sp in 0usize..48) {
        let build = |t: &TripleSolution| -> RationalMatrix3 {
            let ze = zeta_eta(t, &suitable_rs(t).unwrap()).unwrap();
            let fv = fourth_vertices(&ze, &Int::from(1), &Int::from(0), &Int::from(1)).unwrap();
            let cube = complete_to_cube(&fv.tetrahedra().unwrap()[0]).unwrap();
            lattice_solids::matrix_from_cube(&cube).unwrap()
        };
        let (a, b) = (build(&t), build(&u));
        let ab = compose(&a, &b);
        prop_assert!(ab.is_orthogonal());
        prop_assert_eq!(compose(&ab, &ab.transpose()), RationalMatrix3::identity());
        let Tier(ta) = tier_of(&a);
        let Tier(tb) = tier_of(&b);
        prop_assert!((&ta * &tb).is_multiple_of(&tier_of(&ab).0));

        let (perm, signs) = signed_permutations().nth(sp).unwrap();
        let cube = Cube::from_frame(
            &IntVector3::zero(),
            &IntVector3::new(1, 0, 0).signed_permutation(perm, signs),
            &IntVector3::new(0, 1, 0).signed_permutation(perm, signs),
            &IntVector3::new(0, 0, 1).signed_permutation(perm, signs),
        ).unwrap();
        let p = lattice_solids::matrix_from_cube(&cube).unwrap();
        prop_assert_eq!(tier_of(&compose(&p, &a)), tier_of(&a));
    }
}
