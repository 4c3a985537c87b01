//! Property tests for the algebraic layers and the oracle.

use negacyclic::code::{search, SearchConfig, SpecFile};
use negacyclic::oracle::{joint_weight, negacyclic_shift, symplectic, VectorPair};
use negacyclic::poly::{crt_combine, poly_gcd};
use negacyclic::{ExtField, FieldElem, Poly, PrimeModulus, RingElem};
use proptest::prelude::*;

fn field(p: u64, k: usize) -> ExtField {
    ExtField::new(PrimeModulus::new(p).unwrap(), k).unwrap()
}

fn elem(f: &ExtField, i: u64) -> FieldElem {
    let q = num_traits::ToPrimitive::to_u128(&f.order()).unwrap();
    f.element_from_index(i as u128 % q)
}

fn poly(f: &ExtField, cs: &[u64]) -> Poly {
    Poly::new(f, cs.iter().map(|&i| elem(f, i)).collect())
}

fn pk() -> impl Strategy<Value = (u64, usize)> {
    prop_oneof![
        Just((3, 1)),
        Just((3, 2)),
        Just((5, 2)),
        Just((7, 1)),
        Just((3, 3)),
        Just((5, 3))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((p, k) in pk(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(p, k);
        let (x, y, z) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, f.zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), f.one());
        }
        // Frobenius is additive and multiplicative
        prop_assert_eq!((&x + &y).frobenius(1), &x.frobenius(1) + &y.frobenius(1));
        prop_assert_eq!((&x * &y).frobenius(1), &x.frobenius(1) * &y.frobenius(1));
        prop_assert_eq!(x.frobenius(k), x);
    }

    #[test]
    fn poly_division((p, k) in pk(), a in prop::collection::vec(any::<u64>(), 0..9),
                     b in prop::collection::vec(any::<u64>(), 1..5)) {
        let f = field(p, k);
        let u = poly(&f, &a);
        let v = poly(&f, &b);
        prop_assume!(!v.is_zero());
        let (q, r) = u.div_rem(&v).unwrap();
        prop_assert_eq!(q.mul(&v).add(&r), u.clone());
        prop_assert!(r.is_zero() || r.degree() < v.degree());
        let g = poly_gcd(&u, &v).unwrap();
        prop_assert!(g.divides(&v).unwrap());
        prop_assert!(g.is_zero() || g.divides(&u).unwrap());
    }

    #[test]
    fn text_round_trip((p, k) in pk(), a in prop::collection::vec(any::<u64>(), 0..9)) {
        let f = field(p, k);
        let u = poly(&f, &a);
        prop_assert_eq!(Poly::parse(&f, &u.to_string()).unwrap(), u);
    }

    #[test]
    fn crt_meets_every_congruence(r0 in any::<u64>(), r1 in any::<u64>(), r2 in any::<u64>()) {
        // pairwise coprime factors of X^10+1 over F_3
        let f = field(3, 1);
        let ms = ["X^2+1", "X^4+X^3+2X+1", "X^4+2X^3+X+1"].map(|s| Poly::parse(&f, s).unwrap());
        let rs = [poly(&f, &[r0]), poly(&f, &[r1, r1 / 3]), poly(&f, &[r2, r2 / 5, r2 / 7])];
        let system: Vec<(Poly, Poly)> = rs.iter().cloned().zip(ms.iter().cloned()).collect();
        let x = crt_combine(&system).unwrap();
        for (r, m) in rs.iter().zip(&ms) {
            prop_assert_eq!(x.rem(m).unwrap(), r.rem(m).unwrap());
        }
    }

    #[test]
    fn ring_laws((p, k) in pk(), n in prop::sample::select(vec![2usize, 4, 10, 14]),
                 a in prop::collection::vec(any::<u64>(), 14), b in prop::collection::vec(any::<u64>(), 14)) {
        prop_assume!(!(n as u64).is_multiple_of(p));
        let f = field(p, k);
        let u = RingElem::from_poly(&poly(&f, &a[..n]), n).unwrap();
        let v = RingElem::from_poly(&poly(&f, &b[..n]), n).unwrap();
        prop_assert_eq!(&u * &v, &v * &u);
        // X^n = -1
        let xn = RingElem::x_pow(&f, n, n).unwrap();
        prop_assert_eq!(&xn + &RingElem::one(&f, n).unwrap(), RingElem::zero(&f, n).unwrap());
        // the two substitutions are ring involutions that commute
        prop_assert_eq!(u.substitute_inv().substitute_inv(), u.clone());
        prop_assert_eq!((&u * &v).substitute_inv(), &u.substitute_inv() * &v.substitute_inv());
        prop_assert_eq!(u.substitute_neg().substitute_inv(), u.substitute_inv().substitute_neg());
    }

    #[test]
    fn symplectic_form(p in prop::sample::select(vec![3u32, 5, 7]), n in 1usize..7, seed in any::<u64>()) {
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) % p as u64) as u32 };
        let mut vec = |n: usize| VectorPair::new((0..n).map(|_| next()).collect(), (0..n).map(|_| next()).collect()).unwrap();
        let u = vec(n);
        let v = vec(n);
        let uv = symplectic(&u, &v, p).unwrap();
        let vu = symplectic(&v, &u, p).unwrap();
        prop_assert_eq!((uv + vu) % p, 0);
        prop_assert_eq!(symplectic(&u, &u, p).unwrap(), 0);
        // the shift is a signed permutation, so it preserves the form and the weight
        let (nu, nv) = (negacyclic_shift(&u, p), negacyclic_shift(&v, p));
        prop_assert_eq!(symplectic(&nu, &nv, p).unwrap(), uv);
        prop_assert_eq!(joint_weight(&nu), joint_weight(&u));
    }
}

#[test]
fn spec_files_round_trip_across_a_search() {
    for p in [3u64, 5, 7] {
        let out = search(&SearchConfig::new(p, 30)).unwrap();
        assert!(!out.reports.is_empty());
        for r in &out.reports {
            let text = toml::to_string(&r.spec.to_file()).unwrap();
            let file: SpecFile = toml::from_str(&text).unwrap();
            assert_eq!(file.to_spec().unwrap(), r.spec);
        }
    }
}
