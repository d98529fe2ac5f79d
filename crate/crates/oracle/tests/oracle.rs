use proptest::prelude::*;
use rm_infoset_oracle::*;

/// Irreducibility by trial division over all polynomials of degree <= m/2,
/// and primitivity by checking that x^((2^m-1)/q) != 1 for every prime q.
fn slow_is_primitive(m: u32, p: u64) -> bool {
    fn pmod(mut a: u64, b: u64) -> u64 {
        let db = 63 - b.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= db {
            a ^= b << (63 - a.leading_zeros() - db);
        }
        a
    }
    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        let mut r = 0;
        for i in 0..64 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        // product of two residues fits because m <= 16
        pmod(r, p)
    }
    fn powmod(x: u64, mut e: u64, p: u64) -> u64 {
        let (mut base, mut acc) = (x, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, p);
            }
            base = mulmod(base, base, p);
            e >>= 1;
        }
        acc
    }
    for d in 2u64..1 << (m / 2 + 1) {
        if pmod(p, d) == 0 {
            return false;
        }
    }
    let n = (1u64 << m) - 1;
    let primes: Vec<u64> = (2..=n)
        .filter(|&q| n % q == 0 && (2..q).all(|f| q % f != 0))
        .collect();
    primes.iter().all(|&q| powmod(2, n / q, p) != 1)
}

#[test]
fn smallest_primitive_polynomials_match_exhaustive_scan() {
    assert_eq!(build_field(4).unwrap().polynomial(), 0b10011);
    assert_eq!(build_field(6).unwrap().polynomial(), 0b1000011);
    for m in 2..=12 {
        let expected = (1u64 << m..1u64 << (m + 1))
            .find(|&p| slow_is_primitive(m, p))
            .unwrap();
        assert_eq!(
            build_field(m).unwrap().polynomial() as u64,
            expected,
            "m = {m}"
        );
        let all: Vec<u64> = (1u64 << m..1u64 << (m + 1))
            .filter(|&p| slow_is_primitive(m, p))
            .collect();
        let listed: Vec<u64> = primitive_polynomials(m)
            .unwrap()
            .iter()
            .map(|&p| p as u64)
            .collect();
        assert_eq!(listed, all, "m = {m}");
    }
}

#[test]
fn code_dimensions_from_parity_checks() {
    let f4 = build_field(4).unwrap();
    let h = parity_check_matrix(&f4, &rm_full_defining_set(4, 1)).unwrap();
    assert_eq!(16 - h.rank(), 5);
    let f6 = build_field(6).unwrap();
    let h = parity_check_matrix(&f6, &rm_full_defining_set(6, 2)).unwrap();
    assert_eq!(64 - h.rank(), 22);
    for m in 2..=8 {
        let f = build_field(m).unwrap();
        let h = parity_check_matrix(&f, &[0]).unwrap();
        let code = h.nullspace();
        assert_eq!(code.rows(), (1 << m) - 1);
        assert!(code
            .row_space_eq(&evaluation_generator(&f, m - 1).unwrap())
            .unwrap());
    }
}

#[test]
fn evaluation_code_equals_parity_nullspace() {
    for m in 3..=8 {
        let f = build_field(m).unwrap();
        for rho in 1..=m - 2 {
            let g = evaluation_generator(&f, rho).unwrap();
            let h = parity_check_matrix(&f, &rm_full_defining_set(m, rho)).unwrap();
            assert!(generates_nullspace(&g, &h).unwrap(), "m = {m}, rho = {rho}");
            if m <= 6 {
                assert!(g.row_space_eq(&h.nullspace()).unwrap());
            }
            assert!(verify_duality(&f, rho).unwrap());
        }
    }
    let f4 = build_field(4).unwrap();
    let g = evaluation_generator(&f4, 1).unwrap();
    assert_eq!(g.rank(), 5);
}

fn columns(exps: &[usize]) -> Vec<usize> {
    std::iter::once(0)
        .chain(exps.iter().map(|e| e + 1))
        .collect()
}

#[test]
fn verdicts_do_not_depend_on_the_primitive_polynomial() {
    // information sets found from the CRT isomorphism for small codes
    let cases: &[(u32, u32, &[usize])] = &[
        (4, 1, &[0, 1, 6, 10]),
        (4, 2, &[0, 1, 2, 3, 5, 6, 7, 10, 11, 12]),
        (6, 1, &[0, 1, 9, 28, 36, 37]),
        (
            6,
            2,
            &[
                0, 1, 2, 9, 10, 11, 18, 19, 21, 28, 29, 30, 36, 37, 38, 45, 46, 47, 54, 56, 57,
            ],
        ),
    ];
    for &(m, rho, exps) in cases {
        let verdicts: Vec<bool> = primitive_polynomials(m)
            .unwrap()
            .into_iter()
            .map(|p| {
                let f = FieldGF2m::with_polynomial(m, p).unwrap();
                let g = evaluation_generator(&f, rho).unwrap();
                let h = parity_check_matrix(&f, &rm_full_defining_set(m, rho)).unwrap();
                let info = columns(exps);
                let by_gen = is_information_set(&g, &info).unwrap().holds;
                let by_parity = is_check_set(&h, &complement(&info, 1 << m)).unwrap().holds;
                assert_eq!(by_gen, by_parity);
                by_gen
            })
            .collect();
        assert!(
            verdicts.windows(2).all(|w| w[0] == w[1]),
            "m = {m}, {exps:?}"
        );
    }
}

#[test]
fn sets_outside_the_construction_can_depend_on_the_polynomial() {
    let verdicts: Vec<bool> = primitive_polynomials(4)
        .unwrap()
        .into_iter()
        .map(|p| {
            let f = FieldGF2m::with_polynomial(4, p).unwrap();
            let g = evaluation_generator(&f, 1).unwrap();
            is_information_set(&g, &columns(&[0, 6, 8, 10]))
                .unwrap()
                .holds
        })
        .collect();
    assert_eq!(verdicts, vec![true, false]);
}

#[test]
fn whole_space_has_every_position_as_information_set() {
    let all: Vec<usize> = (0..16).collect();
    let v = is_information_set(&BinaryMatrix::identity(16), &all).unwrap();
    assert!(v.holds);
}

#[test]
fn minimum_distances_of_small_codes() {
    for m in 3..=5 {
        let f = build_field(m).unwrap();
        for rho in 0..m {
            let g = evaluation_generator(&f, rho).unwrap();
            if g.rank() <= 20 {
                assert_eq!(minimum_distance(&g), Some(1 << (m - rho)));
            }
        }
    }
}

#[test]
fn matrix_text_export() {
    let f = build_field(3).unwrap();
    let g = evaluation_generator(&f, 1).unwrap();
    let text = g.to_text();
    assert_eq!(text.lines().next(), Some("4 8"));
    assert_eq!(BinaryMatrix::from_text(&text).unwrap(), g);
}

fn matrix_strategy() -> impl Strategy<Value = BinaryMatrix> {
    (1usize..40, 1usize..150).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c)
            .prop_map(move |bits| BinaryMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
    })
}

proptest! {
    #[test]
    fn rank_is_invariant_under_row_permutations(m in matrix_strategy(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..m.rows()).collect();
        let mut s = seed | 1;
        for i in (1..order.len()).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let permuted = BinaryMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(order[i], j));
        prop_assert_eq!(permuted.rank(), m.rank());
        prop_assert_eq!(m.rank(), m.rank());
    }

    #[test]
    fn rref_is_stable(m in matrix_strategy()) {
        let (once, pivots) = m.rref();
        let (twice, pivots2) = once.rref();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(pivots, pivots2);
        prop_assert!(m.rank() <= m.rows().min(m.cols()));
    }

    #[test]
    fn nullspace_complements_rank(m in matrix_strategy()) {
        let ns = m.nullspace();
        prop_assert_eq!(ns.rows() + m.rank(), m.cols());
        prop_assert!(m.mul_transpose(&ns).unwrap().is_zero());
        prop_assert_eq!(m.independent_rows().len(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }
}
