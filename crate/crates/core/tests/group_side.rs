//! Group-side constructions checked against known values and against the
//! symmetric-function side.

use wreath_fock::combinatorics::enumerate_types;
use wreath_fock::groups::{builtin, inner_product};
use wreath_fock::oracle::{heisenberg_group_side, Oracle};
use wreath_fock::symfun::{to_character_basis, Alphabet};
use wreath_fock::{ch, degree_formula, irreducible_character, Error, Scalar, SymFunc, DEFAULT_CAP};

#[test]
fn creation_on_trivial_character_of_degree_one() {
    let z2 = builtin("cyclic(2)").unwrap();
    let o = Oracle::new(z2.clone(), DEFAULT_CAP);
    let (g1, g2) = (o.group(1).unwrap(), o.group(2).unwrap());
    let triv = z2.chars.rows()[0].clone();
    let triv = wreath_fock::ClassFunction::new(g1.id(), triv.values().to_vec());
    let created = heisenberg_group_side(&z2, -1, 0, 1, &triv, DEFAULT_CAP).unwrap();
    let a = Alphabet::character(2);
    let lhs = to_character_basis(&z2, &ch(&g2, &created).unwrap()).unwrap();
    let rhs = SymFunc::p(a, 0, 1).mul(&to_character_basis(&z2, &ch(&g1, &triv).unwrap()).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    // p_1(g0)^2 = s_(2)(g0) + s_(1,1)(g0): the induced character has degree 2
    assert_eq!(created.value(g2.identity_class()), &Scalar::from_int(2));
}

#[test]
fn annihilation_on_degree_one_is_the_pairing() {
    for name in ["cyclic(3)", "sym(3)"] {
        let base = builtin(name).unwrap();
        let o = Oracle::new(base.clone(), DEFAULT_CAP);
        let g1 = o.group(1).unwrap();
        let g0 = o.group(0).unwrap();
        for (gamma, row) in base.chars.rows().iter().enumerate() {
            for c in 0..g1.num_classes() {
                let f = g1.class_indicator(c);
                let out = o.heisenberg(1, gamma, 1, &f).unwrap();
                let lifted = wreath_fock::ClassFunction::new(g1.id(), row.values().to_vec());
                assert_eq!(out.values(), &[inner_product(&g1, &lifted, &f).unwrap()], "{name} {gamma} {c}");
                assert_eq!(out.group(), g0.id());
            }
        }
    }
}

#[test]
fn annihilation_needs_enough_degree() {
    let z2 = builtin("cyclic(2)").unwrap();
    let o = Oracle::new(z2, DEFAULT_CAP);
    let f = o.group(1).unwrap().class_indicator(0);
    assert!(matches!(o.heisenberg(2, 0, 1, &f), Err(Error::DegreeTooSmall { .. })));
}

#[test]
fn irreducible_characters_have_predicted_degrees_and_are_orthonormal() {
    for (name, n) in [("cyclic(2)", 3), ("cyclic(3)", 2), ("sym(3)", 2), ("klein4", 2)] {
        let base = builtin(name).unwrap();
        let o = Oracle::new(base.clone(), DEFAULT_CAP);
        let g = o.group(n).unwrap();
        let wc = g.wreath().unwrap();
        let types = enumerate_types(n, base.num_irreducibles()).unwrap();
        let chars: Vec<_> = types.iter().map(|t| irreducible_character(&base, wc, t).unwrap()).collect();
        let mut sum_sq = num_bigint::BigUint::from(0u32);
        for (i, (t, chi)) in types.iter().zip(&chars).enumerate() {
            let d = degree_formula(&base, t).unwrap();
            assert_eq!(chi.value(g.identity_class()).to_string(), d.to_string(), "{name} {t}");
            sum_sq += &d * &d;
            for (j, psi) in chars.iter().enumerate() {
                let expected = Scalar::from_int((i == j) as i64);
                assert_eq!(inner_product(&g, chi, psi).unwrap(), expected, "{name} {i} {j}");
            }
        }
        assert_eq!(sum_sq, num_bigint::BigUint::from(g.size()));
    }
}
