//! The characteristic map between class functions on `Γ_n` and degree-`n`
//! symmetric functions, its inverse, irreducible characters of `Γ_n` and
//! their degrees.
//!
//! Everything here works on the type-indexed class data of [`WreathClasses`],
//! so none of it needs the wreath product's multiplication table.

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::{factorial, TypeFunction};
use crate::error::{Error, Result};
use crate::groups::{BaseGroup, ClassFunction, GroupTable};
use crate::scalars::{Rational, Scalar};
use crate::symfun::{schur_multi, sn_degree, to_class_basis, Alphabet, BasisTag, Monomial, SymFunc};
use crate::wreath::WreathClasses;

/// `ch(f) = Σ_ρ Z_ρ^{-1} f_ρ P_ρ` in the class basis.
pub fn ch_classes(classes: &WreathClasses, f: &ClassFunction) -> Result<SymFunc> {
    if f.group() != classes.id() {
        return Err(Error::GroupMismatch);
    }
    let alphabet = Alphabet::class(classes.num_base_classes());
    let mut out = SymFunc::zero(alphabet);
    for (k, rho) in classes.types().iter().enumerate() {
        let v = f.value(k);
        if v.is_zero() {
            continue;
        }
        let z = Rational::from_integer(classes.centralizer(k).clone().into());
        out.add_term(Monomial::from_type(rho), &v.div_rational(&z));
    }
    Ok(out)
}

/// [`ch_classes`] on a group table, which must be a wreath product.
pub fn ch(group: &GroupTable, f: &ClassFunction) -> Result<SymFunc> {
    let classes = group.wreath().ok_or(Error::NotWreath)?;
    ch_classes(classes, f)
}

/// The class function with `ch(result) = f`: `f_ρ = Z_ρ · [P_ρ] f`.
pub fn ch_inverse(classes: &WreathClasses, f: &SymFunc) -> Result<ClassFunction> {
    if f.basis() != BasisTag::Class || f.alphabet().size != classes.num_base_classes() {
        return Err(Error::BasisMismatch);
    }
    let n = classes.n();
    if !f.is_homogeneous(n) {
        let bad = f.degrees().into_iter().find(|&d| d != n).unwrap_or(n);
        return Err(Error::NotHomogeneous(bad));
    }
    let mut values = vec![Scalar::zero(); classes.num_classes()];
    for (m, c) in f.terms() {
        let k = classes
            .type_index(&m.to_type())
            .ok_or_else(|| Error::UnknownType(m.to_type().to_string()))?;
        let z = Rational::from_integer(classes.centralizer(k).clone().into());
        values[k] = c.scale(&z);
    }
    Ok(ClassFunction::new(classes.id(), values))
}

/// The irreducible character `χ^Λ` of `Γ_n` whose image is `s_Λ`.
pub fn irreducible_character(base: &BaseGroup, classes: &WreathClasses, lambda: &TypeFunction) -> Result<ClassFunction> {
    if classes.base_id() != base.table.id() {
        return Err(Error::GroupMismatch);
    }
    if lambda.norm() != classes.n() {
        return Err(Error::DegreeMismatch(lambda.norm(), classes.n()));
    }
    let s = schur_multi(lambda, Alphabet::character(base.num_irreducibles()))?;
    ch_inverse(classes, &to_class_basis(base, &s)?)
}

/// `n! ∏_γ d_γ^{n_γ} f^{Λ(γ)} / n_γ!`, the degree of `χ^Λ`.
pub fn degree_formula(base: &BaseGroup, lambda: &TypeFunction) -> Result<BigUint> {
    if lambda.max_key().is_some_and(|k| k >= base.num_irreducibles()) {
        return Err(Error::UnknownType(lambda.to_string()));
    }
    let n = lambda.norm();
    if n > crate::combinatorics::MAX_TYPE_SIZE {
        return Err(Error::bound("type size", n as u64, crate::combinatorics::MAX_TYPE_SIZE as u64));
    }
    let degrees = base.chars.degrees();
    let mut num = factorial(n);
    let mut den = BigUint::one();
    for (gamma, p) in lambda.iter() {
        let f = sn_degree(p)?;
        num *= BigUint::from(degrees[gamma]).pow(p.size() as u32) * BigUint::from(f as u64);
        den *= factorial(p.size());
    }
    Ok(num / den)
}
