//! The Fock space as an exact sparse polynomial algebra in power sums
//! `p_r(x)`, over alphabets indexed either by conjugacy classes (class basis)
//! or by irreducible characters (character basis).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::{enumerate_partitions, z_of, Partition, TypeFunction, MAX_TYPE_SIZE};
use crate::error::{Error, Result};
use crate::groups::BaseGroup;
use crate::scalars::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum BasisTag {
    /// Power sums `p_r(c)`, `c ∈ Γ_*`.
    Class,
    /// Power sums `p_r(γ)`, `γ ∈ Γ^*`.
    Character,
}

/// Which generators a [`SymFunc`] is written in: a basis tag and the number of letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub basis: BasisTag,
    pub size: usize,
}

impl Alphabet {
    pub fn class(size: usize) -> Self {
        Alphabet { basis: BasisTag::Class, size }
    }

    pub fn character(size: usize) -> Self {
        Alphabet { basis: BasisTag::Character, size }
    }

    /// A single character-basis letter, the symmetric-group setting.
    pub fn single() -> Self {
        Self::character(1)
    }

    fn label(&self, a: usize) -> String {
        match self.basis {
            BasisTag::Class => format!("c{a}"),
            BasisTag::Character => format!("g{a}"),
        }
    }
}

/// A monomial `∏ p_r(a)^{m}`, stored as `(letter, degree, multiplicity)`
/// triples sorted by `(letter, degree)` with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(usize, usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn power_sum(letter: usize, r: usize) -> Self {
        assert!(r >= 1, "power sums start at degree 1");
        Monomial(vec![(letter, r, 1)])
    }

    /// `P_ρ = ∏_a p_{ρ(a)}(a)`.
    pub fn from_type(rho: &TypeFunction) -> Self {
        let mut v = Vec::new();
        for (a, p) in rho.iter() {
            for (r, m) in p.multiplicities() {
                v.push((a, r, m as u32));
            }
        }
        Monomial(v)
    }

    /// Inverse of [`Monomial::from_type`].
    pub fn to_type(&self) -> TypeFunction {
        let mut by_letter: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for &(a, r, m) in &self.0 {
            by_letter.entry(a).or_default().push((r, m as usize));
        }
        TypeFunction::from_pairs(by_letter.into_iter().map(|(a, ms)| (a, Partition::from_multiplicities(&ms))))
    }

    pub fn factors(&self) -> &[(usize, usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Grading `Σ r·m`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, r, m)| r * m as usize).sum()
    }

    pub fn exponent(&self, letter: usize, r: usize) -> u32 {
        match self.0.binary_search_by(|&(a, s, _)| (a, s).cmp(&(letter, r))) {
            Ok(i) => self.0[i].2,
            Err(_) => 0,
        }
    }

    pub fn with_exponent(&self, letter: usize, r: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        match v.binary_search_by(|&(a, s, _)| (a, s).cmp(&(letter, r))) {
            Ok(i) if e == 0 => {
                v.remove(i);
            }
            Ok(i) => v[i].2 = e,
            Err(_) if e == 0 => {}
            Err(i) => v.insert(i, (letter, r, e)),
        }
        Monomial(v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j >= other.0.len()
                || (i < self.0.len() && (self.0[i].0, self.0[i].1) <= (other.0[j].0, other.0[j].1));
            if take_left {
                let (a, r, m) = self.0[i];
                if j < other.0.len() && (other.0[j].0, other.0[j].1) == (a, r) {
                    out.push((a, r, m + other.0[j].2));
                    j += 1;
                } else {
                    out.push((a, r, m));
                }
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        Monomial(out)
    }

    /// The partition `μ(a)` of degrees carried by `letter`.
    pub fn partition_of(&self, letter: usize) -> Partition {
        let ms: Vec<(usize, usize)> = self
            .0
            .iter()
            .filter(|f| f.0 == letter)
            .map(|&(_, r, m)| (r, m as usize))
            .collect();
        Partition::from_multiplicities(&ms)
    }

    /// `∏_a z_{μ(a)}`.
    pub fn z(&self) -> BigUint {
        self.to_type().iter().fold(BigUint::one(), |acc, (_, p)| acc * z_of(p))
    }

    fn render(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(a, r, m)| {
                if m == 1 {
                    format!("p{r}({})", alphabet.label(a))
                } else {
                    format!("p{r}({})^{m}", alphabet.label(a))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::character(usize::MAX)))
    }
}

/// An exact polynomial in power sums.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SymFunc {
    pub fn zero(alphabet: Alphabet) -> Self {
        SymFunc {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, Monomial::one(), Scalar::one())
    }

    pub fn constant(alphabet: Alphabet, c: Scalar) -> Self {
        Self::monomial(alphabet, Monomial::one(), c)
    }

    pub fn monomial(alphabet: Alphabet, m: Monomial, c: Scalar) -> Self {
        let mut f = Self::zero(alphabet);
        f.add_term(m, &c);
        f
    }

    /// `p_r(letter)`.
    pub fn p(alphabet: Alphabet, letter: usize, r: usize) -> Self {
        assert!(letter < alphabet.size, "letter {letter} outside alphabet of size {}", alphabet.size);
        Self::monomial(alphabet, Monomial::power_sum(letter, r), Scalar::one())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn basis(&self) -> BasisTag {
        self.alphabet.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &SymFunc) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> SymFunc {
        let mut out = SymFunc::zero(self.alphabet);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * s));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> SymFunc {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check(other)?;
        let mut out = SymFunc::zero(self.alphabet);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> SymFunc {
        let mut acc = SymFunc::one(self.alphabet);
        for _ in 0..e {
            acc = acc.mul(self).expect("same alphabet");
        }
        acc
    }

    /// Total degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Monomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn graded_part(&self, degree: usize) -> SymFunc {
        SymFunc {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear substitution of every generator `p_r(a)` by `image(a, r)`.
    pub fn substitute(&self, target: Alphabet, mut image: impl FnMut(usize, usize) -> SymFunc) -> SymFunc {
        let mut cache: HashMap<(usize, usize, u32), SymFunc> = HashMap::new();
        let mut out = SymFunc::zero(target);
        for (m, c) in &self.terms {
            let mut acc = SymFunc::constant(target, c.clone());
            for &(a, r, e) in m.factors() {
                let key = (a, r, e);
                cache.entry(key).or_insert_with(|| {
                    let img = image(a, r);
                    debug_assert_eq!(img.alphabet, target);
                    img.pow(e)
                });
                acc = acc.mul(&cache[&key]).expect("same alphabet");
            }
            for (m2, c2) in acc.terms {
                out.add_term(m2, &c2);
            }
        }
        out
    }
}

impl fmt::Display for SymFunc {
    /// Deterministic text form, terms by ascending degree, e.g.
    /// `1/2*p1(g0)^2 + 1/2*p2(g0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(b.0)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mono = m.render(&self.alphabet);
            let (neg, mag) = match c.as_rational() {
                Ok(r) if r < Rational::from_integer(0.into()) => (true, Scalar::from_rational(-r)),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let coeff = if mag.is_rational() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if m.is_one() {
                f.write_str(&coeff)?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn mul(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    f.mul(g)
}

/// The bilinear form on the Fock space.
///
/// Character basis: power-sum monomials are orthogonal with
/// `⟨p_μ, p_μ⟩ = ∏_γ z_{μ(γ)}`. Class basis: `⟨P_ρ, P_σ⟩ = δ_{σ,ρ*} Z_ρ`
/// with `ρ*(c) = ρ(c^{-1})`, which makes the characteristic map an isometry
/// for the form `Σ_c ζ_c^{-1} f(c) g(c^{-1})` also when classes are not
/// self-inverse.
pub fn form(base: &BaseGroup, f: &SymFunc, g: &SymFunc) -> Result<Scalar> {
    f.check(g)?;
    let mut acc = Scalar::zero();
    match f.basis() {
        BasisTag::Character => {
            for (m, c) in f.terms() {
                let d = g.coefficient(m);
                if !d.is_zero() {
                    acc += &(c * &d).scale(&Rational::from_integer(m.z().into()));
                }
            }
        }
        BasisTag::Class => {
            if f.alphabet.size != base.num_classes() {
                return Err(Error::BasisMismatch);
            }
            let zeta = base.table.zeta();
            for (m, c) in f.terms() {
                let rho = m.to_type();
                let star = Monomial::from_type(&rho.map_keys(|k| base.table.class_inv(k)));
                let d = g.coefficient(&star);
                if !d.is_zero() {
                    let z = crate::combinatorics::big_z(&rho, zeta);
                    acc += &(c * &d).scale(&Rational::from_integer(z.into()));
                }
            }
        }
    }
    Ok(acc)
}

/// `p_r(c) = Σ_γ γ(c^{-1}) p_r(γ)`.
pub fn to_character_basis(base: &BaseGroup, f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != BasisTag::Class || f.alphabet.size != base.num_classes() {
        return Err(Error::BasisMismatch);
    }
    let target = Alphabet::character(base.num_irreducibles());
    Ok(f.substitute(target, |c, r| {
        let mut img = SymFunc::zero(target);
        let ci = base.table.class_inv(c);
        for gamma in 0..base.num_irreducibles() {
            img.add_term(Monomial::power_sum(gamma, r), base.chars.value(gamma, ci));
        }
        img
    }))
}

/// `p_r(γ) = Σ_c ζ_c^{-1} γ(c) p_r(c)`.
pub fn to_class_basis(base: &BaseGroup, f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != BasisTag::Character || f.alphabet.size != base.num_irreducibles() {
        return Err(Error::BasisMismatch);
    }
    let target = Alphabet::class(base.num_classes());
    let zeta = base.table.zeta();
    Ok(f.substitute(target, |gamma, r| {
        let mut img = SymFunc::zero(target);
        for (c, &z) in zeta.iter().enumerate() {
            let coeff = base.chars.value(gamma, c).div_rational(&Rational::from_integer(z.into()));
            img.add_term(Monomial::power_sum(c, r), &coeff);
        }
        img
    }))
}

/// The symmetric-group character `χ^λ(μ)` by the Murnaghan–Nakayama rule.
///
/// Works on beta-sets: removing a border strip of length `r` moves a bead
/// from position `b` to the free position `b - r`, with sign
/// `(-1)^{beads strictly between}`.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut memo = HashMap::new();
    Ok(mn_beta(beta, mu.parts(), &mut memo))
}

fn mn_beta(beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `f^λ = χ^λ(1^n)`.
pub fn sn_degree(lambda: &Partition) -> Result<i64> {
    sn_character(lambda, &Partition::new(vec![1; lambda.size()]))
}

/// `s_λ = Σ_μ z_μ^{-1} χ^λ_μ p_μ` on a single letter.
pub fn schur(lambda: &Partition, letter: usize, alphabet: Alphabet) -> Result<SymFunc> {
    let n = lambda.size();
    if n > MAX_TYPE_SIZE {
        return Err(Error::bound("Schur function degree", n as u64, MAX_TYPE_SIZE as u64));
    }
    let mut out = SymFunc::zero(alphabet);
    for mu in enumerate_partitions(n)? {
        let chi = sn_character(lambda, &mu)?;
        if chi == 0 {
            continue;
        }
        let coeff = Rational::new(chi.into(), z_of(&mu).into());
        let m = Monomial::from_type(&TypeFunction::from_pairs([(letter, mu)]));
        out.add_term(m, &Scalar::from_rational(coeff));
    }
    Ok(out)
}

/// `s_Λ = ∏_γ s_{Λ(γ)}(γ)` in the character basis.
pub fn schur_multi(lambda: &TypeFunction, alphabet: Alphabet) -> Result<SymFunc> {
    if lambda.norm() > MAX_TYPE_SIZE {
        return Err(Error::bound("Schur function degree", lambda.norm() as u64, MAX_TYPE_SIZE as u64));
    }
    if lambda.max_key().is_some_and(|k| k >= alphabet.size) {
        return Err(Error::BasisMismatch);
    }
    let mut out = SymFunc::one(alphabet);
    for (gamma, p) in lambda.iter() {
        out = out.mul(&schur(p, gamma, alphabet)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_types;
    use crate::groups::builtin;
    use crate::scalars::rat;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn half() -> Scalar {
        Scalar::from_rational(rat(1, 2))
    }

    #[test]
    fn products() {
        let a = Alphabet::single();
        let p1 = SymFunc::p(a, 0, 1);
        let p2 = SymFunc::p(a, 0, 2);
        assert_eq!(p1.mul(&p1).unwrap(), p1.pow(2));
        let x = p1.pow(2).add(&p2).unwrap();
        let y = p1.pow(2).sub(&p2).unwrap();
        let lhs = x.mul(&y).unwrap().scale(&Scalar::from_rational(rat(1, 4)));
        let rhs = p1.pow(4).sub(&p2.pow(2)).unwrap().scale(&Scalar::from_rational(rat(1, 4)));
        assert_eq!(lhs, rhs);
        let other = SymFunc::p(Alphabet::class(1), 0, 1);
        assert_eq!(p1.mul(&other), Err(Error::BasisMismatch));
    }

    #[test]
    fn form_examples() {
        let triv = builtin("trivial").unwrap();
        let a = Alphabet::single();
        let p11 = SymFunc::p(a, 0, 1).pow(2);
        let p2 = SymFunc::p(a, 0, 2);
        assert_eq!(form(&triv, &p11, &p11).unwrap(), Scalar::from_int(2));
        assert!(form(&triv, &p2, &p11).unwrap().is_zero());

        let z2 = builtin("cyclic(2)").unwrap();
        let ca = Alphabet::class(2);
        let p = SymFunc::p(ca, 0, 1).pow(2).mul(&SymFunc::p(ca, 1, 2)).unwrap();
        assert_eq!(form(&z2, &p, &p).unwrap(), Scalar::from_int(32));
    }

    #[test]
    fn basis_change_examples() {
        let triv = builtin("trivial").unwrap();
        let f = SymFunc::p(Alphabet::class(1), 0, 2).add(&SymFunc::p(Alphabet::class(1), 0, 1)).unwrap();
        let g = to_character_basis(&triv, &f).unwrap();
        assert_eq!(g.to_string(), "p1(g0) + p2(g0)");
        assert_eq!(to_class_basis(&triv, &g).unwrap(), f);

        let z2 = builtin("cyclic(2)").unwrap();
        let p1c1 = SymFunc::p(Alphabet::class(2), 1, 1);
        assert_eq!(to_character_basis(&z2, &p1c1).unwrap().to_string(), "p1(g0) - p1(g1)");
        assert!(to_class_basis(&z2, &p1c1).is_err());
    }

    #[test]
    fn basis_change_round_trip_and_isometry() {
        for name in ["cyclic(2)", "cyclic(3)", "sym(3)", "klein4"] {
            let base = builtin(name).unwrap();
            let k = base.num_classes();
            let a = Alphabet::class(k);
            let mut seed: u64 = 17;
            let mut next = || {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((seed >> 33) % 7) as i64 - 3
            };
            for _ in 0..10 {
                let mut f = SymFunc::zero(a);
                let mut g = SymFunc::zero(a);
                for d in 0..=4 {
                    for t in enumerate_types(d, k).unwrap() {
                        f.add_term(Monomial::from_type(&t), &Scalar::from_int(next()));
                        g.add_term(Monomial::from_type(&t), &Scalar::from_int(next()));
                    }
                }
                let fc = to_character_basis(&base, &f).unwrap();
                let gc = to_character_basis(&base, &g).unwrap();
                assert_eq!(to_class_basis(&base, &fc).unwrap(), f, "{name}");
                assert_eq!(form(&base, &f, &g).unwrap(), form(&base, &fc, &gc).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn characters_of_symmetric_groups() {
        for n in 1..=7 {
            for mu in enumerate_partitions(n).unwrap() {
                assert_eq!(sn_character(&part(&[n]), &mu).unwrap(), 1);
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(sn_character(&Partition::new(vec![1; n]), &mu).unwrap(), sign);
            }
        }
        assert_eq!(sn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sn_character(&part(&[2, 1]), &part(&[3])).unwrap(), -1);
        assert_eq!(sn_character(&part(&[2, 1]), &part(&[2, 1])).unwrap(), 0);
        assert_eq!(sn_character(&part(&[2, 1]), &part(&[2])), Err(Error::SizeMismatch(3, 2)));
    }

    /// Hook-length formula, independent of Murnaghan–Nakayama.
    fn hook_degree(lambda: &Partition) -> i64 {
        let conj = lambda.conjugate();
        let n = lambda.size() as i64;
        let mut hooks: i64 = 1;
        for (i, &row) in lambda.parts().iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1 + conj.parts()[j] - i - 1 + 1) as i64;
            }
        }
        (1..=n).product::<i64>() / hooks
    }

    #[test]
    fn degrees_match_hook_lengths() {
        for n in 1..=8 {
            let mut sum_sq = 0;
            for lambda in enumerate_partitions(n).unwrap() {
                let d = sn_degree(&lambda).unwrap();
                assert_eq!(d, hook_degree(&lambda), "{lambda}");
                sum_sq += d * d;
            }
            assert_eq!(sum_sq, (1..=n as i64).product::<i64>());
        }
    }

    #[test]
    fn column_orthogonality_of_sn_tables() {
        for n in 1..=6 {
            let ps = enumerate_partitions(n).unwrap();
            for mu in &ps {
                for nu in &ps {
                    let s: i64 = ps
                        .iter()
                        .map(|l| sn_character(l, mu).unwrap() * sn_character(l, nu).unwrap())
                        .sum();
                    let expected = if mu == nu { i64::try_from(z_of(mu)).unwrap() } else { 0 };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn schur_expansions() {
        let a = Alphabet::single();
        assert_eq!(schur(&part(&[1]), 0, a).unwrap(), SymFunc::p(a, 0, 1));
        let p11 = SymFunc::p(a, 0, 1).pow(2);
        let p2 = SymFunc::p(a, 0, 2);
        assert_eq!(schur(&part(&[2]), 0, a).unwrap(), p11.add(&p2).unwrap().scale(&half()));
        assert_eq!(schur(&part(&[1, 1]), 0, a).unwrap(), p11.sub(&p2).unwrap().scale(&half()));
        assert_eq!(schur(&part(&[2]), 0, a).unwrap().to_string(), "1/2*p1(g0)^2 + 1/2*p2(g0)");
    }

    #[test]
    fn multi_schur() {
        let a = Alphabet::character(2);
        assert_eq!(schur_multi(&TypeFunction::new(), a).unwrap(), SymFunc::one(a));
        let lam = TypeFunction::from_slice(&[part(&[1]), part(&[1])]);
        assert_eq!(
            schur_multi(&lam, a).unwrap(),
            SymFunc::p(a, 0, 1).mul(&SymFunc::p(a, 1, 1)).unwrap()
        );
        let lam = TypeFunction::from_slice(&[part(&[2])]);
        let expected = SymFunc::p(a, 0, 1).pow(2).add(&SymFunc::p(a, 0, 2)).unwrap().scale(&half());
        assert_eq!(schur_multi(&lam, a).unwrap(), expected);
    }

    #[test]
    fn schur_orthonormality() {
        for k in 1..=3 {
            let base = builtin(if k == 1 { "trivial" } else if k == 2 { "cyclic(2)" } else { "sym(3)" }).unwrap();
            let a = Alphabet::character(k);
            for n in 0..=4 {
                let lams = enumerate_types(n, k).unwrap();
                let s: Vec<_> = lams.iter().map(|l| schur_multi(l, a).unwrap()).collect();
                for (i, si) in s.iter().enumerate() {
                    for (j, sj) in s.iter().enumerate() {
                        let v = form(&base, si, sj).unwrap();
                        assert_eq!(v, Scalar::from_int((i == j) as i64), "k={k} {} {}", lams[i], lams[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn grading() {
        let a = Alphabet::character(2);
        let f = SymFunc::p(a, 0, 2).add(&SymFunc::p(a, 1, 1).pow(3)).unwrap();
        assert_eq!(f.degrees(), vec![2, 3]);
        assert!(!f.is_homogeneous(2));
        assert!(f.graded_part(3).is_homogeneous(3));
        let triv = builtin("cyclic(2)").unwrap();
        assert!(form(&triv, &f.graded_part(2), &f.graded_part(3)).unwrap().is_zero());
    }

    #[test]
    fn monomial_algebra() {
        let m = Monomial::power_sum(0, 1).mul(&Monomial::power_sum(1, 2)).mul(&Monomial::power_sum(0, 1));
        assert_eq!(m.exponent(0, 1), 2);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.with_exponent(0, 1, 0), Monomial::power_sum(1, 2));
        assert_eq!(Monomial::from_type(&m.to_type()), m);
        assert_eq!(m.z(), BigUint::from(4u32));
    }
}
