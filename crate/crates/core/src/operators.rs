//! Heisenberg, Virasoro and cubic operators on the Fock space, kept in
//! differential normal form, plus finite graded windows on which operator
//! identities are checked as exact matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::enumerate_types;
use crate::error::{Error, Result};
use crate::groups::BaseGroup;
use crate::scalars::{Rational, Scalar};
use crate::symfun::{Alphabet, Monomial, SymFunc};

/// Default largest degree a window computation may reach.
pub const DEFAULT_MAX_DEGREE: usize = 16;

/// A finite sum of terms `c · M ∘ ∂^α`, where `M` is a monomial in the power
/// sums and `∂^α` an iterated derivation, stored as a monomial of exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct FockOperator {
    alphabet: Alphabet,
    shift: i64,
    /// Keyed by `(∂^α, M)` so the terms sharing a derivation are adjacent.
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

fn falling(n: u32, k: u32) -> u64 {
    (0..k).map(|i| (n - i) as u64).product()
}

fn binomial(n: u32, k: u32) -> u64 {
    falling(n, k) / falling(k, k)
}

/// Applies `∂^deriv` to the monomial `m`, returning the scalar factor and the remainder.
fn differentiate(m: &Monomial, deriv: &Monomial) -> Option<(u64, Monomial)> {
    let mut out = m.clone();
    let mut factor = 1u64;
    for &(a, r, e) in deriv.factors() {
        let have = m.exponent(a, r);
        if have < e {
            return None;
        }
        factor *= falling(have, e);
        out = out.with_exponent(a, r, have - e);
    }
    Some((factor, out))
}

impl FockOperator {
    pub fn zero(alphabet: Alphabet) -> Self {
        FockOperator {
            alphabet,
            shift: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        Self::term(alphabet, Scalar::one(), Monomial::one(), Monomial::one())
    }

    /// The single term `c · mult ∘ ∂^deriv`.
    pub fn term(alphabet: Alphabet, c: Scalar, mult: Monomial, deriv: Monomial) -> Self {
        let mut op = Self::zero(alphabet);
        op.shift = mult.degree() as i64 - deriv.degree() as i64;
        if !c.is_zero() {
            op.terms.insert((deriv, mult), c);
        }
        op
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Degree shift: grade `k` maps to grade `k + shift`.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Scalar)> {
        self.terms.iter().map(|((d, m), c)| (m, d, c))
    }

    fn add_term(&mut self, mult: Monomial, deriv: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.terms.is_empty() || mult.degree() as i64 - deriv.degree() as i64 == self.shift);
        if self.terms.is_empty() {
            self.shift = mult.degree() as i64 - deriv.degree() as i64;
        }
        let key = (deriv, mult);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check(&self, other: &FockOperator) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::BasisMismatch);
        }
        if !self.is_zero() && !other.is_zero() && self.shift != other.shift {
            return Err(Error::DegreeMismatch(self.shift.unsigned_abs() as usize, other.shift.unsigned_abs() as usize));
        }
        Ok(())
    }

    /// Sum of two operators with the same degree shift.
    pub fn add(&self, other: &FockOperator) -> Result<FockOperator> {
        self.check(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for ((d, m), c) in &other.terms {
                out.add_term(m.clone(), d.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FockOperator) -> Result<FockOperator> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> FockOperator {
        let mut out = FockOperator::zero(self.alphabet);
        out.shift = self.shift;
        if s.is_zero() {
            return out;
        }
        for (key, c) in &self.terms {
            out.terms.insert(key.clone(), c * s);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> FockOperator {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    /// `self ∘ other`, re-normal-ordered by the Leibniz rule.
    pub fn compose(&self, other: &FockOperator) -> Result<FockOperator> {
        if self.alphabet != other.alphabet {
            return Err(Error::BasisMismatch);
        }
        let mut out = FockOperator::zero(self.alphabet);
        out.shift = self.shift + other.shift;
        for ((da, ma), ca) in &self.terms {
            for ((db, mb), cb) in &other.terms {
                // ∂^α M_b = Σ_{β ≤ α} C(α, β) (∂^β M_b) ∂^{α-β}
                let mut partial: Vec<(u64, Monomial, Monomial)> = vec![(1, Monomial::one(), Monomial::one())];
                for &(a, r, e) in da.factors() {
                    let mut next = Vec::new();
                    for (w, used, rest) in &partial {
                        for k in 0..=e {
                            let b = binomial(e, k);
                            let used = if k > 0 { used.with_exponent(a, r, k) } else { used.clone() };
                            let rest = if k < e { rest.with_exponent(a, r, e - k) } else { rest.clone() };
                            next.push((w * b, used, rest));
                        }
                    }
                    partial = next;
                }
                for (w, used, rest) in partial {
                    let Some((f, mb_rest)) = differentiate(mb, &used) else {
                        continue;
                    };
                    let coeff = (ca * cb).scale(&Rational::from_integer((w * f).into()));
                    out.add_term(ma.mul(&mb_rest), rest.mul(db), &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &FockOperator) -> Result<FockOperator> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Exact image of `f`.
    pub fn apply(&self, f: &SymFunc) -> Result<SymFunc> {
        if f.alphabet() != self.alphabet {
            return Err(Error::BasisMismatch);
        }
        let mut out = SymFunc::zero(self.alphabet);
        for (m, a) in f.terms() {
            let divisors: usize = m.factors().iter().map(|&(_, _, e)| e as usize + 1).product();
            if divisors < self.terms.len() {
                for d in divisors_of(m) {
                    let lo = (d.clone(), Monomial::one());
                    for ((deriv, mult), c) in self.terms.range(lo..).take_while(|((dd, _), _)| *dd == d) {
                        self.apply_term(m, a, deriv, mult, c, &mut out);
                    }
                }
            } else {
                for ((deriv, mult), c) in &self.terms {
                    self.apply_term(m, a, deriv, mult, c, &mut out);
                }
            }
        }
        Ok(out)
    }

    fn apply_term(&self, m: &Monomial, a: &Scalar, deriv: &Monomial, mult: &Monomial, c: &Scalar, out: &mut SymFunc) {
        if let Some((factor, rest)) = differentiate(m, deriv) {
            let coeff = (c * a).scale(&Rational::from_integer(factor.into()));
            out.add_term(rest.mul(mult), &coeff);
        }
    }
}

/// All monomials dividing `m`.
fn divisors_of(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for &(a, r, e) in m.factors() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for k in 0..=e {
                next.push(if k == 0 { d.clone() } else { d.with_exponent(a, r, k) });
            }
        }
        out = next;
    }
    out
}

impl fmt::Debug for FockOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((d, m), c)| format!("({c})*{m:?}*d[{d:?}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn apply(op: &FockOperator, f: &SymFunc) -> Result<SymFunc> {
    op.apply(f)
}

fn p(letter: usize, r: usize) -> Monomial {
    Monomial::power_sum(letter, r)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn half(n: i64) -> Scalar {
    Scalar::from_rational(Rational::new(n.into(), 2.into()))
}

fn check_letter(alphabet: Alphabet, letter: usize) {
    assert!(letter < alphabet.size, "letter {letter} outside alphabet of size {}", alphabet.size);
}

/// `a_n(γ)`: multiplication by `p_{-n}(γ)` for `n < 0`, `n ∂/∂p_n(γ)` for
/// `n > 0`, and zero for `n = 0`.
pub fn heisenberg(alphabet: Alphabet, n: i64, gamma: usize) -> FockOperator {
    check_letter(alphabet, gamma);
    match n {
        0 => FockOperator::zero(alphabet),
        n if n < 0 => FockOperator::term(alphabet, int(1), p(gamma, (-n) as usize), Monomial::one()),
        n => FockOperator::term(alphabet, int(n), Monomial::one(), p(gamma, n as usize)),
    }
}

/// `a_n(c) = Σ_γ γ(c^{-1}) a_n(γ)` on the character alphabet of `base`.
pub fn heisenberg_class(base: &BaseGroup, n: i64, c: usize) -> FockOperator {
    let alphabet = Alphabet::character(base.num_irreducibles());
    let ci = base.table.class_inv(c);
    let mut out = FockOperator::zero(alphabet);
    for gamma in 0..base.num_irreducibles() {
        out = out
            .add(&heisenberg(alphabet, n, gamma).scale(base.chars.value(gamma, ci)))
            .expect("same shift");
    }
    out
}

/// `L_n` on one letter, in closed normal form (`a_0 = 0`, central charge 1):
///
/// * `n > 0`: `Σ_{m>0} (n+m) p_m ∂_{n+m} + ½ Σ_{j=1}^{n-1} j(n−j) ∂_j ∂_{n−j}`
/// * `n = 0`: `Σ_{m>0} m p_m ∂_m`
/// * `n = −k < 0`: `Σ_{m>0} m p_{k+m} ∂_m + ½ Σ_{j=1}^{k-1} p_j p_{k−j}`
pub fn virasoro(alphabet: Alphabet, n: i64, gamma: usize) -> FockOperator {
    check_letter(alphabet, gamma);
    let mut op = FockOperator::zero(alphabet);
    op.shift = -n;
    if n > 0 {
        let n = n as usize;
        for m in 1..=VIRASORO_RANGE {
            op.add_term(p(gamma, m), p(gamma, n + m), &int((n + m) as i64));
        }
        for j in 1..n {
            op.add_term(Monomial::one(), p(gamma, j).mul(&p(gamma, n - j)), &half((j * (n - j)) as i64));
        }
    } else if n == 0 {
        for m in 1..=VIRASORO_RANGE {
            op.add_term(p(gamma, m), p(gamma, m), &int(m as i64));
        }
    } else {
        let k = (-n) as usize;
        for m in 1..=VIRASORO_RANGE {
            op.add_term(p(gamma, k + m), p(gamma, m), &int(m as i64));
        }
        for j in 1..k {
            op.add_term(p(gamma, j).mul(&p(gamma, k - j)), Monomial::one(), &half(1));
        }
    }
    op
}

/// Truncation of the infinite sums `Σ_{m>0}` in [`virasoro`] and
/// [`delta_gamma`]. Terms with a derivation of degree above this bound vanish
/// on every element of degree at most this bound, so all results are exact
/// for inputs of degree `≤ VIRASORO_RANGE`.
pub const VIRASORO_RANGE: usize = 32;

/// `Δ^γ = ½ Σ_{i,j>0} (ij p_{i+j} ∂_i ∂_j + (i+j) p_i p_j ∂_{i+j})` on one letter.
pub fn delta_gamma(alphabet: Alphabet, gamma: usize) -> FockOperator {
    check_letter(alphabet, gamma);
    let mut op = FockOperator::zero(alphabet);
    let range = VIRASORO_RANGE;
    for i in 1..range {
        for j in 1..=(range - i) {
            op.add_term(p(gamma, i + j), p(gamma, i).mul(&p(gamma, j)), &half((i * j) as i64));
            op.add_term(p(gamma, i).mul(&p(gamma, j)), p(gamma, i + j), &half((i + j) as i64));
        }
    }
    op
}

/// The weight `|Γ|² β(c^{-1}) / (d_β² ζ_c)` of `Δ^β` in `Δ_c`.
pub fn delta_c_weight(base: &BaseGroup, c: usize, beta: usize) -> Scalar {
    let order = base.order() as i64;
    let d = base.chars.degrees()[beta] as i64;
    let zeta = base.table.zeta()[c] as i64;
    base.chars
        .value(beta, base.table.class_inv(c))
        .scale(&Rational::new((order * order).into(), (d * d * zeta).into()))
}

/// `Δ_c = Σ_β |Γ|² β(c^{-1}) / (d_β² ζ_c) Δ^β` on the character alphabet.
pub fn delta_c(base: &BaseGroup, c: usize) -> FockOperator {
    let alphabet = Alphabet::character(base.num_irreducibles());
    let mut out = FockOperator::zero(alphabet);
    for beta in 0..base.num_irreducibles() {
        let w = delta_c_weight(base, c, beta);
        out = out.add(&delta_gamma(alphabet, beta).scale(&w)).expect("shift 0");
    }
    out
}

/// All basis monomials of degree `≤ D` in a fixed order: by degree, then by
/// type enumeration order.
#[derive(Clone, Debug)]
pub struct GradedWindow {
    alphabet: Alphabet,
    max_degree: usize,
    limit: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedWindow {
    pub fn new(alphabet: Alphabet, max_degree: usize) -> Result<Self> {
        Self::with_limit(alphabet, max_degree, DEFAULT_MAX_DEGREE)
    }

    /// A window whose commutator computations may reach degree `limit`.
    pub fn with_limit(alphabet: Alphabet, max_degree: usize, limit: usize) -> Result<Self> {
        if max_degree > limit {
            return Err(Error::WindowTooSmall {
                needed: max_degree,
                max: limit,
            });
        }
        let mut basis = Vec::new();
        for d in 0..=max_degree {
            for t in enumerate_types(d, alphabet.size)? {
                basis.push(Monomial::from_type(&t));
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(GradedWindow {
            alphabet,
            max_degree,
            limit,
            basis,
            index,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn vector(&self, i: usize) -> SymFunc {
        SymFunc::monomial(self.alphabet, self.basis[i].clone(), Scalar::one())
    }
}

/// Matrix of a linear map out of a window, stored column by column: column
/// `j` is the exact image of the `j`-th basis monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowMatrix {
    pub columns: Vec<SymFunc>,
}

impl WindowMatrix {
    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SymFunc::is_zero)
    }

    /// Entry at row monomial `row`, column `col`.
    pub fn entry(&self, row: &Monomial, col: usize) -> Scalar {
        self.columns[col].coefficient(row)
    }

    pub fn sub(&self, other: &WindowMatrix) -> Result<WindowMatrix> {
        if self.columns.len() != other.columns.len() {
            return Err(Error::SizeMismatch(self.columns.len(), other.columns.len()));
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(WindowMatrix { columns })
    }

    /// Whether this is `s · Id` on the window.
    pub fn is_scalar(&self, window: &GradedWindow, s: &Scalar) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, col)| *col == window.vector(j).scale(s))
    }

    /// Columns that are nonzero, with their basis index.
    pub fn nonzero_columns(&self) -> impl Iterator<Item = (usize, &SymFunc)> {
        self.columns.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

fn check_reach(window: &GradedWindow, shifts: &[i64]) -> Result<()> {
    let mut reach = 0i64;
    let mut acc = 0i64;
    for s in shifts.iter().rev() {
        acc += s;
        reach = reach.max(acc);
    }
    for &s in shifts {
        reach = reach.max(s);
    }
    let needed = window.max_degree + reach.max(0) as usize;
    if needed > window.limit || needed > VIRASORO_RANGE {
        return Err(Error::WindowTooSmall {
            needed,
            max: window.limit.min(VIRASORO_RANGE),
        });
    }
    Ok(())
}

/// Matrix of `op` on the window.
pub fn operator_matrix(op: &FockOperator, window: &GradedWindow) -> Result<WindowMatrix> {
    if op.alphabet != window.alphabet {
        return Err(Error::BasisMismatch);
    }
    check_reach(window, &[op.shift])?;
    let columns = (0..window.dim())
        .into_par_iter()
        .map(|j| op.apply(&window.vector(j)))
        .collect::<Result<_>>()?;
    Ok(WindowMatrix { columns })
}

/// Matrix of `AB − BA` on the window, each column computed by exact
/// application so no truncation enters.
pub fn commutator_matrix(a: &FockOperator, b: &FockOperator, window: &GradedWindow) -> Result<WindowMatrix> {
    if a.alphabet != window.alphabet || b.alphabet != window.alphabet {
        return Err(Error::BasisMismatch);
    }
    check_reach(window, &[a.shift, b.shift])?;
    let columns = (0..window.dim())
        .into_par_iter()
        .map(|j| {
            let v = window.vector(j);
            a.apply(&b.apply(&v)?)?.sub(&b.apply(&a.apply(&v)?)?)
        })
        .collect::<Result<_>>()?;
    Ok(WindowMatrix { columns })
}

/// `L_n v` evaluated mode by mode as `½ Σ_j :a_j a_{n−j}: v` with annihilators
/// to the right; independent of the closed form in [`virasoro`].
pub fn virasoro_by_modes(alphabet: Alphabet, n: i64, gamma: usize, v: &SymFunc) -> Result<SymFunc> {
    let top = v.degrees().last().copied().unwrap_or(0) as i64;
    let bound = top + n.abs() + 1;
    let mut out = SymFunc::zero(alphabet);
    for j in -bound..=bound {
        let k = n - j;
        // normal order: the factor with the larger index acts first
        let (first, second) = if j >= k { (j, k) } else { (k, j) };
        let w = heisenberg(alphabet, second, gamma).apply(&heisenberg(alphabet, first, gamma).apply(v)?)?;
        out = out.add(&w)?;
    }
    Ok(out.scale(&half(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::builtin;
    use crate::symfun::{form, schur, sn_degree};
    use crate::combinatorics::{enumerate_partitions, Partition};

    fn single() -> Alphabet {
        Alphabet::single()
    }

    fn pf(a: Alphabet, letter: usize, r: usize) -> SymFunc {
        SymFunc::p(a, letter, r)
    }

    #[test]
    fn heisenberg_examples() {
        let a = single();
        let one = SymFunc::one(a);
        assert_eq!(heisenberg(a, -1, 0).apply(&one).unwrap(), pf(a, 0, 1));
        assert_eq!(heisenberg(a, 1, 0).apply(&pf(a, 0, 1).pow(2)).unwrap(), pf(a, 0, 1).scale(&int(2)));
        assert_eq!(heisenberg(a, -2, 0).apply(&pf(a, 0, 1)).unwrap(), pf(a, 0, 1).mul(&pf(a, 0, 2)).unwrap());
        assert!(heisenberg(a, 0, 0).apply(&pf(a, 0, 3)).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_relations_on_window() {
        let a = Alphabet::character(2);
        let w = GradedWindow::new(a, 6).unwrap();
        for n in -3i64..=3 {
            for m in -3i64..=3 {
                for g in 0..2 {
                    for h in 0..2 {
                        let mat = commutator_matrix(&heisenberg(a, n, g), &heisenberg(a, m, h), &w).unwrap();
                        let expected = if n == -m && g == h { n } else { 0 };
                        assert!(mat.is_scalar(&w, &int(expected)), "[a_{n}({g}), a_{m}({h})]");
                    }
                }
            }
        }
    }

    #[test]
    fn class_heisenberg() {
        let triv = builtin("trivial").unwrap();
        assert_eq!(heisenberg_class(&triv, 2, 0), heisenberg(single(), 2, 0));
        let z2 = builtin("cyclic(2)").unwrap();
        let a = Alphabet::character(2);
        let expected = heisenberg(a, -1, 0).sub(&heisenberg(a, -1, 1)).unwrap();
        assert_eq!(heisenberg_class(&z2, -1, 1), expected);
    }

    #[test]
    fn class_heisenberg_relations() {
        for name in ["cyclic(2)", "cyclic(3)", "sym(3)"] {
            let base = builtin(name).unwrap();
            let a = Alphabet::character(base.num_irreducibles());
            let w = GradedWindow::new(a, if name == "sym(3)" { 3 } else { 5 }).unwrap();
            let k = base.num_classes();
            for n in 1..=2i64 {
                for c in 0..k {
                    for c2 in 0..k {
                        let mat = commutator_matrix(&heisenberg_class(&base, n, c), &heisenberg_class(&base, -n, c2), &w).unwrap();
                        let expected = if c2 == base.table.class_inv(c) {
                            int(n * base.table.zeta()[c] as i64)
                        } else {
                            Scalar::zero()
                        };
                        assert!(mat.is_scalar(&w, &expected), "{name} n={n} c={c} c'={c2}");
                    }
                }
            }
        }
    }

    #[test]
    fn virasoro_examples() {
        let a = single();
        let l0 = virasoro(a, 0, 0);
        let m = pf(a, 0, 1).pow(2).mul(&pf(a, 0, 3)).unwrap();
        assert_eq!(l0.apply(&m).unwrap(), m.scale(&int(5)));
        assert_eq!(virasoro(a, -1, 0).apply(&pf(a, 0, 1)).unwrap(), pf(a, 0, 2));
        let one = SymFunc::one(a);
        let lm2 = virasoro(a, -2, 0).apply(&one).unwrap();
        assert_eq!(lm2, pf(a, 0, 1).pow(2).scale(&half(1)));
        assert_eq!(virasoro(a, 2, 0).apply(&lm2).unwrap(), one.scale(&half(1)));
    }

    #[test]
    fn virasoro_matches_mode_expansion() {
        let a = Alphabet::character(2);
        let w = GradedWindow::new(a, 5).unwrap();
        for n in -4i64..=4 {
            for g in 0..2 {
                let op = virasoro(a, n, g);
                for j in 0..w.dim() {
                    let v = w.vector(j);
                    assert_eq!(op.apply(&v).unwrap(), virasoro_by_modes(a, n, g, &v).unwrap(), "L_{n} on {:?}", w.basis()[j]);
                }
            }
        }
    }

    #[test]
    fn virasoro_relations() {
        let a = Alphabet::character(2);
        let w = GradedWindow::new(a, 5).unwrap();
        for n in -3i64..=3 {
            for m in -3i64..=3 {
                let mat = commutator_matrix(&virasoro(a, n, 0), &virasoro(a, m, 0), &w).unwrap();
                let mut expected = operator_matrix(&virasoro(a, n + m, 0).scale(&int(n - m)), &w).unwrap();
                if n == -m {
                    let central = Scalar::from_rational(Rational::new((n * n * n - n).into(), 12.into()));
                    for (j, col) in expected.columns.iter_mut().enumerate() {
                        *col = col.add(&w.vector(j).scale(&central)).unwrap();
                    }
                }
                assert!(mat.sub(&expected).unwrap().is_zero(), "[L_{n}, L_{m}]");
                assert!(commutator_matrix(&virasoro(a, n, 0), &virasoro(a, m, 1), &w).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn delta_examples() {
        let a = single();
        let d = delta_gamma(a, 0);
        let p11 = pf(a, 0, 1).pow(2);
        let p2 = pf(a, 0, 2);
        assert_eq!(d.apply(&p11).unwrap(), p2);
        assert_eq!(d.apply(&p2).unwrap(), p11);
        assert!(d.apply(&SymFunc::one(a)).unwrap().is_zero());
        assert!(d.apply(&pf(a, 0, 1)).unwrap().is_zero());
        let s2 = schur(&Partition::new(vec![2]), 0, a).unwrap();
        let s11 = schur(&Partition::new(vec![1, 1]), 0, a).unwrap();
        assert_eq!(d.apply(&s2).unwrap(), s2);
        assert_eq!(d.apply(&s11).unwrap(), s11.scale(&int(-1)));
    }

    #[test]
    fn delta_c_examples() {
        let triv = builtin("trivial").unwrap();
        assert_eq!(delta_c(&triv, 0), delta_gamma(single(), 0));
        let z2 = builtin("cyclic(2)").unwrap();
        let a = Alphabet::character(2);
        let expected = delta_gamma(a, 0).sub(&delta_gamma(a, 1)).unwrap().scale(&int(2));
        assert_eq!(delta_c(&z2, 1), expected);
        let s3 = builtin("sym(3)").unwrap();
        let a3 = Alphabet::character(3);
        let mut identity = FockOperator::zero(a3);
        for beta in 0..3 {
            let w = Scalar::from_rational(Rational::new(6.into(), (s3.chars.degrees()[beta] as i64).into()));
            identity = identity.add(&delta_gamma(a3, beta).scale(&w)).unwrap();
        }
        assert_eq!(delta_c(&s3, 0), identity);
    }

    #[test]
    fn delta_commutes_with_heisenberg_into_virasoro() {
        let a = Alphabet::character(2);
        let w = GradedWindow::new(a, 6).unwrap();
        for n in (-3i64..=3).filter(|&n| n != 0) {
            for i in 0..2 {
                for g in 0..2 {
                    let lhs = commutator_matrix(&delta_gamma(a, i), &heisenberg(a, n, g), &w).unwrap();
                    let rhs = if i == g {
                        operator_matrix(&virasoro(a, n, g).scale(&int(-n)), &w).unwrap()
                    } else {
                        operator_matrix(&FockOperator::zero(a), &w).unwrap()
                    };
                    assert!(lhs.sub(&rhs).unwrap().is_zero(), "Δ^{i}, a_{n}({g})");
                }
            }
        }
    }

    #[test]
    fn symbolic_commutators_agree() {
        let a = single();
        for n in -3i64..=3 {
            for m in -3i64..=3 {
                let c = virasoro(a, n, 0).commutator(&virasoro(a, m, 0)).unwrap();
                let w = GradedWindow::new(a, 6).unwrap();
                let direct = commutator_matrix(&virasoro(a, n, 0), &virasoro(a, m, 0), &w).unwrap();
                assert_eq!(operator_matrix(&c, &w).unwrap(), direct);
            }
        }
    }

    #[test]
    fn heisenberg_adjointness() {
        let base = builtin("cyclic(2)").unwrap();
        let a = Alphabet::character(2);
        let w = GradedWindow::new(a, 5).unwrap();
        let mut seed = 3u64;
        let mut rand_vec = |deg: usize| {
            let mut f = SymFunc::zero(a);
            for m in w.basis().iter().filter(|m| m.degree() <= deg) {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                f.add_term(m.clone(), &int(((seed >> 33) % 5) as i64 - 2));
            }
            f
        };
        for _ in 0..5 {
            let f = rand_vec(5);
            let g = rand_vec(5);
            for n in 1..=3 {
                for gamma in 0..2 {
                    let lhs = form(&base, &heisenberg(a, n, gamma).apply(&f).unwrap(), &g).unwrap();
                    let rhs = form(&base, &f, &heisenberg(a, -n, gamma).apply(&g).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn reformulated_eigenvalues() {
        let triv = builtin("trivial").unwrap();
        let a = single();
        let d = delta_gamma(a, 0);
        for n in 2..=6usize {
            let probe = pf(a, 0, 1).pow(n as u32 - 2).mul(&pf(a, 0, 2)).unwrap();
            for lambda in enumerate_partitions(n).unwrap() {
                let s = schur(&lambda, 0, a).unwrap();
                let f = sn_degree(&lambda).unwrap();
                let coeff = form(&triv, &probe, &s)
                    .unwrap()
                    .scale(&Rational::new(((n * (n - 1)) as i64).into(), (2 * f).into()));
                assert_eq!(d.apply(&s).unwrap(), s.scale(&coeff), "{lambda}");
            }
        }
    }

    #[test]
    fn window_errors() {
        let a = single();
        let w = GradedWindow::with_limit(a, 6, 8).unwrap();
        assert!(matches!(
            commutator_matrix(&heisenberg(a, -3, 0), &heisenberg(a, 1, 0), &w),
            Err(Error::WindowTooSmall { needed: 9, max: 8 })
        ));
        assert!(commutator_matrix(&heisenberg(a, -2, 0), &heisenberg(a, 1, 0), &w).is_ok());
        assert!(matches!(GradedWindow::with_limit(a, 9, 8), Err(Error::WindowTooSmall { .. })));
        let b = Alphabet::character(2);
        assert_eq!(heisenberg(a, 1, 0).apply(&SymFunc::one(b)), Err(Error::BasisMismatch));
    }

    #[test]
    fn window_basis_counts() {
        let w = GradedWindow::new(single(), 8).unwrap();
        assert_eq!(w.dim(), 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
        let w2 = GradedWindow::new(Alphabet::character(2), 3).unwrap();
        assert_eq!(w2.dim(), 1 + 2 + 5 + 10);
    }
}
