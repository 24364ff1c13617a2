//! Group-theoretic ground truth computed by brute force over the elements of
//! explicitly built wreath products: convolution, induction and restriction
//! along `Γ_n × Γ_m → Γ_{n+m}`, the Heisenberg operators built from them,
//! and the theorem verifiers in [`verify`].
//!
//! Nothing in this module uses the differential operators; those only meet
//! the group side in the final comparisons inside [`verify`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::{BaseGroup, ClassFunction, GroupTable};
use crate::scalars::{Rational, Scalar};
use crate::wreath::{build_wreath, element_at, element_index, sigma_class_fn, Permutation, WreathElement};

pub mod verify;

pub use verify::{verify, VerifyParams, THEOREMS};

/// Class multiplication counts of a group, obtained by running over all
/// pairs of elements: `count(a, b, t) = #{(u, v) : u ∈ a, v ∈ b, uv ∈ t}`.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    group: crate::groups::GroupId,
    k: usize,
    class_sizes: Vec<u64>,
    counts: Vec<u64>,
}

impl ClassAlgebra {
    pub fn brute(group: &GroupTable, cap: usize) -> Result<Self> {
        let size = group.size();
        if size > cap {
            return Err(Error::bound("group order", size as u64, cap as u64));
        }
        let k = group.num_classes();
        let class_of: Vec<usize> = (0..size).map(|x| group.class_of(x)).collect();
        let counts = (0..size)
            .into_par_iter()
            .fold(
                || vec![0u64; k * k * k],
                |mut acc, u| {
                    let a = class_of[u];
                    for (v, &b) in class_of.iter().enumerate() {
                        let t = class_of[group.mul(u, v)];
                        acc[(a * k + b) * k + t] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; k * k * k],
                |mut x, y| {
                    for (p, q) in x.iter_mut().zip(y) {
                        *p += q;
                    }
                    x
                },
            );
        let mut class_sizes = vec![0u64; k];
        for &c in &class_of {
            class_sizes[c] += 1;
        }
        Ok(ClassAlgebra {
            group: group.id(),
            k,
            class_sizes,
            counts,
        })
    }

    pub fn count(&self, a: usize, b: usize, t: usize) -> u64 {
        self.counts[(a * self.k + b) * self.k + t]
    }

    /// `(f * g)(x) = Σ_y f(x y^{-1}) g(y)`: the sum of `f(u) g(v)` over all
    /// pairs with `uv` in the class of `x`, divided by that class's size.
    pub fn convolve(&self, f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
        if f.group() != self.group || g.group() != self.group {
            return Err(Error::GroupMismatch);
        }
        let k = self.k;
        let mut values = vec![Scalar::zero(); k];
        for a in 0..k {
            if f.value(a).is_zero() {
                continue;
            }
            for b in 0..k {
                if g.value(b).is_zero() {
                    continue;
                }
                let fg = f.value(a) * g.value(b);
                for (t, v) in values.iter_mut().enumerate() {
                    let n = self.count(a, b, t);
                    if n > 0 {
                        *v += &fg.scale(&Rational::new(n.into(), self.class_sizes[t].into()));
                    }
                }
            }
        }
        Ok(ClassFunction::new(self.group, values))
    }
}

/// Convolution by summation over all pairs of group elements.
pub fn convolve_brute(group: &GroupTable, f: &ClassFunction, g: &ClassFunction, cap: usize) -> Result<ClassFunction> {
    ClassAlgebra::brute(group, cap)?.convolve(f, g)
}

/// The embedding `Γ_n × Γ_m → Γ_{n+m}`: concatenate the `Γ`-coordinates and
/// let the second permutation act on the last `m` letters.
pub struct Embedding {
    pub left: Arc<GroupTable>,
    pub right: Arc<GroupTable>,
    pub target: Arc<GroupTable>,
    n: usize,
    m: usize,
    image: Vec<usize>,
    preimage: HashMap<usize, (usize, usize)>,
    /// `fusion[t][(a, b)]`: number of `y ∈ Γ_{n+m}` with `y^{-1} x_t y` in the
    /// image, with preimage in classes `(a, b)`; `x_t` the representative of `t`.
    fusion: Vec<HashMap<(usize, usize), u64>>,
}

fn concat(x: &WreathElement, y: &WreathElement) -> Result<WreathElement> {
    let n = x.degree();
    let g = x.g.iter().chain(&y.g).copied().collect();
    let images = x
        .sigma
        .images()
        .iter()
        .copied()
        .chain(y.sigma.images().iter().map(|&i| i + n))
        .collect();
    WreathElement::new(g, Permutation::from_images(images)?)
}

impl Embedding {
    pub fn from_groups(left: Arc<GroupTable>, right: Arc<GroupTable>, target: Arc<GroupTable>) -> Result<Self> {
        let n = left.wreath().ok_or(Error::NotWreath)?.n();
        let m = right.wreath().ok_or(Error::NotWreath)?.n();
        let nm = target.wreath().ok_or(Error::NotWreath)?.n();
        if n + m != nm {
            return Err(Error::DegreeMismatch(n + m, nm));
        }
        let mut image = Vec::with_capacity(left.size() * right.size());
        let mut preimage = HashMap::new();
        for i in 0..left.size() {
            let x = element_at(&left, i)?;
            for j in 0..right.size() {
                let z = element_index(&target, &concat(x, element_at(&right, j)?)?)?;
                image.push(z);
                preimage.insert(z, (i, j));
            }
        }
        let fusion = (0..target.num_classes())
            .into_par_iter()
            .map(|t| {
                let x = target.class_rep(t);
                let mut counts = HashMap::new();
                for y in 0..target.size() {
                    let z = target.mul(target.mul(target.inv(y), x), y);
                    if let Some(&(i, j)) = preimage.get(&z) {
                        *counts.entry((left.class_of(i), right.class_of(j))).or_insert(0) += 1;
                    }
                }
                counts
            })
            .collect();
        Ok(Embedding {
            left,
            right,
            target,
            n,
            m,
            image,
            preimage,
            fusion,
        })
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    /// Index in the target of the image of `(x, y)`.
    pub fn map(&self, x: usize, y: usize) -> usize {
        self.image[x * self.right.size() + y]
    }

    pub fn image_size(&self) -> usize {
        self.preimage.len()
    }
}

/// `Ind(f ⊗ g)(x) = (1/|H|) Σ_{y ∈ Γ_{n+m}} ḣ(y^{-1} x y)` with
/// `H = Γ_n × Γ_m`, `h = f ⊗ g` and `ḣ` its extension by zero.
pub fn induce(e: &Embedding, f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
    e.left.check(f)?;
    e.right.check(g)?;
    let h_order = Rational::from_integer((e.left.size() as u64 * e.right.size() as u64).into());
    let values = e
        .fusion
        .iter()
        .map(|counts| {
            let mut acc = Scalar::zero();
            for (&(a, b), &n) in counts {
                let fg = f.value(a) * g.value(b);
                if !fg.is_zero() {
                    acc += &fg.scale(&Rational::from_integer(n.into()));
                }
            }
            acc.div_rational(&h_order)
        })
        .collect();
    Ok(ClassFunction::new(e.target.id(), values))
}

/// A function on pairs of classes of `Γ_n × Γ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFunction {
    pub rows: usize,
    pub cols: usize,
    pub values: Vec<Scalar>,
}

impl PairFunction {
    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.values[a * self.cols + b]
    }
}

/// `h` pulled back along the embedding, evaluated at class representatives.
pub fn restrict(e: &Embedding, h: &ClassFunction) -> Result<PairFunction> {
    e.target.check(h)?;
    let (rows, cols) = (e.left.num_classes(), e.right.num_classes());
    let mut values = Vec::with_capacity(rows * cols);
    for a in 0..rows {
        for b in 0..cols {
            let z = e.map(e.left.class_rep(a), e.right.class_rep(b));
            values.push(h.value(e.target.class_of(z)).clone());
        }
    }
    Ok(PairFunction { rows, cols, values })
}

/// `⟨f ⊗ g, p⟩` on `Γ_n × Γ_m` with the bilinear form `Σ ζ^{-1} f(c) p(c^{-1})`.
pub fn pair_inner_product(e: &Embedding, f: &ClassFunction, g: &ClassFunction, p: &PairFunction) -> Result<Scalar> {
    e.left.check(f)?;
    e.right.check(g)?;
    let mut acc = Scalar::zero();
    for a in 0..p.rows {
        for b in 0..p.cols {
            let v = f.value(a) * g.value(b) * p.get(e.left.class_inv(a), e.right.class_inv(b));
            if !v.is_zero() {
                let z = e.left.zeta()[a] * e.right.zeta()[b];
                acc += &v.div_rational(&Rational::from_integer(z.into()));
            }
        }
    }
    Ok(acc)
}

/// Lazily built wreath products `Γ_n` of one base group, with their class
/// algebras and embeddings, shared across verification instances.
pub struct Oracle {
    pub base: BaseGroup,
    cap: usize,
    groups: Mutex<HashMap<usize, Arc<GroupTable>>>,
    algebras: Mutex<HashMap<usize, Arc<ClassAlgebra>>>,
    embeddings: Mutex<HashMap<(usize, usize), Arc<Embedding>>>,
}

impl Oracle {
    pub fn new(base: BaseGroup, cap: usize) -> Self {
        Oracle {
            base,
            cap,
            groups: Mutex::default(),
            algebras: Mutex::default(),
            embeddings: Mutex::default(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `Γ_n` built element by element.
    pub fn group(&self, n: usize) -> Result<Arc<GroupTable>> {
        if let Some(g) = self.groups.lock().unwrap().get(&n) {
            return Ok(Arc::clone(g));
        }
        let g = Arc::new(build_wreath(&self.base.table, n, self.cap)?);
        Ok(Arc::clone(self.groups.lock().unwrap().entry(n).or_insert(g)))
    }

    pub fn algebra(&self, n: usize) -> Result<Arc<ClassAlgebra>> {
        if let Some(a) = self.algebras.lock().unwrap().get(&n) {
            return Ok(Arc::clone(a));
        }
        let a = Arc::new(ClassAlgebra::brute(&*self.group(n)?, self.cap)?);
        Ok(Arc::clone(self.algebras.lock().unwrap().entry(n).or_insert(a)))
    }

    pub fn embedding(&self, n: usize, m: usize) -> Result<Arc<Embedding>> {
        if let Some(e) = self.embeddings.lock().unwrap().get(&(n, m)) {
            return Ok(Arc::clone(e));
        }
        let e = Arc::new(Embedding::from_groups(self.group(n)?, self.group(m)?, self.group(n + m)?)?);
        Ok(Arc::clone(self.embeddings.lock().unwrap().entry((n, m)).or_insert(e)))
    }

    /// Brute-force convolution on `Γ_n`.
    pub fn convolve(&self, n: usize, f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
        self.algebra(n)?.convolve(f, g)
    }

    /// `σ_n(γ)` on `Γ_n`.
    pub fn sigma(&self, n: usize, gamma: usize) -> Result<ClassFunction> {
        let g = self.group(n)?;
        let wc = g.wreath().ok_or(Error::NotWreath)?;
        sigma_class_fn(wc, &self.base.table, &self.base.chars.rows()[gamma])
    }

    /// The group-side Heisenberg operator `ã_n(γ)` applied to `f` on `Γ_m`.
    ///
    /// `n < 0`: `Ind(σ_{-n}(γ) ⊗ f)` on `Γ_{m-n}`. `n > 0`: restrict `f` to
    /// `Γ_n × Γ_{m-n}` and pair the first factor with `σ_n(γ)`.
    pub fn heisenberg(&self, n: i64, gamma: usize, m: usize, f: &ClassFunction) -> Result<ClassFunction> {
        if gamma >= self.base.num_irreducibles() {
            return Err(Error::InvalidParameter(format!("no irreducible character {gamma}")));
        }
        match n {
            0 => Ok(self.group(m)?.zero_function()),
            n if n < 0 => {
                let k = (-n) as usize;
                let e = self.embedding(k, m)?;
                induce(&e, &self.sigma(k, gamma)?, f)
            }
            n => {
                let k = n as usize;
                if m < k {
                    return Err(Error::DegreeTooSmall { n: k, m });
                }
                let e = self.embedding(k, m - k)?;
                let res = restrict(&e, f)?;
                let sigma = self.sigma(k, gamma)?;
                let values = (0..res.cols)
                    .map(|b| {
                        let mut acc = Scalar::zero();
                        for a in 0..res.rows {
                            let v = sigma.value(a) * res.get(e.left.class_inv(a), b);
                            if !v.is_zero() {
                                acc += &v.div_rational(&Rational::from_integer(e.left.zeta()[a].into()));
                            }
                        }
                        acc
                    })
                    .collect();
                Ok(ClassFunction::new(e.right.id(), values))
            }
        }
    }
}

/// [`Oracle::heisenberg`] with a throwaway cache.
pub fn heisenberg_group_side(
    base: &BaseGroup,
    n: i64,
    gamma: usize,
    m: usize,
    f: &ClassFunction,
    cap: usize,
) -> Result<ClassFunction> {
    Oracle::new(base.clone(), cap).heisenberg(n, gamma, m, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{builtin, convolve, inner_product};
    use crate::wreath::DEFAULT_CAP;

    fn oracle(name: &str) -> Oracle {
        Oracle::new(builtin(name).unwrap(), DEFAULT_CAP)
    }

    #[test]
    fn convolution_matches_definition() {
        for (name, n) in [("trivial", 4), ("cyclic(2)", 2), ("cyclic(3)", 2), ("sym(3)", 1), ("klein4", 2)] {
            let o = oracle(name);
            let g = o.group(n).unwrap();
            for a in 0..g.num_classes() {
                for b in 0..g.num_classes() {
                    let (fa, fb) = (g.class_indicator(a), g.class_indicator(b));
                    assert_eq!(o.convolve(n, &fa, &fb).unwrap(), convolve(&g, &fa, &fb).unwrap());
                }
            }
            let id = g.class_indicator(0);
            let f = g.class_indicator(g.num_classes() - 1);
            assert_eq!(o.convolve(n, &id, &f).unwrap(), f);
        }
    }

    #[test]
    fn transposition_squares_in_s4() {
        let o = oracle("trivial");
        let g = o.group(4).unwrap();
        let wc = g.wreath().unwrap();
        let t = wc
            .type_index(&crate::combinatorics::TypeFunction::from_slice(&[crate::combinatorics::Partition::new(vec![2, 1, 1])]))
            .unwrap();
        let k = g.class_indicator(t);
        assert_eq!(o.convolve(4, &k, &k).unwrap().value(0), &Scalar::from_int(6));
    }

    #[test]
    fn embedding_is_injective_homomorphism() {
        let o = oracle("cyclic(2)");
        let e = o.embedding(2, 1).unwrap();
        assert_eq!(e.image_size(), 8 * 2);
        let (l, r, t) = (&e.left, &e.right, &e.target);
        for x1 in 0..l.size() {
            for x2 in (0..l.size()).step_by(3) {
                for y1 in 0..r.size() {
                    for y2 in 0..r.size() {
                        let lhs = e.map(l.mul(x1, x2), r.mul(y1, y2));
                        let rhs = t.mul(e.map(x1, y1), e.map(x2, y2));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn induce_trivial_s1_s1() {
        let o = oracle("trivial");
        let e = o.embedding(1, 1).unwrap();
        let one = |g: &GroupTable| ClassFunction::new(g.id(), vec![Scalar::one(); g.num_classes()]);
        let ind = induce(&e, &one(&e.left), &one(&e.right)).unwrap();
        assert_eq!(ind.values(), &[Scalar::from_int(2), Scalar::zero()]);
    }

    #[test]
    fn frobenius_reciprocity() {
        for name in ["cyclic(2)", "cyclic(3)"] {
            let o = oracle(name);
            for (n, m) in [(1, 1), (1, 2), (2, 1)] {
                let e = o.embedding(n, m).unwrap();
                for a in 0..e.left.num_classes() {
                    for b in 0..e.right.num_classes() {
                        let f = e.left.class_indicator(a);
                        let g = e.right.class_indicator(b);
                        let ind = induce(&e, &f, &g).unwrap();
                        for t in 0..e.target.num_classes() {
                            let h = e.target.class_indicator(t);
                            let lhs = inner_product(&e.target, &ind, &h).unwrap();
                            let rhs = pair_inner_product(&e, &f, &g, &restrict(&e, &h).unwrap()).unwrap();
                            assert_eq!(lhs, rhs, "{name} n={n} m={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_of_trivial_is_trivial() {
        let o = oracle("cyclic(3)");
        let e = o.embedding(1, 1).unwrap();
        let one = ClassFunction::new(e.target.id(), vec![Scalar::one(); e.target.num_classes()]);
        assert!(restrict(&e, &one).unwrap().values.iter().all(Scalar::is_one));
    }

    #[test]
    fn annihilation_on_degree_one() {
        let o = oracle("cyclic(3)");
        let g1 = o.group(1).unwrap();
        for gamma in 0..3 {
            for c in 0..3 {
                let f = g1.class_indicator(c);
                let u = o.heisenberg(1, gamma, 1, &f).unwrap();
                let chi = ClassFunction::new(g1.id(), o.base.chars.rows()[gamma].values().to_vec());
                assert_eq!(u.values(), &[inner_product(&g1, &chi, &f).unwrap()]);
            }
        }
        assert_eq!(o.heisenberg(2, 0, 1, &g1.class_indicator(0)), Err(Error::DegreeTooSmall { n: 2, m: 1 }));
    }

    #[test]
    fn cap_enforced() {
        let o = Oracle::new(builtin("trivial").unwrap(), 100);
        assert!(matches!(o.group(5), Err(Error::BoundExceeded { .. })));
    }
}
