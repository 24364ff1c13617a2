//! The wreath product `Γ_n = Γ^n ⋊ S_n`: elements, multiplication, cycle
//! products and conjugacy types, and the brute-force construction of `Γ_n`
//! as a [`GroupTable`].

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::combinatorics::{big_z, enumerate_types, factorial, Partition, TypeFunction};
use crate::error::{Error, Result};
use crate::groups::{ClassFunction, GroupId, GroupTable, Law};
use crate::scalars::{rat_int, Scalar};

/// Default cap on `|Γ_n|` for brute-force constructions.
pub const DEFAULT_CAP: usize = 50_000;

/// A permutation of `{0, …, n-1}`; `images[i] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAGroup(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from 1-based cycles, e.g. `[[1, 3], [2, 6, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::NotAGroup(format!("cycle entry out of range 1..={n}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    /// Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Lehmer-code rank in `0..n!`; the identity has rank 0.
    pub fn rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Self {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut avail: Vec<usize> = (0..n).collect();
        let images = digits.into_iter().map(|d| avail.remove(d)).collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation without fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(σ τ)(i) = σ(τ(i))`.
pub fn perm_mul(sigma: &Permutation, tau: &Permutation) -> Result<Permutation> {
    if sigma.degree() != tau.degree() {
        return Err(Error::DegreeMismatch(sigma.degree(), tau.degree()));
    }
    Ok(Permutation {
        images: tau.images.iter().map(|&t| sigma.images[t]).collect(),
    })
}

/// An element `(g, σ)` of `Γ_n`; `g` holds element indices of `Γ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    pub g: Vec<usize>,
    pub sigma: Permutation,
}

impl WreathElement {
    pub fn new(g: Vec<usize>, sigma: Permutation) -> Result<Self> {
        if g.len() != sigma.degree() {
            return Err(Error::DegreeMismatch(g.len(), sigma.degree()));
        }
        Ok(WreathElement { g, sigma })
    }

    pub fn identity(base: &GroupTable, n: usize) -> Self {
        WreathElement {
            g: vec![base.identity(); n],
            sigma: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.g.len()
    }

    /// `(g, σ)^{-1} = (σ^{-1}(g^{-1}), σ^{-1})`.
    pub fn inverse(&self, base: &GroupTable) -> Self {
        WreathElement {
            g: (0..self.degree()).map(|i| base.inv(self.g[self.sigma.apply(i)])).collect(),
            sigma: self.sigma.inverse(),
        }
    }
}

/// `(g, σ)·(h, τ) = (g σ(h), σ τ)` with `σ(h)_i = h_{σ^{-1}(i)}`.
pub fn wreath_mul(x: &WreathElement, y: &WreathElement, base: &GroupTable) -> Result<WreathElement> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    let sigma_inv = x.sigma.inverse();
    let g = (0..x.degree())
        .map(|i| base.mul(x.g[i], y.g[sigma_inv.apply(i)]))
        .collect();
    Ok(WreathElement {
        g,
        sigma: perm_mul(&x.sigma, &y.sigma)?,
    })
}

/// The conjugacy type of `x`: for each cycle `(i_1 … i_k)` of `σ`, the cycle
/// product `g_{i_k} ⋯ g_{i_1}` lands in some class `c`, contributing a part
/// `k` to `ρ(c)`.
pub fn type_of(x: &WreathElement, base: &GroupTable) -> TypeFunction {
    let mut rho = TypeFunction::new();
    for cyc in x.sigma.cycles() {
        // cyc = [i_1, σ(i_1), …]; multiply g_{i_k} ⋯ g_{i_1}
        let mut prod = base.identity();
        for &i in &cyc {
            prod = base.mul(x.g[i], prod);
        }
        rho.push_part(base.class_of(prod), cyc.len());
    }
    rho
}

/// Type-indexed class data of `Γ_n`, available without building the group.
///
/// Class `k` of `Γ_n` is `types()[k]`, in [`enumerate_types`] order; a
/// [`GroupTable`] built by [`build_wreath`] uses the same indexing.
#[derive(Clone, Debug)]
pub struct WreathClasses {
    id: GroupId,
    base_id: GroupId,
    n: usize,
    base_order: usize,
    base_zeta: Vec<u64>,
    base_class_inv: Vec<usize>,
    base_class_reps: Vec<usize>,
    base_identity: usize,
    types: Vec<TypeFunction>,
    index: HashMap<TypeFunction, usize>,
    z: Vec<BigUint>,
    inv: Vec<usize>,
}

fn wreath_id(base: GroupId, n: usize) -> GroupId {
    let mut h = DefaultHasher::new();
    "wreath".hash(&mut h);
    base.hash(&mut h);
    n.hash(&mut h);
    GroupId(h.finish())
}

impl WreathClasses {
    pub fn new(base: &GroupTable, n: usize) -> Result<Self> {
        let types = enumerate_types(n, base.num_classes())?;
        let index = types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect::<HashMap<_, _>>();
        let z = types.iter().map(|t| big_z(t, base.zeta())).collect();
        let inv = types
            .iter()
            .map(|t| index[&t.map_keys(|c| base.class_inv(c))])
            .collect();
        Ok(WreathClasses {
            id: wreath_id(base.id(), n),
            base_id: base.id(),
            n,
            base_order: base.size(),
            base_zeta: base.zeta().to_vec(),
            base_class_inv: (0..base.num_classes()).map(|c| base.class_inv(c)).collect(),
            base_class_reps: (0..base.num_classes()).map(|c| base.class_rep(c)).collect(),
            base_identity: base.identity(),
            types,
            index,
            z,
            inv,
        })
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn base_id(&self) -> GroupId {
        self.base_id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.types.len()
    }

    pub fn num_base_classes(&self) -> usize {
        self.base_zeta.len()
    }

    pub fn base_zeta(&self) -> &[u64] {
        &self.base_zeta
    }

    pub fn base_class_inv(&self, c: usize) -> usize {
        self.base_class_inv[c]
    }

    pub fn types(&self) -> &[TypeFunction] {
        &self.types
    }

    pub fn type_index(&self, rho: &TypeFunction) -> Option<usize> {
        self.index.get(rho).copied()
    }

    /// `Z_ρ` for class `k`.
    pub fn centralizer(&self, k: usize) -> &BigUint {
        &self.z[k]
    }

    /// `ρ ↦ ρ*` with `ρ*(c) = ρ(c^{-1})`, the class of inverses.
    pub fn class_inv(&self, k: usize) -> usize {
        self.inv[k]
    }

    /// `|Γ_n| = n! |Γ|^n`.
    pub fn group_order(&self) -> BigUint {
        factorial(self.n) * BigUint::from(self.base_order).pow(self.n as u32)
    }

    pub fn identity_class(&self) -> usize {
        0
    }

    pub fn zero_function(&self) -> ClassFunction {
        ClassFunction::new(self.id, vec![Scalar::zero(); self.num_classes()])
    }

    pub fn indicator(&self, rho: &TypeFunction) -> Result<ClassFunction> {
        let k = self.type_index(rho).ok_or_else(|| Error::UnknownType(rho.to_string()))?;
        let mut f = self.zero_function();
        f = ClassFunction::new(
            f.group(),
            f.values().iter().enumerate().map(|(i, v)| if i == k { Scalar::one() } else { v.clone() }).collect(),
        );
        Ok(f)
    }

    /// The type `λ_c`: `(2)` on `c`, `(1^{n-2})` on the identity class.
    pub fn lambda_c(&self, c: usize) -> Result<TypeFunction> {
        if self.n < 2 {
            return Err(Error::UnknownType(format!("λ_{c} needs n ≥ 2, got n = {}", self.n)));
        }
        let mut rho = TypeFunction::new();
        rho.set(0, Partition::new(vec![1; self.n - 2]));
        rho.push_part(c, 2);
        Ok(rho)
    }

    /// A canonical element of type `ρ`: consecutive cycles, each carrying a
    /// class representative in its first slot.
    pub fn representative(&self, rho: &TypeFunction) -> WreathElement {
        let mut g = vec![self.base_identity; self.n];
        let mut images: Vec<usize> = (0..self.n).collect();
        let mut next = 0;
        for (c, p) in rho.iter() {
            for &k in p.parts() {
                for j in 0..k {
                    images[next + j] = next + (j + 1) % k;
                }
                g[next] = self.base_class_reps[c];
                next += k;
            }
        }
        WreathElement {
            g,
            sigma: Permutation { images },
        }
    }
}

/// Element indexing and multiplication for a brute-force `Γ_n`.
///
/// Index of `(g, σ)` is `rank(σ)·|Γ|^n + Σ_i g_i |Γ|^i`.
pub(crate) struct WreathLaw {
    base: Arc<GroupTable>,
    n: usize,
    elements: Vec<WreathElement>,
}

impl WreathLaw {
    pub(crate) fn encode(&self, x: &WreathElement) -> usize {
        let m = self.base.size();
        let mut digits = 0;
        for &gi in x.g.iter().rev() {
            digits = digits * m + gi;
        }
        x.sigma.rank() * m.pow(self.n as u32) + digits
    }

    pub(crate) fn element(&self, i: usize) -> &WreathElement {
        &self.elements[i]
    }

    pub(crate) fn base(&self) -> &GroupTable {
        &self.base
    }

    pub(crate) fn mul_index(&self, a: usize, b: usize) -> usize {
        let x = &self.elements[a];
        let y = &self.elements[b];
        let m = self.base.size();
        let n = self.n;
        // inline wreath_mul + encode
        let mut sigma_inv = [0usize; 16];
        for (i, &s) in x.sigma.images.iter().enumerate() {
            sigma_inv[s] = i;
        }
        let mut digits = 0;
        for i in (0..n).rev() {
            digits = digits * m + self.base.mul(x.g[i], y.g[sigma_inv[i]]);
        }
        let prod: Vec<usize> = y.sigma.images.iter().map(|&t| x.sigma.images[t]).collect();
        Permutation { images: prod }.rank() * m.pow(n as u32) + digits
    }
}

/// Builds `Γ_n` as a full group with brute-force conjugacy classes, ordered
/// to match [`WreathClasses`].
pub fn build_wreath(base: &Arc<GroupTable>, n: usize, cap: usize) -> Result<GroupTable> {
    let order = factorial(n) * BigUint::from(base.size()).pow(n as u32);
    if order > BigUint::from(cap) || n > 16 {
        let value: u128 = order.try_into().unwrap_or(u128::MAX);
        return Err(Error::bound("|Γ_n|", value, cap as u64));
    }
    let size: usize = order.try_into().expect("bounded by cap");
    let m = base.size();
    let radix = m.pow(n as u32);
    let elements: Vec<WreathElement> = (0..size)
        .map(|idx| {
            let mut rest = idx % radix;
            let g = (0..n)
                .map(|_| {
                    let d = rest % m;
                    rest /= m;
                    d
                })
                .collect();
            WreathElement {
                g,
                sigma: Permutation::unrank(n, idx / radix),
            }
        })
        .collect();
    let law = Arc::new(WreathLaw {
        base: Arc::clone(base),
        n,
        elements,
    });
    let identity = law.encode(&WreathElement::identity(base, n));
    let inv = (0..size).map(|i| law.encode(&law.element(i).inverse(base))).collect();
    let classes = Arc::new(WreathClasses::new(base, n)?);
    let wc = Arc::clone(&classes);
    let law_ref = Arc::clone(&law);
    let table = GroupTable::assemble(
        size,
        Law::Wreath(law),
        identity,
        inv,
        None,
        classes.id(),
        Some(classes),
        move |orbits| {
            let mut keyed: Vec<(usize, usize)> = orbits
                .iter()
                .enumerate()
                .map(|(k, orbit)| {
                    let t = type_of(law_ref.element(orbit[0]), law_ref.base());
                    (wc.type_index(&t).unwrap_or(usize::MAX), k)
                })
                .collect();
            keyed.sort_unstable();
            keyed.into_iter().map(|(_, k)| k).collect()
        },
    );
    let wc = table.wreath().expect("wreath data attached");
    if table.num_classes() != wc.num_classes() {
        return Err(Error::NotAGroup(format!(
            "found {} conjugacy classes but {} types",
            table.num_classes(),
            wc.num_classes()
        )));
    }
    Ok(table)
}

/// Index of a wreath element in a group built by [`build_wreath`].
pub fn element_index(group: &GroupTable, x: &WreathElement) -> Result<usize> {
    let law = group.wreath_law().ok_or(Error::NotWreath)?;
    if x.degree() != law.n {
        return Err(Error::DegreeMismatch(x.degree(), law.n));
    }
    Ok(law.encode(x))
}

/// The wreath element with the given index in a group built by [`build_wreath`].
pub fn element_at(group: &GroupTable, i: usize) -> Result<&WreathElement> {
    Ok(group.wreath_law().ok_or(Error::NotWreath)?.element(i))
}

/// Indicator of the class of type `ρ` in `Γ_n`.
pub fn class_indicator(rho: &TypeFunction, group: &GroupTable) -> Result<ClassFunction> {
    group.wreath().ok_or(Error::NotWreath)?.indicator(rho)
}

/// `σ_n(w)`: value `n·w(c)` on the class `c_n` (an `n`-cycle with cycle product
/// in `c`), zero elsewhere. With `w` an irreducible character this is `σ_n(γ)`.
pub fn sigma_class_fn(classes: &WreathClasses, base: &GroupTable, weight: &ClassFunction) -> Result<ClassFunction> {
    if weight.group() != base.id() || weight.values().len() != base.num_classes() {
        return Err(Error::GroupMismatch);
    }
    if classes.base_id() != base.id() {
        return Err(Error::GroupMismatch);
    }
    let n = classes.n();
    let mut values = vec![Scalar::zero(); classes.num_classes()];
    if n > 0 {
        for c in 0..base.num_classes() {
            let rho = TypeFunction::from_pairs([(c, Partition::new(vec![n]))]);
            let k = classes.type_index(&rho).expect("n-cycle types exist");
            values[k] = weight.value(c).scale(&rat_int(n as u64));
        }
    }
    Ok(ClassFunction::new(classes.id(), values))
}

/// `σ_n(c)`: value `n ζ_c` on the class `c_n`, zero elsewhere.
pub fn sigma_class(classes: &WreathClasses, c: usize) -> Result<ClassFunction> {
    let n = classes.n();
    let rho = TypeFunction::from_pairs([(c, Partition::new(vec![n]))]);
    let k = classes.type_index(&rho).ok_or_else(|| Error::UnknownType(rho.to_string()))?;
    let mut values = vec![Scalar::zero(); classes.num_classes()];
    values[k] = Scalar::from_int((n as u64 * classes.base_zeta()[c]) as i64);
    Ok(ClassFunction::new(classes.id(), values))
}
