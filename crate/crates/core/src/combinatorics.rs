//! Partitions, partition-valued functions on a finite index set, and their
//! centralizer orders.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`].
pub const MAX_PARTITION_SIZE: usize = 40;
/// Largest `n` accepted by [`enumerate_types`].
pub const MAX_TYPE_SIZE: usize = 16;
/// Largest number of classes accepted by [`enumerate_types`].
pub const MAX_TYPE_CLASSES: usize = 64;

/// An integer partition, stored as a weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition `(1^{m_1} 2^{m_2} …)` from `(part, multiplicity)` pairs.
    pub fn from_multiplicities(mults: &[(usize, usize)]) -> Self {
        let mut parts = Vec::new();
        for &(i, m) in mults {
            parts.extend(std::iter::repeat_n(i, m));
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity view: `(i, m_i)` for every `i` with `m_i > 0`, ascending in `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((i, m)) if *i == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Union of part multisets.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A partition-valued function on a finite index set (conjugacy classes or
/// irreducible characters). Keys mapping to the empty partition are omitted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TypeFunction(BTreeMap<usize, Partition>);

impl TypeFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Partition)>>(pairs: I) -> Self {
        let mut t = TypeFunction::new();
        for (k, p) in pairs {
            t.set(k, p);
        }
        t
    }

    /// Dense constructor: entry `i` of the slice is the value at index `i`.
    pub fn from_slice(values: &[Partition]) -> Self {
        Self::from_pairs(values.iter().cloned().enumerate())
    }

    pub fn set(&mut self, key: usize, p: Partition) {
        if p.is_empty() {
            self.0.remove(&key);
        } else {
            self.0.insert(key, p);
        }
    }

    pub fn get(&self, key: usize) -> &Partition {
        static EMPTY: Partition = Partition(Vec::new());
        self.0.get(&key).unwrap_or(&EMPTY)
    }

    /// Appends a part to the partition at `key`.
    pub fn push_part(&mut self, key: usize, part: usize) {
        let p = self.get(key).union(&Partition(vec![part]));
        self.set(key, p);
    }

    /// `‖ρ‖ = Σ |ρ(c)|`.
    pub fn norm(&self) -> usize {
        self.0.values().map(Partition::size).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn max_key(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    /// Relabels keys through `f` (e.g. `c ↦ c^{-1}`).
    pub fn map_keys(&self, f: impl Fn(usize) -> usize) -> TypeFunction {
        let mut out = TypeFunction::new();
        for (k, p) in self.iter() {
            let merged = out.get(f(k)).union(p);
            out.set(f(k), merged);
        }
        out
    }

    /// Key-wise union of parts.
    pub fn union(&self, other: &TypeFunction) -> TypeFunction {
        let mut out = self.clone();
        for (k, p) in other.iter() {
            let merged = out.get(k).union(p);
            out.set(k, merged);
        }
        out
    }
}

impl fmt::Display for TypeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, p)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}:{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for TypeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `z_λ = ∏ i^{m_i} m_i!`, the centralizer order of cycle type `λ` in `S_{|λ|}`.
pub fn z_of(lambda: &Partition) -> BigUint {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * BigUint::from(i).pow(m as u32) * factorial(m)
        })
}

/// `Z_ρ = ∏_c z_{ρ(c)} ζ_c^{l(ρ(c))}`, the centralizer order of type `ρ` in `Γ_n`.
pub fn big_z(rho: &TypeFunction, zeta: &[u64]) -> BigUint {
    rho.iter().fold(BigUint::one(), |acc, (c, p)| {
        acc * z_of(p) * BigUint::from(zeta[c]).pow(p.len() as u32)
    })
}

fn partitions_bounded(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for first in 1..=n.min(max_part) {
        prefix.push(first);
        partitions_bounded(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n`, in lexicographic order of their part lists:
/// `(1^n)` first and `(n)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n > MAX_PARTITION_SIZE {
        return Err(Error::bound("partition size", n as u64, MAX_PARTITION_SIZE as u64));
    }
    let mut out = Vec::new();
    partitions_bounded(n, n, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// Weak compositions of `n` into `k` parts, the first entry varying slowest
/// and descending (`(n,0,…,0)` first).
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All type functions `ρ` on `num_classes` classes with `‖ρ‖ = n`.
///
/// Order: weak compositions `(|ρ(0)|, |ρ(1)|, …)` with `|ρ(0)|` descending,
/// then the product of per-class partition lists, class 0 varying slowest.
/// With this order the identity type `ρ(0) = (1^n)` is always first.
pub fn enumerate_types(n: usize, num_classes: usize) -> Result<Vec<TypeFunction>> {
    if n > MAX_TYPE_SIZE {
        return Err(Error::bound("type size", n as u64, MAX_TYPE_SIZE as u64));
    }
    if num_classes == 0 || num_classes > MAX_TYPE_CLASSES {
        return Err(Error::bound("number of classes", num_classes as u64, MAX_TYPE_CLASSES as u64));
    }
    let parts: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for comp in compositions(n, num_classes) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &size in &comp {
            let mut next = Vec::with_capacity(acc.len() * parts[size].len());
            for prefix in &acc {
                for p in &parts[size] {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc.iter().map(|v| TypeFunction::from_slice(v)));
    }
    Ok(out)
}
