//! Finite groups as explicit multiplication laws, their conjugacy classes,
//! class functions, the bilinear form and convolution.

mod builtin;
mod characters;
mod file;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;

pub use builtin::{builtin, parse_builtin, Builtin};
pub use characters::{validate_character_table, BaseGroup, CharacterTable, ValidationReport};
pub use file::{load_group, parse_group_file};

use crate::error::{Error, Result};
use crate::scalars::{rat_int, Scalar};
use crate::wreath::{WreathClasses, WreathLaw};

/// Identifies the group a class function lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(pub u64);

#[derive(Clone)]
pub(crate) enum Law {
    Table(Vec<u32>),
    Wreath(Arc<WreathLaw>),
}

/// A finite group with its conjugacy-class data.
///
/// Classes partition the elements and are indexed `0..num_classes()`. For
/// groups given by a table the identity class comes first, the rest ordered
/// by their smallest element; wreath products order classes by type.
#[derive(Clone)]
pub struct GroupTable {
    size: usize,
    law: Law,
    identity: usize,
    inv: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    zeta: Vec<u64>,
    class_inv: Vec<usize>,
    exponent: u32,
    element_names: Option<Vec<String>>,
    id: GroupId,
    wreath: Option<Arc<WreathClasses>>,
}

/// A group description accepted by [`build_group`].
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Builtin(Builtin),
    Table {
        mul: Vec<Vec<usize>>,
        element_names: Option<Vec<String>>,
    },
}

pub fn build_group(spec: &GroupSpec) -> Result<GroupTable> {
    match spec {
        GroupSpec::Builtin(b) => Ok(b.table()),
        GroupSpec::Table { mul, element_names } => GroupTable::from_table(mul, element_names.clone()),
    }
}

impl GroupTable {
    /// Validates a row-major multiplication table and computes class data.
    pub fn from_table(mul: &[Vec<usize>], element_names: Option<Vec<String>>) -> Result<Self> {
        let m = mul.len();
        if m == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != m {
                return Err(Error::NotAGroup(format!("row {i} has length {}, expected {m}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= m) {
                return Err(Error::NotAGroup(format!("entry {bad} in row {i} is out of range")));
            }
        }
        if let Some(names) = &element_names {
            if names.len() != m {
                return Err(Error::NotAGroup(format!("{} element names for {m} elements", names.len())));
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inv = vec![0; m];
        for x in 0..m {
            inv[x] = (0..m)
                .find(|&y| mul[x][y] == identity && mul[y][x] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..m {
            for b in 0..m {
                let ab = mul[a][b];
                for c in 0..m {
                    if mul[ab][c] != mul[a][mul[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails for ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let flat: Vec<u32> = mul.iter().flatten().map(|&x| x as u32).collect();
        let mut h = DefaultHasher::new();
        m.hash(&mut h);
        flat.hash(&mut h);
        let id = GroupId(h.finish());
        Ok(Self::assemble(m, Law::Table(flat), identity, inv, element_names, id, None, |classes| {
            let mut order: Vec<usize> = (0..classes.len()).collect();
            order.sort_by_key(|&k| {
                let min = *classes[k].iter().min().unwrap();
                (!classes[k].contains(&identity), min)
            });
            order
        }))
    }

    /// Builds class data for an arbitrary law. `class_order` receives the
    /// conjugation orbits (in discovery order) and returns the permutation
    /// listing them in their final order.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        size: usize,
        law: Law,
        identity: usize,
        inv: Vec<usize>,
        element_names: Option<Vec<String>>,
        id: GroupId,
        wreath: Option<Arc<WreathClasses>>,
        class_order: impl FnOnce(&[Vec<usize>]) -> Vec<usize>,
    ) -> Self {
        let mut g = GroupTable {
            size,
            law,
            identity,
            inv,
            classes: Vec::new(),
            class_of: vec![usize::MAX; size],
            zeta: Vec::new(),
            class_inv: Vec::new(),
            exponent: 1,
            element_names,
            id,
            wreath,
        };
        // conjugation orbits
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; size];
        for x in 0..size {
            if seen[x] {
                continue;
            }
            let mut orbit = Vec::new();
            for h in 0..size {
                let y = g.mul(g.mul(h, x), g.inv[h]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let order = class_order(&orbits);
        let mut taken: Vec<Option<Vec<usize>>> = orbits.into_iter().map(Some).collect();
        g.classes = order.into_iter().map(|k| taken[k].take().unwrap()).collect();
        for (k, cls) in g.classes.iter().enumerate() {
            for &x in cls {
                g.class_of[x] = k;
            }
        }
        g.zeta = g.classes.iter().map(|c| (size / c.len()) as u64).collect();
        g.class_inv = g.classes.iter().map(|c| g.class_of[g.inv[c[0]]]).collect();
        let mut exponent: u64 = 1;
        for cls in &g.classes {
            exponent = exponent.lcm(&(g.element_order(cls[0]) as u64));
        }
        g.exponent = exponent as u32;
        g
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table(t) => t[a * self.size + b] as usize,
            Law::Wreath(w) => w.mul_index(a, b),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Centralizer orders `ζ_c`, indexed by class.
    pub fn zeta(&self) -> &[u64] {
        &self.zeta
    }

    /// `c ↦ c^{-1}`.
    pub fn class_inv(&self, c: usize) -> usize {
        self.class_inv[c]
    }

    pub fn identity_class(&self) -> usize {
        self.class_of[self.identity]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    pub fn is_ambivalent(&self) -> bool {
        (0..self.num_classes()).all(|c| self.class_inv[c] == c)
    }

    /// The type-indexed class data when this group is a wreath product `Γ_n`.
    pub fn wreath(&self) -> Option<&Arc<WreathClasses>> {
        self.wreath.as_ref()
    }

    pub(crate) fn wreath_law(&self) -> Option<&Arc<WreathLaw>> {
        match &self.law {
            Law::Wreath(w) => Some(w),
            Law::Table(_) => None,
        }
    }

    /// Indicator of class `c` (the class sum `K_c` viewed as a class function).
    pub fn class_indicator(&self, c: usize) -> ClassFunction {
        let mut values = vec![Scalar::zero(); self.num_classes()];
        values[c] = Scalar::one();
        ClassFunction::new(self.id, values)
    }

    pub fn zero_function(&self) -> ClassFunction {
        ClassFunction::new(self.id, vec![Scalar::zero(); self.num_classes()])
    }

    pub(crate) fn check(&self, f: &ClassFunction) -> Result<()> {
        if f.group != self.id || f.values.len() != self.num_classes() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("size", &self.size)
            .field("classes", &self.classes.len())
            .field("zeta", &self.zeta)
            .field("exponent", &self.exponent)
            .finish()
    }
}

/// A scalar-valued function on the conjugacy classes of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    group: GroupId,
    values: Vec<Scalar>,
}

impl ClassFunction {
    pub fn new(group: GroupId, values: Vec<Scalar>) -> Self {
        ClassFunction { group, values }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &Scalar {
        &self.values[c]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> ClassFunction {
        ClassFunction::new(self.group, self.values.iter().map(|v| v * s).collect())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.group != other.group || self.values.len() != other.values.len() {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction::new(
            self.group,
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Pointwise product.
    pub fn pointwise(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.group != other.group || self.values.len() != other.values.len() {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction::new(
            self.group,
            self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        ))
    }
}

/// `⟨f, g⟩ = Σ_c ζ_c^{-1} f(c) g(c^{-1})`.
pub fn inner_product(group: &GroupTable, f: &ClassFunction, g: &ClassFunction) -> Result<Scalar> {
    group.check(f)?;
    group.check(g)?;
    let mut acc = Scalar::zero();
    for c in 0..group.num_classes() {
        let term = f.value(c) * g.value(group.class_inv(c));
        if !term.is_zero() {
            acc += &term.div_rational(&rat_int(group.zeta[c]));
        }
    }
    Ok(acc)
}

/// `(f * g)(x) = Σ_y f(x y^{-1}) g(y)`, evaluated at one representative per class.
pub fn convolve(group: &GroupTable, f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
    group.check(f)?;
    group.check(g)?;
    let values = (0..group.num_classes())
        .map(|c| {
            let x = group.class_rep(c);
            let mut acc = Scalar::zero();
            for y in 0..group.size {
                let gy = g.value(group.class_of(y));
                if gy.is_zero() {
                    continue;
                }
                let fx = f.value(group.class_of(group.mul(x, group.inv(y))));
                if !fx.is_zero() {
                    acc += &(fx * gy);
                }
            }
            acc
        })
        .collect();
    Ok(ClassFunction::new(group.id, values))
}
