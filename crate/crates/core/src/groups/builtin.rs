//! Shipped base groups with their character tables.

use super::{BaseGroup, GroupTable};
use crate::error::{Error, Result};
use crate::scalars::{cyclo_root, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Trivial,
    Cyclic(usize),
    Klein4,
    Sym3,
}

impl Builtin {
    pub fn name(&self) -> String {
        match self {
            Builtin::Trivial => "trivial".into(),
            Builtin::Cyclic(r) => format!("cyclic({r})"),
            Builtin::Klein4 => "klein4".into(),
            Builtin::Sym3 => "sym(3)".into(),
        }
    }

    pub fn table(&self) -> GroupTable {
        let (mul, names) = match *self {
            Builtin::Trivial => (vec![vec![0]], vec!["e".to_string()]),
            Builtin::Cyclic(r) => (
                (0..r).map(|a| (0..r).map(|b| (a + b) % r).collect()).collect(),
                (0..r).map(|k| format!("a^{k}")).collect(),
            ),
            Builtin::Klein4 => (
                (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
                vec!["e".into(), "a".into(), "b".into(), "ab".into()],
            ),
            Builtin::Sym3 => {
                let perms = sym3_elements();
                let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
                let mul = perms
                    .iter()
                    .map(|s| {
                        perms
                            .iter()
                            .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                            .collect()
                    })
                    .collect();
                let names = perms.iter().map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
                (mul, names)
            }
        };
        GroupTable::from_table(&mul, Some(names)).expect("builtin tables are groups")
    }

    /// Character rows, trivial character first, values indexed by class.
    fn characters(&self) -> Vec<Vec<Scalar>> {
        let int = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
        match *self {
            Builtin::Trivial => vec![int(&[1])],
            // class k is the singleton {a^k}
            Builtin::Cyclic(r) => (0..r as i64)
                .map(|j| (0..r as i64).map(|k| cyclo_root(r as u32, j * k)).collect())
                .collect(),
            Builtin::Klein4 => (0..4u32)
                .map(|j| (0..4u32).map(|k| Scalar::from_int(if (j & k).count_ones() % 2 == 0 { 1 } else { -1 })).collect())
                .collect(),
            // classes: identity, transpositions, 3-cycles
            Builtin::Sym3 => vec![int(&[1, 1, 1]), int(&[1, -1, 1]), int(&[2, 0, -1])],
        }
    }

    pub fn build(&self) -> BaseGroup {
        BaseGroup::new(self.name(), self.table(), self.characters()).expect("builtin character tables are valid")
    }
}

/// Permutations of {0,1,2} in lexicographic order of their image lists.
fn sym3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// Accepts `trivial`, `cyclic(r)`/`cyclicR`/`zR` (r ≤ 6), `klein4`, `sym(3)`/`sym3`/`s3`.
pub fn parse_builtin(name: &str) -> Result<Builtin> {
    let n: String = name.trim().to_ascii_lowercase().chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || Error::UnknownGroup(name.to_string());
    match n.as_str() {
        "trivial" | "1" => return Ok(Builtin::Trivial),
        "klein4" | "v4" => return Ok(Builtin::Klein4),
        "sym(3)" | "sym3" | "s3" => return Ok(Builtin::Sym3),
        _ => {}
    }
    let digits = n
        .strip_prefix("cyclic")
        .or_else(|| n.strip_prefix('z'))
        .or_else(|| n.strip_prefix('c'))
        .ok_or_else(unknown)?;
    let digits = digits.trim_start_matches('(').trim_end_matches(')');
    let r: usize = digits.parse().map_err(|_| unknown())?;
    match r {
        0 => Err(unknown()),
        1 => Ok(Builtin::Trivial),
        2..=6 => Ok(Builtin::Cyclic(r)),
        _ => Err(Error::bound("cyclic builtin order", r as u64, 6u64)),
    }
}

pub fn builtin(name: &str) -> Result<BaseGroup> {
    Ok(parse_builtin(name)?.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!(parse_builtin("cyclic2").unwrap(), Builtin::Cyclic(2));
        assert_eq!(parse_builtin("cyclic(3)").unwrap(), Builtin::Cyclic(3));
        assert_eq!(parse_builtin("Z3").unwrap(), Builtin::Cyclic(3));
        assert_eq!(parse_builtin("sym(3)").unwrap(), Builtin::Sym3);
        assert_eq!(parse_builtin("cyclic(1)").unwrap(), Builtin::Trivial);
        assert!(matches!(parse_builtin("cyclic(7)"), Err(Error::BoundExceeded { .. })));
        assert!(matches!(parse_builtin("foo"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn cyclic_orders_and_exponents() {
        for r in 2..=6 {
            let b = Builtin::Cyclic(r).build();
            assert_eq!(b.order(), r);
            assert_eq!(b.num_classes(), r);
            assert_eq!(b.table.exponent() as usize, r);
            assert!(b.chars.degrees().iter().all(|&d| d == 1));
        }
        let s3 = Builtin::Sym3.build();
        assert_eq!(s3.chars.degrees(), &[1, 1, 2]);
    }
}
