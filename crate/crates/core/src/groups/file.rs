//! Group files: a TOML document carrying a multiplication table and the
//! character table. See `docs/group-file.md` for the grammar.

use serde::Deserialize;
use toml::Spanned;

use super::{builtin, BaseGroup, GroupTable};
use crate::error::{Error, Result};
use crate::scalars::{parse_rational, Cyclotomic, Rational, Scalar};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: Option<String>,
    size: Spanned<usize>,
    mul: Spanned<Vec<Vec<usize>>>,
    element_names: Option<Vec<String>>,
    characters: Spanned<Vec<Spanned<Vec<Spanned<ScalarLit>>>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffLit {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarLit {
    Int(i64),
    Text(String),
    Cyclotomic(u32, Vec<CoeffLit>),
}

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.len(), |i| before.len() - i - 1) + 1;
    (line, column)
}

fn at(src: &str, span: std::ops::Range<usize>, message: impl Into<String>) -> Error {
    let (line, column) = line_col(src, span.start);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn coeff(src: &str, span: std::ops::Range<usize>, c: &CoeffLit) -> Result<Rational> {
    match c {
        CoeffLit::Int(i) => Ok(Rational::from_integer((*i).into())),
        CoeffLit::Text(s) => parse_rational(s).ok_or_else(|| at(src, span, format!("bad rational literal `{s}`"))),
    }
}

fn scalar(src: &str, lit: &Spanned<ScalarLit>) -> Result<Scalar> {
    let span = lit.span();
    match lit.get_ref() {
        ScalarLit::Int(i) => Ok(Scalar::from_int(*i)),
        ScalarLit::Text(s) => parse_rational(s)
            .map(Scalar::from_rational)
            .ok_or_else(|| at(src, span, format!("bad rational literal `{s}`"))),
        ScalarLit::Cyclotomic(order, cs) => {
            if *order == 0 {
                return Err(at(src, span, "cyclotomic order must be positive"));
            }
            let cs = cs.iter().map(|c| coeff(src, span.clone(), c)).collect::<Result<Vec<_>>>()?;
            Ok(Cyclotomic::from_power_coeffs(*order, &cs))
        }
    }
}

/// Parses a group file. Errors carry the line and column of the offending item.
pub fn parse_group_file(src: &str, default_name: &str) -> Result<BaseGroup> {
    let file: GroupFile = toml::from_str(src).map_err(|e| {
        let (line, column) = e.span().map_or((0, 0), |s| line_col(src, s.start));
        Error::Parse {
            line,
            column,
            message: e.message().to_string(),
        }
    })?;
    let size = *file.size.get_ref();
    if file.mul.get_ref().len() != size {
        return Err(at(
            src,
            file.mul.span(),
            format!("`mul` has {} rows but size is {size}", file.mul.get_ref().len()),
        ));
    }
    let table = GroupTable::from_table(file.mul.get_ref(), file.element_names.clone())
        .map_err(|e| at(src, file.mul.span(), e.to_string()))?;
    let k = table.num_classes();
    let mut rows = Vec::new();
    for row in file.characters.get_ref() {
        if row.get_ref().len() != k {
            return Err(at(
                src,
                row.span(),
                format!("character row has {} values, the group has {k} classes", row.get_ref().len()),
            ));
        }
        rows.push(row.get_ref().iter().map(|v| scalar(src, v)).collect::<Result<Vec<_>>>()?);
    }
    let name = file.name.unwrap_or_else(|| default_name.to_string());
    BaseGroup::new(name, table, rows).map_err(|e| at(src, file.characters.span(), e.to_string()))
}

/// Resolves a builtin name, or else reads a group file from the given path.
pub fn load_group(spec: &str) -> Result<BaseGroup> {
    match builtin(spec) {
        Ok(g) => Ok(g),
        Err(Error::UnknownGroup(_)) if std::path::Path::new(spec).exists() => {
            let src = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
            parse_group_file(&src, spec)
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::validate_character_table;

    const Z3: &str = r#"
name = "Z3 from file"
size = 3
element_names = ["e", "a", "a2"]
mul = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
characters = [
  [1, 1, 1],
  [1, [3, [0, 1]], [3, [0, 0, 1]]],
  [1, [3, [0, 0, 1]], [3, ["0", "1"]]],
]
"#;

    #[test]
    fn parses_z3() {
        let g = parse_group_file(Z3, "z3").unwrap();
        assert_eq!(g.name, "Z3 from file");
        assert_eq!(g.order(), 3);
        assert!(validate_character_table(&g.table, &g.chars).is_valid());
        assert!(!g.table.is_ambivalent());
    }

    #[test]
    fn syntax_error_has_position() {
        let src = "size = 2\nmul = [[0, 1], [1, 0]\ncharacters = []\n";
        match parse_group_file(src, "x") {
            Err(Error::Parse { line, .. }) => assert!(line >= 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_row_length_has_position() {
        let src = "size = 2\nmul = [[0, 1], [1, 0]]\ncharacters = [\n  [1, 1],\n  [1],\n]\n";
        match parse_group_file(src, "x") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (5, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invalid_table_rejected() {
        let src = "size = 2\nmul = [[0, 1], [1, 0]]\ncharacters = [[1, 1], [1, 1]]\n";
        let err = parse_group_file(src, "x").unwrap_err();
        assert!(err.to_string().contains("orthogonality"), "{err}");
    }

    #[test]
    fn not_a_group_in_file() {
        let src = "size = 2\nmul = [[0, 1], [1, 1]]\ncharacters = []\n";
        let err = parse_group_file(src, "x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }
}
