//! Quiver files: TOML with `vertices`, `edges`, `v`, `w` and an optional
//! `kappa`.
//!
//! ```toml
//! vertices = 3
//! edges = [[0, 1], [2, 1]]
//! v = [3, 1, 2]
//! w = [4, 0, 1]
//! ```

use std::ops::Range;
use std::path::Path;

use serde::Deserialize;
use toml::Spanned;

use crate::quiver::{Quiver, QuiverDatum};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverInput {
    pub datum: QuiverDatum,
    /// Flavour coweight in lattice coordinate order, unchecked.
    pub kappa: Option<Vec<i64>>,
}

type List = Spanned<Vec<Spanned<i64>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    vertices: Spanned<i64>,
    #[serde(default)]
    edges: Option<Spanned<Vec<List>>>,
    v: List,
    w: List,
    #[serde(default)]
    kappa: Option<List>,
}

pub fn parse_quiver_file(path: impl AsRef<Path>) -> Result<QuiverInput> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input {
        path: path.display().to_string(),
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    parse_quiver_str(&text, &path.display().to_string())
}

/// `path` is used only in diagnostics.
pub fn parse_quiver_str(text: &str, path: &str) -> Result<QuiverInput> {
    let fail = |span: Range<usize>, message: String| {
        let (line, column) = position(text, span.start);
        Error::Input {
            path: path.to_string(),
            line,
            column,
            message,
        }
    };
    let raw: RawFile = toml::from_str(text)
        .map_err(|e| fail(e.span().unwrap_or(0..0), e.message().to_string()))?;

    let n = nonnegative(&raw.vertices, "vertices").map_err(|(s, m)| fail(s, m))? as usize;
    let dims = |list: &List, field: &'static str| -> Result<Vec<u32>> {
        if list.get_ref().len() != n {
            return Err(fail(
                list.span(),
                format!(
                    "`{field}` has {} entries but `vertices` is {n}",
                    list.get_ref().len()
                ),
            ));
        }
        list.get_ref()
            .iter()
            .map(|x| nonnegative(x, field).map_err(|(s, m)| fail(s, m)))
            .collect()
    };
    let v = dims(&raw.v, "v")?;
    let w = dims(&raw.w, "w")?;

    let mut edges = Vec::new();
    if let Some(list) = &raw.edges {
        for (e, pair) in list.get_ref().iter().enumerate() {
            let [s, t] = pair.get_ref().as_slice() else {
                return Err(fail(
                    pair.span(),
                    format!("edge {e} must be a pair [source, target]"),
                ));
            };
            let endpoint = |x: &Spanned<i64>| -> Result<usize> {
                let id = *x.get_ref();
                if id < 0 || id as usize >= n {
                    return Err(fail(
                        x.span(),
                        format!("edge {e} endpoint {id} is not a vertex id below {n}"),
                    ));
                }
                Ok(id as usize)
            };
            edges.push((endpoint(s)?, endpoint(t)?));
        }
    }
    let kappa = raw
        .kappa
        .as_ref()
        .map(|list| list.get_ref().iter().map(|x| *x.get_ref()).collect());
    let quiver = Quiver::new(n, edges)?;
    Ok(QuiverInput {
        datum: QuiverDatum::new(quiver, v, w)?,
        kappa,
    })
}

fn nonnegative(x: &Spanned<i64>, field: &str) -> std::result::Result<u32, (Range<usize>, String)> {
    let value = *x.get_ref();
    u32::try_from(value).map_err(|_| {
        (
            x.span(),
            format!("`{field}` entry {value} must be a nonnegative integer"),
        )
    })
}

/// One-based line and column of a byte offset.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A3: &str = "vertices = 3\nedges = [[0, 1], [2, 1]]\nv = [3, 1, 2]\nw = [4, 0, 1]\n";

    fn message(text: &str) -> (usize, usize, String) {
        match parse_quiver_str(text, "t.quiver") {
            Err(Error::Input {
                line,
                column,
                message,
                ..
            }) => (line, column, message),
            other => panic!("expected an input error, got {other:?}"),
        }
    }

    #[test]
    fn well_formed() {
        let input = parse_quiver_str(A3, "a3.quiver").unwrap();
        let expected =
            QuiverDatum::from_edges(3, &[(0, 1), (2, 1)], vec![3, 1, 2], vec![4, 0, 1]).unwrap();
        assert_eq!(input.datum, expected);
        assert_eq!(input.kappa, None);
        let with_kappa = parse_quiver_str(&format!("{A3}kappa = [1, -2]\n"), "x").unwrap();
        assert_eq!(with_kappa.kappa, Some(vec![1, -2]));
    }

    #[test]
    fn diagnostics() {
        let (line, _, m) = message("vertices = 3\nedges = []\nv = [3, 1]\nw = [4, 0, 1]\n");
        assert_eq!(line, 3);
        assert!(m.contains("`v`"), "{m}");

        let (line, column, m) = message("vertices = 2\nv = [1, 1]\nw = [0, -1]\n");
        assert_eq!((line, column), (3, 9));
        assert!(m.contains("nonnegative"), "{m}");

        let (line, _, m) = message("vertices = 2\nedges = [[0, 2]]\nv = [1, 1]\nw = [0, 0]\n");
        assert_eq!(line, 2);
        assert!(m.contains("endpoint 2"), "{m}");

        let (_, _, m) = message("vertices = 2\nv = [1, 1]\n");
        assert!(m.contains("missing field `w`"), "{m}");

        let (_, _, m) = message("vertices = 1\nv = [1]\nw = [0]\ncolour = 3\n");
        assert!(m.contains("unknown field"), "{m}");
    }

    #[test]
    fn error_display_carries_position() {
        let err = parse_quiver_str("vertices = 1\nv = [1]\nw = [-3]\n", "f.quiver").unwrap_err();
        assert_eq!(
            err.to_string(),
            "f.quiver:3:6: `w` entry -3 must be a nonnegative integer"
        );
    }
}
